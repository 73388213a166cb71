//! Theorem- and lemma-level verification harnesses.
//!
//! Every check returns a [`Verdict`]: pass flag, scan statistics, and
//! [`Certificate`]s (graph6 witnesses or grid points) that can be
//! re-checked independently of the run that produced them. Bound checks
//! use a relative tolerance (default 1e−9); equality cases are first
//! collected inside a wider window (default 1e−6) and then decided
//! structurally, by canonical code, never by floating comparison.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_code, CanonicalCode};
use crate::connectivity::ConnectivityMode;
use crate::enumerate::{self, GraphStream};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::graph6;
use crate::index;

/// Claim identifiers, one per verified statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimId {
    UnicyclicMax,
    UnicyclicMin,
    EdgeDeletion,
    EdgeDeletionRandom,
    ConnectivityMax,
    LemmaA1,
    LemmaEe1,
    LemmaMvt,
    ProofInequalities,
}

impl ClaimId {
    pub fn name(&self) -> &'static str {
        match self {
            ClaimId::UnicyclicMax => "unicyclic-max",
            ClaimId::UnicyclicMin => "unicyclic-min",
            ClaimId::EdgeDeletion => "edge-deletion",
            ClaimId::EdgeDeletionRandom => "edge-deletion-random",
            ClaimId::ConnectivityMax => "connectivity-max",
            ClaimId::LemmaA1 => "lemma-a1",
            ClaimId::LemmaEe1 => "lemma-ee1",
            ClaimId::LemmaMvt => "lemma-mvt",
            ClaimId::ProofInequalities => "proof-inequalities",
        }
    }
}

/// A re-checkable witness or counterexample: either a graph (graph6
/// plus its index value against the bound) or a located grid/pair
/// point for the analytic lemmas.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Certificate {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub aso: Option<f64>,
    pub bound: f64,
    pub slack: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub is_extremal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub location: Option<String>,
}

impl Certificate {
    fn for_graph(g: &Graph, aso: f64, bound: f64, is_extremal: bool) -> Certificate {
        Certificate {
            graph6: Some(graph6::encode(g)),
            aso: Some(aso),
            bound,
            slack: bound - aso,
            is_extremal: Some(is_extremal),
            location: None,
        }
    }

    fn for_deletion(g: &Graph, edge: (usize, usize), aso_g: f64, delta: f64) -> Certificate {
        Certificate {
            graph6: Some(graph6::encode(g)),
            aso: Some(aso_g - delta),
            bound: aso_g,
            slack: delta,
            is_extremal: None,
            location: Some(format!("edge=({},{})", edge.0, edge.1)),
        }
    }

    fn for_point(location: String, bound: f64, margin: f64) -> Certificate {
        Certificate {
            graph6: None,
            aso: None,
            bound,
            slack: margin,
            is_extremal: None,
            location: Some(location),
        }
    }
}

/// Outcome of one claim check. `pass` holds iff `counterexamples` is
/// empty; `runtime_ms` is filled in by callers that time runs.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Verdict {
    pub claim: ClaimId,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    pub scanned: u64,
    pub runtime_ms: u64,
    pub witnesses: Vec<Certificate>,
    pub counterexamples: Vec<Certificate>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub notes: BTreeMap<String, String>,
}

impl Verdict {
    fn new(
        claim: ClaimId,
        params: BTreeMap<String, String>,
        scanned: u64,
        witnesses: Vec<Certificate>,
        counterexamples: Vec<Certificate>,
        notes: BTreeMap<String, String>,
    ) -> Verdict {
        Verdict {
            claim,
            params,
            pass: counterexamples.is_empty(),
            scanned,
            runtime_ms: 0,
            witnesses,
            counterexamples,
            notes,
        }
    }
}

/// Shared knobs with the documented defaults.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    /// Relative tolerance for bound comparisons.
    pub tolerance: f64,
    /// Relative window for collecting equality candidates.
    pub window: f64,
    /// Step for the continuous-lemma grids.
    pub grid_step: f64,
    /// Lifts the per-class enumeration caps.
    pub allow_slow: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            tolerance: 1e-9,
            window: 1e-6,
            grid_step: 0.25,
            allow_slow: false,
        }
    }
}

fn params_of(entries: &[(&str, String)]) -> BTreeMap<String, String> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

/// Scans a stream against an upper bound with an equality-uniqueness
/// requirement; shared by the unicyclic and connectivity maximum
/// checks.
struct ExtremalScan {
    scanned: u64,
    witnesses: Vec<Certificate>,
    counterexamples: Vec<Certificate>,
    notes: BTreeMap<String, String>,
}

fn scan_maximum(graphs: &[Graph], bound: f64, target: &Graph, settings: &Settings) -> ExtremalScan {
    let target_code = canonical_code(target);
    let scale = bound.abs().max(1.0);
    let evaluated: Vec<(f64, CanonicalCode)> = graphs
        .par_iter()
        .map(|g| {
            let value: f64 = index::aso(g).expect("class members have no isolated edge");
            (value, canonical_code(g))
        })
        .collect();

    let mut counterexamples = Vec::new();
    for ((value, code), g) in evaluated.iter().zip(graphs) {
        if *value > bound + settings.tolerance * scale {
            counterexamples.push(Certificate::for_graph(
                g,
                *value,
                bound,
                *code == target_code,
            ));
        }
    }

    // Equality candidates are resolved by canonical code, never value.
    let mut candidates: Vec<(&CanonicalCode, &Graph, f64)> = evaluated
        .iter()
        .zip(graphs)
        .filter(|((value, _), _)| (bound - value).abs() <= settings.window * scale)
        .map(|((value, code), g)| (code, g, *value))
        .collect();
    candidates.sort_by(|a, b| a.0.cmp(b.0));
    let mut seen_target = false;
    for (code, g, value) in &candidates {
        if **code == target_code {
            seen_target = true;
        } else {
            let mut cert = Certificate::for_graph(g, *value, bound, false);
            cert.location = Some("unexpected equality-window member".into());
            counterexamples.push(cert);
        }
    }
    if !seen_target && !graphs.is_empty() {
        let target_value: f64 = index::aso(target).expect("extremal graph has no isolated edge");
        let mut cert = Certificate::for_graph(target, target_value, bound, true);
        cert.location = Some("extremal graph missing from equality window".into());
        counterexamples.push(cert);
    }

    // Top three by value, ties broken by code for determinism.
    let mut ranked: Vec<(f64, CanonicalCode, &Graph)> = evaluated
        .iter()
        .zip(graphs)
        .map(|((value, code), g)| (*value, code.clone(), g))
        .collect();
    ranked.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then_with(|| a.1.cmp(&b.1)));
    let witnesses: Vec<Certificate> = ranked
        .iter()
        .take(3)
        .map(|(value, code, g)| Certificate::for_graph(g, *value, bound, *code == target_code))
        .collect();

    let mut notes = BTreeMap::new();
    if let Some((max_value, _, _)) = ranked.first() {
        notes.insert("max_aso".into(), fmt_f64(*max_value));
    }
    notes.insert("bound".into(), fmt_f64(bound));
    ExtremalScan {
        scanned: graphs.len() as u64,
        witnesses,
        counterexamples,
        notes,
    }
}

/// Unicyclic maximum: over all unicyclic graphs of order n, ASO is at
/// most the closed-form bound, attained exactly by S'_n.
pub fn verify_unicyclic_max(n: usize, settings: &Settings) -> Result<Verdict> {
    if n < 4 {
        return Err(Error::ParamOutOfRange(format!(
            "unicyclic-max needs n >= 4, got {n}"
        )));
    }
    let stream = enumerate::unicyclic_graphs(n, settings.allow_slow)?;
    verify_unicyclic_max_on(&stream, settings)
}

pub fn verify_unicyclic_max_on(stream: &GraphStream, settings: &Settings) -> Result<Verdict> {
    let n = stream.order();
    let bound: f64 = families::unicyclic_max_bound(n)?;
    let target = families::s_prime(n)?;
    let scan = scan_maximum(stream.graphs(), bound, &target, settings);
    Ok(Verdict::new(
        ClaimId::UnicyclicMax,
        params_of(&[("n", n.to_string()), ("class", "unicyclic".into())]),
        scan.scanned,
        scan.witnesses,
        scan.counterexamples,
        scan.notes,
    ))
}

/// Unicyclic minimum: C_n uniquely minimizes ASO over unicyclic
/// graphs, with value exactly 2n.
pub fn verify_unicyclic_min(n: usize, settings: &Settings) -> Result<Verdict> {
    let stream = enumerate::unicyclic_graphs(n, settings.allow_slow)?;
    let expected = 2.0 * n as f64;
    let target_code = canonical_code(&families::cycle(n)?);
    let scale = expected.max(1.0);

    let evaluated: Vec<(f64, CanonicalCode)> = stream
        .graphs()
        .par_iter()
        .map(|g| {
            let value: f64 = index::aso(g).expect("unicyclic graphs have no isolated edge");
            (value, canonical_code(g))
        })
        .collect();

    let mut counterexamples = Vec::new();
    let min_value = evaluated
        .iter()
        .map(|(v, _)| *v)
        .fold(f64::INFINITY, f64::min);
    if (min_value - expected).abs() > 1e-12 * scale {
        counterexamples.push(Certificate::for_point(
            format!("min_aso={}", fmt_f64(min_value)),
            expected,
            expected - min_value,
        ));
    }
    for ((value, code), g) in evaluated.iter().zip(stream.graphs()) {
        let in_window = (value - expected).abs() <= settings.window * scale;
        if *value < expected - settings.tolerance * scale {
            counterexamples.push(Certificate::for_graph(g, *value, expected, false));
        } else if in_window && *code != target_code {
            let mut cert = Certificate::for_graph(g, *value, expected, false);
            cert.location = Some("unexpected minimum-window member".into());
            counterexamples.push(cert);
        }
    }
    if !evaluated.iter().any(|(_, code)| *code == target_code) {
        let mut cert = Certificate::for_graph(&families::cycle(n)?, expected, expected, true);
        cert.location = Some("cycle missing from enumeration".into());
        counterexamples.push(cert);
    }

    let mut ranked: Vec<(f64, CanonicalCode, &Graph)> = evaluated
        .iter()
        .zip(stream.graphs())
        .map(|((value, code), g)| (*value, code.clone(), g))
        .collect();
    ranked.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then_with(|| a.1.cmp(&b.1)));
    let witnesses: Vec<Certificate> = ranked
        .iter()
        .take(2)
        .map(|(value, code, g)| Certificate::for_graph(g, *value, expected, *code == target_code))
        .collect();

    let notes = params_of(&[("min_aso", fmt_f64(min_value))]);
    Ok(Verdict::new(
        ClaimId::UnicyclicMin,
        params_of(&[("n", n.to_string()), ("class", "unicyclic".into())]),
        stream.len() as u64,
        witnesses,
        counterexamples,
        notes,
    ))
}

struct DeletionScan {
    admissible: u64,
    skipped: u64,
    failures: Vec<Certificate>,
    min_delta: Option<(f64, String, (usize, usize))>,
}

/// Checks Θᵢ + Θⱼ + f(dᵢ,dⱼ) for every admissible edge of `g`:
/// positivity, the decomposition re-add at 1e−12 relative, and the
/// independent recomputation ASO(G) − ASO(G−e) at 1e−9 relative.
fn scan_deletions(g: &Graph) -> DeletionScan {
    let mut scan = DeletionScan {
        admissible: 0,
        skipped: 0,
        failures: Vec::new(),
        min_delta: None,
    };
    let aso_g: f64 = match index::aso(g) {
        Ok(v) => v,
        Err(_) => {
            scan.skipped = g.size() as u64;
            return scan;
        }
    };
    let code = graph6::encode(g);
    for edge in g.edges() {
        let deleted = g.delete_edge(edge).expect("edge comes from edge list");
        if deleted.has_isolated_edge() {
            scan.skipped += 1;
            continue;
        }
        scan.admissible += 1;
        let delta: index::DeletionDelta<f64> =
            index::aso_delta_decomposition(g, edge).expect("admissibility just checked");
        let readd = delta.theta_i + delta.theta_j + delta.edge_term;
        let independent = aso_g - index::aso::<f64>(&deleted).expect("no isolated edge");
        let scale = aso_g.abs().max(1.0);
        if delta.total <= 0.0 {
            let mut cert = Certificate::for_deletion(g, edge, aso_g, delta.total);
            cert.location = Some(format!("edge=({},{});nonpositive", edge.0, edge.1));
            scan.failures.push(cert);
        }
        if (readd - delta.total).abs() > 1e-12 * delta.total.abs().max(1.0) {
            let mut cert = Certificate::for_deletion(g, edge, aso_g, delta.total);
            cert.location = Some(format!("edge=({},{});decomposition", edge.0, edge.1));
            scan.failures.push(cert);
        }
        if (independent - delta.total).abs() > 1e-9 * scale {
            let mut cert = Certificate::for_deletion(g, edge, aso_g, delta.total);
            cert.location = Some(format!("edge=({},{});recompute", edge.0, edge.1));
            scan.failures.push(cert);
        }
        let better = match &scan.min_delta {
            None => true,
            Some((best, best_code, best_edge)) => {
                (delta.total, &code, &edge) < (*best, best_code, best_edge)
            }
        };
        if better {
            scan.min_delta = Some((delta.total, code.clone(), edge));
        }
    }
    scan
}

/// Edge-deletion monotonicity: deleting an edge strictly lowers ASO
/// whenever neither side has an isolated edge. Exhaustive over all
/// connected graphs of order n.
pub fn verify_edge_deletion_exhaustive(n: usize, settings: &Settings) -> Result<Verdict> {
    if !(3..=7).contains(&n) && !(settings.allow_slow && n <= 9) {
        return Err(Error::ParamOutOfRange(format!(
            "edge-deletion needs 3 <= n <= 7 (9 with allow_slow), got {n}"
        )));
    }
    let stream = enumerate::connected_graphs(n, true)?;
    let scans: Vec<DeletionScan> = stream.graphs().par_iter().map(scan_deletions).collect();

    let mut admissible = 0;
    let mut skipped = 0;
    let mut counterexamples = Vec::new();
    let mut min_delta: Option<(f64, String, (usize, usize))> = None;
    for scan in scans {
        admissible += scan.admissible;
        skipped += scan.skipped;
        counterexamples.extend(scan.failures);
        if let Some(candidate) = scan.min_delta {
            let better = match &min_delta {
                None => true,
                Some(best) => {
                    (candidate.0, &candidate.1, &candidate.2) < (best.0, &best.1, &best.2)
                }
            };
            if better {
                min_delta = Some(candidate);
            }
        }
    }

    let mut witnesses = Vec::new();
    let mut notes = BTreeMap::new();
    notes.insert("skipped".into(), skipped.to_string());
    if let Some((delta, code, edge)) = &min_delta {
        notes.insert("min_delta".into(), fmt_f64(*delta));
        let g = graph6::decode(code).expect("code produced by encode");
        let aso_g: f64 = index::aso(&g).expect("scanned graph has no isolated edge");
        witnesses.push(Certificate::for_deletion(&g, *edge, aso_g, *delta));
    }
    Ok(Verdict::new(
        ClaimId::EdgeDeletion,
        params_of(&[("n", n.to_string())]),
        admissible,
        witnesses,
        counterexamples,
        notes,
    ))
}

/// Randomized extension of the edge-deletion check: seeded trials on
/// random connected graphs, one admissible random edge each.
pub fn verify_edge_deletion_random(n: usize, trials: u64, seed: u64) -> Result<Verdict> {
    if !(3..=62).contains(&n) {
        return Err(Error::ParamOutOfRange(format!(
            "edge-deletion-random needs 3 <= n <= 62, got {n}"
        )));
    }
    use rand::{Rng, SeedableRng};
    let max_m = n * (n - 1) / 2;

    struct Trial {
        delta: f64,
        code: String,
        edge: (usize, usize),
        redraws: u64,
    }

    let results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial + 1);
            let mut redraws = 0u64;
            loop {
                let m = rng.random_range(n - 1..=max_m);
                let g = enumerate::random_connected_graph_with(n, m, &mut rng)
                    .expect("feasible by construction");
                let admissible: Vec<(usize, usize)> = g
                    .edges()
                    .into_iter()
                    .filter(|&e| !g.delete_edge(e).unwrap().has_isolated_edge())
                    .collect();
                if admissible.is_empty() {
                    redraws += 1;
                    continue;
                }
                let edge = admissible[rng.random_range(0..admissible.len())];
                let delta: index::DeletionDelta<f64> =
                    index::aso_delta_decomposition(&g, edge).expect("admissible edge");
                return Trial {
                    delta: delta.total,
                    code: graph6::encode(&g),
                    edge,
                    redraws,
                };
            }
        })
        .collect();

    let redraws: u64 = results.iter().map(|t| t.redraws).sum();
    let mut counterexamples = Vec::new();
    let mut min_delta: Option<&Trial> = None;
    for trial in &results {
        if trial.delta <= 0.0 {
            let g = graph6::decode(&trial.code).unwrap();
            let aso_g: f64 = index::aso(&g).expect("trial graph has no isolated edge");
            counterexamples.push(Certificate::for_deletion(
                &g,
                trial.edge,
                aso_g,
                trial.delta,
            ));
        }
        let better = match min_delta {
            None => true,
            Some(best) => (trial.delta, &trial.code) < (best.delta, &best.code),
        };
        if better {
            min_delta = Some(trial);
        }
    }

    let mut witnesses = Vec::new();
    let mut notes = BTreeMap::new();
    notes.insert("redraws".into(), redraws.to_string());
    if let Some(trial) = min_delta {
        notes.insert("min_delta".into(), fmt_f64(trial.delta));
        let g = graph6::decode(&trial.code).unwrap();
        let aso_g: f64 = index::aso(&g).expect("trial graph has no isolated edge");
        witnesses.push(Certificate::for_deletion(
            &g,
            trial.edge,
            aso_g,
            trial.delta,
        ));
    }
    Ok(Verdict::new(
        ClaimId::EdgeDeletionRandom,
        params_of(&[
            ("n", n.to_string()),
            ("trials", trials.to_string()),
            ("seed", seed.to_string()),
        ]),
        trials,
        witnesses,
        counterexamples,
        notes,
    ))
}

/// Fixed-connectivity maximum: among connected graphs of order n with
/// vertex (or edge) connectivity exactly k, ASO is maximized uniquely
/// by (K_1 ∪ K_{n−k−1}) ∨ K_k (K_n when k = n−1).
pub fn verify_connectivity_max(
    n: usize,
    k: usize,
    mode: ConnectivityMode,
    settings: &Settings,
) -> Result<Verdict> {
    let cap = if settings.allow_slow { 10 } else { 8 };
    if !(4..=cap).contains(&n) {
        return Err(Error::ParamOutOfRange(format!(
            "connectivity-max needs 4 <= n <= {cap}, got {n}"
        )));
    }
    let stream = enumerate::connected_graphs(n, settings.allow_slow)?;
    let mut verdicts = verify_connectivity_max_sweep(&stream, &[k], &[mode], settings)?;
    Ok(verdicts.remove(0))
}

/// Sweep variant sharing one enumeration and one κ/λ computation per
/// graph across all requested (k, mode) classes.
pub fn verify_connectivity_max_sweep(
    stream: &GraphStream,
    ks: &[usize],
    modes: &[ConnectivityMode],
    settings: &Settings,
) -> Result<Vec<Verdict>> {
    let n = stream.order();
    for &k in ks {
        if k < 1 || k > n - 1 {
            return Err(Error::ParamOutOfRange(format!(
                "connectivity-max needs 1 <= k <= n-1, got k={k} at n={n}"
            )));
        }
    }
    let connectivity: Vec<(usize, usize)> = stream
        .graphs()
        .par_iter()
        .map(|g| {
            let kappa = crate::connectivity::vertex_connectivity(g)
                .expect("stream members are connected of order >= 2");
            let lambda = crate::connectivity::edge_connectivity(g)
                .expect("stream members are connected of order >= 2");
            (kappa, lambda)
        })
        .collect();

    let mut verdicts = Vec::new();
    for &mode in modes {
        for &k in ks {
            let members: Vec<Graph> = stream
                .graphs()
                .iter()
                .zip(&connectivity)
                .filter(|(_, &(kappa, lambda))| match mode {
                    ConnectivityMode::Vertex => kappa == k,
                    ConnectivityMode::Edge => lambda == k,
                })
                .map(|(g, _)| g.clone())
                .collect();
            let params = params_of(&[
                ("n", n.to_string()),
                ("k", k.to_string()),
                ("mode", mode.to_string()),
            ]);
            if members.is_empty() {
                let notes = params_of(&[("vacuous", "true".into())]);
                verdicts.push(Verdict::new(
                    ClaimId::ConnectivityMax,
                    params,
                    0,
                    Vec::new(),
                    Vec::new(),
                    notes,
                ));
                continue;
            }
            let bound: f64 = families::connectivity_max_bound(n, k)?;
            let target = families::connectivity_extremal(n, k)?;
            let scan = scan_maximum(&members, bound, &target, settings);
            verdicts.push(Verdict::new(
                ClaimId::ConnectivityMax,
                params,
                scan.scanned,
                scan.witnesses,
                scan.counterexamples,
                scan.notes,
            ));
        }
    }
    Ok(verdicts)
}

// ---------------------------------------------------------------------------
// Analytic auxiliaries behind the bounds, exposed for the grid checks.
// ---------------------------------------------------------------------------

/// h extended to a real first argument at fixed a:
/// (x² + a²)/(x + a − 2).
pub fn h_continuous(x: f64, a: f64) -> f64 {
    (x * x + a * a) / (x + a - 2.0)
}

/// The minimum of `h_continuous` on x ≥ 1 sits at −a + 2 + √(2(a²−2a+2)).
pub fn h_critical_point(a: f64) -> f64 {
    -a + 2.0 + (2.0 * (a * a - 2.0 * a + 2.0)).sqrt()
}

/// LHS of the mean-value-theorem inequality:
/// (x² + 2xy − y² − 4x)/((x+y−2)^{3/2}√(x²+y²)).
pub fn mvt_lhs(x: f64, y: f64) -> f64 {
    (x * x + 2.0 * x * y - y * y - 4.0 * x) / ((x + y - 2.0).powf(1.5) * (x * x + y * y).sqrt())
}

fn sqrt_h(a: f64, b: f64) -> f64 {
    ((a * a + b * b) / (a + b - 2.0)).sqrt()
}

/// (n−4)(√h(x,n−1) − √h(2,n−1)) + (n−x−3)√h(n−2,n−2): positive on
/// [3, n−4], which keeps the apex term of the connectivity bound
/// dominant.
pub fn cut_term_gap(n: usize, x: f64) -> f64 {
    let nf = n as f64;
    (nf - 4.0) * (sqrt_h(x, nf - 1.0) - sqrt_h(2.0, nf - 1.0))
        + (nf - x - 3.0) * sqrt_h(nf - 2.0, nf - 2.0)
}

/// [(n−1)²(n(7n−30)+39) − x⁴] + 4x(n−3)[(n−1)² − x²] + 6(n−1)²x²:
/// the numerator of d²/dx² √h(x, n−1); positive means √h(·, n−1) is
/// convex.
pub fn convexity_numerator(n: usize, x: f64) -> f64 {
    let nf = n as f64;
    let q = (nf - 1.0) * (nf - 1.0);
    (q * (nf * (7.0 * nf - 30.0) + 39.0) - x.powi(4))
        + 4.0 * x * (nf - 3.0) * (q - x * x)
        + 6.0 * q * x * x
}

/// The connectivity bound read as a function of real k. Its strict
/// growth on [1, n−2] is what lets the edge-connectivity case ride on
/// the vertex-connectivity one.
pub fn connectivity_bound_at(n: usize, x: f64) -> f64 {
    let nf = n as f64;
    x * (x - 1.0) / 2.0 * (nf + 1.0 / (nf - 2.0)).sqrt()
        + x * (nf - x - 1.0) * (nf - 0.5 + 5.0 / (2.0 * (2.0 * nf - 5.0))).sqrt()
        + x * (((nf - 1.0) * (nf - 1.0) + x * x) / (nf + x - 3.0)).sqrt()
        + (nf - x - 1.0) * (nf - x - 2.0) / 2.0 * (nf - 1.0 + 1.0 / (nf - 3.0)).sqrt()
}

/// Both sides of the second-maximum-degree estimate: the edge-sum
/// overcount at Δ₂ against the closed-form bound's tail.
pub fn second_max_estimate_sides(n: usize, delta2: usize) -> (f64, f64) {
    let nf = n as f64;
    let d = delta2 as f64;
    let tail = (nf - 1.0 + 2.0 / (nf - 3.0)).sqrt();
    let lhs = 6.5f64.sqrt() * (d - 1.0) + (nf - d) * tail;
    let rhs = (nf - 3.0) * (nf + 2.0 / (nf - 2.0)).sqrt() + tail + 2.0;
    (lhs, rhs)
}

/// Inclusive uniform grid from `lo` stepping by `step` up to `hi`.
fn grid_points(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    (0..count).map(|i| lo + i as f64 * step).collect()
}

/// Pendant-pair bound: (x² + a²)/(x + a − 2) ≤ a + 1 + 2/(a − 1) on
/// [1, a] with equality only at x = 1, decreasing then increasing
/// about the critical point. One verdict per value of a.
pub fn verify_lemma_a1(a_values: &[f64], x_steps: usize) -> Result<Vec<Verdict>> {
    if x_steps < 2 {
        return Err(Error::ParamOutOfRange("lemma-a1 needs x_steps >= 2".into()));
    }
    for &a in a_values {
        if !a.is_finite() || a <= 1.0 {
            return Err(Error::ParamOutOfRange(format!(
                "lemma-a1 needs a > 1, got {a}"
            )));
        }
    }
    let mut verdicts = Vec::new();
    for &a in a_values {
        let bound = a + 1.0 + 2.0 / (a - 1.0);
        let scale = bound.abs().max(1.0);
        let step = (a - 1.0) / (x_steps - 1) as f64;
        let xs: Vec<f64> = (0..x_steps)
            .map(|i| {
                if i == x_steps - 1 {
                    a
                } else {
                    1.0 + i as f64 * step
                }
            })
            .collect();
        let values: Vec<f64> = xs.iter().map(|&x| h_continuous(x, a)).collect();
        let turn = h_critical_point(a).clamp(1.0, a);

        let mut counterexamples = Vec::new();
        let mut min_margin = f64::INFINITY;
        for (i, (&x, &fx)) in xs.iter().zip(&values).enumerate() {
            if fx > bound + 1e-12 * scale {
                counterexamples.push(Certificate::for_point(
                    format!("a={a};x={x};above-bound"),
                    bound,
                    bound - fx,
                ));
            }
            let is_equality = (fx - bound).abs() <= 1e-12 * scale;
            if is_equality != (i == 0) {
                counterexamples.push(Certificate::for_point(
                    format!("a={a};x={x};equality-only-at-1"),
                    bound,
                    bound - fx,
                ));
            }
            if i > 0 {
                min_margin = min_margin.min(bound - fx);
            }
        }
        // Discrete unimodality: strictly decreasing before the critical
        // point, strictly increasing after; the straddling interval is
        // unconstrained.
        for i in 0..xs.len() - 1 {
            if xs[i + 1] <= turn && values[i] <= values[i + 1] {
                counterexamples.push(Certificate::for_point(
                    format!("a={a};x={};not-decreasing", xs[i]),
                    bound,
                    values[i] - values[i + 1],
                ));
            }
            if xs[i] >= turn && values[i + 1] <= values[i] {
                counterexamples.push(Certificate::for_point(
                    format!("a={a};x={};not-increasing", xs[i]),
                    bound,
                    values[i + 1] - values[i],
                ));
            }
        }
        let argmin = values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        if (xs[argmin] - turn).abs() > step + 1e-9 {
            counterexamples.push(Certificate::for_point(
                format!(
                    "a={a};argmin={};min-not-adjacent-to-critical-point",
                    xs[argmin]
                ),
                bound,
                (xs[argmin] - turn).abs(),
            ));
        }

        let witnesses = vec![Certificate::for_point(
            format!("a={a};x_star={}", fmt_f64(h_critical_point(a))),
            bound,
            min_margin,
        )];
        verdicts.push(Verdict::new(
            ClaimId::LemmaA1,
            params_of(&[("a", fmt_f64(a)), ("x_steps", x_steps.to_string())]),
            x_steps as u64,
            witnesses,
            counterexamples,
            BTreeMap::new(),
        ));
    }
    Ok(verdicts)
}

/// h-ordering: at order n > 8 the extreme degree pairs form a fixed
/// chain with exactly one equality, h(n−1, n−3) = h(n−2, 1), and every
/// pair outside the seven-pair exceptional set sits strictly below
/// h(n−2, n−2). Exact rationals throughout; one verdict per n.
pub fn verify_lemma_ee1(n_lo: usize, n_hi: usize) -> Result<Vec<Verdict>> {
    if n_lo <= 8 {
        return Err(Error::ParamOutOfRange(format!(
            "lemma-ee1 needs n_lo > 8, got {n_lo}"
        )));
    }
    if n_hi > 1000 || n_lo > n_hi {
        return Err(Error::ParamOutOfRange(format!(
            "lemma-ee1 needs n_lo <= n_hi <= 1000, got {n_lo}..{n_hi}"
        )));
    }
    let verdicts: Vec<Verdict> = (n_lo..=n_hi)
        .into_par_iter()
        .map(verify_lemma_ee1_single)
        .collect();
    Ok(verdicts)
}

fn verify_lemma_ee1_single(n: usize) -> Verdict {
    use std::cmp::Ordering::{Equal, Less};
    let h = |a: usize, b: usize| index::h_exact(a, b).expect("valid degree pair");
    let chain = [
        (n - 2, n - 2),
        (n - 1, n - 3),
        (n - 2, 1),
        (n - 1, 2),
        (n - 1, n - 2),
        (n - 1, n - 1),
        (n - 1, 1),
    ];
    // The second and third links are the one exact equality.
    let expected = [Less, Equal, Less, Less, Less, Less];
    let mut counterexamples = Vec::new();
    let mut scanned = 0u64;
    for (i, want) in expected.iter().enumerate() {
        scanned += 1;
        let got = h(chain[i].0, chain[i].1).cmp(&h(chain[i + 1].0, chain[i + 1].1));
        if got != *want {
            counterexamples.push(Certificate::for_point(
                format!(
                    "n={n};chain h{:?} vs h{:?}: expected {want:?}, got {got:?}",
                    chain[i],
                    chain[i + 1]
                ),
                0.0,
                0.0,
            ));
        }
    }

    let ceiling = h(n - 2, n - 2);
    let ceiling_f64 = ceiling.to_real::<f64>();
    let exceptional: [(usize, usize); 7] = [
        (n - 1, 1),
        (n - 1, 2),
        (n - 2, 1),
        (n - 2, n - 2),
        (n - 1, n - 3),
        (n - 1, n - 2),
        (n - 1, n - 1),
    ];
    for d_i in 1..n {
        for d_j in 1..=d_i {
            if (d_i, d_j) == (1, 1) || exceptional.contains(&(d_i, d_j)) {
                continue;
            }
            scanned += 1;
            let value = h(d_i, d_j);
            if value >= ceiling {
                counterexamples.push(Certificate::for_point(
                    format!("n={n};pair=({d_i},{d_j})"),
                    ceiling_f64,
                    ceiling_f64 - value.to_real::<f64>(),
                ));
            }
        }
    }

    let equality = h(n - 1, n - 3);
    let witnesses = vec![Certificate::for_point(
        format!("n={n};h({},{})=h({},1)={}", n - 1, n - 3, n - 2, equality),
        ceiling_f64,
        equality.to_real::<f64>() - ceiling_f64,
    )];
    Verdict::new(
        ClaimId::LemmaEe1,
        params_of(&[("n", n.to_string())]),
        scanned,
        witnesses,
        counterexamples,
        BTreeMap::new(),
    )
}

/// Slope bound: (x²+2xy−y²−4x)/((x+y−2)^{3/2}√(x²+y²)) > −1/√x on
/// x ≥ 2, y ≥ 1, checked on a uniform grid with the margin recorded.
/// This is what keeps every θ term of the deletion delta above
/// −1/(2√(d−1)).
pub fn verify_mvt_inequality(
    x_range: (f64, f64),
    y_range: (f64, f64),
    step: f64,
) -> Result<Verdict> {
    let (x_lo, x_hi) = x_range;
    let (y_lo, y_hi) = y_range;
    if !(x_lo >= 2.0 && y_lo >= 1.0 && x_hi >= x_lo && y_hi >= y_lo && step > 0.0) {
        return Err(Error::ParamOutOfRange(format!(
            "lemma-mvt grid outside hypothesis region: x in [{x_lo},{x_hi}], y in [{y_lo},{y_hi}], step {step}"
        )));
    }
    let xs = grid_points(x_lo, x_hi, step);
    let ys = grid_points(y_lo, y_hi, step);

    struct Row {
        min_margin: f64,
        at: (f64, f64),
        failures: Vec<Certificate>,
    }
    let rows: Vec<Row> = xs
        .par_iter()
        .map(|&x| {
            let rhs = -1.0 / x.sqrt();
            let mut row = Row {
                min_margin: f64::INFINITY,
                at: (x, y_lo),
                failures: Vec::new(),
            };
            for &y in &ys {
                let margin = mvt_lhs(x, y) - rhs;
                if margin <= 0.0 {
                    row.failures
                        .push(Certificate::for_point(format!("x={x};y={y}"), rhs, margin));
                }
                if margin < row.min_margin {
                    row.min_margin = margin;
                    row.at = (x, y);
                }
            }
            row
        })
        .collect();

    let mut counterexamples = Vec::new();
    let mut min_margin = f64::INFINITY;
    let mut at = (x_lo, y_lo);
    for row in rows {
        counterexamples.extend(row.failures);
        if row.min_margin < min_margin {
            min_margin = row.min_margin;
            at = row.at;
        }
    }
    let witnesses = vec![Certificate::for_point(
        format!("x={};y={}", at.0, at.1),
        -1.0 / at.0.sqrt(),
        min_margin,
    )];
    let notes = params_of(&[("min_margin", fmt_f64(min_margin))]);
    Ok(Verdict::new(
        ClaimId::LemmaMvt,
        params_of(&[
            ("step", fmt_f64(step)),
            ("x", format!("{}..{}", x_lo, x_hi)),
            ("y", format!("{}..{}", y_lo, y_hi)),
        ]),
        (xs.len() * ys.len()) as u64,
        witnesses,
        counterexamples,
        notes,
    ))
}

/// Supporting numeric facts behind the extremal bounds: the
/// second-maximum-degree estimate (n ≥ 10, Δ₂ ∈ {3,4,5}), the cut-term
/// gap on integer x ∈ [3, n−4], the convexity numerator, and strict
/// growth of the connectivity bound in real k. One verdict per n.
pub fn verify_proof_inequalities(
    n_lo: usize,
    n_hi: usize,
    settings: &Settings,
) -> Result<Vec<Verdict>> {
    if n_lo < 7 {
        return Err(Error::ParamOutOfRange(format!(
            "proof-inequalities needs n_lo >= 7, got {n_lo}"
        )));
    }
    if n_hi > 500 || n_lo > n_hi {
        return Err(Error::ParamOutOfRange(format!(
            "proof-inequalities needs n_lo <= n_hi <= 500, got {n_lo}..{n_hi}"
        )));
    }
    let step = settings.grid_step;
    let verdicts: Vec<Verdict> = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| verify_proof_inequalities_single(n, step))
        .collect();
    Ok(verdicts)
}

fn verify_proof_inequalities_single(n: usize, step: f64) -> Verdict {
    let nf = n as f64;
    let mut counterexamples = Vec::new();
    let mut scanned = 0u64;
    let mut min_margin = f64::INFINITY;
    let mut min_at = String::new();
    let mut track = |margin: f64, location: String, failures: &mut Vec<Certificate>| {
        if margin <= 0.0 {
            failures.push(Certificate::for_point(location.clone(), 0.0, margin));
        }
        if margin < min_margin {
            min_margin = margin;
            min_at = location;
        }
    };

    // (a) The second-maximum-degree estimate and its anchoring
    // constants, for n >= 10.
    if n >= 10 {
        for delta2 in [3usize, 4, 5] {
            scanned += 1;
            let (lhs, rhs) = second_max_estimate_sides(n, delta2);
            track(
                rhs - lhs,
                format!("n={n};second-max-estimate;delta2={delta2}"),
                &mut counterexamples,
            );
        }
        scanned += 4;
        let c516 = 5.16;
        track(
            c516 - 2.0 * 6.5f64.sqrt(),
            format!("n={n};second-max-estimate;2sqrt(13/2)<5.16"),
            &mut counterexamples,
        );
        track(
            (nf + 2.0 / (nf - 2.0)).sqrt() + 2.0 - c516,
            format!("n={n};second-max-estimate;5.16<sqrt(n+2/(n-2))+2"),
            &mut counterexamples,
        );
        track(
            8.0 - 3.0 * 6.5f64.sqrt(),
            format!("n={n};second-max-estimate;3sqrt(13/2)<8"),
            &mut counterexamples,
        );
        track(
            2.0 * (nf - 1.0 + 2.0 / (nf - 3.0)).sqrt() + 2.0 - 8.0,
            format!("n={n};second-max-estimate;8<2sqrt(n-1+2/(n-3))+2"),
            &mut counterexamples,
        );
    }

    // (b) Cut-term gap positive on integer x in [3, n−4].
    for x in 3..=n - 4 {
        scanned += 1;
        track(
            cut_term_gap(n, x as f64),
            format!("n={n};cut-term-gap;x={x}"),
            &mut counterexamples,
        );
    }

    // (c) Convexity numerator positive on a grid over [3, n−4].
    for x in grid_points(3.0, (n - 4) as f64, step) {
        scanned += 1;
        track(
            convexity_numerator(n, x),
            format!("n={n};convexity;x={x}"),
            &mut counterexamples,
        );
    }

    // (d) The bound strictly increasing in k on a grid over [1, n−2].
    let gs = grid_points(1.0, (n - 2) as f64, step);
    for w in gs.windows(2) {
        scanned += 1;
        track(
            connectivity_bound_at(n, w[1]) - connectivity_bound_at(n, w[0]),
            format!("n={n};bound-growth;x={}", w[0]),
            &mut counterexamples,
        );
    }

    let witnesses = vec![Certificate::for_point(min_at.clone(), 0.0, min_margin)];
    Verdict::new(
        ClaimId::ProofInequalities,
        params_of(&[("n", n.to_string()), ("step", fmt_f64(step))]),
        scanned,
        witnesses,
        counterexamples,
        BTreeMap::new(),
    )
}

/// Closed-loop audit: every graph certificate must re-decode and
/// re-evaluate to its recorded values within 1e−9 relative.
pub fn audit_certificates(verdict: &Verdict) -> std::result::Result<(), String> {
    for cert in verdict.witnesses.iter().chain(&verdict.counterexamples) {
        let Some(text) = &cert.graph6 else { continue };
        let g = graph6::decode(text).map_err(|e| format!("{text}: {e}"))?;
        let aso_g: f64 = index::aso(&g).map_err(|e| format!("{text}: {e}"))?;
        match &cert.location {
            Some(loc) if loc.starts_with("edge=") => {
                // Deletion certificate: bound = ASO(G), aso = ASO(G−e).
                let inner = loc
                    .strip_prefix("edge=(")
                    .and_then(|rest| rest.split(')').next())
                    .ok_or_else(|| format!("unparseable location {loc}"))?;
                let mut parts = inner.split(',');
                let u: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or("bad edge")?;
                let v: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or("bad edge")?;
                let deleted = g.delete_edge((u, v)).map_err(|e| e.to_string())?;
                let aso_deleted: f64 = index::aso(&deleted).map_err(|e| e.to_string())?;
                let delta = aso_g - aso_deleted;
                if (aso_g - cert.bound).abs() > 1e-9 * cert.bound.abs().max(1.0) {
                    return Err(format!(
                        "{text}: bound {} re-evaluates to {aso_g}",
                        cert.bound
                    ));
                }
                if (delta - cert.slack).abs() > 1e-9 * aso_g.abs().max(1.0) {
                    return Err(format!(
                        "{text}: slack {} re-evaluates to {delta}",
                        cert.slack
                    ));
                }
            }
            _ => {
                let recorded = cert.aso.ok_or_else(|| format!("{text}: missing aso"))?;
                if (aso_g - recorded).abs() > 1e-9 * recorded.abs().max(1.0) {
                    return Err(format!("{text}: aso {recorded} re-evaluates to {aso_g}"));
                }
                let implied = cert.bound - cert.slack;
                if (implied - recorded).abs() > 1e-9 * recorded.abs().max(1.0) {
                    return Err(format!("{text}: slack inconsistent with bound"));
                }
            }
        }
    }
    Ok(())
}

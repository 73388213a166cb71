//! Constructors for the named graph families and the closed-form
//! extremal bounds they attain.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::scalar::{from_usize, Real};

/// A named family instance, as surfaced by the CLI
/// (`--family name --n N [--k K] [--t T]`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Cycle { n: usize },
    Path { n: usize },
    Star { n: usize },
    Complete { n: usize },
    SPrime { n: usize },
    ConnectivityExtremal { n: usize, k: usize },
    SplitExtremal { n: usize, k: usize, t: usize },
}

impl FamilySpec {
    /// Parses the CLI triple (family name, n, optional k and t).
    pub fn from_parts(family: &str, n: usize, k: Option<usize>, t: Option<usize>) -> Result<Self> {
        let need_k =
            || k.ok_or_else(|| Error::ParamOutOfRange(format!("family {family} needs --k")));
        match family {
            "cycle" => Ok(FamilySpec::Cycle { n }),
            "path" => Ok(FamilySpec::Path { n }),
            "star" => Ok(FamilySpec::Star { n }),
            "complete" => Ok(FamilySpec::Complete { n }),
            "s_prime" => Ok(FamilySpec::SPrime { n }),
            "connectivity_extremal" => Ok(FamilySpec::ConnectivityExtremal { n, k: need_k()? }),
            "split_extremal" => Ok(FamilySpec::SplitExtremal {
                n,
                k: need_k()?,
                t: t.ok_or_else(|| {
                    Error::ParamOutOfRange("family split_extremal needs --t".into())
                })?,
            }),
            other => Err(Error::ParamOutOfRange(format!("unknown family {other}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::SPrime { .. } => "s_prime",
            FamilySpec::ConnectivityExtremal { .. } => "connectivity_extremal",
            FamilySpec::SplitExtremal { .. } => "split_extremal",
        }
    }
}

/// Builds the graph named by `spec`, enforcing the documented
/// parameter ranges (`cycle`/`complete` need n ≥ 3, `path`/`star`
/// n ≥ 2, `s_prime` n ≥ 4, the extremal families n ≥ 4).
pub fn construct(spec: &FamilySpec) -> Result<Graph> {
    let range_err = |what: &str| Err(Error::ParamOutOfRange(what.to_string()));
    match *spec {
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return range_err("cycle needs n >= 3");
            }
            cycle(n)
        }
        FamilySpec::Path { n } => {
            if n < 2 {
                return range_err("path needs n >= 2");
            }
            path(n)
        }
        FamilySpec::Star { n } => {
            if n < 2 {
                return range_err("star needs n >= 2");
            }
            star(n)
        }
        FamilySpec::Complete { n } => {
            if n < 3 {
                return range_err("complete needs n >= 3");
            }
            complete(n)
        }
        FamilySpec::SPrime { n } => s_prime(n),
        FamilySpec::ConnectivityExtremal { n, k } => connectivity_extremal(n, k),
        FamilySpec::SplitExtremal { n, k, t } => split_extremal(n, k, t),
    }
}

/// C_n. Requires n ≥ 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::build(n, &edges)
}

/// P_n with vertices in path order. Requires n ≥ 1.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::ParamOutOfRange("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::build(n, &edges)
}

/// The star K_{1,n−1} centered at vertex 0. Requires n ≥ 1.
pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::ParamOutOfRange("star needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::build(n, &edges)
}

/// K_n. Requires n ≥ 1.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::ParamOutOfRange("complete needs n >= 1".into()));
    }
    let edges: Vec<_> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Graph::build(n, &edges)
}

/// S'_n: the star K_{1,n−1} plus one edge joining two pendant
/// vertices — the unique n-order unicyclic graph of maximum degree
/// n − 1. Requires n ≥ 4.
pub fn s_prime(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::ParamOutOfRange(format!(
            "s_prime needs n >= 4, got {n}"
        )));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    edges.push((1, 2));
    Graph::build(n, &edges)
}

/// Join G ∨ H: disjoint union plus all edges between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    if ng + nh > MAX_ORDER {
        return Err(Error::OrderTooLarge(ng + nh));
    }
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + ng, v + ng)));
    edges.extend((0..ng).flat_map(|u| (0..nh).map(move |v| (u, ng + v))));
    Graph::build(ng + nh, &edges)
}

/// Disjoint union G ∪ H with H's vertices shifted past G's.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    if ng + nh > MAX_ORDER {
        return Err(Error::OrderTooLarge(ng + nh));
    }
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + ng, v + ng)));
    Graph::build(ng + nh, &edges)
}

/// (K_1 ∪ K_{n−k−1}) ∨ K_k, the connectivity-k maximizer; k = n − 1
/// yields K_n. Requires n ≥ 4 and 1 ≤ k ≤ n − 1.
pub fn connectivity_extremal(n: usize, k: usize) -> Result<Graph> {
    if n < 4 || k < 1 || k > n - 1 {
        return Err(Error::ParamOutOfRange(format!(
            "connectivity_extremal needs n >= 4 and 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    if k == n - 1 {
        return complete(n);
    }
    split_extremal(n, k, 1)
}

/// (K_t ∪ K_{n−k−t}) ∨ K_k. Requires n ≥ 4, k ≥ 1, 1 ≤ t ≤ n − k − t.
pub fn split_extremal(n: usize, k: usize, t: usize) -> Result<Graph> {
    if n < 4 || k < 1 || t < 1 || n < k + 2 * t {
        return Err(Error::ParamOutOfRange(format!(
            "split_extremal needs n >= 4, k >= 1, 1 <= t <= n-k-t, got n={n}, k={k}, t={t}"
        )));
    }
    let halves = disjoint_union(&complete(t)?, &complete(n - k - t)?)?;
    join(&halves, &complete(k)?)
}

/// RHS of the unicyclic maximum:
/// (n−3)√(n + 2/(n−2)) + 2√(n−1 + 4/(n−1)) + 2. Requires n ≥ 4.
/// Equals aso(S'_n) term by term.
///
/// The middle radical is 4/(n−1), not 4/(n−3): the variant with n−3,
/// which intermediate estimates sometimes settle for, is strictly
/// larger and hence a weaker bound. This is the sharp constant.
pub fn unicyclic_max_bound<T: Real>(n: usize) -> Result<T> {
    if n < 4 {
        return Err(Error::ParamOutOfRange(format!(
            "unicyclic_max_bound needs n >= 4, got {n}"
        )));
    }
    let nf = from_usize::<T>(n);
    let one = T::one();
    let two = from_usize::<T>(2);
    let four = from_usize::<T>(4);
    let pendant = (nf + two / (nf - two)).sqrt();
    let cycle_arm = (nf - one + four / (nf - one)).sqrt();
    Ok(from_usize::<T>(n - 3) * pendant + two * cycle_arm + two)
}

/// RHS of the connectivity maximum, the four-term closed form
/// k√(((n−1)² + k²)/(n+k−3)) + C(k,2)√(n + 1/(n−2))
/// + k(n−k−1)√(n − 1/2 + 5/(2(2n−5))) + C(n−k−1,2)√(n−1 + 1/(n−3)).
///
/// Accepts k = n − 1, where it collapses to aso(K_n). The same closed
/// form serves the edge-connectivity bound. Requires n ≥ 4, 1 ≤ k ≤ n−1.
pub fn connectivity_max_bound<T: Real>(n: usize, k: usize) -> Result<T> {
    if n < 4 || k < 1 || k > n - 1 {
        return Err(Error::ParamOutOfRange(format!(
            "connectivity_max_bound needs n >= 4 and 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    let nf = from_usize::<T>(n);
    let kf = from_usize::<T>(k);
    let one = T::one();
    let two = from_usize::<T>(2);
    let five = from_usize::<T>(5);
    let choose2 = |x: usize| from_usize::<T>(x * x.saturating_sub(1) / 2);

    let cut_to_apex = ((nf - one) * (nf - one) + kf * kf) / (nf + kf - from_usize::<T>(3));
    let within_cut = nf + one / (nf - two);
    let cut_to_clique = nf - one / two + five / (two * (two * nf - five));
    let within_clique = nf - one + one / (nf - from_usize::<T>(3));

    Ok(kf * cut_to_apex.sqrt()
        + choose2(k) * within_cut.sqrt()
        + kf * from_usize::<T>(n - k - 1) * cut_to_clique.sqrt()
        + choose2(n - k - 1) * within_clique.sqrt())
}

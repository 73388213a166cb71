//! `eil` — command-line surface over the ASO index engine.
//!
//! Subcommands: `compute`, `construct`, `enumerate`, and `verify
//! <claim>` with one claim per verified statement, plus `verify all`.
//! Exit status: 0 when every verdict passes, 1 when any fails, 2 on
//! usage or input errors. Reports are byte-identical across reruns and
//! `--jobs` settings unless `--timings` opts into wall-clock fields.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use eil_core::enumerate::{self, GraphStream};
use eil_core::families::{self, FamilySpec};
use eil_core::verify::{self, Settings, Verdict};
use eil_core::{graph6, index, ConnectivityMode, Error, Graph, IndexValue};

mod report;
pub use report::{render_verdicts, Format};

#[derive(Parser)]
#[command(
    name = "eil",
    version,
    about = "Augmented Sombor index lab: compute, construct, enumerate, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute ASO and Sombor indices of graph6 inputs
    Compute(ComputeArgs),
    /// Construct a named family member
    Construct(ConstructArgs),
    /// Enumerate a graph class, one graph per isomorphism class
    Enumerate(EnumerateArgs),
    /// Verify a claim and emit a certificate report
    Verify {
        #[command(subcommand)]
        claim: VerifyArgs,
    },
}

/// Flags shared by every subcommand.
#[derive(Args, Clone)]
struct OutputArgs {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (0 = all cores); output is identical either way
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Record wall-clock runtimes in reports (reruns then differ)
    #[arg(long)]
    timings: bool,
    /// Directory for enumeration spools (default: $EIL_CACHE_DIR)
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Lift the per-class enumeration order caps
    #[arg(long)]
    allow_slow: bool,
}

impl OutputArgs {
    fn cache_dir(&self) -> Option<PathBuf> {
        self.cache_dir
            .clone()
            .or_else(|| std::env::var_os("EIL_CACHE_DIR").map(PathBuf::from))
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// A single graph6 string
    #[arg(long)]
    graph6: Option<String>,
    /// File of graph6 lines (lines starting with `>>` are skipped)
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ConstructArgs {
    /// cycle | path | star | complete | s_prime | connectivity_extremal | split_extremal
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct EnumerateArgs {
    /// connected | unicyclic | labeled-trees
    #[arg(long)]
    class: String,
    #[arg(long)]
    n: usize,
    /// Keep only graphs with this exact connectivity
    #[arg(long)]
    k: Option<usize>,
    /// Connectivity kind for --k (default vertex)
    #[arg(long)]
    mode: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Subcommand)]
enum VerifyArgs {
    /// Unicyclic maximizer: ASO ≤ bound with equality only at S'_n
    UnicyclicMax(RangeClaim),
    /// Unicyclic minimizer: C_n uniquely at value 2n
    UnicyclicMin(RangeClaim),
    /// Edge deletion strictly decreases ASO (exhaustive)
    EdgeDeletion(RangeClaim),
    /// Edge deletion on seeded random graphs beyond exhaustive range
    EdgeDeletionRandom(RandomClaim),
    /// Fixed-connectivity maximizer (vertex and/or edge mode)
    ConnectivityMax(ConnectivityClaim),
    /// Pendant-pair bound (x²+a²)/(x+a−2) ≤ a+1+2/(a−1) on [1, a]
    LemmaA1(A1Claim),
    /// Exact h-ordering of extreme degree pairs for n > 8
    LemmaEe1(SweepClaim),
    /// Mean-value-theorem bound on the x ≥ 2, y ≥ 1 grid
    LemmaMvt(MvtClaim),
    /// Supporting numeric facts behind the extremal bounds
    ProofInequalities(SweepClaim),
    /// The full suite at desk scale
    All(AllClaim),
}

#[derive(Args, Clone)]
struct VerifyCommon {
    /// Relative tolerance for bound comparisons
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Relative window for equality candidates
    #[arg(long, default_value_t = 1e-6)]
    window: f64,
    /// Grid step for the continuous checks
    #[arg(long, default_value_t = 0.25)]
    grid_step: f64,
    /// Seed for randomized checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

impl VerifyCommon {
    fn settings(&self) -> Settings {
        Settings {
            tolerance: self.tolerance,
            window: self.window,
            grid_step: self.grid_step,
            allow_slow: self.output.allow_slow,
        }
    }
}

#[derive(Args)]
struct RangeClaim {
    /// Single order to check
    #[arg(long)]
    n: Option<usize>,
    /// Sweep start (defaults to the claim's standard range)
    #[arg(long)]
    n_lo: Option<usize>,
    /// Sweep end, inclusive
    #[arg(long)]
    n_hi: Option<usize>,
    #[command(flatten)]
    common: VerifyCommon,
}

impl RangeClaim {
    fn range(&self, default_lo: usize, default_hi: usize) -> (usize, usize) {
        match (self.n, self.n_lo, self.n_hi) {
            (Some(n), _, _) => (n, n),
            (None, lo, hi) => (lo.unwrap_or(default_lo), hi.unwrap_or(default_hi)),
        }
    }
}

#[derive(Args)]
struct RandomClaim {
    #[arg(long, default_value_t = 40)]
    n: usize,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[command(flatten)]
    common: VerifyCommon,
}

#[derive(Args)]
struct ConnectivityClaim {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_lo: Option<usize>,
    #[arg(long)]
    n_hi: Option<usize>,
    /// Connectivity value (default: every k in 1..=n−1)
    #[arg(long)]
    k: Option<usize>,
    /// vertex | edge (default: both)
    #[arg(long)]
    mode: Option<String>,
    #[command(flatten)]
    common: VerifyCommon,
}

#[derive(Args)]
struct A1Claim {
    /// Comma-separated values of a (each > 1)
    #[arg(long, default_value = "1.5,2,3,5,10,50")]
    a: String,
    /// Grid points on [1, a]
    #[arg(long, default_value_t = 10000)]
    x_steps: usize,
    #[command(flatten)]
    common: VerifyCommon,
}

#[derive(Args)]
struct SweepClaim {
    #[arg(long)]
    n_lo: Option<usize>,
    #[arg(long)]
    n_hi: Option<usize>,
    #[command(flatten)]
    common: VerifyCommon,
}

#[derive(Args)]
struct MvtClaim {
    #[arg(long, default_value_t = 2.0)]
    x_lo: f64,
    #[arg(long, default_value_t = 100.0)]
    x_hi: f64,
    #[arg(long, default_value_t = 1.0)]
    y_lo: f64,
    #[arg(long, default_value_t = 300.0)]
    y_hi: f64,
    #[command(flatten)]
    common: VerifyCommon,
}

#[derive(Args)]
struct AllClaim {
    /// Cap on enumerated orders for the graph-class claims
    #[arg(long, default_value_t = 9)]
    n_max: usize,
    #[command(flatten)]
    common: VerifyCommon,
}

/// Entry point used by both the binary and the tests. Returns the exit
/// status; reports go to `stdout`, diagnostics to `stderr`.
pub fn run<W: Write, E: Write>(
    args: impl IntoIterator<Item = String>,
    stdout: &mut W,
    stderr: &mut E,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version on stdout with status 0.
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn dispatch<W: Write>(cli: Cli, stdout: &mut W) -> Result<i32, Error> {
    match cli.command {
        Command::Compute(args) => compute(args, stdout),
        Command::Construct(args) => construct(args, stdout),
        Command::Enumerate(args) => enumerate_cmd(args, stdout),
        Command::Verify { claim } => verify_cmd(claim, stdout),
    }
}

fn in_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> Result<T, Error> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::ParamOutOfRange(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(work))
}

fn write_out<W: Write>(text: &str, out: &Option<PathBuf>, stdout: &mut W) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::ParamOutOfRange(format!("cannot write {}: {e}", path.display()))),
        None => {
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

fn compute<W: Write>(args: ComputeArgs, stdout: &mut W) -> Result<i32, Error> {
    let texts: Vec<String> = match (&args.graph6, &args.input) {
        (Some(text), None) => vec![text.clone()],
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Error::ParamOutOfRange(format!("cannot read {}: {e}", path.display())))?
            .lines()
            .filter(|line| !line.is_empty() && !line.starts_with(">>"))
            .map(str::to_string)
            .collect(),
        _ => {
            return Err(Error::ParamOutOfRange(
                "compute needs exactly one of --graph6 or --input".into(),
            ))
        }
    };
    let mut results = Vec::new();
    for text in &texts {
        let g = graph6::decode(text)?;
        let aso: IndexValue = index::aso(&g)?;
        let so: IndexValue = index::so(&g);
        results.push(report::ComputeRow {
            graph6: text.clone(),
            n: g.order(),
            m: g.size(),
            aso,
            so,
        });
    }
    let config = config_echo(&[("command", "compute".into())], &args.output);
    let text = report::render_compute(&config, &results, args.output.format);
    write_out(&text, &args.output.out, stdout)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

fn construct<W: Write>(args: ConstructArgs, stdout: &mut W) -> Result<i32, Error> {
    let spec = FamilySpec::from_parts(&args.family, args.n, args.k, args.t)?;
    let g = families::construct(&spec)?;
    let row = report::ConstructRow {
        family: spec.name().to_string(),
        n: g.order(),
        m: g.size(),
        graph6: graph6::encode(&g),
        degrees: g
            .degree_profile()
            .map(|p| p.sequence().to_vec())
            .unwrap_or_default(),
        aso: index::aso::<IndexValue>(&g).ok(),
    };
    let mut entries = vec![
        ("command", "construct".to_string()),
        ("family", args.family.clone()),
        ("n", args.n.to_string()),
    ];
    if let Some(k) = args.k {
        entries.push(("k", k.to_string()));
    }
    if let Some(t) = args.t {
        entries.push(("t", t.to_string()));
    }
    let config = config_echo(&entries, &args.output);
    let text = report::render_construct(&config, &row, args.output.format);
    write_out(&text, &args.output.out, stdout)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

/// Loads a spooled stream from the cache directory or generates and
/// spools it. Unreadable or mismatched cache files are regenerated.
fn cached_stream(
    class: &str,
    n: usize,
    cache_dir: Option<&Path>,
    generate: impl FnOnce() -> Result<GraphStream, Error>,
) -> Result<GraphStream, Error> {
    let Some(dir) = cache_dir else {
        return generate();
    };
    let path = dir.join(format!("{class}_n{n}.g6"));
    if let Ok(file) = std::fs::File::open(&path) {
        if let Ok(stream) = GraphStream::read_from(std::io::BufReader::new(file), class, n) {
            return Ok(stream);
        }
    }
    let stream = generate()?;
    let _ = std::fs::create_dir_all(dir);
    if let Ok(file) = std::fs::File::create(&path) {
        let mut writer = std::io::BufWriter::new(file);
        let _ = stream.write_to(&mut writer);
    }
    Ok(stream)
}

fn base_stream(class: &str, n: usize, output: &OutputArgs) -> Result<GraphStream, Error> {
    let allow_slow = output.allow_slow;
    let cache = output.cache_dir();
    match class {
        "connected" => cached_stream("connected", n, cache.as_deref(), || {
            enumerate::connected_graphs(n, allow_slow)
        }),
        "unicyclic" => cached_stream("unicyclic", n, cache.as_deref(), || {
            enumerate::unicyclic_graphs(n, allow_slow)
        }),
        other => Err(Error::ParamOutOfRange(format!(
            "unknown class {other}: expected connected, unicyclic, or labeled-trees"
        ))),
    }
}

fn enumerate_cmd<W: Write>(args: EnumerateArgs, stdout: &mut W) -> Result<i32, Error> {
    if args.class == "labeled-trees" {
        let trees: Vec<Graph> = in_pool(args.output.jobs, || {
            enumerate::labeled_trees(args.n, args.output.allow_slow)
        })??
        .collect();
        let config = config_echo(
            &[
                ("command", "enumerate".into()),
                ("class", args.class.clone()),
                ("n", args.n.to_string()),
            ],
            &args.output,
        );
        let text =
            report::render_labeled(&config, "labeled-trees", args.n, &trees, args.output.format);
        write_out(&text, &args.output.out, stdout)?;
        return Ok(0);
    }

    let mode: ConnectivityMode = match &args.mode {
        Some(text) => text.parse()?,
        None => ConnectivityMode::Vertex,
    };
    let stream = in_pool(args.output.jobs, || -> Result<GraphStream, Error> {
        let base = base_stream(&args.class, args.n, &args.output)?;
        Ok(match args.k {
            Some(k) => enumerate::filter_by_connectivity(&base, mode, k),
            None => base,
        })
    })??;

    let mut entries = vec![
        ("command", "enumerate".to_string()),
        ("class", args.class.clone()),
        ("n", args.n.to_string()),
    ];
    if let Some(k) = args.k {
        entries.push(("k", k.to_string()));
        entries.push(("mode", mode.to_string()));
    }
    let config = config_echo(&entries, &args.output);
    let text = report::render_stream(&config, &stream, args.output.format);
    write_out(&text, &args.output.out, stdout)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn verify_cmd<W: Write>(args: VerifyArgs, stdout: &mut W) -> Result<i32, Error> {
    let (common, mut entries) = claim_config(&args);
    let timings = common.output.timings;
    let verdicts = in_pool(common.output.jobs, || run_claims(&args))??;

    entries.insert(0, ("command", "verify".to_string()));
    entries.push(("tolerance", common.tolerance.to_string()));
    entries.push(("window", common.window.to_string()));
    entries.push(("grid_step", common.grid_step.to_string()));
    entries.push(("seed", common.seed.to_string()));
    let config = config_echo(&entries_ref(&entries), &common.output);
    let mut verdicts = verdicts;
    for verdict in &mut verdicts {
        if !timings {
            verdict.runtime_ms = 0;
        }
        // Echo the full run configuration into every verdict.
        for (key, value) in &config {
            verdict
                .params
                .entry(key.clone())
                .or_insert_with(|| value.clone());
        }
    }
    let text = report::render_verdicts(&verdicts, common.output.format);
    write_out(&text, &common.output.out, stdout)?;
    Ok(if verdicts.iter().all(|v| v.pass) {
        0
    } else {
        1
    })
}

fn entries_ref(entries: &[(&'static str, String)]) -> Vec<(&'static str, String)> {
    entries.to_vec()
}

fn claim_config(args: &VerifyArgs) -> (VerifyCommon, Vec<(&'static str, String)>) {
    match args {
        VerifyArgs::UnicyclicMax(c) => (c.common.clone(), vec![("claim", "unicyclic-max".into())]),
        VerifyArgs::UnicyclicMin(c) => (c.common.clone(), vec![("claim", "unicyclic-min".into())]),
        VerifyArgs::EdgeDeletion(c) => (c.common.clone(), vec![("claim", "edge-deletion".into())]),
        VerifyArgs::EdgeDeletionRandom(c) => (
            c.common.clone(),
            vec![
                ("claim", "edge-deletion-random".into()),
                ("n", c.n.to_string()),
                ("trials", c.trials.to_string()),
            ],
        ),
        VerifyArgs::ConnectivityMax(c) => {
            (c.common.clone(), vec![("claim", "connectivity-max".into())])
        }
        VerifyArgs::LemmaA1(c) => (
            c.common.clone(),
            vec![
                ("claim", "lemma-a1".into()),
                ("a", c.a.clone()),
                ("x_steps", c.x_steps.to_string()),
            ],
        ),
        VerifyArgs::LemmaEe1(c) => (c.common.clone(), vec![("claim", "lemma-ee1".into())]),
        VerifyArgs::LemmaMvt(c) => (
            c.common.clone(),
            vec![
                ("claim", "lemma-mvt".into()),
                ("x", format!("{}..{}", c.x_lo, c.x_hi)),
                ("y", format!("{}..{}", c.y_lo, c.y_hi)),
            ],
        ),
        VerifyArgs::ProofInequalities(c) => (
            c.common.clone(),
            vec![("claim", "proof-inequalities".into())],
        ),
        VerifyArgs::All(c) => (
            c.common.clone(),
            vec![("claim", "all".into()), ("n_max", c.n_max.to_string())],
        ),
    }
}

fn timed(
    timings: bool,
    verdicts: &mut Vec<Verdict>,
    work: impl FnOnce() -> Result<Vec<Verdict>, Error>,
) -> Result<(), Error> {
    let start = Instant::now();
    let mut batch = work()?;
    let elapsed = start.elapsed().as_millis() as u64;
    if timings {
        for v in &mut batch {
            v.runtime_ms = elapsed;
        }
    }
    verdicts.append(&mut batch);
    Ok(())
}

fn run_claims(args: &VerifyArgs) -> Result<Vec<Verdict>, Error> {
    let mut verdicts = Vec::new();
    match args {
        VerifyArgs::UnicyclicMax(c) => {
            let settings = c.common.settings();
            let (lo, hi) = c.range(4, 9);
            for n in lo..=hi {
                timed(c.common.output.timings, &mut verdicts, || {
                    Ok(vec![verify_unicyclic_max_cached(
                        n,
                        &settings,
                        &c.common.output,
                    )?])
                })?;
            }
        }
        VerifyArgs::UnicyclicMin(c) => {
            let settings = c.common.settings();
            let (lo, hi) = c.range(3, 9);
            for n in lo..=hi {
                timed(c.common.output.timings, &mut verdicts, || {
                    Ok(vec![verify::verify_unicyclic_min(n, &settings)?])
                })?;
            }
        }
        VerifyArgs::EdgeDeletion(c) => {
            let settings = c.common.settings();
            let (lo, hi) = c.range(3, 7);
            for n in lo..=hi {
                timed(c.common.output.timings, &mut verdicts, || {
                    Ok(vec![verify::verify_edge_deletion_exhaustive(n, &settings)?])
                })?;
            }
        }
        VerifyArgs::EdgeDeletionRandom(c) => {
            timed(c.common.output.timings, &mut verdicts, || {
                Ok(vec![verify::verify_edge_deletion_random(
                    c.n,
                    c.trials,
                    c.common.seed,
                )?])
            })?;
        }
        VerifyArgs::ConnectivityMax(c) => {
            let settings = c.common.settings();
            let (lo, hi) = match (c.n, c.n_lo, c.n_hi) {
                (Some(n), _, _) => (n, n),
                (None, lo, hi) => (lo.unwrap_or(4), hi.unwrap_or(8)),
            };
            let modes: Vec<ConnectivityMode> = match &c.mode {
                Some(text) => vec![text.parse()?],
                None => vec![ConnectivityMode::Vertex, ConnectivityMode::Edge],
            };
            for n in lo..=hi {
                let ks: Vec<usize> = match c.k {
                    Some(k) => vec![k],
                    None => (1..n).collect(),
                };
                timed(c.common.output.timings, &mut verdicts, || {
                    let stream = cached_stream(
                        "connected",
                        n,
                        c.common.output.cache_dir().as_deref(),
                        || enumerate::connected_graphs(n, settings.allow_slow),
                    )?;
                    verify::verify_connectivity_max_sweep(&stream, &ks, &modes, &settings)
                })?;
            }
        }
        VerifyArgs::LemmaA1(c) => {
            let a_values = parse_a_list(&c.a)?;
            timed(c.common.output.timings, &mut verdicts, || {
                verify::verify_lemma_a1(&a_values, c.x_steps)
            })?;
        }
        VerifyArgs::LemmaEe1(c) => {
            let (lo, hi) = (c.n_lo.unwrap_or(9), c.n_hi.unwrap_or(200));
            timed(c.common.output.timings, &mut verdicts, || {
                verify::verify_lemma_ee1(lo, hi)
            })?;
        }
        VerifyArgs::LemmaMvt(c) => {
            timed(c.common.output.timings, &mut verdicts, || {
                Ok(vec![verify::verify_mvt_inequality(
                    (c.x_lo, c.x_hi),
                    (c.y_lo, c.y_hi),
                    c.common.grid_step,
                )?])
            })?;
        }
        VerifyArgs::ProofInequalities(c) => {
            let settings = c.common.settings();
            let (lo, hi) = (c.n_lo.unwrap_or(7), c.n_hi.unwrap_or(200));
            timed(c.common.output.timings, &mut verdicts, || {
                verify::verify_proof_inequalities(lo, hi, &settings)
            })?;
        }
        VerifyArgs::All(c) => {
            let settings = c.common.settings();
            let n_max = c.n_max;
            let output = &c.common.output;
            for n in 4..=n_max.clamp(4, 12) {
                timed(output.timings, &mut verdicts, || {
                    Ok(vec![verify_unicyclic_max_cached(n, &settings, output)?])
                })?;
            }
            for n in 3..=n_max.clamp(3, 12) {
                timed(output.timings, &mut verdicts, || {
                    Ok(vec![verify::verify_unicyclic_min(n, &settings)?])
                })?;
            }
            for n in 3..=n_max.clamp(3, 7) {
                timed(output.timings, &mut verdicts, || {
                    Ok(vec![verify::verify_edge_deletion_exhaustive(n, &settings)?])
                })?;
            }
            timed(output.timings, &mut verdicts, || {
                Ok(vec![verify::verify_edge_deletion_random(
                    40,
                    1000,
                    c.common.seed,
                )?])
            })?;
            let modes = [ConnectivityMode::Vertex, ConnectivityMode::Edge];
            for n in 4..=n_max.clamp(4, 8) {
                let ks: Vec<usize> = (1..n).collect();
                timed(output.timings, &mut verdicts, || {
                    let stream =
                        cached_stream("connected", n, output.cache_dir().as_deref(), || {
                            enumerate::connected_graphs(n, settings.allow_slow)
                        })?;
                    verify::verify_connectivity_max_sweep(&stream, &ks, &modes, &settings)
                })?;
            }
            let a_values = parse_a_list("1.5,2,3,5,10,50")?;
            timed(output.timings, &mut verdicts, || {
                verify::verify_lemma_a1(&a_values, 10000)
            })?;
            timed(output.timings, &mut verdicts, || {
                verify::verify_lemma_ee1(9, 200)
            })?;
            timed(output.timings, &mut verdicts, || {
                Ok(vec![verify::verify_mvt_inequality(
                    (2.0, 100.0),
                    (1.0, 300.0),
                    settings.grid_step,
                )?])
            })?;
            timed(output.timings, &mut verdicts, || {
                verify::verify_proof_inequalities(7, 200, &settings)
            })?;
        }
    }
    Ok(verdicts)
}

/// Unicyclic enumeration through the cache when one is configured.
fn verify_unicyclic_max_cached(
    n: usize,
    settings: &Settings,
    output: &OutputArgs,
) -> Result<Verdict, Error> {
    if n < 4 {
        return Err(Error::ParamOutOfRange(format!(
            "unicyclic-max needs n >= 4, got {n}"
        )));
    }
    let stream = cached_stream("unicyclic", n, output.cache_dir().as_deref(), || {
        enumerate::unicyclic_graphs(n, settings.allow_slow)
    })?;
    verify::verify_unicyclic_max_on(&stream, settings)
}

fn parse_a_list(text: &str) -> Result<Vec<f64>, Error> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| Error::ParamOutOfRange(format!("bad value for --a: {part}")))
        })
        .collect()
}

/// The full effective run configuration, echoed into every report.
fn config_echo(entries: &[(&str, String)], output: &OutputArgs) -> BTreeMap<String, String> {
    let mut map: BTreeMap<String, String> = entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect();
    map.insert("format".into(), output.format.to_string());
    map.insert("jobs".into(), output.jobs.to_string());
    map.insert("allow_slow".into(), output.allow_slow.to_string());
    map.insert("timings".into(), output.timings.to_string());
    if let Some(dir) = output.cache_dir() {
        map.insert("cache_dir".into(), dir.display().to_string());
    }
    map
}

//! Batch frontend for the `meanrt` engine.
//!
//! Exit codes: 0 success, 1 verification failure, 2 malformed input,
//! 3 search budget exceeded. Diagnostics go to standard error.

pub mod format;

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use meanrt::constructions::{blow_up, turan5_witness};
use meanrt::factors::theorem3_factor;
use meanrt::graph::turan_edge_count;
use meanrt::regularity::{cluster_graph, majority_color_clusters, Partition};
use meanrt::search::{min_color_sum, ramsey_exact, rt_exact, Certificate, SearchConfig};
use meanrt::{choose2, ColoringConstraint, Graph, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_MALFORMED,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "error: {m}"),
            CliError::Budget(m) => write!(f, "budget exceeded: {m}"),
        }
    }
}

impl From<meanrt::Error> for CliError {
    fn from(e: meanrt::Error) -> Self {
        match e {
            meanrt::Error::BudgetExceeded(m) => CliError::Budget(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "meanrt", version, about = "Exact mean/local/classical Ramsey-Turán computations")]
struct Cli {
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Worker threads for graph enumeration; output does not depend on it.
    #[arg(long, global = true, env = "MEANRT_THREADS", default_value_t = 1)]
    threads: usize,
    /// Node limit for each decision search.
    #[arg(long, global = true, env = "MEANRT_MAX_NODES")]
    max_nodes: Option<u64>,
    /// Largest n accepted by rt-exact and conjecture-scan.
    #[arg(long, global = true, env = "MEANRT_RT_MAX_N")]
    rt_max_n: Option<usize>,
    /// Largest host graph for a single decision search.
    #[arg(long, global = true, env = "MEANRT_MAX_HOST")]
    max_host: Option<usize>,
}

impl BudgetArgs {
    fn config(&self) -> Result<SearchConfig, CliError> {
        let mut cfg = SearchConfig { threads: self.threads, ..SearchConfig::default() };
        if let Some(n) = self.max_nodes {
            cfg.max_nodes = n;
        }
        if let Some(n) = self.rt_max_n {
            cfg.rt_max_vertices = n;
        }
        if let Some(n) = self.max_host {
            cfg.max_host_vertices = n;
        }
        if cfg.threads == 0 || cfg.max_nodes == 0 || cfg.rt_max_vertices == 0 || cfg.max_host_vertices == 0 {
            return Err(CliError::Input("budgets and thread count must be positive".into()));
        }
        Ok(cfg)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a colored construction.
    #[command(subcommand)]
    Construct(Construct),
    /// Check a colored graph against a constraint and a pattern.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        constraint: String,
    },
    /// Exact Ramsey-Turán number with a certificate.
    RtExact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        constraint: String,
        /// Certificate destination; printed after the value when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Least n forcing a monochromatic pattern in every coloring of K_n.
    RamseyExact {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        constraint: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive oracles.
    #[command(subcommand)]
    Oracle(Oracle),
    /// Clique factor by the residue of n mod 3.
    Factor {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Cluster graph of a partition, optionally with the majority coloring.
    Cluster {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        eta: String,
        #[arg(long)]
        colored: bool,
    },
    /// RT values under the three constraints against the Turán count.
    ConjectureScan {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// 2-colored T(n,5) without a monochromatic triangle.
    Turan5 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blow-up of a colored graph.
    Blowup {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Oracle {
    /// Minimum color sum over K_m colorings without a monochromatic triangle.
    ColorSum {
        #[arg(long)]
        m: usize,
    },
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli) {
        Ok(Outcome { report, files, code }) => {
            for (path, body) in files {
                if let Err(e) = std::fs::write(&path, body) {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    return EXIT_MALFORMED;
                }
            }
            let _ = stdout.write_all(report.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            e.exit_code()
        }
    }
}

struct Outcome {
    report: String,
    files: Vec<(PathBuf, String)>,
    code: i32,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Outcome { report, files: Vec::new(), code: EXIT_OK }
    }

    /// Sends `body` to `out` when given, otherwise appends it to the report.
    fn with_output(mut self, out: Option<PathBuf>, body: String) -> Self {
        match out {
            Some(p) => self.files.push((p, body)),
            None => self.report.push_str(&body),
        }
        self
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

/// `k<N>`, `c<N>`, `p<N>` or a graph file.
pub fn parse_pattern(name: &str) -> Result<Graph, CliError> {
    let lower = name.to_ascii_lowercase();
    let sized = |prefix: char| -> Option<usize> { lower.strip_prefix(prefix)?.parse().ok() };
    let g = if let Some(m) = sized('k') {
        Graph::complete(m)?
    } else if let Some(m) = sized('c') {
        Graph::cycle(m)?
    } else if let Some(m) = sized('p') {
        Graph::path(m)?
    } else if Path::new(name).is_file() {
        format::parse_graph(&read(Path::new(name))?)?
    } else {
        return Err(CliError::Input(format!("unknown pattern '{name}' (use kN, cN, pN or a graph file)")));
    };
    if g.edge_count() == 0 {
        return Err(CliError::Input(format!("pattern '{name}' has no edges")));
    }
    Ok(g)
}

fn parse_constraint(s: &str) -> Result<ColoringConstraint, CliError> {
    Ok(s.parse::<ColoringConstraint>()?)
}

fn parse_positive_rational(name: &str, s: &str) -> Result<Rational, CliError> {
    let r = meanrt::coloring::parse_rational(s)?;
    if r <= Rational::from_integer(0) {
        return Err(CliError::Input(format!("--{name} must be positive, got {s}")));
    }
    Ok(r)
}

fn dispatch(cli: Cli) -> Result<Outcome, CliError> {
    let cfg = cli.budget.config()?;
    match cli.command {
        Command::Construct(Construct::Turan5 { n, out }) => {
            let w = turan5_witness(n)?;
            Ok(Outcome::ok(String::new()).with_output(out, format::write_colored(&w)))
        }
        Command::Construct(Construct::Blowup { input, sizes, out }) => {
            let base = format::parse_colored(&read(&input)?)?;
            let b = blow_up(&base, &sizes)?;
            Ok(Outcome::ok(String::new()).with_output(out, format::write_colored(&b)))
        }
        Command::Verify { input, pattern, constraint } => {
            let c = format::parse_colored(&read(&input)?)?;
            let h = parse_pattern(&pattern)?;
            let k = parse_constraint(&constraint)?;
            Ok(verify_report(&c, &h, &pattern, &k))
        }
        Command::RtExact { n, pattern, constraint, out } => {
            let h = parse_pattern(&pattern)?;
            let k = parse_constraint(&constraint)?;
            let cert = rt_exact(n, &h, &k, &cfg)?;
            Ok(certificate_outcome(&cert, out))
        }
        Command::RamseyExact { pattern, constraint, nmax, out } => {
            let h = parse_pattern(&pattern)?;
            let k = parse_constraint(&constraint)?;
            let cert = ramsey_exact(&h, &k, nmax, &cfg)?;
            Ok(certificate_outcome(&cert, out))
        }
        Command::Oracle(Oracle::ColorSum { m }) => {
            let cert = min_color_sum(m)?;
            let mut report = format!("{}\n", cert.value);
            if let Some(w) = &cert.witness {
                report.push_str(&format::write_colored(w));
            }
            Ok(Outcome::ok(report))
        }
        Command::Factor { input } => {
            let g = format::parse_graph(&read(&input)?)?;
            let mut report = String::new();
            match theorem3_factor(&g)? {
                Some(f) => {
                    let sizes: Vec<String> = f.sizes().iter().map(ToString::to_string).collect();
                    let _ = writeln!(report, "factor=found");
                    let _ = writeln!(report, "sizes={}", sizes.join(","));
                    for b in &f.blocks {
                        let vs: Vec<String> = b.iter().map(ToString::to_string).collect();
                        let _ = writeln!(report, "block={}", vs.join(" "));
                    }
                }
                None => {
                    let _ = writeln!(report, "factor=none");
                }
            }
            Ok(Outcome::ok(report))
        }
        Command::Cluster { input, partition, gamma, eta, colored } => {
            let c = format::parse_colored(&read(&input)?)?;
            let lists = format::parse_partition(&read(&partition)?)?;
            let p = Partition::from_lists(c.n(), &lists)?;
            let gamma = parse_positive_rational("gamma", &gamma)?;
            let eta = parse_positive_rational("eta", &eta)?;
            let cluster = if colored {
                majority_color_clusters(&c, &p, gamma, eta)?
            } else {
                cluster_graph(c.host(), &p, gamma, eta)?
            };
            let mut report = String::new();
            let _ = writeln!(report, "m={}", cluster.m);
            let _ = writeln!(report, "equitable={}", meanrt::regularity::is_equitable(&p));
            for pair in &cluster.pairs {
                let _ =
                    writeln!(report, "pair={} {} density={} regular={}", pair.i, pair.j, pair.density, pair.regular);
            }
            let colors = cluster.cluster_coloring.clone();
            for (idx, (i, j)) in cluster.edges.iter().enumerate() {
                match &colors {
                    Some(cs) => {
                        let _ = writeln!(report, "edge={i} {j} color={}", cs[idx]);
                    }
                    None => {
                        let _ = writeln!(report, "edge={i} {j}");
                    }
                }
            }
            if let Some(rho) = cluster.rho_star() {
                let _ = writeln!(report, "rho_star={rho}");
            }
            Ok(Outcome::ok(report))
        }
        Command::ConjectureScan { pattern, nmax, out } => {
            let h = parse_pattern(&pattern)?;
            let report = conjecture_scan(&h, nmax, &cfg)?;
            Ok(match out {
                Some(p) => Outcome { report: String::new(), files: vec![(p, report)], code: EXIT_OK },
                None => Outcome::ok(report),
            })
        }
    }
}

fn certificate_outcome(cert: &Certificate, out: Option<PathBuf>) -> Outcome {
    Outcome::ok(format!("{}\n", cert.value)).with_output(out, format::write_certificate(cert))
}

fn verify_report(c: &meanrt::ColoredGraph, h: &Graph, pattern: &str, k: &ColoringConstraint) -> Outcome {
    let mut report = String::new();
    let degrees = c.color_degrees();
    let sum: usize = degrees.iter().sum();
    let constraint_ok = c.satisfies(k);
    if !constraint_ok {
        match k {
            ColoringConstraint::ExactlyKColors(bound) => {
                let _ = writeln!(report, "violation=colors q={} bound={bound}", c.q());
            }
            ColoringConstraint::KLocal(bound) => {
                let v = (0..c.n()).find(|&v| degrees[v] > *bound).expect("some vertex exceeds the bound");
                let _ = writeln!(report, "violation=local vertex={v} colors={} bound={bound}", degrees[v]);
            }
            ColoringConstraint::RhoMean(rho) => {
                let _ = writeln!(
                    report,
                    "violation=mean sum={sum} n={} sum*{den}={} > {num}*n={}",
                    c.n(),
                    sum as i64 * rho.denom(),
                    rho.numer() * c.n() as i64,
                    den = rho.denom(),
                    num = rho.numer(),
                );
            }
        }
    }
    let mono = c.find_monochromatic(h);
    if let Some(m) = &mono {
        let emb: Vec<String> = m.embedding.iter().map(ToString::to_string).collect();
        let _ =
            writeln!(report, "violation=monochromatic pattern={pattern} color={} embedding={}", m.color, emb.join(","));
    }
    let ok = constraint_ok && mono.is_none();
    let _ = writeln!(report, "n={} edges={} colors={} color_sum={sum} constraint={k}", c.n(), c.edge_count(), c.q());
    let _ = writeln!(report, "verdict={}", if ok { "ok" } else { "violation" });
    Outcome { report, files: Vec::new(), code: if ok { EXIT_OK } else { EXIT_VIOLATION } }
}

/// Known two-color Ramsey numbers `R(K_m, 2)`.
fn two_color_clique_ramsey(m: usize) -> Option<usize> {
    match m {
        2 => Some(2),
        3 => Some(6),
        4 => Some(18),
        _ => None,
    }
}

/// One record per `n`: RT under `colors:2`, `local:2`, `mean:2` and, for
/// cliques with a known Ramsey number, the Turán reference `t(n, R - 1)`.
pub fn conjecture_scan(h: &Graph, nmax: usize, cfg: &SearchConfig) -> Result<String, CliError> {
    let constraints = [
        ColoringConstraint::ExactlyKColors(2),
        ColoringConstraint::KLocal(2),
        ColoringConstraint::RhoMean(Rational::from_integer(2)),
    ];
    let is_clique = h.edge_count() == choose2(h.n());
    let ramsey = if is_clique { two_color_clique_ramsey(h.n()) } else { None };
    let mut report = String::new();
    let mut all_equal = true;
    for n in 1..=nmax {
        let values: Vec<u64> =
            constraints.iter().map(|k| rt_exact(n, h, k, cfg).map(|c| c.value)).collect::<Result<_, _>>()?;
        let turan = match ramsey {
            Some(r) => Some(turan_edge_count(n, r - 1)?),
            None => None,
        };
        let equal = values.iter().all(|&v| v == values[0]) && turan.is_none_or(|t| t == values[0]);
        all_equal &= equal;
        let turan_txt = turan.map_or_else(|| "na".to_string(), |t| t.to_string());
        let _ = writeln!(
            report,
            "n={n} turan={turan_txt} colors2={} local2={} mean2={} equal={equal}",
            values[0], values[1], values[2]
        );
    }
    let _ = writeln!(report, "all_equal={all_equal}");
    Ok(report)
}

//! Command-line front end. Every report carries the schema version, seed and
//! budget; exit codes are 0 on success, 1 when a search proves there is
//! nothing to find, 2 when a budget ran out, 64 for usage errors, 65 for
//! malformed input, 66 for unreadable files and 70 for internal failures.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::absorb::{
    find_connector, parse_vector, parse_vectors, reachability_estimate, robust_vectors, verify_absorber, verify_absorbing_set,
    verify_connector, ConnectorSearch, GeneratedLattice, Problem, Quantified, SetSampling, Verdict,
};
use crate::construct::{augment_with, base_graph, Base, CappedCirculant, Circulant, ConstructionSpec};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, parse_partition, write_graph, write_partition, Graph, MultipartiteSpec, VertexPartition};
use crate::incompat::{IncompatJson, IncompatibilitySystem};
use crate::rational::Rational;
use crate::regcount;
use crate::solver::{
    enumerate_compatible_copies, find_compatible_factor, greedy_almost_tiling, max_compatible_tiling, Budget, FactorOutcome,
};
use crate::{acceptance, chromatic};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_NONE: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_SOFTWARE: i32 = 70;

#[derive(Parser, Debug)]
#[command(name = "compat-tilings", version, about = "Compatible H-factors, extremal constructions, absorbers and lattices")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Run seed; every random stream is derived from it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Node-expansion cap for each search.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT.0)]
    pub budget: u64,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Emit compact JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// χ, σ, D(H), the highest common factors, χ_cr and χ* of a pattern.
    Invariants {
        graph: PathBuf,
        /// Largest pattern order accepted by the colouring enumeration.
        #[arg(long, default_value_t = chromatic::DEFAULT_MAX_ORDER)]
        cap: usize,
    },
    /// Builds a base graph or a full extremal instance with its certificates.
    Construct(ConstructArgs),
    /// Factor, maximum tiling, greedy tiling or copy count.
    Solve(SolveArgs),
    /// Lattice membership and transferral search.
    Lattice(LatticeArgs),
    /// Absorbers, connectors, reachability, robust vectors.
    Absorb {
        #[command(subcommand)]
        command: AbsorbCommand,
    },
    /// Densities, regularity, reduced graphs and counting experiments.
    Regcount {
        #[command(subcommand)]
        command: RegcountCommand,
    },
    /// Runs the acceptance battery, or the listed criteria.
    Acceptance { criteria: Vec<String> },
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long)]
    pub n: usize,
    /// Incompatibility parameter; omit to build only the base graph.
    #[arg(long)]
    pub mu: Option<Rational>,
    #[arg(long, default_value = "ko")]
    pub base: Base,
    #[arg(long, value_enum, default_value_t = Strategy::Strict)]
    pub augment: Strategy,
    /// Directory for graph.txt, partition.txt, incompat.txt and report.json.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Strategy {
    /// Internal degrees exactly in the window, or an error.
    Strict,
    /// Largest circulant below the window's upper end.
    Capped,
}

#[derive(Args, Debug, Clone)]
pub struct Instance {
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long)]
    pub graph: PathBuf,
    /// Incompatibility file (text or JSON); empty system when omitted.
    #[arg(long)]
    pub incompat: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub instance: Instance,
    #[arg(long, value_enum, default_value_t = Mode::Factor)]
    pub mode: Mode,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Mode {
    Factor,
    Max,
    Greedy,
    Count,
}

#[derive(Args, Debug)]
pub struct LatticeArgs {
    /// One comma-separated generator per line.
    #[arg(long)]
    pub generators: PathBuf,
    /// Comma-separated target vector.
    #[arg(long, allow_hyphen_values = true)]
    pub target: Option<String>,
    /// Also search for a transferral u_i - u_j.
    #[arg(long)]
    pub transferral: bool,
}

#[derive(Subcommand, Debug)]
pub enum AbsorbCommand {
    /// Checks an absorber or a connector against its definition.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Smallest connector for u, v avoiding an excluded set.
    Find {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long, value_delimiter = ',')]
        exclude: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
    /// (H, m, t)-reachability of u, v.
    Reach {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Absorbing-set property of A for remainders of size at most ξn.
    Absorbing {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
        #[arg(long)]
        xi: Rational,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Robust index vectors with respect to a partition.
    Robust {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        beta: Rational,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct SamplingArgs {
    /// Sets drawn when the family is too large to enumerate.
    #[arg(long, default_value_t = 200)]
    pub samples: u64,
    /// Enumerate every set when there are at most this many.
    #[arg(long, default_value_t = 20_000)]
    pub exhaustive_limit: u64,
}

#[derive(Subcommand, Debug)]
pub enum VerifyWhat {
    Absorber {
        #[command(flatten)]
        instance: Instance,
        /// The absorbed h-set S.
        #[arg(long, value_delimiter = ',')]
        target: Vec<usize>,
        /// The absorber A.
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
        #[arg(long)]
        t: usize,
    },
    Connector {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum RegcountCommand {
    Density {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        x: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        y: Vec<usize>,
    },
    Regular {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        x: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        y: Vec<usize>,
        #[arg(long)]
        eps: Rational,
        #[arg(long)]
        d: Option<Rational>,
    },
    Reduced {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        eps: Rational,
        #[arg(long)]
        d: Rational,
    },
    /// Transversal copies of K_r(h_1, ..., h_r) with and without F.
    Count {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        incompat: Option<PathBuf>,
        #[arg(long)]
        partition: PathBuf,
        /// Part sizes h_1,...,h_r.
        #[arg(long, value_delimiter = ',')]
        spec: Vec<usize>,
    },
    /// Counting under random μn-bounded systems for each μ.
    Sweep {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long, value_delimiter = ',')]
        spec: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        mus: Vec<Rational>,
        /// Emit CSV rows instead of a report.
        #[arg(long)]
        csv: bool,
    },
}

/// Result of a subcommand before rendering.
struct Output {
    command: &'static str,
    body: Value,
    text: String,
    code: i32,
    raw: bool,
}

impl Output {
    fn new(command: &'static str, body: impl Serialize, text: String) -> Output {
        Output { command, body: serde_json::to_value(body).expect("reports serialize"), text, code: 0, raw: false }
    }

    fn code(mut self, code: i32) -> Output {
        self.code = code;
        self
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?)
}

fn load_system(g: &Graph, path: Option<&Path>) -> Result<IncompatibilitySystem> {
    let Some(path) = path else {
        return Ok(IncompatibilitySystem::empty(g));
    };
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let j: IncompatJson = serde_json::from_str(&text).map_err(|e| crate::error::parse_error(e.line(), e.to_string()))?;
        IncompatibilitySystem::from_json(g, &j)
    } else {
        IncompatibilitySystem::parse_text(g, &text)
    }
}

struct Loaded {
    h: Graph,
    g: Graph,
    f: IncompatibilitySystem,
}

impl Instance {
    fn load(&self) -> Result<Loaded> {
        let h = load_graph(&self.pattern)?;
        let g = load_graph(&self.graph)?;
        let f = load_system(&g, self.incompat.as_deref())?;
        Ok(Loaded { h, g, f })
    }
}

impl Loaded {
    fn problem(&self, budget: Budget) -> Problem<'_> {
        Problem::new(&self.h, &self.g, &self.f).with_budget(budget)
    }
}

fn sampling(s: SamplingArgs, seed: u64) -> SetSampling {
    SetSampling { exhaustive_limit: s.exhaustive_limit, samples: s.samples, seed }
}

fn verdict_code(v: &Verdict) -> i32 {
    match v {
        Verdict::Valid => 0,
        Verdict::Invalid(_) => EXIT_NONE,
        Verdict::Indeterminate => EXIT_INDETERMINATE,
    }
}

fn quantified_code(q: &Quantified) -> i32 {
    match q {
        Quantified::Proven { .. } | Quantified::Supported { .. } => 0,
        Quantified::Refuted { .. } => EXIT_NONE,
        Quantified::Indeterminate { .. } => EXIT_INDETERMINATE,
    }
}

fn invariants(path: &Path, cap: usize) -> Result<Output> {
    let h = load_graph(path)?;
    let p = chromatic::chi_star_capped(&h, cap)?;
    let text = format!("χ = {}, σ = {}, χ_cr = {}, χ* = {}, hcf(H) = 1: {}", p.chi, p.sigma, p.chi_cr, p.chi_star, p.hcf_is_one);
    Ok(Output::new("invariants", &p, text))
}

fn construct(a: &ConstructArgs, common: &Common) -> Result<Output> {
    let h = load_graph(&a.pattern)?;
    let Some(mu) = a.mu else {
        let b = base_graph(a.base, &h, a.n)?;
        if let Some(dir) = &a.out {
            fs::create_dir_all(dir)?;
            fs::write(dir.join("graph.txt"), write_graph(&b.graph))?;
            fs::write(dir.join("partition.txt"), write_partition(&b.parts))?;
            fs::write(dir.join("report.json"), serde_json::to_string_pretty(&b.report).expect("reports serialize"))?;
        }
        let text = format!("{} base on {} vertices: parts {:?}, δ = {}", b.report.base, a.n, b.report.part_sizes, b.report.min_degree);
        return Ok(Output::new("construct", &b.report, text));
    };
    let spec = ConstructionSpec { pattern: h, n: a.n, mu, base: a.base, seed: common.seed };
    let inst = match a.augment {
        Strategy::Strict => augment_with(&spec, &Circulant)?,
        Strategy::Capped => augment_with(&spec, &CappedCirculant)?,
    };
    let report = inst.report();
    if let Some(dir) = &a.out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("graph.txt"), write_graph(&inst.graph))?;
        fs::write(dir.join("partition.txt"), write_partition(&inst.parts))?;
        fs::write(dir.join("incompat.txt"), inst.system.to_text())?;
        fs::write(dir.join("report.json"), serde_json::to_string_pretty(&report).expect("reports serialize"))?;
    }
    let c = &inst.certificates;
    let text = format!(
        "n = {}, μ = {mu}, {} augmentation: δ = {} (target {}), Δ = {}, certificates {}",
        a.n,
        inst.strategy,
        c.min_degree,
        c.min_degree_target,
        c.delta,
        if c.all_ok() { "all hold" } else { "NOT all hold" }
    );
    Ok(Output::new("construct", &report, text))
}

fn solve(a: &SolveArgs, common: &Common) -> Result<Output> {
    let l = a.instance.load()?;
    let budget = Budget(common.budget);
    match a.mode {
        Mode::Factor => {
            let out = find_compatible_factor(&l.h, &l.g, &l.f, budget)?;
            let (text, code) = match &out {
                FactorOutcome::Found { tiling, nodes } => (format!("factor found: {} copies ({nodes} nodes)", tiling.len()), 0),
                FactorOutcome::None { reason, nodes, .. } => (format!("no compatible factor: {reason:?} ({nodes} nodes)"), EXIT_NONE),
                FactorOutcome::Indeterminate { nodes } => (format!("indeterminate after {nodes} nodes"), EXIT_INDETERMINATE),
            };
            Ok(Output::new("solve", json!({"mode": "factor", "result": out}), text).code(code))
        }
        Mode::Max => {
            let m = max_compatible_tiling(&l.h, &l.g, &l.f, budget)?;
            let text = format!("{} copies, {}", m.tiling.len(), if m.optimal { "optimal" } else { "not proven optimal" });
            let code = if m.optimal { 0 } else { EXIT_INDETERMINATE };
            Ok(Output::new("solve", json!({"mode": "max", "result": m}), text).code(code))
        }
        Mode::Greedy => {
            let t = greedy_almost_tiling(&l.h, &l.g, &l.f, common.seed)?;
            let text = format!("{} copies, {} vertices uncovered", t.tiling.len(), t.uncovered);
            Ok(Output::new("solve", json!({"mode": "greedy", "result": t}), text))
        }
        Mode::Count => {
            let e = enumerate_compatible_copies(&l.h, &l.g, &l.f, budget)?;
            let text = format!("{} compatible copies{}", e.copies.len(), if e.truncated { " (truncated)" } else { "" });
            let code = if e.truncated { EXIT_INDETERMINATE } else { 0 };
            let body = json!({"mode": "count", "count": e.copies.len(), "truncated": e.truncated, "nodes": e.nodes});
            Ok(Output::new("solve", body, text).code(code))
        }
    }
}

fn lattice(a: &LatticeArgs) -> Result<Output> {
    let gens = parse_vectors(&read(&a.generators)?)?;
    let target = a.target.as_deref().map(parse_vector).transpose().map_err(|e| crate::error::parse_error(1, e))?;
    let dim = gens.first().map(Vec::len).or(target.as_ref().map(Vec::len)).unwrap_or(0);
    let l = GeneratedLattice::new(dim, gens)?;
    let mut body = json!({"dim": dim, "rank": l.rank(), "hnf": l.basis()});
    let mut text = vec![format!("rank {} in dimension {dim}", l.rank())];
    if let Some(x) = &target {
        let m = l.membership(x)?;
        text.push(match &m.coefficients {
            Some(c) => format!("member, coefficients {c:?}"),
            None => "not a member".into(),
        });
        body["membership"] = serde_json::to_value(&m).expect("reports serialize");
    }
    if a.transferral || target.is_none() {
        let t = crate::absorb::find_transferral(&l)?;
        text.push(match &t {
            Some(t) => format!("transferral u_{} - u_{}", t.i + 1, t.j + 1),
            None => "no transferral".into(),
        });
        body["transferral"] = serde_json::to_value(&t).expect("reports serialize");
    }
    Ok(Output::new("lattice", body, text.join("\n")))
}

fn absorb(cmd: &AbsorbCommand, common: &Common) -> Result<Output> {
    let budget = Budget(common.budget);
    match cmd {
        AbsorbCommand::Verify { what: VerifyWhat::Absorber { instance, target, set, t } } => {
            let l = instance.load()?;
            let v = verify_absorber(target, set, *t, &l.problem(budget))?;
            let text = format!("absorber: {:?}", v.verdict);
            Ok(Output::new("absorb", &v, text).code(verdict_code(&v.verdict)))
        }
        AbsorbCommand::Verify { what: VerifyWhat::Connector { instance, u, v, set, t } } => {
            let l = instance.load()?;
            let c = verify_connector(set, *u, *v, *t, &l.problem(budget))?;
            let text = format!("connector: {:?}", c.verdict);
            Ok(Output::new("absorb", &c, text).code(verdict_code(&c.verdict)))
        }
        AbsorbCommand::Find { instance, u, v, exclude, t } => {
            let l = instance.load()?;
            let r = find_connector(*u, *v, exclude, *t, &l.problem(budget))?;
            let (text, code) = match &r {
                ConnectorSearch::Found { connector, .. } => (format!("connector {:?}", connector.set), 0),
                ConnectorSearch::None { .. } => ("no connector".into(), EXIT_NONE),
                ConnectorSearch::Indeterminate { .. } => ("indeterminate".into(), EXIT_INDETERMINATE),
            };
            Ok(Output::new("absorb", &r, text).code(code))
        }
        AbsorbCommand::Reach { instance, u, v, m, t, sampling: s } => {
            let l = instance.load()?;
            let q = reachability_estimate(*u, *v, *m, *t, sampling(*s, common.seed), &l.problem(budget))?;
            Ok(Output::new("absorb", &q, format!("{q:?}")).code(quantified_code(&q)))
        }
        AbsorbCommand::Absorbing { instance, set, xi, sampling: s } => {
            let l = instance.load()?;
            let q = verify_absorbing_set(set, *xi, sampling(*s, common.seed), &l.problem(budget))?;
            Ok(Output::new("absorb", &q, format!("{q:?}")).code(quantified_code(&q)))
        }
        AbsorbCommand::Robust { instance, partition, beta, sampling: s } => {
            let l = instance.load()?;
            let part = parse_partition(&read(partition)?, l.g.n())?;
            let r = robust_vectors(&l.problem(budget), &part, *beta, sampling(*s, common.seed))?;
            let lines: Vec<String> = r.vectors.iter().map(|v| format!("{:?}: {:?} ({} copies)", v.vector, v.status, v.copies)).collect();
            Ok(Output::new("absorb", &r, lines.join("\n")))
        }
    }
}

fn part_sets(part: &VertexPartition, n: usize) -> Vec<crate::bitset::VertexSet> {
    (0..part.len()).map(|i| part.block_set(i, n)).collect()
}

fn regcount_cmd(cmd: &RegcountCommand, common: &Common) -> Result<Output> {
    let budget = Budget(common.budget);
    match cmd {
        RegcountCommand::Density { graph, x, y } => {
            let g = load_graph(graph)?;
            let s = regcount::pair_stats(&g, x, y)?;
            Ok(Output::new("regcount", &s, format!("d(X, Y) = {} ({} edges)", s.density, s.edges)))
        }
        RegcountCommand::Regular { graph, x, y, eps, d } => {
            let g = load_graph(graph)?;
            let r = regcount::is_eps_regular_exhaustive(&g, x, y, *eps, *d)?;
            let text = match &r.witness {
                None => format!("regular at ε = {eps}{}", if r.holds() { "" } else { ", but below the density floor" }),
                Some(w) => format!("irregular: A = {:?}, B = {:?}, d(A, B) = {} vs {}", w.a, w.b, w.density, r.density),
            };
            Ok(Output::new("regcount", &r, text))
        }
        RegcountCommand::Reduced { graph, partition, eps, d } => {
            let g = load_graph(graph)?;
            let part = parse_partition(&read(partition)?, g.n())?;
            let r = regcount::reduced_graph(&g, &part, *eps, *d)?;
            Ok(Output::new("regcount", &r, format!("reduced graph on {} clusters, edges {:?}", part.len(), r.edges)))
        }
        RegcountCommand::Count { graph, incompat, partition, spec } => {
            let g = load_graph(graph)?;
            let f = load_system(&g, incompat.as_deref())?;
            let part = parse_partition(&read(partition)?, g.n())?;
            let spec = MultipartiteSpec::new(spec.clone())?;
            let r = regcount::counting_experiment(&g, &f, &part_sets(&part, g.n()), &spec, budget)?;
            let text = format!("{} of {} transversal copies compatible, c = {}", r.compatible, r.total, r.c_observed);
            let code = if r.truncated { EXIT_INDETERMINATE } else { 0 };
            Ok(Output::new("regcount", &r, text).code(code))
        }
        RegcountCommand::Sweep { graph, partition, spec, mus, csv } => {
            let g = load_graph(graph)?;
            let part = parse_partition(&read(partition)?, g.n())?;
            let spec = MultipartiteSpec::new(spec.clone())?;
            let rows = regcount::counting_sweep(&g, &part_sets(&part, g.n()), &spec, mus, common.seed, budget)?;
            let csv_text = regcount::sweep_csv(&rows);
            let mut out = Output::new("regcount", &rows, csv_text.clone());
            out.raw = *csv;
            Ok(out)
        }
    }
}

fn acceptance_cmd(criteria: &[String], common: &Common) -> Result<Output> {
    let report = acceptance::run(criteria, common.seed)?;
    let lines: Vec<String> = report.criteria.iter().map(|c| c.line()).collect();
    let code = if report.all_ok() { 0 } else { EXIT_NONE };
    Ok(Output::new("acceptance", &report.criteria, lines.join("\n")).code(code))
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let c = &cli.common;
    match &cli.command {
        Command::Invariants { graph, cap } => invariants(graph, *cap),
        Command::Construct(a) => construct(a, c),
        Command::Solve(a) => solve(a, c),
        Command::Lattice(a) => lattice(a),
        Command::Absorb { command } => absorb(command, c),
        Command::Regcount { command } => regcount_cmd(command, c),
        Command::Acceptance { criteria } => acceptance_cmd(criteria, c),
    }
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => EXIT_NO_INPUT,
        Error::Parse { .. } | Error::VertexOutOfRange { .. } | Error::SelfLoop(_) | Error::MissingEdge(_) | Error::TooLarge(_) => EXIT_DATA,
        Error::BudgetExhausted(_) => EXIT_INDETERMINATE,
        Error::Precondition(_) | Error::CapExceeded(_) => EXIT_USAGE,
        Error::Consistency(_) => EXIT_SOFTWARE,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Io(_) => "io",
        Error::Parse { .. } => "parse",
        Error::VertexOutOfRange { .. } | Error::SelfLoop(_) | Error::MissingEdge(_) | Error::TooLarge(_) => "input",
        Error::BudgetExhausted(_) => "budget",
        Error::Precondition(_) => "precondition",
        Error::CapExceeded(_) => "cap",
        Error::Consistency(_) => "internal",
    }
}

/// Renders a report: compact JSON with the reproducibility header, or text.
fn render(out: &Output, common: &Common) -> String {
    if out.raw {
        return out.text.clone();
    }
    if common.json {
        let doc = json!({"schema_version": SCHEMA_VERSION, "command": out.command, "seed": common.seed,
            "budget": common.budget, "exit_code": out.code, "report": out.body});
        format!("{doc}\n")
    } else {
        format!("{}\n", out.text.trim_end())
    }
}

/// Parses `argv`, runs the command and returns the process exit code along
/// with what it printed to stdout and stderr.
pub fn run_captured<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 0,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (code, String::new(), text) };
        }
    };
    let common = cli.common.clone();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(common.jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => return (EXIT_SOFTWARE, String::new(), format!("cannot start {} workers: {e}\n", common.jobs)),
    };
    match pool.install(|| dispatch(&cli)) {
        Ok(out) => (out.code, render(&out, &common), String::new()),
        Err(e) => {
            let code = exit_code(&e);
            let err = if common.json {
                format!(
                    "{}\n",
                    json!({"schema_version": SCHEMA_VERSION, "seed": common.seed, "budget": common.budget,
                        "exit_code": code, "error": {"kind": error_kind(&e), "message": e.to_string()}})
                )
            } else {
                format!("error: {e}\n")
            };
            (code, String::new(), err)
        }
    }
}

/// Entry point for the binary.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (code, out, err) = run_captured(argv);
    print!("{out}");
    eprint!("{err}");
    code
}

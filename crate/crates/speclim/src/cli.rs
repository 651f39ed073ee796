//! Command-line interface.
//!
//! Exit codes: 0 on success, 1 when a computation fails or a sweep finds mismatches,
//! 2 on usage errors (bad flags, unreadable or malformed input, invalid parameters).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use speclim_core::classify::{
    classify_a, classify_aalpha, classify_l, classify_mixed, classify_q, ClassificationResult,
    Coverage,
};
use speclim_core::graph::{build_family, Family, FamilySpec};
use speclim_core::hypergraph::{
    build_hyperfamily, extend, reduce, tensor_radius, HyperFamily, UniformHypergraph,
};
use speclim_core::limits::{
    chi2_u, chi_u, constants, guo_alpha, hoffman_eta, s1, s2, s3, s4, shearer_approach,
    LimitReport,
};
use speclim_core::charpoly::{ratio_limits, AlphaPoint};
use speclim_core::oracle::TheoremId;
use speclim_core::spectra::{spectrum, GraphRef, Model};

use crate::format::{parse_graph, parse_hypergraph, FormatError, GraphInput};
use crate::report::{num, OutputFormat, Report};
use crate::sweep::{thread_limit, verify_parallel};

#[derive(Debug, Parser)]
#[command(name = "speclim", version, about = "Spectral radii, limit points and band classification of graphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectral radius of a graph under a matrix model.
    Radius(GraphArgs),
    /// All eigenvalues, ascending.
    Spectrum(GraphArgs),
    /// Band of the spectral radius and the listed family the graph matches.
    Classify(GraphArgs),
    /// Limit points, thresholds and constants.
    Limits(LimitArgs),
    /// Exhaustive sweeps checking the classification lists.
    Verify(VerifyArgs),
    /// Spectral radius of the adjacency tensor of a uniform hypergraph.
    Hypergraph(HyperArgs),
    /// Nested caterpillars whose radii approach a target value.
    Shearer(ShearerArgs),
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false, args = ["family", "input"])]
pub struct Source {
    /// Family literal such as `path:7`, `tshape:1,2,4` or `ctilde1:7`.
    #[arg(long)]
    pub family: Option<String>,
    /// Edge-list file.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub source: Source,
    /// Matrix model: A, L, Q, Aalpha, signed, hermitian or skew. Defaults to the natural
    /// model of the input (A, signed, hermitian or skew).
    #[arg(long)]
    pub model: Option<String>,
    /// α for the A_α model.
    #[arg(long)]
    pub alpha: Option<f64>,
}

#[derive(Debug, Args)]
#[group(id = "which", required = true, multiple = false)]
pub struct LimitChoice {
    /// η_n, the adjacency limit points below √(2+√5).
    #[arg(long, value_name = "N")]
    pub hoffman: Option<usize>,
    /// α_n, the Laplacian limit points below 2+ω+ω⁻¹.
    #[arg(long, value_name = "N")]
    pub guo: Option<usize>,
    /// The A_α thresholds s1(N), s2, s3, s4.
    #[arg(long, value_name = "N")]
    pub thresholds: Option<usize>,
    /// The named constants.
    #[arg(long)]
    pub constants: bool,
    /// Limit of ρ_{A_α} for pendant paths grown at `--vertex` of this family.
    #[arg(long, value_name = "FAMILY")]
    pub chi: Option<String>,
    /// Ratio limits of the path polynomials at `--lambda`, `--alpha`.
    #[arg(long)]
    pub ratio: bool,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[command(flatten)]
    pub which: LimitChoice,
    /// With --hoffman or --guo, list every term up to N.
    #[arg(long)]
    pub sequence: bool,
    /// With --chi, the vertex the paths grow from.
    #[arg(long, default_value_t = 0)]
    pub vertex: usize,
    /// α in [0, 1) for --chi and --ratio.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// With --chi, grow two paths at the vertex instead of one.
    #[arg(long)]
    pub two_paths: bool,
    /// With --ratio, λ > 2.
    #[arg(long)]
    pub lambda: Option<f64>,
    /// With --ratio, the index at which the ratios are taken.
    #[arg(long, default_value_t = 200)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Sweep to run, e.g. `A_lt2`; see --list.
    #[arg(long, required_unless_present_any = ["all", "list"])]
    pub theorem: Option<String>,
    /// Run every sweep at its default size.
    #[arg(long, conflicts_with = "theorem")]
    pub all: bool,
    /// List the sweeps and their size limits.
    #[arg(long)]
    pub list: bool,
    /// Smallest order swept (default 1).
    #[arg(long)]
    pub nmin: Option<usize>,
    /// Largest order swept (default per sweep, see --list).
    #[arg(long)]
    pub nmax: Option<usize>,
    /// Report each mismatch instead of the summary.
    #[arg(long)]
    pub details: bool,
}

#[derive(Debug, Args)]
pub struct HyperArgs {
    /// Family literal such as `hpath:3,4` or `hcycle:3,5`.
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    pub family: Option<String>,
    /// Hypergraph file (`r n m` header).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Add a fresh vertex to every edge first.
    #[arg(long, conflicts_with = "reduce")]
    pub extend: bool,
    /// Remove one degree-1 vertex from every edge first.
    #[arg(long)]
    pub reduce: bool,
}

#[derive(Debug, Args)]
pub struct ShearerArgs {
    /// Target value, at least √(2+√5).
    #[arg(long)]
    pub target: f64,
    /// Maximum number of caterpillars.
    #[arg(long, default_value_t = 60)]
    pub steps: usize,
}

/// Failure of a command, with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}")]
    Core(#[from] speclim_core::Error),
    /// A sweep ran but found mismatches; the report is still printed.
    #[error("{0} sweep(s) found mismatches")]
    Mismatches(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use speclim_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Format { .. } => 2,
            CliError::Core(E::Parameter(_) | E::Input(_)) => 2,
            CliError::Core(_) | CliError::Mismatches(_) => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(src: &Source) -> Result<GraphInput, CliError> {
    if let Some(lit) = &src.family {
        let spec: FamilySpec = lit.parse()?;
        return Ok(match build_family(&spec)? {
            Family::Simple(g) => GraphInput::Simple(g),
            Family::Mixed(m) => GraphInput::Mixed(m),
        });
    }
    let path = src.input.as_ref().expect("clap enforces one source");
    parse_graph(&read(path)?).map_err(|source| CliError::Format {
        path: path.display().to_string(),
        source,
    })
}

fn graph_ref(g: &GraphInput) -> GraphRef<'_> {
    match g {
        GraphInput::Simple(g) => g.into(),
        GraphInput::Signed(g) => g.into(),
        GraphInput::Mixed(g) => g.into(),
        GraphInput::Oriented(g) => g.into(),
    }
}

fn model_of(args: &GraphArgs, g: &GraphInput) -> Result<Model, CliError> {
    let name = match &args.model {
        Some(m) => m.to_ascii_lowercase(),
        None => match g {
            GraphInput::Simple(_) => "a".into(),
            GraphInput::Signed(_) => "signed".into(),
            GraphInput::Mixed(_) => "hermitian".into(),
            GraphInput::Oriented(_) => "skew".into(),
        },
    };
    let model = match name.as_str() {
        "a" => Model::A,
        "l" => Model::L,
        "q" => Model::Q,
        "aalpha" => {
            let a = args.alpha.ok_or_else(|| usage("--model Aalpha needs --alpha"))?;
            Model::AAlpha(a)
        }
        "signed" | "s" => Model::Signed,
        "hermitian" | "h" => Model::Hermitian,
        "skew" => Model::Skew,
        other => {
            return Err(usage(format!(
                "unknown model {other:?}; expected A, L, Q, Aalpha, signed, hermitian or skew"
            )))
        }
    };
    if args.alpha.is_some() && !matches!(model, Model::AAlpha(_)) {
        return Err(usage("--alpha only applies to --model Aalpha"));
    }
    Ok(model)
}

fn model_name(m: Model) -> String {
    match m {
        Model::A => "A".into(),
        Model::L => "L".into(),
        Model::Q => "Q".into(),
        Model::AAlpha(a) => format!("Aalpha({})", crate::report::round12(a)),
        Model::Signed => "signed".into(),
        Model::Hermitian => "hermitian".into(),
        Model::Skew => "skew".into(),
    }
}

fn radius(args: &GraphArgs) -> Result<Report, CliError> {
    let g = load_graph(&args.source)?;
    let model = model_of(args, &g)?;
    let s = spectrum(graph_ref(&g), model)?;
    Ok(Report::record(vec![
        ("model", json!(model_name(model))),
        ("n", json!(g.order())),
        ("radius", num(s.radius)),
    ]))
}

fn spectrum_report(args: &GraphArgs) -> Result<Report, CliError> {
    let g = load_graph(&args.source)?;
    let model = model_of(args, &g)?;
    let s = spectrum(graph_ref(&g), model)?;
    let mut r = Report::new(&["index", "eigenvalue"]);
    for (i, &v) in s.values.iter().enumerate() {
        // eigensolver noise around a zero eigenvalue
        let v = if v.abs() < 1e-13 { 0.0 } else { v };
        // skew spectra are purely imaginary: report them as `μi`
        let cell = if s.imaginary {
            json!(format!("{}i", crate::report::round12(v)))
        } else {
            num(v)
        };
        r.push(vec![json!(i), cell]);
    }
    Ok(r)
}

fn coverage_name(c: Coverage) -> &'static str {
    match c {
        Coverage::Complete => "complete",
        Coverage::Partial => "partial",
        Coverage::ShapeOnly => "shape-only",
        Coverage::None => "none",
    }
}

pub fn classification_report(r: &ClassificationResult) -> Report {
    Report::record(vec![
        ("model", json!(model_name(r.model))),
        ("radius", num(r.radius)),
        ("region", json!(r.region.to_string())),
        ("coverage", json!(coverage_name(r.coverage))),
        ("family", r.family.as_ref().map_or(Value::Null, |f| json!(f.to_string()))),
        ("expected", r.expected.map_or(Value::Null, |e| json!(e.to_string()))),
        ("agreement", json!(r.agreement)),
    ])
}

fn classify(args: &GraphArgs) -> Result<Report, CliError> {
    let g = load_graph(&args.source)?;
    let model = model_of(args, &g)?;
    let r = match (&g, model) {
        (GraphInput::Simple(g), Model::A) => classify_a(g)?,
        (GraphInput::Simple(g), Model::Q) => classify_q(g)?,
        (GraphInput::Simple(g), Model::L) => classify_l(g)?,
        (GraphInput::Simple(g), Model::AAlpha(a)) => classify_aalpha(g, a)?,
        (GraphInput::Mixed(m), Model::Hermitian) => classify_mixed(m)?,
        (_, m) => {
            return Err(usage(format!(
                "no classification for a {} graph under {}",
                g.flavour().name(),
                model_name(m)
            )))
        }
    };
    Ok(classification_report(&r))
}

fn limit_row(name: &str, n: Option<usize>, l: &LimitReport) -> Vec<Value> {
    vec![
        json!(name),
        n.map_or(Value::Null, |n| json!(n)),
        num(l.value),
        num(l.bracket.0),
        num(l.bracket.1),
        json!(l.iterations),
        num(l.residual),
        json!(l.equation),
    ]
}

const LIMIT_COLUMNS: [&str; 8] = [
    "name",
    "n",
    "value",
    "lower",
    "upper",
    "iterations",
    "residual",
    "equation",
];

fn limits(args: &LimitArgs) -> Result<Report, CliError> {
    let w = &args.which;
    let sequence = |name: &str, n: usize, f: fn(usize) -> speclim_core::Result<LimitReport>, first: usize| {
        let mut r = Report::new(&LIMIT_COLUMNS);
        let from = if args.sequence { first } else { n };
        for k in from..=n {
            r.push(limit_row(name, Some(k), &f(k)?));
        }
        r.single = !args.sequence;
        Ok::<_, CliError>(r)
    };
    if let Some(n) = w.hoffman {
        return sequence("eta", n, hoffman_eta, 1);
    }
    if let Some(n) = w.guo {
        return sequence("alpha", n, guo_alpha, 0);
    }
    if let Some(n) = w.thresholds {
        let mut r = Report::new(&["name", "value", "residual", "equation"]);
        r.push(vec![json!("s1"), num(s1(n)?), num(0.0), json!(format!("s1({n}) closed form"))]);
        for (name, l) in [("s2", s2()?), ("s3", s3()?), ("s4", s4()?)] {
            r.push(vec![json!(name), num(l.value), num(l.residual), json!(l.equation)]);
        }
        return Ok(r);
    }
    if w.constants {
        let c = constants();
        let mut r = Report::new(&["name", "value"]);
        for (name, v) in [
            ("tau", c.tau),
            ("rho1", c.rho1),
            ("rho2", c.rho2),
            ("omega", c.omega),
            ("epsilon", c.epsilon),
            ("tau1", c.tau1),
            ("tau2", c.tau2),
        ] {
            r.push(vec![json!(name), num(v)]);
        }
        return Ok(r);
    }
    let alpha = || args.alpha.ok_or_else(|| usage("this limit needs --alpha"));
    if let Some(lit) = &w.chi {
        let g = match build_family(&lit.parse()?)? {
            Family::Simple(g) => g,
            Family::Mixed(_) => return Err(usage("--chi needs an undirected family")),
        };
        let a = alpha()?;
        let (name, l) = if args.two_paths {
            ("chi2", chi2_u(&g, args.vertex, a)?)
        } else {
            ("chi", chi_u(&g, args.vertex, a)?)
        };
        let mut row = limit_row(name, None, &l);
        row.push(json!(l.degenerate));
        let mut cols = LIMIT_COLUMNS.to_vec();
        cols.push("degenerate");
        let fields = cols.into_iter().zip(row).collect();
        return Ok(Report::record(fields));
    }
    // --ratio
    let lambda = args.lambda.ok_or_else(|| usage("--ratio needs --lambda"))?;
    let r = ratio_limits(AlphaPoint::new(lambda, alpha()?)?, args.n)?;
    Ok(Report::record(vec![
        ("n", json!(r.n)),
        ("h", num(r.h)),
        ("b_over_p", num(r.b_over_p)),
        ("h_over_b", num(r.h_over_b)),
        ("b_over_p_error", num(r.b_over_p_error)),
        ("h_over_b_error", num(r.h_over_b_error)),
    ]))
}

/// Runs the sweeps; the report is returned together with the number that failed.
fn verify(args: &VerifyArgs) -> Result<(Report, usize), CliError> {
    if args.list {
        let mut r = Report::new(&["theorem", "default_nmax", "max_nmax"]);
        for id in TheoremId::all() {
            let (d, m) = id.size_limits();
            r.push(vec![json!(id.name()), json!(d), json!(m)]);
        }
        return Ok((r, 0));
    }
    let ids: Vec<TheoremId> = match &args.theorem {
        Some(t) => vec![t.parse().map_err(|e: speclim_core::Error| usage(e.to_string()))?],
        None => TheoremId::all().collect(),
    };
    let threads = thread_limit();
    let mut summary = Report::new(&["theorem", "n_min", "n_max", "checked", "mismatches", "passed"]);
    let mut details = Report::new(&["theorem", "graph", "expected", "observed"]);
    let mut failed = 0;
    for id in ids {
        let n_max = args.nmax.unwrap_or(id.size_limits().0);
        let n_min = args.nmin.unwrap_or(1);
        let rep = verify_parallel(id, n_min, n_max, threads)?;
        if !rep.passed() {
            failed += 1;
        }
        summary.push(vec![
            json!(id.name()),
            json!(n_min),
            json!(n_max),
            json!(rep.checked),
            json!(rep.mismatches.len()),
            json!(rep.passed()),
        ]);
        for m in rep.mismatches {
            details.push(vec![json!(id.name()), json!(m.graph), json!(m.expected), json!(m.observed)]);
        }
    }
    Ok((if args.details { details } else { summary }, failed))
}

fn hypergraph(args: &HyperArgs) -> Result<Report, CliError> {
    let mut h: UniformHypergraph = match (&args.family, &args.input) {
        (Some(lit), _) => build_hyperfamily(lit.parse::<HyperFamily>()?)?,
        (None, Some(path)) => parse_hypergraph(&read(path)?).map_err(|source| CliError::Format {
            path: path.display().to_string(),
            source,
        })?,
        (None, None) => unreachable!("clap enforces one source"),
    };
    if args.extend {
        h = extend(&h);
    }
    if args.reduce {
        h = reduce(&h)?;
    }
    let l = tensor_radius(&h)?;
    Ok(Report::record(vec![
        ("r", json!(h.uniformity())),
        ("n", json!(h.order())),
        ("m", json!(h.edges().len())),
        ("radius", num(l.value)),
        ("lower", num(l.bracket.0)),
        ("upper", num(l.bracket.1)),
        ("iterations", json!(l.iterations)),
        ("residual", num(l.residual)),
    ]))
}

fn shearer(args: &ShearerArgs) -> Result<Report, CliError> {
    let steps = shearer_approach(args.target, args.steps)?;
    let mut r = Report::new(&["step", "legs", "radius", "gap"]);
    for (i, s) in steps.iter().enumerate() {
        let legs: Vec<String> = s.legs.iter().map(usize::to_string).collect();
        r.push(vec![
            json!(i + 1),
            json!(legs.join(",")),
            num(s.radius),
            num(args.target - s.radius),
        ]);
    }
    Ok(r)
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Radius(a) => radius(a),
        Command::Spectrum(a) => spectrum_report(a),
        Command::Classify(a) => classify(a),
        Command::Limits(a) => limits(a),
        Command::Verify(a) => match verify(a) {
            Ok((report, 0)) => Ok(report),
            Ok((report, failed)) => {
                let _ = out.write_all(report.render(cli.format).as_bytes());
                Err(CliError::Mismatches(failed))
            }
            Err(e) => Err(e),
        },
        Command::Hypergraph(a) => hypergraph(a),
        Command::Shearer(a) => shearer(a),
    };
    match result {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.format).as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

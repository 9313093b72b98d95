//! The `resolvedim` command line.
//!
//! Results go to `out`, diagnostics to `err`. Exit codes: 0 on success or a
//! passing suite, 1 when a suite finds violations, 2 on usage or input
//! errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::enumeration::{
    self, connected_graphs, FamilyRanges, GraphSource, RandomSample, VerificationReport,
};
use crate::error::Error;
use crate::families::{generate, FamilySpec, GridLabeling};
use crate::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6, Graph};
use crate::resolving::{Params, ResolvingReport, Solver, VertexPair};

#[derive(Parser, Debug)]
#[command(
    name = "resolvedim",
    version,
    about = "Exact resolving parameters of small connected graphs"
)]
struct Cli {
    /// Worker threads for subset searches and enumeration (0 = all cores).
    #[arg(long, global = true, env = "RESOLVEDIM_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute dim, dim+ and res of a graph or family member.
    Compute(ComputeArgs),
    /// Write a family member with its vertex labels.
    Generate(GenerateArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Stream the connected graphs on n vertices as graph6.
    Enumerate(EnumerateArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args, Debug, Default)]
struct FamilyArgs {
    /// Family name: grid, H, Hm, TildeH, TildeHm, PathExtended, cycle, path, complete.
    #[arg(long)]
    family: Option<String>,
    /// Grid side length.
    #[arg(long)]
    l: Option<usize>,
    /// Number of pendant vertices.
    #[arg(long)]
    m: Option<usize>,
    /// Path-extension length; wraps the family in PathExtended.
    #[arg(long)]
    p: Option<usize>,
    /// Base family of PathExtended.
    #[arg(long)]
    base: Option<String>,
    /// Order of cycle, path and complete graphs (falls back to --l).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    /// Graph file, one graph6 string per line or an edge list; `-` reads stdin.
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[command(flatten)]
    family: FamilyArgs,
    /// Parameters to compute, e.g. `dim,dim+,res`.
    #[arg(long, default_value = "dim,dim+,res")]
    params: Params,
    #[arg(long)]
    json: bool,
    /// Largest order for the metric dimension search.
    #[arg(long)]
    cap_dim: Option<usize>,
    /// Largest order for the upper dimension search.
    #[arg(long)]
    cap_dimplus: Option<usize>,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Write the graph here and the labels to `<output>.labels.json`.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Characterization,
    Diameter,
    Order,
    Oracle,
    Finiteness,
    Families,
    Grid,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Enumerate connected graphs up to this order.
    #[arg(long, default_value_t = 7)]
    nmax: usize,
    /// Newline-delimited graph6 file used instead of enumeration.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Seed of the random sample in the oracle suite.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Size of the random sample in the oracle suite (0 disables it).
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Largest grid side for the families (default 4) and grid (default 6) suites.
    #[arg(long)]
    lmax: Option<usize>,
    #[arg(long, default_value_t = 3)]
    mmax: usize,
    #[arg(long, default_value_t = 3)]
    pmax: usize,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    cap_dim: Option<usize>,
    #[arg(long)]
    cap_dimplus: Option<usize>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// One graph per isomorphism class.
    #[arg(long)]
    dedup: bool,
}

/// Failure of a command: either bad input (exit 2) or a failing suite
/// (exit 1, already reported).
enum Failure {
    Usage(String),
    Violations,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let result = pool.install(|| match &cli.command {
        Command::Compute(a) => compute(a, out, err),
        Command::Generate(a) => generate_cmd(a, out),
        Command::Verify(a) => verify(a, out, err),
        Command::Enumerate(a) => enumerate_cmd(a, out),
    });
    match result {
        Ok(()) => 0,
        Err(Failure::Violations) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn solver(cap_dim: Option<usize>, cap_dimplus: Option<usize>) -> Solver {
    let mut s = Solver::default();
    if let Some(c) = cap_dim {
        s.dim_cap = c;
    }
    if let Some(c) = cap_dimplus {
        s.dim_plus_cap = c;
    }
    s
}

fn family_spec(
    name: &str,
    a: &FamilyArgs,
    allow_path: bool,
) -> std::result::Result<FamilySpec, Failure> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::Usage(format!("family {name} needs --{flag}")))
    };
    let order = a.n.or(a.l);
    let spec = match name.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
        "grid" => FamilySpec::Grid { l: need(a.l, "l")? },
        "h" => FamilySpec::H { l: need(a.l, "l")? },
        "hm" => FamilySpec::Hm {
            l: need(a.l, "l")?,
            m: need(a.m, "m")?,
        },
        "tildeh" => FamilySpec::TildeH { l: need(a.l, "l")? },
        "tildehm" => FamilySpec::TildeHm {
            l: need(a.l, "l")?,
            m: need(a.m, "m")?,
        },
        "pathextended" if allow_path => {
            let base = a
                .base
                .as_deref()
                .ok_or_else(|| Failure::Usage("family PathExtended needs --base".into()))?;
            FamilySpec::PathExtended {
                base: Box::new(family_spec(base, a, false)?),
                p: need(a.p, "p")?,
            }
        }
        "cycle" => FamilySpec::Cycle {
            n: need(order, "n")?,
        },
        "path" => FamilySpec::Path {
            n: need(order, "n")?,
        },
        "complete" => FamilySpec::Complete {
            n: need(order, "n")?,
        },
        _ => return Err(Failure::Usage(format!("unknown family {name:?}"))),
    };
    let spec = match (spec, a.p) {
        (s @ FamilySpec::PathExtended { .. }, _) | (s, None) => s,
        (s, Some(p)) if allow_path => FamilySpec::PathExtended {
            base: Box::new(s),
            p,
        },
        (s, Some(_)) => s,
    };
    spec.validate()?;
    Ok(spec)
}

fn requested_family(a: &FamilyArgs) -> std::result::Result<Option<FamilySpec>, Failure> {
    a.family
        .as_deref()
        .map(|name| family_spec(name, a, true))
        .transpose()
}

fn read_input(path: &Path) -> io::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn infer_format(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("txt" | "edges" | "el" | "edgelist") => Format::Edgelist,
        _ => Format::Graph6,
    }
}

fn parse_graph6_lines(text: &str) -> std::result::Result<Vec<Graph>, Failure> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| Failure::Usage(format!("line {}: {e}", i + 1))))
        .collect()
}

fn json_line(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    // serde_json maps are ordered by key, so this is key-sorted.
    writeln!(out, "{}", serde_json::to_string(v).expect("serializable"))
}

fn labels_of(lab: &GridLabeling, set: &Option<Vec<usize>>) -> Value {
    match set {
        Some(vs) => vs.iter().map(|&v| lab.label(v).to_string()).collect(),
        None => Value::Null,
    }
}

fn pair_labels(lab: &GridLabeling, p: &Option<VertexPair>) -> Value {
    match p {
        Some(p) => json!([lab.label(p.x()).to_string(), lab.label(p.y()).to_string()]),
        None => Value::Null,
    }
}

fn fmt_opt<T: std::fmt::Debug>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".to_string(), |v| format!("{v:?}"))
}

fn text_report(r: &ResolvingReport) -> String {
    let witness = r.res_witness.map_or("-".to_string(), |p| p.to_string());
    format!(
        "n={} dim={} basis={} dim+={} upper_basis={} res={} witness={} randomly_k={}",
        r.n,
        fmt_opt(&r.dim),
        fmt_opt(&r.metric_basis),
        fmt_opt(&r.dim_plus),
        fmt_opt(&r.upper_basis),
        fmt_opt(&r.res),
        witness,
        fmt_opt(&r.randomly_k)
    )
}

fn compute(a: &ComputeArgs, out: &mut dyn Write, _err: &mut dyn Write) -> CmdResult {
    let solver = solver(a.cap_dim, a.cap_dimplus);
    if let Some(spec) = requested_family(&a.family)? {
        let (g, lab) = generate(&spec)?;
        let r = ResolvingReport::compute(&g, a.params, &solver)?;
        if a.json {
            let mut v = serde_json::to_value(&r).expect("serializable");
            let obj = v.as_object_mut().expect("object");
            obj.insert("family".into(), json!(spec.to_string()));
            obj.insert(
                "metric_basis_labels".into(),
                labels_of(&lab, &r.metric_basis),
            );
            obj.insert("upper_basis_labels".into(), labels_of(&lab, &r.upper_basis));
            obj.insert(
                "res_witness_labels".into(),
                pair_labels(&lab, &r.res_witness),
            );
            json_line(out, &v)?;
        } else {
            writeln!(out, "{spec}: {}", text_report(&r))?;
        }
        return Ok(());
    }
    let path = a
        .input
        .as_deref()
        .ok_or_else(|| Failure::Usage("compute needs --input FILE or --family NAME".into()))?;
    let text = read_input(path)?;
    let graphs = match a.format.unwrap_or_else(|| infer_format(path)) {
        Format::Graph6 => parse_graph6_lines(&text)?,
        Format::Edgelist => vec![parse_edge_list(&text)?],
    };
    if graphs.is_empty() {
        return Err(Failure::Usage("input contains no graph".into()));
    }
    for g in &graphs {
        let r = ResolvingReport::compute(g, a.params, &solver)?;
        if a.json {
            json_line(out, &serde_json::to_value(&r).expect("serializable"))?;
        } else {
            writeln!(out, "{}", text_report(&r))?;
        }
    }
    Ok(())
}

fn generate_cmd(a: &GenerateArgs, out: &mut dyn Write) -> CmdResult {
    let spec = requested_family(&a.family)?
        .ok_or_else(|| Failure::Usage("generate needs --family NAME".into()))?;
    let (g, lab) = generate(&spec)?;
    let graph = match a.format {
        Format::Graph6 => format!("{}\n", to_graph6(&g)?),
        Format::Edgelist => to_edge_list(&g),
    };
    let sidecar = serde_json::to_string(&lab.sidecar()).expect("serializable");
    match &a.output {
        Some(path) => {
            fs::write(path, graph)?;
            let mut side = path.clone().into_os_string();
            side.push(".labels.json");
            fs::write(&side, format!("{sidecar}\n"))?;
        }
        None => {
            out.write_all(graph.as_bytes())?;
            writeln!(out, "{sidecar}")?;
        }
    }
    Ok(())
}

fn verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let solver = solver(a.cap_dim, a.cap_dimplus);
    let source = match &a.corpus {
        Some(path) => GraphSource::Corpus(parse_graph6_lines(&read_input(path)?)?),
        None => GraphSource::Enumerate { n_max: a.nmax },
    };
    let suites = match a.suite {
        Suite::All => vec![
            Suite::Characterization,
            Suite::Diameter,
            Suite::Order,
            Suite::Oracle,
            Suite::Finiteness,
            Suite::Families,
            Suite::Grid,
        ],
        s => vec![s],
    };
    let mut failed = false;
    for suite in suites {
        let report = run_suite(suite, a, &source, &solver)?;
        writeln!(err, "{}: {:.3?}", report.suite, report.elapsed)?;
        failed |= !report.passes();
        if a.json {
            json_line(out, &serde_json::to_value(&report).expect("serializable"))?;
        } else {
            write_text_report(out, &report)?;
        }
    }
    if failed {
        Err(Failure::Violations)
    } else {
        Ok(())
    }
}

fn run_suite(
    suite: Suite,
    a: &VerifyArgs,
    source: &GraphSource,
    solver: &Solver,
) -> std::result::Result<VerificationReport, Failure> {
    let sample = (a.samples > 0).then(|| RandomSample {
        count: a.samples,
        seed: a.seed,
        ..RandomSample::default()
    });
    Ok(match suite {
        Suite::Characterization => enumeration::verify_characterization(source, solver)?,
        Suite::Diameter => enumeration::verify_diameter_bound(source)?,
        Suite::Order => enumeration::verify_order_bound(source, solver)?,
        Suite::Oracle => {
            enumeration::verify_resolving_number_oracle(source, sample.as_ref(), solver)?
        }
        Suite::Finiteness => enumeration::verify_finiteness(source)?,
        Suite::Families => {
            let ranges = FamilyRanges {
                l: 2..=a.lmax.unwrap_or(4),
                m: 2..=a.mmax,
                p: 1..=a.pmax,
            };
            enumeration::verify_family_formulas(&ranges, solver)?
        }
        Suite::Grid => enumeration::verify_grid_geometry(a.lmax.unwrap_or(6))?,
        Suite::All => unreachable!("expanded by the caller"),
    })
}

fn write_text_report(out: &mut dyn Write, r: &VerificationReport) -> io::Result<()> {
    let status = if r.passes() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{} [{}]: {status}, {} examined, {} skipped, {} violations",
        r.suite,
        r.range,
        r.examined,
        r.skipped,
        r.violations.len()
    )?;
    for (k, v) in &r.counts {
        writeln!(out, "  {k}: {v}")?;
    }
    for note in &r.notes {
        writeln!(out, "  note: {note}")?;
    }
    for v in &r.violations {
        writeln!(out, "  violation {}: {}", v.graph6, v.detail)?;
    }
    Ok(())
}

fn enumerate_cmd(a: &EnumerateArgs, out: &mut dyn Write) -> CmdResult {
    let mut buf = io::BufWriter::new(out);
    for g in connected_graphs(a.n, a.dedup)? {
        writeln!(buf, "{}", to_graph6(&g)?)?;
    }
    buf.flush()?;
    Ok(())
}

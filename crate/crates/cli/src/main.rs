use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hoffman_core::constructions::{classify_cone, classify_line_graph, line_graph};
use hoffman_core::enumeration::{enumerate_hoffman_with, DiscPolicy, EnumerationOptions, EnumerationReport};
use hoffman_core::graph6::parse_lines;
use hoffman_core::{check_hoffman_structure, is_hoffman_colorable_with, to_graph6, Graph, HoffmanConfig};
use serde_json::{json, Value};

const EXIT_OK: u8 = 0;
const EXIT_INTERNAL: u8 = 1;
const EXIT_DISC: u8 = 2;
const EXIT_NOT_COLORABLE: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "hoffman", version, about = "Verify, classify and enumerate Hoffman colorable graphs")]
struct Cli {
    /// Eigenvalue comparison tolerance.
    #[arg(long, global = true, env = "HOFFMAN_TOL", default_value_t = 1e-9)]
    tolerance: f64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Report progress on standard error.
    #[arg(long, short = 'v', global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every connected Hoffman colorable graph with given order and chromatic number.
    Enumerate(EnumerateArgs),
    /// Check graph6 input for Hoffman colorability and coloring structure.
    Verify(VerifyArgs),
    /// Classify graph6 input as line graphs or cones.
    Classify(ClassifyArgs),
    /// Reproduce the table of counts for a number of colors.
    Tables(TablesArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Json,
    Markdown,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Construction {
    Line,
    Cone,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, short = 'n')]
    vertices: usize,
    #[arg(long, short = 'c')]
    colors: usize,
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Leave colorings with disconnected bipartite parts unsearched.
    #[arg(long)]
    defer_disc: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// graph6 file, one graph per line; standard input when absent or `-`.
    #[arg(long, short = 'i')]
    input: Option<PathBuf>,
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, short = 'i')]
    input: Option<PathBuf>,
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
    #[arg(long = "as", value_enum)]
    construction: Construction,
    /// Number of cone vertices.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct TablesArgs {
    #[arg(long, short = 'c')]
    colors: usize,
    #[arg(long)]
    max_vertices: usize,
    #[arg(long)]
    min_vertices: Option<usize>,
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "markdown")]
    format: Format,
    #[arg(long)]
    defer_disc: bool,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_INTERNAL, message: e.to_string() }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).map_err(|e| usage(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(internal)?;
            Ok(s)
        }
    }
}

fn read_graphs(path: Option<&Path>) -> Result<Vec<Graph>, Failure> {
    let text = read_input(path)?;
    parse_lines(&text).map_err(|(line, e)| usage(format!("line {line}: {e}")))
}

fn write_output(path: Option<&Path>, body: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, body).map_err(|e| internal(format!("cannot write {}: {e}", p.display()))),
        None => io::stdout().lock().write_all(body.as_bytes()).map_err(internal),
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_default()
}

fn progress_sink(verbose: bool) -> Option<&'static (dyn Fn(&str) + Sync)> {
    fn emit(msg: &str) {
        eprintln!("{msg}");
    }
    verbose.then_some(&emit as &(dyn Fn(&str) + Sync))
}

fn run_enumeration(n: usize, chi: usize, defer: bool, cli: &Cli) -> Result<EnumerationReport, Failure> {
    let opts = EnumerationOptions {
        tol: cli.tolerance,
        policy: if defer { DiscPolicy::Defer } else { DiscPolicy::Resolve },
        progress: progress_sink(cli.verbose),
    };
    enumerate_hoffman_with(n, chi, &opts).map_err(|e| match e {
        hoffman_core::Error::InvalidArgument(m) => usage(m),
        e => internal(e),
    })
}

fn cmd_enumerate(a: &EnumerateArgs, cli: &Cli) -> Result<u8, Failure> {
    let report = run_enumeration(a.vertices, a.colors, a.defer_disc, cli)?;
    let body = match a.format {
        Format::Json => json_text(&serde_json::to_value(&report).map_err(internal)?),
        Format::Graph6 => report.graphs.iter().map(|h| h.canonical_form() + "\n").collect(),
        Format::Markdown => markdown_table(std::slice::from_ref(&report)),
    };
    write_output(a.output.as_deref(), &body)?;
    Ok(if report.has_unresolved_disc() { EXIT_DISC } else { EXIT_OK })
}

fn cmd_verify(a: &VerifyArgs, cli: &Cli) -> Result<u8, Failure> {
    if a.format != Format::Json {
        return Err(usage("verify writes json only"));
    }
    let graphs = read_graphs(a.input.as_deref())?;
    let cfg = HoffmanConfig::<f64> { eigen_tol: cli.tolerance, ..Default::default() };
    let mut all = true;
    let mut out = Vec::new();
    for (line, g) in graphs.iter().enumerate() {
        let entry = match is_hoffman_colorable_with(g, &cfg) {
            Ok(v) => {
                let structure = check_hoffman_structure(g, &v.coloring, &cfg).ok().map(|s| {
                    json!({
                        "weight_regular": s.weight_regular,
                        "intersections_equal": s.intersections_equal,
                        "norms_equal": s.norms_equal,
                        "regularity_residual": s.regularity_residual,
                        "intersection_residual": s.intersection_residual,
                        "norm_spread": s.norm_spread,
                    })
                });
                all &= v.colorable;
                json!({
                    "line": line + 1,
                    "graph6": g6(g),
                    "n": g.n(),
                    "bound": v.bound,
                    "chi": v.chi,
                    "colorable": v.colorable,
                    "coloring": v.coloring.classes(),
                    "structure": structure,
                })
            }
            Err(e) => {
                all = false;
                json!({ "line": line + 1, "graph6": g6(g), "n": g.n(), "colorable": false, "error": e.to_string() })
            }
        };
        out.push(entry);
    }
    write_output(a.output.as_deref(), &json_text(&json!({ "schema": 1, "results": out })))?;
    Ok(if all { EXIT_OK } else { EXIT_NOT_COLORABLE })
}

fn cmd_classify(a: &ClassifyArgs, cli: &Cli) -> Result<u8, Failure> {
    if a.format != Format::Json {
        return Err(usage("classify writes json only"));
    }
    let k = match (a.construction, a.k) {
        (Construction::Cone, None) => return Err(usage("--as cone requires --k")),
        (Construction::Cone, Some(0)) => return Err(usage("--k must be positive")),
        (_, k) => k,
    };
    let graphs = read_graphs(a.input.as_deref())?;
    let cfg = HoffmanConfig::<f64> { eigen_tol: cli.tolerance, ..Default::default() };
    let mut out = Vec::new();
    for (line, g) in graphs.iter().enumerate() {
        let base = json!({ "line": line + 1, "graph6": g6(g) });
        let body = match a.construction {
            Construction::Line => classify_line_graph(g).map(|v| {
                let lg = line_graph(g).ok().map(|l| g6(&l));
                json!({
                    "colorable": v.colorable,
                    "case": format!("{:?}", v.case),
                    "line_graph6": lg,
                    "edge_classes": v.witness,
                })
            }),
            Construction::Cone => classify_cone(g, k.expect("checked"), &cfg).map(|v| {
                json!({
                    "colorable": v.colorable,
                    "k": k,
                    "required_class_size": v.required_class_size,
                    "cone_spectrum": v.spectrum_of_cone.values(),
                    "base_coloring": v.base_coloring.map(|c| c.classes().to_vec()),
                })
            }),
        };
        let mut entry = base;
        match body {
            Ok(Value::Object(m)) => entry.as_object_mut().expect("object").extend(m),
            Ok(_) => unreachable!("verdicts are objects"),
            Err(e) => {
                entry["colorable"] = json!(false);
                entry["error"] = json!(e.to_string());
            }
        }
        out.push(entry);
    }
    let mode = match a.construction {
        Construction::Line => "line",
        Construction::Cone => "cone",
    };
    write_output(a.output.as_deref(), &json_text(&json!({ "schema": 1, "as": mode, "results": out })))?;
    Ok(EXIT_OK)
}

fn markdown_table(reports: &[EnumerationReport]) -> String {
    let mut s = String::from("| #vertices | #graphs | #regulars | #irregulars | #outperforming |\n|---|---|---|---|---|\n");
    for r in reports {
        let c = r.counts;
        let pre = if r.has_unresolved_disc() { "≥ " } else { "" };
        let cell = |x: usize, zero_dash: bool| if zero_dash && x == 0 { "-".to_string() } else { format!("{pre}{x}") };
        let row = if c.total == 0 {
            [cell(0, false), "-".into(), "-".into(), "-".into()]
        } else {
            [cell(c.total, false), cell(c.regular, true), cell(c.irregular, false), cell(c.outperforming, false)]
        };
        s.push_str(&format!("| {} | {} |\n", r.n, row.join(" | ")));
    }
    s
}

fn cmd_tables(a: &TablesArgs, cli: &Cli) -> Result<u8, Failure> {
    let lo = a.min_vertices.unwrap_or(a.colors);
    if a.colors < 2 || lo < a.colors || a.max_vertices < lo {
        return Err(usage("need 2 <= colors <= min-vertices <= max-vertices"));
    }
    let mut reports = Vec::new();
    for n in lo..=a.max_vertices {
        if cli.verbose {
            eprintln!("n = {n}");
        }
        reports.push(run_enumeration(n, a.colors, a.defer_disc, cli)?);
    }
    let body = match a.format {
        Format::Markdown => markdown_table(&reports),
        Format::Json => {
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| json!({ "n": r.n, "counts": r.counts, "disc": r.disc.len(), "unresolved": r.has_unresolved_disc() }))
                .collect();
            json_text(&json!({ "schema": 1, "chi": a.colors, "rows": rows }))
        }
        Format::Graph6 => return Err(usage("tables writes markdown or json")),
    };
    write_output(a.output.as_deref(), &body)?;
    Ok(if reports.iter().any(|r| r.has_unresolved_disc()) { EXIT_DISC } else { EXIT_OK })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if !(cli.tolerance > 0.0 && cli.tolerance.is_finite()) {
        return Err(usage("--tolerance must be positive"));
    }
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(usage("--jobs must be positive"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().map_err(internal)?;
    }
    match &cli.command {
        Command::Enumerate(a) => cmd_enumerate(a, cli),
        Command::Verify(a) => cmd_verify(a, cli),
        Command::Classify(a) => cmd_classify(a, cli),
        Command::Tables(a) => cmd_tables(a, cli),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("hoffman: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

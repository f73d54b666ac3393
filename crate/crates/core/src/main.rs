//! `zf`: zero forcing computations from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 budget exhausted. JSON goes to stdout, progress to stderr.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use zf_core::families::{
    self, build_g, build_ghat, cycle_gadget_family, hairy_cycle, inject_at_leaves, random_cubic_hairy,
    random_subcubic_tree, ratio_report, FamilyGraph, RatioReport, ZValue,
};
use zf_core::forcing::{closure, propagation_time, Propagation};
use zf_core::graph::{dot::to_dot, graph6, json as graph_json, Graph, VertexSet};
use zf_core::solver::{solve, Budget, SolverKind};
use zf_core::verify::{run_suite, Status, Suite, VerifyOptions};

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXPLORE_DEFAULT_BUDGET: std::time::Duration = std::time::Duration::from_secs(10);

#[derive(Parser)]
#[command(name = "zf", version, about = "Zero forcing sets, numbers and graph families")]
struct Cli {
    /// Worker threads for subset enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Wall-clock budget per solve, in seconds.
    #[arg(long, global = true, env = "ZF_BUDGET_SECS")]
    budget_secs: Option<f64>,
    /// Work-unit budget per solve; deterministic, unlike the time budget.
    #[arg(long, global = true)]
    node_limit: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Zero forcing number of a graph file or built-in family.
    Compute(ComputeArgs),
    /// Write a family graph as graph6 or JSON.
    Generate(GenerateArgs),
    /// Run a verification suite and print one line per check.
    Verify(VerifyArgs),
    /// Run the forcing process from a given set and print its chronicle.
    Trace(TraceArgs),
    /// Inject the gadget into generated base graphs and rank Z/|V|.
    Explore(ExploreArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    G,
    Ghat,
    Cyclegadget,
    Path,
    Cycle,
    Complete,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    Exhaustive,
    Bnb,
    Auto,
}

#[derive(Args)]
struct Source {
    /// Graph file (`-` for stdin); graph6 unless `--format json` or a `.json` name.
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, value_enum, conflicts_with = "input")]
    family: Option<Family>,
    /// Family parameter: level for g/ghat, order for the others.
    #[arg(long, requires = "family")]
    level: Option<usize>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "auto")]
    solver: SolverArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    family: Family,
    parameter: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// paper-small, lemma1, pn-sets, bounds, stretch or all.
    suite: Suite,
    #[arg(long, default_value_t = 6)]
    max_level: u32,
    #[arg(long)]
    level: Option<u32>,
    /// Largest order for the solver agreement sweep.
    #[arg(long, default_value_t = 7)]
    oracle_order: usize,
    /// Budget for the optional cycle-family solve.
    #[arg(long, default_value_t = 7200.0)]
    stretch_budget_secs: f64,
    /// Print the outcomes as a JSON array instead of lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    source: Source,
    /// Comma-separated vertex indices or labels.
    #[arg(long, value_delimiter = ',', required = true)]
    set: Vec<String>,
    /// Also write a DOT rendering with the initial set highlighted.
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Base {
    BinaryTree,
    HairyCycle,
    RandomTree,
    RandomCubic,
}

#[derive(Args)]
struct ExploreArgs {
    #[arg(long, value_enum)]
    base: Base,
    /// Levels (binary-tree), cycle lengths (hairy-cycle), tree orders
    /// (random-tree) or cubic orders (random-cubic).
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Instances per size for the random bases.
    #[arg(long, default_value_t = 3)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Subdivided edges per random cubic base.
    #[arg(long, default_value_t = 2)]
    subdivisions: usize,
    #[arg(long, value_enum, default_value = "auto")]
    solver: SolverArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("zf: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let budget = budget(cli)?;
    match &cli.command {
        Command::Compute(args) => compute(args, &budget),
        Command::Generate(args) => generate(args),
        Command::Verify(args) => verify(args, &budget, cli),
        Command::Trace(args) => trace(args),
        Command::Explore(args) => {
            // every instance gets a finite budget unless one was asked for
            let budget = if cli.budget_secs.is_none() && cli.node_limit.is_none() {
                Budget { time: Some(EXPLORE_DEFAULT_BUDGET), ..budget }
            } else {
                budget
            };
            explore(args, &budget)
        }
    }
}

fn budget(cli: &Cli) -> Result<Budget, Failure> {
    if cli.threads == 0 {
        return Err(Failure::input("--threads must be at least 1"));
    }
    let mut budget = Budget::unlimited().with_threads(cli.threads);
    if let Some(secs) = cli.budget_secs {
        if !(secs > 0.0 && secs.is_finite()) {
            return Err(Failure::input("--budget-secs must be positive"));
        }
        budget.time = Some(std::time::Duration::from_secs_f64(secs));
    }
    if let Some(limit) = cli.node_limit {
        if limit == 0 {
            return Err(Failure::input("--node-limit must be positive"));
        }
        budget = budget.with_node_limit(limit);
    }
    Ok(budget)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))?,
        None => writeln!(io::stdout().lock(), "{text}")?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn family_graph(family: Family, parameter: usize) -> Result<FamilyGraph, Failure> {
    let level = || u32::try_from(parameter).map_err(|_| Failure::input("level too large"));
    let built = match family {
        Family::G => build_g(level()?),
        Family::Ghat => build_ghat(level()?),
        Family::Cyclegadget => cycle_gadget_family(parameter),
        Family::Path if parameter >= 1 => Ok(Graph::path(parameter).into()),
        Family::Cycle if parameter >= 3 => Ok(Graph::cycle(parameter).into()),
        Family::Complete if parameter >= 1 => Ok(Graph::complete(parameter).into()),
        _ => return Err(Failure::input(format!("parameter {parameter} outside the family's domain"))),
    };
    built.map_err(|e| Failure::input(e.to_string()))
}

/// Loads the graphs named by a source: one family graph, or every
/// non-empty line of a graph6 file, or one JSON document.
fn load(source: &Source) -> Result<Vec<Graph>, Failure> {
    if let Some(family) = source.family {
        let level = source.level.ok_or_else(|| Failure::input("--family needs --level"))?;
        return Ok(vec![family_graph(family, level)?.labelled_graph()]);
    }
    let path = source.input.as_ref().ok_or_else(|| Failure::input("no input file or --family given"))?;
    let text = read_input(path)?;
    let json = match source.format {
        Some(Format::Json) => true,
        Some(Format::Graph6) => false,
        None => path.extension().is_some_and(|e| e == "json"),
    };
    if json {
        let g = graph_json::parse_json(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        return Ok(vec![g]);
    }
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g = graph6::parse_graph6(line)
            .map_err(|e| Failure::input(format!("{} line {}: {e}", path.display(), i + 1)))?;
        graphs.push(g);
    }
    if graphs.is_empty() {
        return Err(Failure::input(format!("{}: no graphs", path.display())));
    }
    Ok(graphs)
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn solver_kind(arg: SolverArg) -> SolverKind {
    match arg {
        SolverArg::Exhaustive => SolverKind::Exhaustive,
        SolverArg::Bnb => SolverKind::BranchAndBound,
        SolverArg::Auto => SolverKind::Auto,
    }
}

fn compute(args: &ComputeArgs, budget: &Budget) -> Result<u8, Failure> {
    let graphs = load(&args.source)?;
    let mut lines = Vec::new();
    let mut code = 0;
    for (i, g) in graphs.iter().enumerate() {
        eprintln!("zf: graph {} ({} vertices, {} edges)", i + 1, g.order(), g.size());
        match solve(g, solver_kind(args.solver), budget) {
            Ok(r) => lines.push(to_json(&r)),
            Err(t) => {
                code = EXIT_BUDGET;
                lines.push(to_json(&json!({
                    "timeout": true,
                    "lower": t.lower,
                    "upper": t.upper,
                    "witness": t.witness,
                    "stats": t.stats,
                })));
            }
        }
    }
    emit(&args.out, &lines.join("\n"))?;
    Ok(code)
}

fn generate(args: &GenerateArgs) -> Result<u8, Failure> {
    let fg = family_graph(args.family, args.parameter)?;
    let g = fg.labelled_graph();
    let text = match args.format {
        Format::Graph6 => graph6::write_graph6(&g).map_err(|e| Failure::input(e.to_string()))?,
        Format::Json => graph_json::write_json(&g),
    };
    let summary = to_json(&json!({
        "n": g.order(),
        "m": g.size(),
        "max_degree": g.max_degree(),
        "min_degree": g.min_degree(),
        "connected": g.is_connected(),
        "landmarks": fg.landmarks.keys().filter(|k| !k.starts_with('g')).collect::<Vec<_>>(),
        "regions": fg.regions.keys().collect::<Vec<_>>(),
    }));
    emit(&args.out, &text)?;
    if args.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(0)
}

fn verify(args: &VerifyArgs, budget: &Budget, cli: &Cli) -> Result<u8, Failure> {
    if !(args.stretch_budget_secs > 0.0) {
        return Err(Failure::input("--stretch-budget-secs must be positive"));
    }
    let solve_budget = if cli.budget_secs.is_some() || cli.node_limit.is_some() {
        *budget
    } else {
        VerifyOptions::default().budget.with_threads(cli.threads)
    };
    let opts = VerifyOptions {
        budget: solve_budget,
        max_level: args.max_level,
        level: args.level,
        oracle_order: args.oracle_order,
        stretch_budget: Budget::seconds(args.stretch_budget_secs).with_threads(cli.threads),
    };
    let outcomes = run_suite(args.suite, &opts);
    if args.json {
        println!("{}", to_json(&outcomes));
    } else {
        for o in &outcomes {
            println!("{o}");
        }
    }
    let failed = outcomes.iter().filter(|o| o.status == Status::Fail).count();
    let skipped = outcomes.iter().filter(|o| o.status == Status::Skipped).count();
    eprintln!("zf: {} checks, {failed} failed, {skipped} skipped", outcomes.len());
    Ok(if failed > 0 {
        EXIT_VERIFY
    } else if skipped > 0 {
        EXIT_BUDGET
    } else {
        0
    })
}

fn parse_set(g: &Graph, items: &[String]) -> Result<VertexSet, Failure> {
    let mut set = VertexSet::new(g.order());
    for item in items.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let v = match g.vertex_by_label(item) {
            Some(v) => v,
            None => item.parse::<usize>().map_err(|_| Failure::input(format!("unknown vertex {item:?}")))?,
        };
        if v >= g.order() {
            return Err(Failure::input(format!("vertex {v} out of range for order {}", g.order())));
        }
        set.insert(v);
    }
    Ok(set)
}

fn trace(args: &TraceArgs) -> Result<u8, Failure> {
    let mut graphs = load(&args.source)?;
    if graphs.len() != 1 {
        return Err(Failure::input("trace takes exactly one graph"));
    }
    let g = graphs.remove(0);
    let initial = parse_set(&g, &args.set)?;
    let (state, chronicle) = closure(&g, &initial);
    let rounds = match propagation_time(&g, &initial) {
        Propagation::Rounds(r) => Some(r),
        Propagation::Stalled => None,
    };
    let report = json!({
        "zero_forcing": state.is_all_black(),
        "stalled": rounds.is_none(),
        "propagation_time": rounds,
        "closure": state.black,
        "chronicle": chronicle,
    });
    if let Some(path) = &args.dot {
        fs::write(path, to_dot(&g, &initial))?;
    }
    emit(&args.out, &to_json(&report))?;
    Ok(0)
}

#[derive(Serialize)]
struct ExploreRow {
    base: String,
    order: usize,
    size: usize,
    max_degree: usize,
    report: RatioReport,
}

fn explore_instances(args: &ExploreArgs) -> Result<Vec<(String, Graph)>, Failure> {
    let err = |e: families::FamilyError| Failure::input(e.to_string());
    let mut out = Vec::new();
    match args.base {
        Base::BinaryTree => {
            for &level in args.sizes.as_deref().unwrap_or(&[1, 2]) {
                let level = u32::try_from(level).map_err(|_| Failure::input("level too large"))?;
                out.push((format!("binary-tree level {level}"), build_ghat(level).map_err(err)?.graph));
            }
        }
        Base::HairyCycle => {
            for &n in args.sizes.as_deref().unwrap_or(&[3, 4, 5, 6]) {
                if n < 3 {
                    return Err(Failure::input(format!("cycle length {n} < 3")));
                }
                out.push((format!("hairy-cycle {n}"), inject_at_leaves(&hairy_cycle(n)).map_err(err)?.graph));
            }
        }
        Base::RandomTree => {
            for &n in args.sizes.as_deref().unwrap_or(&[4, 6, 8]) {
                for i in 0..args.count {
                    let seed = args.seed.wrapping_add(i);
                    let base = random_subcubic_tree(n, seed).map_err(err)?;
                    out.push((format!("random-tree {n} seed {seed}"), inject_at_leaves(&base).map_err(err)?.graph));
                }
            }
        }
        Base::RandomCubic => {
            for &m in args.sizes.as_deref().unwrap_or(&[4, 6]) {
                for i in 0..args.count {
                    let seed = args.seed.wrapping_add(i);
                    let base = random_cubic_hairy(m, args.subdivisions, seed).map_err(err)?;
                    let name = format!("random-cubic {m} subdivisions {} seed {seed}", args.subdivisions);
                    out.push((name, inject_at_leaves(&base).map_err(err)?.graph));
                }
            }
        }
    }
    if out.is_empty() {
        return Err(Failure::input("the generator produced no instances"));
    }
    Ok(out)
}

fn explore(args: &ExploreArgs, budget: &Budget) -> Result<u8, Failure> {
    let instances = explore_instances(args)?;
    let mut rows = Vec::new();
    let mut timeouts = 0;
    for (base, g) in instances {
        eprintln!("zf: {base}: {} vertices", g.order());
        let z = match solve(&g, solver_kind(args.solver), budget) {
            Ok(r) => ZValue::Exact(r.z),
            Err(t) => {
                timeouts += 1;
                ZValue::Interval { lower: t.lower, upper: t.upper }
            }
        };
        rows.push(ExploreRow {
            base,
            order: g.order(),
            size: g.size(),
            max_degree: g.max_degree(),
            report: ratio_report(g.order(), z),
        });
    }
    rows.sort_by(|a, b| {
        (b.report.ratio_lower, b.report.ratio_upper).cmp(&(a.report.ratio_lower, a.report.ratio_upper))
    });
    emit(&args.out, &to_json(&rows))?;
    Ok(if timeouts == rows.len() { EXIT_BUDGET } else { 0 })
}

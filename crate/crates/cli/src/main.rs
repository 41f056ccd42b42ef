//! `mbd`: command-line front end for the Maker-Breaker domination toolkit.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use mbd_core::atlas::{self, TheoremId};
use mbd_core::criticality::{is_critical, question54_scan, CriticalityReport};
use mbd_core::families::build_spec;
use mbd_core::game::{best_moves, solve, solve_all_marked, GameState, Invariant};
use mbd_core::graph::{structural_report, Edge, Graph, MarkedGraph, VertexSet};
use mbd_core::{graph6, Error};
use serde_json::{json, Value};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;

#[derive(Parser)]
#[command(name = "mbd", version, about = "Exact solver and verification laboratory for the Maker-Breaker domination game")]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Report elapsed wall-clock time.
    #[arg(long, global = true)]
    timing: bool,
    /// Cap the number of worker threads.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Game values or outcome of every graph in GRAPH.
    Solve {
        /// graph6 literal, path to a graph6 file, or `family:SPEC`.
        graph: String,
        #[arg(long, value_enum, default_value = "all")]
        param: SolveParam,
        /// Comma-separated vertices that count as already dominated.
        #[arg(long, value_name = "LIST")]
        predominated: Option<String>,
        /// Also list the optimal first moves.
        #[arg(long)]
        moves: bool,
    },
    /// Edge-criticality report for one invariant.
    Critical {
        graph: String,
        #[arg(long, value_enum)]
        param: Param,
    },
    /// Build a named family member, e.g. `fig3(1,2)` or `star(3)+edgeless(1)`.
    Family {
        spec: String,
        /// Print the graph6 line (the default output).
        #[arg(long)]
        g6: bool,
        /// Also print a structural report.
        #[arg(long)]
        report: bool,
    },
    /// All graphs of order N up to isomorphism, as graph6 lines.
    Enumerate {
        #[arg(long, value_name = "N")]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Check a characterisation theorem exhaustively; exit status 0 iff it holds.
    Verify {
        theorem: String,
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        /// Permit order 8 for enumeration theorems (12346 graphs).
        #[arg(long)]
        allow_n8: bool,
    },
    /// Residue criticality scan for a graph critical for gamma_SMB.
    Scan54 { graph: String },
    /// Seeded randomised property suite; exit status 0 iff every property holds.
    Properties {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Param {
    Mb,
    Mbp,
    Smb,
    Smbp,
}

impl From<Param> for Invariant {
    fn from(p: Param) -> Invariant {
        match p {
            Param::Mb => Invariant::Mb,
            Param::Mbp => Invariant::MbPrime,
            Param::Smb => Invariant::Smb,
            Param::Smbp => Invariant::SmbPrime,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveParam {
    Mb,
    Mbp,
    Smb,
    Smbp,
    All,
    Outcome,
}

/// What a subcommand produced, before rendering.
struct Output {
    lines: Vec<String>,
    results: Value,
    counterexamples: Vec<String>,
    code: u8,
}

impl Output {
    fn new(lines: Vec<String>, results: Value) -> Self {
        Output { lines, results, counterexamples: Vec::new(), code: 0 }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconsistent(_) => EXIT_INCONSISTENT,
            Error::Io(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// `family:SPEC`, else an existing file of graph6 lines, else a graph6 literal.
fn read_graphs(input: &str) -> Result<Vec<Graph>, Failure> {
    if let Some(spec) = input.strip_prefix("family:") {
        return Ok(vec![build_spec(spec)?]);
    }
    if Path::new(input).is_file() {
        return Ok(graph6::read_corpus_file(input)?);
    }
    Ok(vec![graph6::decode(input)?])
}

fn parse_vertex_list(text: &str, n: usize) -> Result<VertexSet, Failure> {
    let mut set = VertexSet::EMPTY;
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let v: usize = item
            .parse()
            .map_err(|_| usage(format!("invalid vertex {item:?} in --predominated")))?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n }.into());
        }
        set.insert(v);
    }
    Ok(set)
}

fn fmt_set(s: VertexSet) -> String {
    if s.is_empty() {
        "-".to_string()
    } else {
        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn fmt_edges(edges: &[Edge]) -> String {
    if edges.is_empty() {
        "-".to_string()
    } else {
        edges.iter().map(Edge::to_string).collect::<Vec<_>>().join(" ")
    }
}

fn fmt_list(items: &[String]) -> String {
    if items.is_empty() {
        "-".to_string()
    } else {
        items.join(" ")
    }
}

/// Runs `per_graph` over every input graph, prefixing text blocks with the
/// graph6 line when there is more than one graph.
fn per_graph(
    graphs: &[Graph],
    mut f: impl FnMut(&Graph) -> Result<(Vec<String>, Value), Failure>,
) -> Result<Output, Failure> {
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    for g in graphs {
        let (block, mut value) = f(g)?;
        let code = graph6::encode(g);
        if graphs.len() > 1 {
            lines.push(format!("graph {code}"));
            lines.extend(block.into_iter().map(|l| format!("  {l}")));
        } else {
            lines.extend(block);
        }
        value["graph6"] = json!(code);
        entries.push(value);
    }
    Ok(Output::new(lines, json!({ "graphs": entries })))
}

fn cmd_solve(
    graphs: &[Graph],
    param: SolveParam,
    predominated: Option<&str>,
    moves: bool,
) -> Result<Output, Failure> {
    per_graph(graphs, |g| {
        let marks = match predominated {
            Some(text) => parse_vertex_list(text, g.order())?,
            None => VertexSet::EMPTY,
        };
        let marked = MarkedGraph::new(g.clone(), marks)?;
        let invariants: Vec<Invariant> = match param {
            SolveParam::Mb => vec![Invariant::Mb],
            SolveParam::Mbp => vec![Invariant::MbPrime],
            SolveParam::Smb => vec![Invariant::Smb],
            SolveParam::Smbp => vec![Invariant::SmbPrime],
            SolveParam::All => Invariant::ALL.to_vec(),
            SolveParam::Outcome => Vec::new(),
        };
        let mut lines = Vec::new();
        let mut value = json!({});
        for inv in &invariants {
            let v = solve(&marked, inv.variant());
            lines.push(format!("{} = {v}", inv.name()));
            value[inv.short()] = json!(v);
        }
        if matches!(param, SolveParam::All | SolveParam::Outcome) {
            let outcome = solve_all_marked(&marked).outcome()?;
            lines.push(format!("outcome = {outcome:?}"));
            value["outcome"] = json!(outcome);
        }
        if moves {
            let mut best = serde_json::Map::new();
            for inv in &invariants {
                let variant = inv.variant();
                let start = GameState::initial(variant.first_player);
                let list = best_moves(&marked, &start, variant);
                let text = if list.is_empty() {
                    "-".to_string()
                } else {
                    list.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                };
                lines.push(format!("best first moves ({}) = {text}", inv.name()));
                best.insert(inv.short().to_string(), json!(list));
            }
            value["best_moves"] = Value::Object(best);
        }
        if !marks.is_empty() {
            value["predominated"] = json!(marks);
        }
        Ok((lines, value))
    })
}

fn criticality_lines(r: &CriticalityReport) -> Vec<String> {
    vec![
        format!("invariant = {}", r.invariant.name()),
        format!("value = {}", r.value),
        format!("critical = {}", r.critical),
        format!("vacuous = {}", r.vacuous),
        format!("witnesses = {}", fmt_edges(&r.witnesses)),
    ]
}

fn cmd_critical(graphs: &[Graph], param: Param) -> Result<Output, Failure> {
    per_graph(graphs, |g| {
        let r = is_critical(g, param.into());
        Ok((criticality_lines(&r), json!(r)))
    })
}

fn cmd_family(spec: &str, report: bool) -> Result<Output, Failure> {
    let g = build_spec(spec.strip_prefix("family:").unwrap_or(spec))?;
    let code = graph6::encode(&g);
    let mut lines = vec![code.clone()];
    let mut results = json!({ "graph6": code, "order": g.order(), "size": g.size() });
    if report {
        let r = structural_report(&g);
        let pair = |p: Option<(VertexSet, VertexSet)>| match p {
            Some((a, b)) => format!("{} | {}", fmt_set(a), fmt_set(b)),
            None => "-".to_string(),
        };
        lines.extend([
            format!("order = {}", r.order),
            format!("size = {}", r.size),
            format!("min_degree = {}", r.min_degree),
            format!("max_degree = {}", r.max_degree),
            format!("connected = {}", r.connected),
            format!(
                "components = {}",
                r.components.iter().map(|c| format!("{{{}}}", fmt_set(*c))).collect::<Vec<_>>().join(" ")
            ),
            format!("isolated = {}", fmt_set(r.isolated)),
            format!("leaves = {}", fmt_set(r.leaves)),
            format!("support = {}", fmt_set(r.support)),
            format!("strong_support = {}", fmt_set(r.strong_support)),
            format!("dominating_vertices = {}", fmt_set(r.dominating_vertices)),
            format!("bipartition = {}", pair(r.bipartition)),
            format!("bipartite_dominating = {}", pair(r.bipartite_dominating)),
            format!("dominating_edges = {}", fmt_edges(&r.dominating_edges)),
        ]);
        results["report"] = json!(r);
    }
    Ok(Output::new(lines, results))
}

fn cmd_enumerate(n: usize, connected: bool, out: Option<&Path>) -> Result<Output, Failure> {
    let graphs = atlas::enumerate(n, connected)?;
    let codes: Vec<String> = graphs.iter().map(graph6::encode).collect();
    let results = json!({ "n": n, "connected": connected, "count": codes.len(), "graphs": codes });
    let lines = match out {
        Some(path) => {
            let mut text = codes.join("\n");
            if !text.is_empty() {
                text.push('\n');
            }
            std::fs::write(path, text).map_err(Error::from)?;
            vec![format!("wrote {} graphs to {}", codes.len(), path.display())]
        }
        None => codes,
    };
    Ok(Output::new(lines, results))
}

fn cmd_verify(theorem: &str, max_n: Option<usize>, allow_n8: bool) -> Result<Output, Failure> {
    let id: TheoremId = theorem.parse()?;
    let max_n = max_n.unwrap_or_else(|| id.default_max_n());
    let enumerative = !matches!(id, TheoremId::GadgetGk | TheoremId::GadgetHk);
    if enumerative && max_n >= atlas::MAX_ENUMERATION_N {
        if !allow_n8 {
            return Err(usage("order 8 checks 12346 graphs; pass --allow-n8 to proceed"));
        }
        eprintln!("warning: order 8 verification solves every perturbation of 12346 graphs");
    }
    let r = atlas::verify(id, max_n)?;
    let scope = format!(
        "{}{}graphs of order <= {}",
        if r.scope.connected_only { "connected " } else { "" },
        if r.scope.bipartite_only { "bipartite " } else { "" },
        r.scope.max_n
    );
    let lines = vec![
        format!("theorem = {}", r.theorem),
        format!("statement = {}", id.statement()),
        format!("scope = {scope}"),
        format!("graphs_checked = {}", r.graphs_checked),
        format!("counterexamples = {}", fmt_list(&r.counterexamples)),
        format!("vacuous = {}", fmt_list(&r.vacuous)),
        format!("pass = {}", r.pass),
    ];
    let mut out = Output::new(lines, json!(r));
    out.counterexamples = r.counterexamples.clone();
    out.code = if r.pass { 0 } else { EXIT_FAILURE };
    Ok(out)
}

fn cmd_scan54(graphs: &[Graph]) -> Result<Output, Failure> {
    per_graph(graphs, |g| {
        let r = question54_scan(g)?;
        let mut lines = vec![format!("gamma_SMB = {}", r.smb_value)];
        for s in &r.per_vertex {
            lines.push(format!(
                "vertex {}: residue order {}, predominated {}, gamma_SMB' = {}, critical = {}, vacuous = {}",
                s.vertex,
                s.residue_order,
                fmt_set(s.residue_predominated),
                s.report.value,
                s.report.critical,
                s.report.vacuous
            ));
        }
        let w: Vec<String> = r.witnesses.iter().map(|v| v.to_string()).collect();
        lines.push(format!("witnesses = {}", fmt_list(&w)));
        Ok((lines, json!(r)))
    })
}

fn cmd_properties(seed: u64, trials: usize) -> Result<Output, Failure> {
    if trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    let r = atlas::property_suite(seed, trials);
    let mut lines = vec![format!("seed = {seed}"), format!("graphs = {}", r.graphs)];
    for t in &r.tallies {
        lines.push(format!("{}: {} checks, {} failures", t.property, t.checked, t.failures));
    }
    let mut counterexamples = Vec::new();
    if let Some(f) = &r.first_failure {
        lines.push(format!(
            "first failure = {} on {} (trial seed {}): {}",
            f.property,
            f.graph6,
            f.seed.map_or("-".to_string(), |s| s.to_string()),
            f.detail
        ));
        counterexamples.push(f.graph6.clone());
    }
    lines.push(format!("pass = {}", r.pass));
    let mut out = Output::new(lines, json!(r));
    out.counterexamples = counterexamples;
    out.code = if r.pass { 0 } else { EXIT_FAILURE };
    Ok(out)
}

fn input_of(command: &Command) -> Value {
    match command {
        Command::Solve { graph, .. } | Command::Critical { graph, .. } | Command::Scan54 { graph } => {
            json!(graph)
        }
        Command::Family { spec, .. } => json!(spec),
        Command::Enumerate { n, connected, .. } => json!({ "n": n, "connected": connected }),
        Command::Verify { theorem, max_n, .. } => json!({ "theorem": theorem, "max_n": max_n }),
        Command::Properties { seed, trials } => json!({ "seed": seed, "trials": trials }),
    }
}

fn name_of(command: &Command) -> &'static str {
    match command {
        Command::Solve { .. } => "solve",
        Command::Critical { .. } => "critical",
        Command::Family { .. } => "family",
        Command::Enumerate { .. } => "enumerate",
        Command::Verify { .. } => "verify",
        Command::Scan54 { .. } => "scan54",
        Command::Properties { .. } => "properties",
    }
}

fn dispatch(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Solve { graph, param, predominated, moves } => {
            cmd_solve(&read_graphs(graph)?, *param, predominated.as_deref(), *moves)
        }
        Command::Critical { graph, param } => cmd_critical(&read_graphs(graph)?, *param),
        Command::Family { spec, g6: _, report } => cmd_family(spec, *report),
        Command::Enumerate { n, connected, out } => cmd_enumerate(*n, *connected, out.as_deref()),
        Command::Verify { theorem, max_n, allow_n8 } => cmd_verify(theorem, *max_n, *allow_n8),
        Command::Scan54 { graph } => cmd_scan54(&read_graphs(graph)?),
        Command::Properties { seed, trials } => cmd_properties(*seed, *trials),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("the global pool is configured once");
    }
    let start = Instant::now();
    let output = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let elapsed = start.elapsed().as_secs_f64();
    if cli.json {
        let mut doc = json!({
            "command": name_of(&cli.command),
            "input": input_of(&cli.command),
            "results": output.results,
            "counterexamples": output.counterexamples,
        });
        if cli.timing {
            doc["elapsed"] = json!(elapsed);
        }
        println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialise"));
    } else {
        for line in &output.lines {
            println!("{line}");
        }
        if cli.timing {
            println!("elapsed = {elapsed:.3}s");
        }
    }
    ExitCode::from(output.code)
}

use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use stabcds::invariants::{self, hypothesis_report};
use stabcds::minors::{check_h_sequence, EXACT_SEARCH_CAP};
use stabcds::{
    build_h_certificate, corollary_cds, from_graph6, h_number, hadwiger_number, theorem1_edge,
    theorem2_cds, to_graph6, ConstructiveError, Graph,
};
use stabcds_harness::{
    random_filtered, run_sweep_with, Check, Filters, Order, RandomModel, Source, SweepSpec,
};

#[derive(Parser)]
#[command(
    name = "stabcds",
    version,
    about = "Connected domination and h(G) for graphs of small stability number"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hypothesis report, clique and stability numbers, and h/eta for small graphs.
    Invariants { graph: String },
    /// Connected dominating set of size at most 4.
    Cds {
        graph: String,
        /// Run the claw-free construction at this vertex instead of the corollary.
        #[arg(long)]
        vertex: Option<usize>,
        /// Report a case-analysis gap instead of falling back to search.
        #[arg(long)]
        strict: bool,
    },
    /// Dominating edge at a non-simplicial vertex (stability number 2).
    Domedge {
        graph: String,
        #[arg(long)]
        vertex: usize,
    },
    /// Build and verify an h-sequence certificate.
    Certify { graph: String },
    /// Minimum connected dominating set by exhaustive search.
    Mincds { graph: String },
    /// Exact h(G) with a witness sequence.
    Hnum { graph: String },
    /// Exact Hadwiger number with a minor model.
    Eta { graph: String },
    /// Run checks over a family of graphs.
    Sweep(SweepArgs),
    /// Emit seeded random graphs passing the filters as graph6.
    Gen(GenArgs),
}

#[derive(Args, Default)]
struct FilterArgs {
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    alpha_eq: Option<usize>,
    #[arg(long)]
    alpha_le: Option<usize>,
    #[arg(long)]
    claw_free: bool,
    /// Forbid induced cycles of this length (repeatable).
    #[arg(long = "forbid-cycle")]
    forbid_cycles: Vec<usize>,
}

impl FilterArgs {
    fn filters(&self) -> Filters {
        Filters {
            connected: self.connected.then_some(true),
            alpha_eq: self.alpha_eq,
            alpha_le: self.alpha_le,
            claw_free: self.claw_free.then_some(true),
            forbidden_cycles: self.forbid_cycles.clone(),
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// JSON sweep spec; the source, filter and check flags are then ignored.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Every labeled graph up to this order.
    #[arg(long, conflicts_with_all = ["graph6", "samples"])]
    exhaustive: Option<usize>,
    #[arg(long, default_value_t = 0)]
    n_min: usize,
    /// graph6 stream (`-` for standard input).
    #[arg(long, conflicts_with = "samples")]
    graph6: Option<String>,
    /// Random source: number of samples.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = stabcds_harness::random::DEFAULT_MAX_ATTEMPTS)]
    max_attempts: u64,
    /// Check to run (repeatable).
    #[arg(long = "check")]
    checks: Vec<String>,
    #[command(flatten)]
    filters: FilterArgs,
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    fail_fast: bool,
    /// Write the case-trace histogram as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Emit a JSON line for every graph, not only failing ones.
    #[arg(long)]
    per_graph: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Upper end of a uniformly drawn order range starting at `--n`.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    count: u64,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = stabcds_harness::random::DEFAULT_MAX_ATTEMPTS)]
    max_attempts: u64,
    #[command(flatten)]
    filters: FilterArgs,
}

/// Exit status carried through `anyhow`.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Violation(String),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Violation(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for Failure {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Failure::Usage(msg.into()).into()
}

/// Graphs named on the command line: one graph6 string, or every line of
/// standard input for `-`.
fn read_graphs(arg: &str) -> anyhow::Result<Vec<Graph>> {
    if arg != "-" {
        return from_graph6(arg)
            .map(|g| vec![g])
            .map_err(|e| usage(format!("{arg}: {e}")));
    }
    let mut out = Vec::new();
    for (i, line) in io::stdin().lock().split(b'\n').enumerate() {
        let line = line.context("reading standard input")?;
        if line.iter().all(u8::is_ascii_whitespace) {
            continue;
        }
        out.push(from_graph6(&line).map_err(|e| usage(format!("line {}: {e}", i + 1)))?);
    }
    Ok(out)
}

/// Hypothesis failures mean the input is outside the class: a usage error.
/// Anything else is a failed guarantee.
fn constructive(e: ConstructiveError) -> anyhow::Error {
    match e {
        ConstructiveError::Graph(_) | ConstructiveError::Precondition(_) => usage(e.to_string()),
        ConstructiveError::CaseGap(ref gap) => Failure::Violation(format!(
            "{e}; partition {}",
            serde_json::to_string(&gap.partition).unwrap_or_default()
        ))
        .into(),
        _ => Failure::Violation(e.to_string()).into(),
    }
}

fn small_exact(g: &Graph) -> (Value, Value) {
    if g.order() > EXACT_SEARCH_CAP {
        return (Value::Null, Value::Null);
    }
    let h = h_number(g).map(|(h, _)| h).ok();
    let eta = hadwiger_number(g).map(|(e, _)| e).ok();
    (json!(h), json!(eta))
}

fn per_graph(arg: &str, mut f: impl FnMut(&Graph) -> anyhow::Result<Value>) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    for g in read_graphs(arg)? {
        writeln!(out, "{}", f(&g)?)?;
    }
    Ok(())
}

fn check_vertex(g: &Graph, v: usize) -> anyhow::Result<()> {
    g.check_vertex(v).map_err(|e| usage(e.to_string()))
}

fn parse_checks(names: &[String]) -> anyhow::Result<Vec<Check>> {
    names
        .iter()
        .map(|s| s.parse::<Check>().map_err(|e| usage(e.to_string())))
        .collect()
}

fn sweep_spec(a: &SweepArgs) -> anyhow::Result<SweepSpec> {
    let mut spec = if let Some(path) = &a.spec {
        let text =
            std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        serde_json::from_str::<SweepSpec>(&text)
            .map_err(|e| usage(format!("{}: {e}", path.display())))?
    } else {
        let source = match (a.exhaustive, &a.graph6, a.samples) {
            (Some(n_max), None, None) => Source::Exhaustive {
                n_min: a.n_min,
                n_max,
            },
            (None, Some(path), None) => Source::Graph6 { path: path.clone() },
            (None, None, Some(samples)) => {
                let n = a.n.ok_or_else(|| usage("--samples needs --n"))?;
                Source::Random(RandomModel {
                    n: match a.n_max {
                        Some(hi) => Order::Range([n, hi]),
                        None => Order::Fixed(n),
                    },
                    p: a.p,
                    samples,
                    seed: a.seed,
                    max_attempts: a.max_attempts,
                })
            }
            _ => {
                return Err(usage(
                    "give --spec, or exactly one of --exhaustive, --graph6, --samples",
                ))
            }
        };
        SweepSpec {
            source,
            filters: a.filters.filters(),
            checks: parse_checks(&a.checks)?,
            strict: false,
            jobs: None,
            fail_fast: false,
        }
    };
    spec.strict |= a.strict;
    spec.fail_fast |= a.fail_fast;
    if a.jobs.is_some() {
        spec.jobs = a.jobs;
    }
    spec.validate().map_err(|e| usage(e.to_string()))?;
    Ok(spec)
}

fn sweep(a: &SweepArgs) -> anyhow::Result<()> {
    let spec = sweep_spec(a)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut write_err = None;
    let report = run_sweep_with(&spec, |g| {
        if a.per_graph || g.has_failures() {
            if let Err(e) = writeln!(out, "{}", g.to_json()) {
                write_err.get_or_insert(e);
            }
        }
    })
    .map_err(|e| match e {
        stabcds_harness::HarnessError::Io { .. }
        | stabcds_harness::HarnessError::InvalidSpec(_)
        | stabcds_harness::HarnessError::Graph6Line { .. } => usage(e.to_string()),
        other => anyhow!(other),
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    for m in &report.malformed {
        eprintln!("warning: line {}: {}", m.line, m.error);
    }
    writeln!(out, "{}", serde_json::to_string(&report)?)?;
    out.flush()?;
    if let Some(path) = &a.csv {
        let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        report.histogram_csv(f)?;
    }
    if report.has_failures() {
        return Err(Failure::Violation(format!(
            "{} violations, {} errors",
            report.violations.len(),
            report.errors.len()
        ))
        .into());
    }
    Ok(())
}

fn gen(a: &GenArgs) -> anyhow::Result<()> {
    let model = RandomModel {
        n: match a.n_max {
            Some(hi) => Order::Range([a.n, hi]),
            None => Order::Fixed(a.n),
        },
        p: a.p,
        samples: a.count,
        seed: a.seed,
        max_attempts: a.max_attempts,
    };
    let mut stream =
        random_filtered(&model, &a.filters.filters()).map_err(|e| usage(e.to_string()))?;
    let mut out = BufWriter::new(io::stdout().lock());
    for g in stream.by_ref() {
        writeln!(out, "{}", to_graph6(&g?))?;
    }
    out.flush()?;
    let stats = stream.stats();
    eprintln!(
        "accepted {} of {} attempts (rejection rate {:.4})",
        stats.accepted,
        stats.attempts,
        stats.rejection_rate()
    );
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Invariants { graph } => per_graph(&graph, |g| {
            let report = hypothesis_report(g);
            let (h, eta) = small_exact(g);
            let mut v = serde_json::to_value(&report)?;
            let obj = v.as_object_mut().expect("report is an object");
            obj.insert("n".into(), json!(g.order()));
            obj.insert("m".into(), json!(g.edge_count()));
            obj.insert("omega".into(), json!(invariants::clique_number(g)));
            obj.insert("claw_free".into(), json!(report.claw_free()));
            obj.insert("h".into(), h);
            obj.insert("eta".into(), eta);
            Ok(v)
        }),
        Command::Cds {
            graph,
            vertex,
            strict,
        } => per_graph(&graph, |g| match vertex {
            Some(v) => {
                check_vertex(g, v)?;
                let r = theorem2_cds(g, v, strict).map_err(constructive)?;
                Ok(json!({
                    "D": r.set,
                    "trace": r.trace.label,
                    "size": r.set.len(),
                    "v1": r.trace.v1,
                    "v2": r.trace.v2,
                    "witnesses": r.trace.witnesses,
                }))
            }
            None => {
                let r = corollary_cds(g).map_err(constructive)?;
                Ok(json!({ "D": r.set, "trace": r.branch.label(), "size": r.set.len() }))
            }
        }),
        Command::Domedge { graph, vertex } => per_graph(&graph, |g| {
            check_vertex(g, vertex)?;
            let e = theorem1_edge(g, vertex).map_err(constructive)?;
            Ok(json!({
                "edge": [e.edge.0, e.edge.1],
                "trace": e.trace.label,
                "v1": e.trace.v1,
                "v2": e.trace.v2,
            }))
        }),
        Command::Certify { graph } => per_graph(&graph, |g| {
            let seq = build_h_certificate(g).map_err(constructive)?;
            let check = check_h_sequence(g, &seq);
            let v = json!({
                "head": seq.head,
                "tail": seq.tail,
                "length": seq.len(),
                "quarter": g.order().div_ceil(4),
                "valid": check.is_ok(),
                "violation": check.err(),
            });
            if v["valid"] == json!(false) {
                return Err(Failure::Violation(format!("invalid certificate {v}")).into());
            }
            Ok(v)
        }),
        Command::Mincds { graph } => per_graph(&graph, |g| {
            let d = invariants::min_cds(g);
            Ok(json!({ "D": d, "size": d.len() }))
        }),
        Command::Hnum { graph } => per_graph(&graph, |g| {
            let (h, seq) = h_number(g).map_err(|e| usage(e.to_string()))?;
            Ok(json!({ "h": h, "head": seq.head, "tail": seq.tail }))
        }),
        Command::Eta { graph } => per_graph(&graph, |g| {
            let (eta, model) = hadwiger_number(g).map_err(|e| usage(e.to_string()))?;
            Ok(json!({ "eta": eta, "branch_sets": model.branch_sets }))
        }),
        Command::Sweep(a) => sweep(&a),
        Command::Gen(a) => gen(&a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Failure>() {
                Some(Failure::Usage(_)) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

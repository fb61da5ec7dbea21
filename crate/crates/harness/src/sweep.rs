//! Sweep engine: stream graphs from a source, filter them, run checks, and
//! merge per-graph outcomes into a deterministic report.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use stabcds::constructive::{GapStage, PartitionT2};
use stabcds::invariants::{self, connected_dominating_sets, is_cds_unchecked};
use stabcds::minors::{check_h_sequence, EXACT_SEARCH_CAP};
use stabcds::{
    build_h_certificate, from_graph6, h_number, hadwiger_number, theorem1_edge, theorem2_cds,
    to_graph6, ConstructiveError, Graph,
};

use crate::enumerate::{enumerate_labeled, MAX_LABELED_ORDER};
use crate::error::HarnessError;
use crate::filters::{Facts, Filters, Rejection};
use crate::random::{random_filtered, RandomModel, SamplingStats};

/// Graphs are handed to the worker pool in chunks of this size.
const CHUNK: usize = 2048;

/// Certificates are compared against the exact `h` up to this order.
pub const CERTIFICATE_EXACT_LIMIT: usize = 9;

/// How many connected dominating sets the domination step tries per graph.
pub const DOMINATION_STEP_SETS: usize = 5;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Source {
    /// Every labeled graph of each order in `n_min..=n_max`.
    Exhaustive {
        #[serde(default)]
        n_min: usize,
        n_max: usize,
    },
    /// graph6 lines from a file, or standard input for `-`.
    Graph6 {
        path: String,
    },
    Random(RandomModel),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Exhaustive { n_min, n_max } => write!(f, "exhaustive n={n_min}..={n_max}"),
            Source::Graph6 { path } => write!(f, "graph6 {path}"),
            Source::Random(m) => {
                let (lo, hi) = m.n.bounds();
                write!(
                    f,
                    "random n={lo}..={hi} p={} samples={} seed={}",
                    m.p, m.samples, m.seed
                )
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Theorem1,
    Theorem2,
    CorollaryBoundHalf,
    CorollaryBoundQuarter,
    Sandwich,
    DominationStep,
    Certificate,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Theorem1,
        Check::Theorem2,
        Check::CorollaryBoundHalf,
        Check::CorollaryBoundQuarter,
        Check::Sandwich,
        Check::DominationStep,
        Check::Certificate,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem1",
            Check::Theorem2 => "theorem2",
            Check::CorollaryBoundHalf => "corollary_bound_half",
            Check::CorollaryBoundQuarter => "corollary_bound_quarter",
            Check::Sandwich => "sandwich",
            Check::DominationStep => "domination_step",
            Check::Certificate => "certificate",
        }
    }

    /// Whether the check runs the exact `h`/`η` search on every graph.
    fn needs_exact(self) -> bool {
        matches!(
            self,
            Check::CorollaryBoundHalf
                | Check::CorollaryBoundQuarter
                | Check::Sandwich
                | Check::DominationStep
        )
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Check {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| HarnessError::InvalidSpec(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub source: Source,
    #[serde(default)]
    pub filters: Filters,
    pub checks: Vec<Check>,
    /// Treat inputs the written case analysis does not settle as failures.
    #[serde(default)]
    pub strict: bool,
    /// Worker threads; the rayon default when unset.
    #[serde(default)]
    pub jobs: Option<usize>,
    /// Stop at the first malformed line or failing graph.
    #[serde(default)]
    pub fail_fast: bool,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let invalid = |msg: String| Err(HarnessError::InvalidSpec(msg));
        if self.checks.is_empty() {
            return invalid("at least one check is required".into());
        }
        self.filters.validate()?;
        if self.jobs == Some(0) {
            return invalid("jobs must be positive".into());
        }
        let max_n = match &self.source {
            Source::Exhaustive { n_min, n_max } => {
                if n_min > n_max {
                    return invalid(format!("n_min = {n_min} exceeds n_max = {n_max}"));
                }
                if *n_max > MAX_LABELED_ORDER {
                    return Err(HarnessError::EnumerationTooLarge {
                        n: *n_max,
                        max: MAX_LABELED_ORDER,
                    });
                }
                Some(*n_max)
            }
            Source::Random(m) => {
                m.validate()?;
                Some(m.n.bounds().1)
            }
            Source::Graph6 { .. } => None,
        };
        if let (Some(n), Some(c)) = (max_n, self.checks.iter().find(|c| c.needs_exact())) {
            if n > EXACT_SEARCH_CAP {
                return invalid(format!(
                    "check {c} needs exact h/eta, admitted only for n <= {EXACT_SEARCH_CAP} (source reaches {n})"
                ));
            }
        }
        Ok(())
    }
}

/// Outcome of one check on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    NotApplicable,
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    /// Graphs in the check's hypothesis class (`pass + fail + errors`).
    pub applicable: u64,
    pub pass: u64,
    pub fail: u64,
    pub errors: u64,
    pub not_applicable: u64,
    /// Individual runs (vertices for the theorem checks, sets for the
    /// domination step, one otherwise).
    pub runs: u64,
}

/// A failing or erroring run, with enough to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: Check,
    pub index: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<u64>,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    pub detail: String,
}

/// An input the written case analysis of the claw-free construction does
/// not settle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapEntry {
    pub index: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<u64>,
    pub graph6: String,
    pub vertex: usize,
    pub stage: String,
    pub partition: PartitionT2,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CertificateStats {
    pub built: u64,
    /// Certificates of length at least `ceil(n/4)`.
    pub reached_quarter: u64,
    /// Certificate length minus `ceil(n/4)`, with multiplicities.
    pub margin: BTreeMap<i64, u64>,
    /// Certificates compared against the exact `h`.
    pub compared_exact: u64,
    /// Of those, certificates attaining `h`.
    pub attained_exact: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MalformedLine {
    pub line: u64,
    pub error: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub graphs_seen: u64,
    pub passed_filters: u64,
    /// Graphs dropped, keyed by the first filter they failed.
    pub filtered_out: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub elapsed_seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub source: String,
    pub strict: bool,
    pub counts: Counts,
    pub checks: BTreeMap<Check, CheckTally>,
    pub violations: Vec<Witness>,
    pub errors: Vec<Witness>,
    pub trace_histogram: BTreeMap<String, u64>,
    pub gaps: Vec<GapEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateStats>,
    pub malformed: Vec<MalformedLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampling: Option<SamplingStats>,
    /// Stopped early because of `fail_fast`.
    pub stopped_early: bool,
    /// Excluded from determinism guarantees.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl SweepReport {
    fn new(spec: &SweepSpec) -> Self {
        SweepReport {
            source: spec.source.to_string(),
            strict: spec.strict,
            counts: Counts::default(),
            checks: spec
                .checks
                .iter()
                .map(|&c| (c, CheckTally::default()))
                .collect(),
            violations: Vec::new(),
            errors: Vec::new(),
            trace_histogram: BTreeMap::new(),
            gaps: Vec::new(),
            certificate: spec
                .checks
                .contains(&Check::Certificate)
                .then(CertificateStats::default),
            malformed: Vec::new(),
            sampling: None,
            stopped_early: false,
            timing: None,
        }
    }

    /// Any failing or erroring check run.
    pub fn has_failures(&self) -> bool {
        self.checks.values().any(|t| t.fail > 0 || t.errors > 0)
    }

    pub fn tally(&self, check: Check) -> Option<&CheckTally> {
        self.checks.get(&check)
    }

    /// The report with timing removed; equal specs give equal values.
    pub fn without_timing(&self) -> SweepReport {
        SweepReport {
            timing: None,
            ..self.clone()
        }
    }

    /// Histogram as `label,count` rows in label order.
    pub fn histogram_csv<W: io::Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["label", "count"])?;
        for (label, count) in &self.trace_histogram {
            w.write_record([label.as_str(), &count.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }

    fn merge(&mut self, out: GraphOutcome) {
        self.counts.graphs_seen += 1;
        if let Some(r) = out.rejection {
            *self.counts.filtered_out.entry(r.to_string()).or_default() += 1;
            for t in self.checks.values_mut() {
                t.not_applicable += 1;
            }
            return;
        }
        self.counts.passed_filters += 1;
        for (check, res) in out.results {
            let tally = self.checks.get_mut(&check).expect("check was requested");
            tally.runs += res.runs;
            match res.status() {
                Status::NotApplicable => tally.not_applicable += 1,
                Status::Pass => tally.pass += 1,
                Status::Fail => tally.fail += 1,
                Status::Error => tally.errors += 1,
            }
            if res.status() != Status::NotApplicable {
                tally.applicable += 1;
            }
            let witness = |(vertex, detail): (Option<usize>, String)| Witness {
                check,
                index: out.index,
                line: out.line,
                graph6: out.graph6.clone(),
                vertex,
                detail,
            };
            self.violations
                .extend(res.failures.into_iter().map(witness));
            self.errors.extend(res.errors.into_iter().map(witness));
            for label in res.labels {
                *self.trace_histogram.entry(label).or_default() += 1;
            }
            self.gaps.extend(
                res.gaps
                    .into_iter()
                    .map(|(vertex, stage, partition)| GapEntry {
                        index: out.index,
                        line: out.line,
                        graph6: out.graph6.clone(),
                        vertex,
                        stage: stage.to_string(),
                        partition,
                    }),
            );
            if let (Some(stats), Some(c)) = (self.certificate.as_mut(), res.certificate) {
                stats.built += 1;
                let margin = c.length as i64 - c.order.div_ceil(4) as i64;
                stats.reached_quarter += u64::from(margin >= 0);
                *stats.margin.entry(margin).or_default() += 1;
                if let Some(h) = c.exact {
                    stats.compared_exact += 1;
                    stats.attained_exact += u64::from(h == c.length);
                }
            }
        }
    }
}

/// Everything a sweep learned about one graph; handed to the per-graph sink
/// in input order.
#[derive(Clone, Debug)]
pub struct GraphOutcome {
    pub index: u64,
    pub line: Option<u64>,
    pub graph6: String,
    pub order: usize,
    pub rejection: Option<Rejection>,
    pub results: Vec<(Check, CheckResult)>,
}

impl GraphOutcome {
    pub fn has_failures(&self) -> bool {
        self.results
            .iter()
            .any(|(_, r)| matches!(r.status(), Status::Fail | Status::Error))
    }

    /// One JSON-lines record.
    pub fn to_json(&self) -> serde_json::Value {
        let checks: BTreeMap<_, _> = self
            .results
            .iter()
            .map(|(c, r)| {
                (
                    c.as_str(),
                    serde_json::json!({
                        "status": r.status(),
                        "labels": r.labels,
                        "failures": r.failures,
                        "errors": r.errors,
                    }),
                )
            })
            .collect();
        serde_json::json!({
            "index": self.index,
            "line": self.line,
            "graph6": self.graph6,
            "n": self.order,
            "filtered_out": self.rejection.map(|r| r.to_string()),
            "checks": checks,
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct CheckResult {
    applicable: bool,
    pub runs: u64,
    pub failures: Vec<(Option<usize>, String)>,
    pub errors: Vec<(Option<usize>, String)>,
    pub labels: Vec<String>,
    gaps: Vec<(usize, GapStage, PartitionT2)>,
    certificate: Option<CertificateRun>,
}

#[derive(Clone, Copy, Debug)]
struct CertificateRun {
    order: usize,
    length: usize,
    exact: Option<usize>,
}

impl CheckResult {
    fn not_applicable() -> Self {
        CheckResult::default()
    }

    fn applicable() -> Self {
        CheckResult {
            applicable: true,
            ..CheckResult::default()
        }
    }

    pub fn status(&self) -> Status {
        if !self.applicable {
            Status::NotApplicable
        } else if !self.errors.is_empty() {
            Status::Error
        } else if !self.failures.is_empty() {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    fn fail(&mut self, vertex: Option<usize>, detail: impl Into<String>) {
        self.failures.push((vertex, detail.into()));
    }

    fn error(&mut self, vertex: Option<usize>, detail: impl Into<String>) {
        self.errors.push((vertex, detail.into()));
    }
}

/// Per-graph state shared between checks.
struct Ctx<'a> {
    facts: Facts<'a>,
    h: OnceCell<Result<usize, String>>,
}

impl<'a> Ctx<'a> {
    fn g(&self) -> &'a Graph {
        self.facts.graph
    }

    fn h(&self) -> Result<usize, String> {
        self.h
            .get_or_init(|| {
                h_number(self.g())
                    .map(|(h, _)| h)
                    .map_err(|e| e.to_string())
            })
            .clone()
    }
}

fn non_simplicial(g: &Graph) -> impl Iterator<Item = usize> + '_ {
    (0..g.order()).filter(|&v| !invariants::is_simplicial_unchecked(g, v))
}

fn check_theorem1(ctx: &Ctx<'_>) -> CheckResult {
    if !ctx.facts.theorem1_class() {
        return CheckResult::not_applicable();
    }
    let g = ctx.g();
    let mut res = CheckResult::applicable();
    for v in non_simplicial(g) {
        res.runs += 1;
        match theorem1_edge(g, v) {
            Ok(e) => {
                let (a, b) = e.edge;
                res.labels.push(e.trace.label.to_string());
                if !(a == v || b == v) || !g.has_edge(a, b) {
                    res.fail(Some(v), format!("({a},{b}) is not an edge at {v}"));
                } else if g.closed_adj(a) | g.closed_adj(b) != g.vertices() {
                    res.fail(Some(v), format!("edge ({a},{b}) does not dominate"));
                }
            }
            Err(e) => res.fail(Some(v), e.to_string()),
        }
    }
    res
}

fn check_theorem2(ctx: &Ctx<'_>, strict: bool) -> CheckResult {
    if !ctx.facts.theorem2_class() {
        return CheckResult::not_applicable();
    }
    let g = ctx.g();
    let mut res = CheckResult::applicable();
    let min = invariants::min_cds_size(g);
    for v in non_simplicial(g) {
        res.runs += 1;
        let outcome = match theorem2_cds(g, v, true) {
            Err(ConstructiveError::CaseGap(gap)) => {
                res.gaps.push((v, gap.stage, gap.partition));
                if strict {
                    res.labels.push(format!("GAP_{}", gap.stage));
                    res.fail(Some(v), format!("case analysis gap ({})", gap.stage));
                    continue;
                }
                theorem2_cds(g, v, false)
            }
            other => other,
        };
        match outcome {
            Ok(o) => {
                res.labels.push(o.trace.label.to_string());
                let d = o.set;
                if !d.contains(v) {
                    res.fail(Some(v), format!("D = {d} misses {v}"));
                } else if d.len() > 4 {
                    res.fail(Some(v), format!("|D| = {} exceeds 4", d.len()));
                } else if !is_cds_unchecked(g, d) {
                    res.fail(
                        Some(v),
                        format!("D = {d} is not a connected dominating set"),
                    );
                } else if d.len() < min {
                    res.fail(
                        Some(v),
                        format!("|D| = {} is below the minimum {min}", d.len()),
                    );
                }
            }
            Err(e) => res.fail(Some(v), e.to_string()),
        }
    }
    res
}

fn check_bound(ctx: &Ctx<'_>, in_class: bool, divisor: usize) -> CheckResult {
    if !in_class {
        return CheckResult::not_applicable();
    }
    let mut res = CheckResult::applicable();
    res.runs = 1;
    let n = ctx.g().order();
    match ctx.h() {
        Ok(h) if h < n.div_ceil(divisor) => res.fail(
            None,
            format!("h = {h} < ceil({n}/{divisor}) = {}", n.div_ceil(divisor)),
        ),
        Ok(_) => {}
        Err(e) => res.error(None, e),
    }
    res
}

fn check_sandwich(ctx: &Ctx<'_>) -> CheckResult {
    let g = ctx.g();
    let mut res = CheckResult::applicable();
    res.runs = 1;
    let (h, eta) = match (h_number(g), hadwiger_number(g)) {
        (Ok(h), Ok(eta)) => (h, eta),
        (Err(e), _) | (_, Err(e)) => {
            res.error(None, e.to_string());
            return res;
        }
    };
    let omega = invariants::clique_number(g);
    // the empty graph has h = 0 and no sequence to check
    let witness = if h.0 == 0 {
        Ok(())
    } else {
        check_h_sequence(g, &h.1)
    };
    if let Err(v) = witness {
        res.fail(None, format!("h witness rejected: {v:?}"));
    } else if !eta.1.is_valid_in(g) || eta.1.order() != eta.0 {
        res.fail(None, "eta witness is not a minor model".to_string());
    } else if !(omega <= h.0 && h.0 <= eta.0) {
        res.fail(
            None,
            format!("omega = {omega}, h = {}, eta = {}", h.0, eta.0),
        );
    }
    res
}

fn check_domination_step(ctx: &Ctx<'_>) -> CheckResult {
    let g = ctx.g();
    if g.order() == 0 {
        return CheckResult::not_applicable();
    }
    let mut res = CheckResult::applicable();
    let h = match ctx.h() {
        Ok(h) => h,
        Err(e) => {
            res.error(None, e);
            return res;
        }
    };
    for d in connected_dominating_sets(g).take(DOMINATION_STEP_SETS) {
        res.runs += 1;
        let (rest, _) = g.remove(d).expect("set lies in the graph");
        match h_number(&rest) {
            Ok((hr, _)) if hr + 1 > h => {
                res.fail(None, format!("D = {d}: h(G - D) = {hr}, h(G) = {h}"))
            }
            Ok(_) => {}
            Err(e) => res.error(None, e.to_string()),
        }
    }
    res
}

fn check_certificate(ctx: &Ctx<'_>) -> CheckResult {
    if !ctx.facts.certificate_class() {
        return CheckResult::not_applicable();
    }
    let g = ctx.g();
    let mut res = CheckResult::applicable();
    res.runs = 1;
    let seq = match build_h_certificate(g) {
        Ok(seq) => seq,
        Err(e) => {
            res.fail(None, e.to_string());
            return res;
        }
    };
    if let Err(v) = check_h_sequence(g, &seq) {
        res.fail(None, format!("certificate rejected: {v:?}"));
        return res;
    }
    let mut exact = None;
    if g.order() <= CERTIFICATE_EXACT_LIMIT {
        match ctx.h() {
            Ok(h) => {
                exact = Some(h);
                if seq.len() > h {
                    res.fail(
                        None,
                        format!("certificate length {} exceeds h = {h}", seq.len()),
                    );
                }
            }
            Err(e) => res.error(None, e),
        }
    }
    res.certificate = Some(CertificateRun {
        order: g.order(),
        length: seq.len(),
        exact,
    });
    res
}

fn evaluate(spec: &SweepSpec, index: u64, line: Option<u64>, g: &Graph) -> GraphOutcome {
    let ctx = Ctx {
        facts: Facts::new(g),
        h: OnceCell::new(),
    };
    let mut out = GraphOutcome {
        index,
        line,
        graph6: to_graph6(g),
        order: g.order(),
        rejection: spec.filters.evaluate(&ctx.facts).err(),
        results: Vec::new(),
    };
    if out.rejection.is_some() {
        return out;
    }
    let too_large = g.order() > EXACT_SEARCH_CAP;
    for &check in &spec.checks {
        let res = if too_large && check.needs_exact() {
            let mut r = CheckResult::applicable();
            r.error(
                None,
                format!("n = {} exceeds the exact search cap", g.order()),
            );
            r
        } else {
            match check {
                Check::Theorem1 => check_theorem1(&ctx),
                Check::Theorem2 => check_theorem2(&ctx, spec.strict),
                Check::CorollaryBoundHalf => check_bound(&ctx, ctx.facts.theorem1_class(), 2),
                Check::CorollaryBoundQuarter => check_bound(&ctx, ctx.facts.quarter_class(), 4),
                Check::Sandwich => check_sandwich(&ctx),
                Check::DominationStep => check_domination_step(&ctx),
                Check::Certificate => check_certificate(&ctx),
            }
        };
        out.results.push((check, res));
    }
    out
}

enum Item {
    Graph { line: Option<u64>, graph: Graph },
    Malformed(MalformedLine),
}

type ItemStream = Box<dyn Iterator<Item = Result<Item, HarnessError>>>;

fn graph6_lines(reader: Box<dyn BufRead>, path: String) -> ItemStream {
    let mut reader = reader;
    let mut line_no = 0u64;
    Box::new(std::iter::from_fn(move || loop {
        let mut buf = Vec::new();
        match reader.read_until(b'\n', &mut buf) {
            Ok(0) => return None,
            Ok(_) => {}
            Err(source) => {
                return Some(Err(HarnessError::Io {
                    path: path.clone(),
                    source,
                }))
            }
        }
        line_no += 1;
        if buf.iter().all(u8::is_ascii_whitespace) {
            continue;
        }
        return Some(Ok(match from_graph6(&buf) {
            Ok(graph) => Item::Graph {
                line: Some(line_no),
                graph,
            },
            Err(e) => Item::Malformed(MalformedLine {
                line: line_no,
                error: e.to_string(),
            }),
        }));
    }))
}

fn open_source(
    spec: &SweepSpec,
) -> Result<(ItemStream, Option<crate::random::RandomFiltered>), HarnessError> {
    Ok(match &spec.source {
        Source::Exhaustive { n_min, n_max } => {
            let streams = (*n_min..=*n_max)
                .map(enumerate_labeled)
                .collect::<Result<Vec<_>, _>>()?;
            let it = streams
                .into_iter()
                .flatten()
                .map(|graph| Ok(Item::Graph { line: None, graph }));
            (Box::new(it), None)
        }
        Source::Graph6 { path } => {
            let reader: Box<dyn BufRead> = if path == "-" {
                Box::new(BufReader::new(io::stdin()))
            } else {
                let f = File::open(path).map_err(|source| HarnessError::Io {
                    path: path.clone(),
                    source,
                })?;
                Box::new(BufReader::new(f))
            };
            (graph6_lines(reader, path.clone()), None)
        }
        Source::Random(m) => (
            Box::new(std::iter::empty()),
            Some(random_filtered(m, &spec.filters)?),
        ),
    })
}

pub fn run_sweep(spec: &SweepSpec) -> Result<SweepReport, HarnessError> {
    run_sweep_with(spec, |_| {})
}

/// Runs the sweep, passing every graph's outcome to `sink` in input order.
pub fn run_sweep_with(
    spec: &SweepSpec,
    mut sink: impl FnMut(&GraphOutcome),
) -> Result<SweepReport, HarnessError> {
    spec.validate()?;
    let start = Instant::now();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = spec.jobs {
        pool = pool.num_threads(jobs);
    }
    let pool = pool
        .build()
        .map_err(|e| HarnessError::InvalidSpec(format!("cannot start workers: {e}")))?;

    let (mut stream, mut sampler) = open_source(spec)?;
    let mut report = SweepReport::new(spec);
    let mut index = 0u64;
    let mut chunk: Vec<(u64, Option<u64>, Graph)> = Vec::with_capacity(CHUNK);
    let mut exhausted = false;

    while !exhausted && !report.stopped_early {
        chunk.clear();
        while chunk.len() < CHUNK {
            let next = match sampler.as_mut() {
                Some(s) => s
                    .next()
                    .map(|r| r.map(|graph| Item::Graph { line: None, graph })),
                None => stream.next(),
            };
            match next {
                None => {
                    exhausted = true;
                    break;
                }
                Some(Err(e)) => return Err(e),
                Some(Ok(Item::Malformed(m))) => {
                    if spec.fail_fast {
                        return Err(HarnessError::InvalidSpec(format!(
                            "malformed graph6 at line {}: {}",
                            m.line, m.error
                        )));
                    }
                    report.malformed.push(m);
                }
                Some(Ok(Item::Graph { line, graph })) => {
                    chunk.push((index, line, graph));
                    index += 1;
                }
            }
        }
        let outcomes: Vec<GraphOutcome> = pool.install(|| {
            chunk
                .par_iter()
                .map(|(i, line, g)| evaluate(spec, *i, *line, g))
                .collect()
        });
        for out in outcomes {
            let failed = out.has_failures();
            sink(&out);
            report.merge(out);
            if failed && spec.fail_fast {
                report.stopped_early = true;
                break;
            }
        }
    }
    report.sampling = sampler.map(|s| s.into_stats());
    report.timing = Some(Timing {
        elapsed_seconds: start.elapsed().as_secs_f64(),
    });
    Ok(report)
}

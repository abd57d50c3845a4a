//! Machine checks of the structural facts about connected IR-graphs, run
//! over single graphs or whole graph6 censuses, and bounded searches for
//! sources of a given target IR-graph.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};
use crate::graph6::{emit_graph6, StreamEntry};
use crate::irredundance::{
    enumerate_flips_of_irredundant, upper_irredundance_capped, IrSetInfo, DEFAULT_FLIP_CAP,
};
use crate::iso::{find_isomorphism, DEFAULT_ISO_LIMIT};
use crate::reconfig::{IrGraph, DEFAULT_MAX_IR_SETS};
use crate::vertex_set::VertexSet;

/// Fixed wording of every probe report.
pub const EVIDENCE_WORDING: &str = "bounded evidence up to n_max";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CheckId {
    /// An IR-set with at least two EPN-bearing members lies on an induced
    /// C4, or the diameter is at least 3 and the set is at distance at least
    /// 3 from its flip-sets that differ in at least three members.
    #[serde(rename = "C4-OR-DIAM3")]
    C4OrDiam3,
    /// IR-sets with exactly one edge, or independent with at least two
    /// EPN-bearing members, lie on induced C4s.
    #[serde(rename = "COR-C4")]
    CorC4,
    /// An IR-set with `k >= 3` EPN-bearing members forces diameter `>= k`.
    #[serde(rename = "DIAM-LOWER")]
    DiamLower,
    /// All IR-sets independent and at least three of them: a triangle or an
    /// induced C4.
    #[serde(rename = "INDEP-TRI-C4")]
    IndepTriC4,
    /// Diameter 2 implies an induced C4.
    #[serde(rename = "DIAM2-C4")]
    Diam2C4,
    /// No non-complete IR-graph has a universal vertex.
    #[serde(rename = "UNIV-VERTEX")]
    UnivVertex,
}

impl CheckId {
    pub const ALL: [CheckId; 6] = [
        CheckId::C4OrDiam3,
        CheckId::CorC4,
        CheckId::DiamLower,
        CheckId::IndepTriC4,
        CheckId::Diam2C4,
        CheckId::UnivVertex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::C4OrDiam3 => "C4-OR-DIAM3",
            CheckId::CorC4 => "COR-C4",
            CheckId::DiamLower => "DIAM-LOWER",
            CheckId::IndepTriC4 => "INDEP-TRI-C4",
            CheckId::Diam2C4 => "DIAM2-C4",
            CheckId::UnivVertex => "UNIV-VERTEX",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Violation,
    Inapplicable,
}

/// Outcome of one check on one source graph. Violations carry the IR-graph
/// and the offending sets, so they can be re-verified independently.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub check: CheckId,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub witness: Value,
}

impl Finding {
    fn pass(check: CheckId, witness: Value) -> Self {
        Finding {
            check,
            verdict: Verdict::Pass,
            reason: None,
            witness,
        }
    }

    fn inapplicable(check: CheckId, reason: impl Into<String>) -> Self {
        Finding {
            check,
            verdict: Verdict::Inapplicable,
            reason: Some(reason.into()),
            witness: Value::Null,
        }
    }

    fn violation(check: CheckId, h: &IrGraph, reason: impl Into<String>, mut witness: Value) -> Self {
        witness["ir_graph"] = serde_json::to_value(h.to_json()).expect("IR-graph serializes");
        Finding {
            check,
            verdict: Verdict::Violation,
            reason: Some(reason.into()),
            witness,
        }
    }
}

/// Resource bounds shared by the checks, probes and scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_ir_sets: usize,
    pub iso_limit: usize,
    pub flip_cap: usize,
    /// Worker threads for census scans; 0 uses one per core.
    pub workers: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_ir_sets: DEFAULT_MAX_IR_SETS,
            iso_limit: DEFAULT_ISO_LIMIT,
            flip_cap: DEFAULT_FLIP_CAP,
            workers: 0,
        }
    }
}

/// Runs every check on the IR-graph of `g`; one finding per check, marked
/// inapplicable when the IR-graph exceeds the cap.
pub fn check_theorems(g: &Graph, caps: &Caps) -> Vec<Finding> {
    check_selected(g, &CheckId::ALL, caps)
}

pub fn check_selected(g: &Graph, checks: &[CheckId], caps: &Caps) -> Vec<Finding> {
    match IrGraph::build_capped(g, caps.max_ir_sets) {
        Ok(h) => check_ir_graph(&h, checks, caps),
        Err(e) => checks
            .iter()
            .map(|&c| Finding::inapplicable(c, format!("IR-graph not built: {e}")))
            .collect(),
    }
}

/// The checks on an already built IR-graph.
pub fn check_ir_graph(h: &IrGraph, checks: &[CheckId], caps: &Caps) -> Vec<Finding> {
    let ctx = Context::new(h);
    checks
        .iter()
        .map(|&check| match check {
            CheckId::C4OrDiam3 => ctx.c4_or_diam3(caps.flip_cap),
            CheckId::CorC4 => ctx.cor_c4(),
            CheckId::DiamLower => ctx.diam_lower(),
            CheckId::IndepTriC4 => ctx.indep_tri_c4(),
            CheckId::Diam2C4 => ctx.diam2_c4(),
            CheckId::UnivVertex => ctx.univ_vertex(),
        })
        .collect()
}

/// Quantities shared between checks.
struct Context<'a> {
    h: &'a IrGraph,
    connected: bool,
    diameter: Distance,
    info: Vec<IrSetInfo>,
}

impl<'a> Context<'a> {
    fn new(h: &'a IrGraph) -> Self {
        let g = h.source();
        Context {
            h,
            connected: h.is_connected(),
            diameter: h.diameter(),
            info: h.nodes().iter().map(|&x| IrSetInfo::describe(g, x)).collect(),
        }
    }

    fn g(&self) -> &Graph {
        self.h.source()
    }

    fn require_connected(&self, check: CheckId) -> Option<Finding> {
        (!self.connected).then(|| Finding::inapplicable(check, "IR-graph is disconnected"))
    }

    fn internal_edges(&self, x: VertexSet) -> usize {
        x.iter()
            .map(|v| self.g().neighbors(v).intersection(x).len())
            .sum::<usize>()
            / 2
    }

    fn c4_or_diam3(&self, flip_cap: usize) -> Finding {
        let check = CheckId::C4OrDiam3;
        if let Some(f) = self.require_connected(check) {
            return f;
        }
        let candidates: Vec<usize> = (0..self.info.len())
            .filter(|&i| self.info[i].epn_bearing() >= 2)
            .collect();
        if candidates.is_empty() {
            return Finding::inapplicable(check, "no IR-set with two EPN-bearing members");
        }
        let mut capped = None;
        let mut on_c4 = 0;
        let mut by_distance = 0;
        for &i in &candidates {
            let x = self.h.nodes()[i];
            if self.h.induced_c4_through(i).is_some() {
                on_c4 += 1;
                continue;
            }
            let flips = match enumerate_flips_of_irredundant(self.g(), x, flip_cap) {
                Ok(f) => f,
                Err(e) => return Finding::inapplicable(check, format!("flip-sets of {x}: {e}")),
            };
            if flips.truncated {
                capped.get_or_insert(x);
                continue;
            }
            let dist = self.h.distances_from(i);
            let far: Vec<VertexSet> = flips
                .sets
                .iter()
                .copied()
                .filter(|f| x.difference(*f).len() >= 3)
                .collect();
            let witness = |reason: &str, extra: Value| {
                let mut w = json!({ "set": x, "diameter": self.diameter });
                if let (Value::Object(w), Value::Object(extra)) = (&mut w, extra) {
                    w.extend(extra);
                }
                Finding::violation(check, self.h, reason, w)
            };
            if !self.diameter.is_at_least(3) {
                return witness("not on an induced C4 and diameter below 3", Value::Null);
            }
            if far.is_empty() {
                return witness(
                    "not on an induced C4 and no flip-set differs in three members",
                    json!({ "flip_sets": flips.sets }),
                );
            }
            for f in far {
                let Some(j) = self.h.index_of(f) else {
                    return witness("flip-set is not an IR-set", json!({ "flip_set": f }));
                };
                if !dist[j].is_at_least(3) {
                    return witness(
                        "flip-set within distance 2",
                        json!({ "flip_set": f, "distance": dist[j] }),
                    );
                }
            }
            by_distance += 1;
        }
        if let Some(x) = capped {
            return Finding::inapplicable(check, format!("flip-set cap reached for {x}"));
        }
        Finding::pass(check, json!({ "on_induced_c4": on_c4, "by_distance": by_distance }))
    }

    fn cor_c4(&self) -> Finding {
        let check = CheckId::CorC4;
        if let Some(f) = self.require_connected(check) {
            return f;
        }
        let mut checked = 0;
        for (i, info) in self.info.iter().enumerate() {
            let one_edge = self.internal_edges(info.set) == 1;
            let independent_two = info.independent && info.epn_bearing() >= 2;
            if !(one_edge || independent_two) {
                continue;
            }
            checked += 1;
            if self.h.induced_c4_through(i).is_none() {
                let why = if one_edge {
                    "IR-set with exactly one edge is not on an induced C4"
                } else {
                    "independent IR-set with two EPN-bearing members is not on an induced C4"
                };
                return Finding::violation(check, self.h, why, json!({ "set": info.set }));
            }
        }
        if checked == 0 {
            return Finding::inapplicable(check, "no IR-set with one edge or two EPN-bearing independent members");
        }
        Finding::pass(check, json!({ "sets_checked": checked }))
    }

    fn diam_lower(&self) -> Finding {
        let check = CheckId::DiamLower;
        if let Some(f) = self.require_connected(check) {
            return f;
        }
        let Some((k, set)) = self
            .info
            .iter()
            .map(|info| (info.epn_bearing().max(info.positive_degree), info.set))
            .filter(|&(k, _)| k >= 3)
            .max_by_key(|&(k, _)| k)
        else {
            return Finding::inapplicable(check, "no IR-set with three EPN-bearing members");
        };
        let witness = json!({ "set": set, "k": k, "diameter": self.diameter });
        if self.diameter.is_at_least(k) {
            Finding::pass(check, witness)
        } else {
            Finding::violation(check, self.h, format!("diameter below {k}"), witness)
        }
    }

    fn indep_tri_c4(&self) -> Finding {
        let check = CheckId::IndepTriC4;
        if let Some(f) = self.require_connected(check) {
            return f;
        }
        if self.h.node_count() < 3 {
            return Finding::inapplicable(check, "fewer than three IR-sets");
        }
        if let Some(info) = self.info.iter().find(|i| !i.independent) {
            return Finding::inapplicable(check, format!("IR-set {} is not independent", info.set));
        }
        if let Some(t) = self.h.find_triangle() {
            return Finding::pass(check, json!({ "triangle": t }));
        }
        match self.h.find_induced_c4() {
            Some(c) => Finding::pass(check, json!({ "induced_c4": c })),
            None => Finding::violation(check, self.h, "neither a triangle nor an induced C4", json!({})),
        }
    }

    fn diam2_c4(&self) -> Finding {
        let check = CheckId::Diam2C4;
        if self.diameter != Distance::Finite(2) {
            return Finding::inapplicable(check, format!("diameter is {}", self.diameter));
        }
        match self.h.find_induced_c4() {
            Some(c) => Finding::pass(check, json!({ "induced_c4": c })),
            None => Finding::violation(check, self.h, "diameter 2 without an induced C4", json!({})),
        }
    }

    fn univ_vertex(&self) -> Finding {
        let check = CheckId::UnivVertex;
        if self.h.is_complete() {
            return Finding::pass(check, json!({ "complete": true }));
        }
        let universal = self.h.universal_nodes();
        match universal.first() {
            None => Finding::pass(check, json!({ "complete": false, "universal": [] })),
            Some(&u) => Finding::violation(
                check,
                self.h,
                "non-complete with a universal vertex",
                json!({ "universal": u, "set": self.h.nodes()[u] }),
            ),
        }
    }
}

/// A census line that did not decode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseFailure {
    pub index: usize,
    pub line: usize,
    pub text: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphFindings {
    pub index: usize,
    pub line: usize,
    pub graph: String,
    /// Number of IR-sets, when within the cap.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ir_sets: Option<usize>,
    pub findings: Vec<Finding>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub pass: usize,
    pub violation: usize,
    pub inapplicable: usize,
}

/// Connected IR-graphs of sources with an independent IR-set, and how many
/// of them have maximum degree at least three. Recorded, never asserted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentSetStats {
    pub connected_with_independent_ir_set: usize,
    pub max_degree_at_least_three: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub line: usize,
    pub graph: String,
    pub finding: Finding,
}

/// Aggregate of a census scan. Contains no timing, so equal inputs give
/// byte-identical JSON regardless of worker count.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub scanned: usize,
    pub checks: Vec<CheckId>,
    pub counts: BTreeMap<CheckId, VerdictCounts>,
    pub violations: Vec<Violation>,
    pub parse_errors: Vec<ParseFailure>,
    pub independent_set_stats: IndependentSetStats,
    pub graphs: Vec<GraphFindings>,
}

impl ScanReport {
    pub fn violation_count(&self) -> usize {
        self.violations.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check plus totals.
    pub fn summary(&self) -> String {
        let mut lines = vec![format!(
            "scanned {} graphs, {} parse errors, {} violations",
            self.scanned,
            self.parse_errors.len(),
            self.violations.len()
        )];
        for (check, c) in &self.counts {
            lines.push(format!(
                "{check}: pass={} violation={} inapplicable={}",
                c.pass, c.violation, c.inapplicable
            ));
        }
        lines.join("\n")
    }
}

#[derive(Clone, Debug)]
pub struct ScanOutcome {
    pub report: ScanReport,
    pub elapsed: Duration,
}

fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("worker pool starts")
        .install(f)
}

/// Runs `checks` on every decoded census entry, in parallel; results are
/// merged in input order.
pub fn scan_census(entries: &[StreamEntry], checks: &[CheckId], caps: &Caps) -> ScanOutcome {
    let start = Instant::now();
    let results: Vec<std::result::Result<(GraphFindings, Option<bool>), ParseFailure>> =
        with_pool(caps.workers, || {
            entries
                .par_iter()
                .enumerate()
                .map(|(index, entry)| match &entry.graph {
                    Err(e) => Err(ParseFailure {
                        index,
                        line: entry.line,
                        text: entry.text.clone(),
                        error: e.to_string(),
                    }),
                    Ok(g) => Ok(scan_one(index, entry.line, g, checks, caps)),
                })
                .collect()
        });

    let mut report = ScanReport {
        scanned: 0,
        checks: checks.to_vec(),
        counts: checks.iter().map(|&c| (c, VerdictCounts::default())).collect(),
        violations: Vec::new(),
        parse_errors: Vec::new(),
        independent_set_stats: IndependentSetStats::default(),
        graphs: Vec::new(),
    };
    for result in results {
        let (gf, stat) = match result {
            Err(p) => {
                report.parse_errors.push(p);
                continue;
            }
            Ok(r) => r,
        };
        report.scanned += 1;
        if let Some(high_degree) = stat {
            report.independent_set_stats.connected_with_independent_ir_set += 1;
            report.independent_set_stats.max_degree_at_least_three += usize::from(high_degree);
        }
        for f in &gf.findings {
            let c = report.counts.entry(f.check).or_default();
            match f.verdict {
                Verdict::Pass => c.pass += 1,
                Verdict::Violation => c.violation += 1,
                Verdict::Inapplicable => c.inapplicable += 1,
            }
            if f.verdict == Verdict::Violation {
                report.violations.push(Violation {
                    index: gf.index,
                    line: gf.line,
                    graph: gf.graph.clone(),
                    finding: f.clone(),
                });
            }
        }
        report.graphs.push(gf);
    }
    ScanOutcome {
        report,
        elapsed: start.elapsed(),
    }
}

/// Findings for one graph, plus whether it contributes to the independent
/// IR-set statistics (and if so, whether its IR-graph has a degree-3 node).
fn scan_one(
    index: usize,
    line: usize,
    g: &Graph,
    checks: &[CheckId],
    caps: &Caps,
) -> (GraphFindings, Option<bool>) {
    let graph = emit_graph6(g);
    match IrGraph::build_capped(g, caps.max_ir_sets) {
        Ok(h) => {
            let stat = (h.is_connected() && h.nodes().iter().any(|&x| g.is_independent(x)))
                .then(|| (0..h.node_count()).any(|i| h.neighbors(i).len() >= 3));
            let findings = check_ir_graph(&h, checks, caps);
            let gf = GraphFindings {
                index,
                line,
                graph,
                ir_sets: Some(h.node_count()),
                findings,
            };
            (gf, stat)
        }
        Err(_) => {
            let findings = check_selected(g, checks, caps);
            let gf = GraphFindings {
                index,
                line,
                graph,
                ir_sets: None,
                findings,
            };
            (gf, None)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeMatch {
    pub index: usize,
    pub line: usize,
    pub graph: String,
}

/// A census entry whose IR-graph could not be decided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedEntry {
    pub index: usize,
    pub line: usize,
    pub graph: String,
    pub reason: String,
}

/// Sources in a census whose IR-graph is isomorphic to `target`. Only ever
/// evidence up to the largest order scanned.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeResult {
    pub target: String,
    /// Largest order among the decoded census entries.
    pub n_max: Option<usize>,
    pub scanned: usize,
    pub matches: Vec<ProbeMatch>,
    /// True iff every entry decoded and was decided.
    pub exhausted: bool,
    pub skipped: Vec<SkippedEntry>,
    pub parse_errors: Vec<ParseFailure>,
    pub evidence: String,
}

impl ProbeResult {
    /// `0 matches, exhausted` or e.g. `2 matches, not exhausted (1 skipped, 0 parse errors)`.
    pub fn summary(&self) -> String {
        let noun = if self.matches.len() == 1 { "match" } else { "matches" };
        if self.exhausted {
            format!("{} {noun}, exhausted", self.matches.len())
        } else {
            format!(
                "{} {noun}, not exhausted ({} skipped, {} parse errors)",
                self.matches.len(),
                self.skipped.len(),
                self.parse_errors.len()
            )
        }
    }
}

enum ProbeOutcome {
    Match,
    NoMatch,
    Skipped(String),
}

fn probe_one(target: &Graph, g: &Graph, caps: &Caps) -> ProbeOutcome {
    // Sources with more IR-sets than the target has vertices cannot match,
    // so the enumeration stops early for them without skipping.
    let cap = target.order().min(caps.max_ir_sets);
    let (ir_value, nodes) = match upper_irredundance_capped(g, cap) {
        Ok(r) => r,
        Err(Error::TooManyIrSets { .. }) if cap == target.order() => return ProbeOutcome::NoMatch,
        Err(e) => return ProbeOutcome::Skipped(e.to_string()),
    };
    if nodes.len() != target.order() {
        return ProbeOutcome::NoMatch;
    }
    let h = IrGraph::from_sets(g, ir_value, nodes);
    let plain = match h.to_graph() {
        Ok(p) => p,
        Err(e) => return ProbeOutcome::Skipped(e.to_string()),
    };
    match find_isomorphism(&plain, target, caps.iso_limit) {
        Ok(Some(_)) => ProbeOutcome::Match,
        Ok(None) => ProbeOutcome::NoMatch,
        Err(e) => ProbeOutcome::Skipped(e.to_string()),
    }
}

/// Scans every census entry for sources whose IR-graph is isomorphic to
/// `target`.
pub fn probe_target(target: &Graph, entries: &[StreamEntry], caps: &Caps) -> Result<ProbeResult> {
    if target.order() > caps.iso_limit {
        return Err(Error::IsomorphismLimit {
            n: target.order(),
            limit: caps.iso_limit,
        });
    }
    let outcomes: Vec<Option<ProbeOutcome>> = with_pool(caps.workers, || {
        entries
            .par_iter()
            .map(|e| e.graph.as_ref().ok().map(|g| probe_one(target, g, caps)))
            .collect()
    });
    let mut result = ProbeResult {
        target: emit_graph6(target),
        n_max: None,
        scanned: 0,
        matches: Vec::new(),
        exhausted: true,
        skipped: Vec::new(),
        parse_errors: Vec::new(),
        evidence: String::new(),
    };
    for (index, (entry, outcome)) in entries.iter().zip(outcomes).enumerate() {
        let (g, outcome) = match (&entry.graph, outcome) {
            (Err(e), _) => {
                result.parse_errors.push(ParseFailure {
                    index,
                    line: entry.line,
                    text: entry.text.clone(),
                    error: e.to_string(),
                });
                continue;
            }
            (Ok(g), Some(outcome)) => (g, outcome),
            (Ok(_), None) => unreachable!("decoded entries are always probed"),
        };
        result.scanned += 1;
        result.n_max = result.n_max.max(Some(g.order()));
        let graph = emit_graph6(g);
        match outcome {
            ProbeOutcome::Match => result.matches.push(ProbeMatch {
                index,
                line: entry.line,
                graph,
            }),
            ProbeOutcome::NoMatch => {}
            ProbeOutcome::Skipped(reason) => result.skipped.push(SkippedEntry {
                index,
                line: entry.line,
                graph,
                reason,
            }),
        }
    }
    result.exhausted = result.skipped.is_empty() && result.parse_errors.is_empty();
    result.evidence = match result.n_max {
        Some(n) => format!("{EVIDENCE_WORDING} = {n}"),
        None => format!("{EVIDENCE_WORDING} (empty census)"),
    };
    Ok(result)
}

//! Corpus verification: run every check against streams of graphs
//! (exhaustive labeled enumeration, graph6 files, or seeded random
//! samples), emit one record per graph plus an aggregate summary.
//!
//! Records are produced in a deterministic order regardless of worker
//! count, and any counterexample verdict is re-derived single-threaded
//! from the graph6 id before being reported.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::conditions::{
    fan_tilde_condition, prior_condition_with_alpha, theorem_ham_hypothesis_with_alpha,
    theorem_hc_hypothesis_with_alpha, ConditionId,
};
use crate::graph::{Graph, GraphError};
use crate::hole::alpha_tilde;
use crate::rewrite::{
    check_maximal_path_laws, check_virtual_edge_laws, construct_hamilton_cycle,
    construct_hamilton_path, replay_trace, TraceStep,
};
use crate::solver::{hamilton_cycle, is_hamiltonian_connected};

/// Batch size for parallel processing of exhaustive enumerations.
const BATCH: u64 = 1 << 14;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
    #[error("exhaustive enumeration capped at order 8 (got {0})")]
    TooLarge(usize),
    #[error("random edge probability must be within [0, 1] (got {0})")]
    BadProbability(f64),
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphSource {
    /// Every labeled graph of the given order, in edge-mask order (bit k
    /// of the mask is the k-th vertex pair in graph6 column order).
    AllLabeled { n: usize },
    Graph6File { path: PathBuf },
    Random { count: usize, n: usize, edge_prob: f64, seed: u64 },
}

/// Which analyses to run per graph. Hypotheses, α̃ and connectivity are
/// always computed.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Checks {
    /// Solve for Hamilton cycle / hamiltonian-connectedness and compare
    /// against the hypotheses.
    pub conclusions: bool,
    /// Run the constructive drivers on hypothesis-satisfying graphs and
    /// replay their traces.
    pub constructors: bool,
    /// Run the structural-law checkers.
    pub laws: bool,
    /// Evaluate the classical conditions and the implication chain.
    pub priors: bool,
}

impl Checks {
    pub const ALL: Checks =
        Checks { conclusions: true, constructors: true, laws: true, priors: true };
    pub const CONCLUSIONS: Checks =
        Checks { conclusions: true, constructors: false, laws: false, priors: true };
}

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub source: GraphSource,
    pub checks: Checks,
    /// Worker threads; 0 means one per CPU. The FANHAM_WORKERS
    /// environment variable overrides this.
    pub parallelism: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct TraceSummary {
    pub rule_counts: BTreeMap<String, usize>,
    pub fallback: bool,
    pub constructions: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct LawSummary {
    pub maximal_path_context: bool,
    pub virtual_pairs: usize,
    pub near_contexts: usize,
    pub far_contexts: usize,
    pub rules_fired: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Conclusions {
    pub hamiltonian: bool,
    pub hamiltonian_connected: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRecord {
    pub graph_id: String,
    pub alpha_tilde: usize,
    /// Exact connectivity, capped at 3.
    pub connectivity: usize,
    pub hypotheses: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conclusions: Option<Conclusions>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace_summary: Option<TraceSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub law_summary: Option<LawSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub implication_exceptions: Vec<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RunSummary {
    pub graphs: usize,
    pub counterexamples: usize,
    pub ham_hypothesis_count: usize,
    pub hc_hypothesis_count: usize,
    pub violation_count: usize,
    pub constructor_violation_count: usize,
    pub law_violation_count: usize,
    pub implication_exception_count: usize,
    /// Graphs where the new hypothesis holds but the named classical
    /// condition fails; positive counts witness strict containment.
    pub strict_containments: BTreeMap<String, usize>,
    pub constructions: usize,
    pub fallbacks: usize,
    pub rule_counts: BTreeMap<String, usize>,
    pub law_contexts: usize,
    pub law_virtual_pairs: usize,
}

const IMPLICATIONS: [(&str, &str); 4] = [
    ("li-liu-ham", "ham-theorem"),
    ("li-liu-hc", "admissible"),
    ("mcdiarmid-yolov", "fan-tilde"),
    ("dirac", "alpha-le-delta"),
];

/// Full analysis of one graph.
pub fn analyze_graph(g: &Graph, checks: &Checks) -> VerificationRecord {
    let a = alpha_tilde(g);
    let alpha = a.value;
    debug_assert!(a.validate(g), "alpha certificates must re-validate");
    let mut hypotheses = BTreeMap::new();
    let hyp_ham = theorem_ham_hypothesis_with_alpha(g, alpha);
    let hyp_hc = theorem_hc_hypothesis_with_alpha(g, alpha);
    hypotheses.insert("ham-theorem".into(), hyp_ham);
    hypotheses.insert("hc-theorem".into(), hyp_hc);
    hypotheses.insert("fan-tilde".into(), fan_tilde_condition(g, alpha).holds);
    hypotheses.insert("admissible".into(), fan_tilde_condition(g, alpha + 1).holds);
    hypotheses.insert("alpha-le-delta".into(), g.n() >= 1 && alpha <= g.min_degree());
    if checks.priors {
        for id in [
            ConditionId::Dirac,
            ConditionId::Ore,
            ConditionId::FanClassic,
            ConditionId::McdiarmidYolov,
            ConditionId::ZhouEtAl,
            ConditionId::LiLiuHam,
            ConditionId::LiLiuHc,
        ] {
            hypotheses.insert(id.to_string(), prior_condition_with_alpha(g, id, alpha).all_ok());
        }
    }

    let mut violations = Vec::new();
    let mut verdict = Verdict::Consistent;
    let conclusions = if checks.conclusions {
        let hamiltonian = hamilton_cycle(g).is_some();
        let hamiltonian_connected = is_hamiltonian_connected(g).hamiltonian_connected;
        if hyp_ham && !hamiltonian {
            verdict = Verdict::Counterexample;
        }
        if hyp_hc && !hamiltonian_connected {
            verdict = Verdict::Counterexample;
        }
        Some(Conclusions { hamiltonian, hamiltonian_connected })
    } else {
        None
    };

    let trace_summary = if checks.constructors {
        let mut ts = TraceSummary::default();
        let mut absorb = |steps: &[TraceStep]| {
            for step in steps {
                if let TraceStep::Rewrite { rule } = step {
                    *ts.rule_counts.entry(rule.id().to_string()).or_insert(0) += 1;
                }
                if matches!(step, TraceStep::Fallback { .. }) {
                    ts.fallback = true;
                }
            }
            ts.constructions += 1;
        };
        if hyp_ham {
            match construct_hamilton_cycle(g) {
                Ok(res) => {
                    if !res.certificate.validate(g)
                        || replay_trace(g, &res.trace.steps) != Ok(res.certificate.clone())
                    {
                        violations.push("constructor: cycle trace does not replay".into());
                    }
                    absorb(&res.trace.steps);
                }
                Err(e) => violations.push(format!("constructor: cycle driver failed: {e}")),
            }
        }
        if hyp_hc {
            for x in 0..g.n() {
                for y in x + 1..g.n() {
                    match construct_hamilton_path(g, x, y) {
                        Ok(res) => {
                            if !res.certificate.validate(g)
                                || res.certificate.endpoints() != (x, y)
                                || replay_trace(g, &res.trace.steps) != Ok(res.certificate.clone())
                            {
                                violations.push(format!(
                                    "constructor: path trace ({x},{y}) does not replay"
                                ));
                            }
                            absorb(&res.trace.steps);
                        }
                        Err(e) => violations
                            .push(format!("constructor: path driver ({x},{y}) failed: {e}")),
                    }
                }
            }
        }
        Some(ts)
    } else {
        None
    };

    let law_summary = if checks.laws {
        let end = check_maximal_path_laws(g);
        let virt = check_virtual_edge_laws(g);
        violations.extend(end.violations.iter().map(|v| format!("maximal-path law: {v}")));
        violations.extend(virt.violations.iter().map(|v| format!("virtual-edge law: {v}")));
        Some(LawSummary {
            maximal_path_context: end.context,
            virtual_pairs: virt.pairs_with_virtual,
            near_contexts: virt.near_contexts,
            far_contexts: virt.far_contexts,
            rules_fired: end.rules_fired + virt.rules_fired,
        })
    } else {
        None
    };

    let mut implication_exceptions = Vec::new();
    if checks.priors {
        for (from, to) in IMPLICATIONS {
            if hypotheses.get(from) == Some(&true) && hypotheses.get(to) == Some(&false) {
                implication_exceptions.push(format!("{from} holds but {to} fails"));
            }
        }
    }

    VerificationRecord {
        graph_id: g.to_graph6(),
        alpha_tilde: alpha,
        connectivity: g.connectivity_up_to(3),
        hypotheses,
        conclusions,
        verdict,
        trace_summary,
        law_summary,
        violations,
        implication_exceptions,
    }
}

/// All labeled graphs of order n: total count, and the graph at a given
/// edge-mask index.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("valid order");
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                g.add_edge(i, j).expect("valid pair");
            }
            bit += 1;
        }
    }
    g
}

/// All labeled graphs of order n in ascending edge-mask order.
pub fn enumerate_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..labeled_graph_count(n)).map(move |m| graph_from_edge_mask(n, m))
}

fn worker_count(requested: usize) -> usize {
    if let Ok(val) = std::env::var("FANHAM_WORKERS") {
        if let Ok(w) = val.trim().parse::<usize>() {
            if w >= 1 {
                return w;
            }
        }
    }
    if requested >= 1 {
        requested
    } else {
        std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
    }
}

fn random_graph(n: usize, edge_prob: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n).expect("valid order");
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(edge_prob) {
                g.add_edge(i, j).expect("valid pair");
            }
        }
    }
    g
}

/// Runs the configured checks over the source, feeding each record to
/// the sink in deterministic source order, and returns the aggregate
/// summary. Counterexample verdicts are re-derived single-threaded.
pub fn verify_corpus<F: FnMut(&VerificationRecord)>(
    config: &RunConfig,
    mut sink: F,
) -> Result<RunSummary, HarnessError> {
    let workers = worker_count(config.parallelism);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let checks = config.checks;
    let mut summary = RunSummary::default();
    for (from, to) in IMPLICATIONS {
        summary.strict_containments.insert(format!("{to}-beyond-{from}"), 0);
    }

    let finalize = |rec: VerificationRecord, summary: &mut RunSummary, sink: &mut F| {
        let rec = if rec.verdict == Verdict::Counterexample {
            // Re-derive sequentially from the id before reporting.
            let g = Graph::parse_graph6(&rec.graph_id).expect("own graph6 output");
            analyze_graph(&g, &checks)
        } else {
            rec
        };
        summary.graphs += 1;
        if rec.verdict == Verdict::Counterexample {
            summary.counterexamples += 1;
        }
        if rec.hypotheses.get("ham-theorem") == Some(&true) {
            summary.ham_hypothesis_count += 1;
        }
        if rec.hypotheses.get("hc-theorem") == Some(&true) {
            summary.hc_hypothesis_count += 1;
        }
        summary.violation_count += rec.violations.len();
        summary.constructor_violation_count +=
            rec.violations.iter().filter(|v| v.starts_with("constructor:")).count();
        summary.law_violation_count +=
            rec.violations.iter().filter(|v| v.contains("law:")).count();
        summary.implication_exception_count += rec.implication_exceptions.len();
        for (from, to) in IMPLICATIONS {
            if rec.hypotheses.get(to) == Some(&true) && rec.hypotheses.get(from) == Some(&false) {
                *summary
                    .strict_containments
                    .get_mut(&format!("{to}-beyond-{from}"))
                    .expect("preseeded key") += 1;
            }
        }
        if let Some(ts) = &rec.trace_summary {
            summary.constructions += ts.constructions;
            if ts.fallback {
                summary.fallbacks += 1;
            }
            for (rule, count) in &ts.rule_counts {
                *summary.rule_counts.entry(rule.clone()).or_insert(0) += count;
            }
        }
        if let Some(ls) = &rec.law_summary {
            if ls.maximal_path_context {
                summary.law_contexts += 1;
            }
            summary.law_virtual_pairs += ls.virtual_pairs;
        }
        sink(&rec);
    };

    let process_batch = |graphs: Vec<Graph>, summary: &mut RunSummary, sink: &mut F| {
        let recs: Vec<VerificationRecord> =
            pool.install(|| graphs.par_iter().map(|g| analyze_graph(g, &checks)).collect());
        for rec in recs {
            finalize(rec, summary, sink);
        }
    };

    match &config.source {
        GraphSource::AllLabeled { n } => {
            if *n > 8 {
                return Err(HarnessError::TooLarge(*n));
            }
            let total = labeled_graph_count(*n);
            let mut start = 0u64;
            while start < total {
                let end = (start + BATCH).min(total);
                let graphs: Vec<Graph> =
                    (start..end).map(|m| graph_from_edge_mask(*n, m)).collect();
                process_batch(graphs, &mut summary, &mut sink);
                start = end;
            }
        }
        GraphSource::Graph6File { path } => {
            let reader = BufReader::new(File::open(path)?);
            let mut graphs = Vec::new();
            for line in reader.lines() {
                let line = line?;
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                graphs.push(Graph::parse_graph6(line)?);
                if graphs.len() as u64 == BATCH {
                    process_batch(std::mem::take(&mut graphs), &mut summary, &mut sink);
                }
            }
            process_batch(graphs, &mut summary, &mut sink);
        }
        GraphSource::Random { count, n, edge_prob, seed } => {
            if !(0.0..=1.0).contains(edge_prob) {
                return Err(HarnessError::BadProbability(*edge_prob));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let graphs: Vec<Graph> =
                (0..*count).map(|_| random_graph(*n, *edge_prob, &mut rng)).collect();
            for chunk in graphs.chunks(BATCH as usize) {
                process_batch(chunk.to_vec(), &mut summary, &mut sink);
            }
        }
    }
    Ok(summary)
}

//! Command-line interface. Graphs come from a file or stdin, in graph6
//! or edge-list format (auto-detected: edge lists start with a digit);
//! results go to stdout as JSON.
//!
//! Exit codes: 0 on success, 1 when a checked property is violated
//! (failed claim, counterexample, inapplicable rule), 2 on usage or
//! input errors.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::conditions::{
    prior_condition_with_alpha, theorem_ham_hypothesis_with_alpha,
    theorem_hc_hypothesis_with_alpha, v_star_with_alpha, ConditionId,
};
use crate::extremal::{build_family, verify_family_claims, Family, FamilySpec};
use crate::graph::Graph;
use crate::harness::{verify_corpus, Checks, GraphSource, RunConfig};
use crate::hole::alpha_tilde;
use crate::rewrite::{
    apply_rewrite, construct_hamilton_cycle, construct_hamilton_path, replay_trace, OrientedPath,
    PathOrCycle, RewriteRule,
};
use crate::solver::{hamilton_cycle, hamilton_path_between, is_hamiltonian_connected};

#[derive(Parser)]
#[command(
    name = "fanham",
    version,
    about = "Bipartite independence number, Fan-type hamiltonicity conditions, and certificate machinery"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file (graph6 or "n m" edge list); reads stdin when omitted.
    #[arg(long, short)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct SourceArgs {
    /// Every labeled graph of this order.
    #[arg(long, conflicts_with_all = ["graph6_file", "random"])]
    all_labeled: Option<usize>,
    /// File with one graph6 string per line.
    #[arg(long, conflicts_with = "random")]
    graph6_file: Option<PathBuf>,
    /// Number of seeded random graphs.
    #[arg(long)]
    random: Option<usize>,
    /// Order of random graphs.
    #[arg(long, default_value_t = 7)]
    order: usize,
    /// Edge probability of random graphs.
    #[arg(long, default_value_t = 0.5)]
    edge_prob: f64,
    /// Random seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SourceArgs {
    fn to_source(&self) -> Result<GraphSource> {
        match (self.all_labeled, &self.graph6_file, self.random) {
            (Some(n), None, None) => Ok(GraphSource::AllLabeled { n }),
            (None, Some(path), None) => Ok(GraphSource::Graph6File { path: path.clone() }),
            (None, None, Some(count)) => Ok(GraphSource::Random {
                count,
                n: self.order,
                edge_prob: self.edge_prob,
                seed: self.seed,
            }),
            _ => bail!("choose exactly one of --all-labeled, --graph6-file, --random"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Cycle,
    Path,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the bipartite independence number with certificates.
    Alpha(GraphInput),
    /// Evaluate the theorem hypotheses and classical conditions.
    Check {
        #[command(flatten)]
        input: GraphInput,
        /// Restrict to one condition.
        #[arg(long)]
        condition: Option<ConditionId>,
    },
    /// Exact Hamilton cycle / path / connectedness decision.
    Hamilton {
        #[command(flatten)]
        input: GraphInput,
        /// Find a spanning path between these endpoints, e.g. "0,3".
        #[arg(long)]
        between: Option<String>,
        /// Decide hamiltonian-connectedness.
        #[arg(long, conflicts_with = "between")]
        connected: bool,
    },
    /// Build a certificate constructively, with a replayable trace.
    Construct {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value = "cycle")]
        target: Target,
        /// Path endpoints, e.g. "0,3" (path target only).
        #[arg(long)]
        endpoints: Option<String>,
    },
    /// Apply one rewrite rule to a path or cycle.
    Rewrite {
        #[command(flatten)]
        input: GraphInput,
        /// Rule instance as JSON, e.g. '{"rule":"RtA","l":3}'.
        #[arg(long)]
        rule: String,
        /// Vertex sequence, e.g. "0,1,2,3".
        #[arg(long)]
        verts: String,
        /// Treat the sequence as a cycle.
        #[arg(long)]
        cycle: bool,
        /// Virtual-edge position of a path input.
        #[arg(long, conflicts_with = "cycle")]
        virtual_pos: Option<usize>,
    },
    /// Build a tightness-family instance and optionally verify its
    /// claimed properties.
    Extremal {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        parameter: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Run the full verification over a graph corpus.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        /// Also run the constructive drivers and structural-law checks.
        #[arg(long)]
        full: bool,
        /// Write per-graph JSON-lines records here ("-" for stdout).
        #[arg(long)]
        records: Option<PathBuf>,
        /// Worker threads (0 = one per CPU; FANHAM_WORKERS overrides).
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
    },
    /// Compare the new hypotheses against the classical conditions over
    /// a corpus (implication exceptions and strict containment counts).
    Compare {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
    },
}

fn read_graph(input: &GraphInput) -> Result<Graph> {
    let text = match &input.input {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path:?}"))?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            buf
        }
    };
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| anyhow!("empty input"))?;
    // Edge lists start with the numeric "n m" header; graph6 bytes are
    // all >= 63, so a leading digit distinguishes the formats.
    if first.starts_with(|c: char| c.is_ascii_digit()) {
        Ok(Graph::parse_edge_list(&text)?)
    } else {
        Ok(Graph::parse_graph6(first)?)
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s.split_once(',').ok_or_else(|| anyhow!("expected \"x,y\", got {s:?}"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn parse_verts(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|t| t.trim().parse::<usize>().map_err(Into::into)).collect()
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

/// Runs the CLI; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Alpha(input) => {
            let g = read_graph(&input)?;
            let r = alpha_tilde(&g);
            let valid = r.validate(&g);
            emit(&json!({
                "graph": g.to_graph6(),
                "n": g.n(),
                "alpha_tilde": r.value,
                "witness_s": r.witness_s,
                "witness_t": r.witness_t,
                "lower_bound_holes": r.lower_bound_holes,
                "certificates_valid": valid,
            }));
            Ok(if valid { 0 } else { 1 })
        }
        Command::Check { input, condition } => {
            let g = read_graph(&input)?;
            let alpha = alpha_tilde(&g).value;
            let ids: Vec<ConditionId> = match condition {
                Some(id) => vec![id],
                None => vec![
                    ConditionId::Dirac,
                    ConditionId::Ore,
                    ConditionId::FanClassic,
                    ConditionId::McdiarmidYolov,
                    ConditionId::ZhouEtAl,
                    ConditionId::LiLiuHam,
                    ConditionId::LiLiuHc,
                    ConditionId::FanTilde,
                ],
            };
            let reports: Vec<_> =
                ids.iter().map(|&id| prior_condition_with_alpha(&g, id, alpha)).collect();
            emit(&json!({
                "graph": g.to_graph6(),
                "alpha_tilde": alpha,
                "connectivity": g.connectivity_up_to(3),
                "ham_theorem_hypothesis": theorem_ham_hypothesis_with_alpha(&g, alpha),
                "hc_theorem_hypothesis": theorem_hc_hypothesis_with_alpha(&g, alpha),
                "high_degree_vertices": v_star_with_alpha(&g, alpha).members,
                "conditions": reports,
            }));
            Ok(0)
        }
        Command::Hamilton { input, between, connected } => {
            let g = read_graph(&input)?;
            if connected {
                let rep = is_hamiltonian_connected(&g);
                emit(&json!({
                    "graph": g.to_graph6(),
                    "hamiltonian_connected": rep.hamiltonian_connected,
                    "failing_pair": rep.failing_pair,
                }));
                return Ok(0);
            }
            if let Some(pair) = between {
                let (x, y) = parse_pair(&pair)?;
                let cert = hamilton_path_between(&g, x, y)?;
                emit(&json!({
                    "graph": g.to_graph6(),
                    "endpoints": [x, y],
                    "path": cert,
                }));
                return Ok(0);
            }
            let cert = hamilton_cycle(&g);
            emit(&json!({
                "graph": g.to_graph6(),
                "hamiltonian": cert.is_some(),
                "cycle": cert,
            }));
            Ok(0)
        }
        Command::Construct { input, target, endpoints } => {
            let g = read_graph(&input)?;
            let result = match target {
                Target::Cycle => {
                    if endpoints.is_some() {
                        bail!("--endpoints applies only to --target path");
                    }
                    construct_hamilton_cycle(&g)
                }
                Target::Path => {
                    let pair =
                        endpoints.ok_or_else(|| anyhow!("--target path needs --endpoints"))?;
                    let (x, y) = parse_pair(&pair)?;
                    construct_hamilton_path(&g, x, y)
                }
            };
            match result {
                Ok(res) => {
                    let replay_ok =
                        replay_trace(&g, &res.trace.steps).as_ref() == Ok(&res.certificate);
                    emit(&json!({
                        "graph": g.to_graph6(),
                        "certificate": res.certificate,
                        "trace": res.trace,
                        "replay_ok": replay_ok,
                    }));
                    Ok(if replay_ok { 0 } else { 1 })
                }
                Err(e) => {
                    emit(&json!({ "graph": g.to_graph6(), "error": e.to_string() }));
                    Ok(1)
                }
            }
        }
        Command::Rewrite { input, rule, verts, cycle, virtual_pos } => {
            let g = read_graph(&input)?;
            let rule: RewriteRule =
                serde_json::from_str(&rule).context("parsing --rule JSON")?;
            let verts = parse_verts(&verts)?;
            let state = if cycle {
                PathOrCycle::Cycle(verts)
            } else {
                PathOrCycle::Path(OrientedPath { verts, virtual_pos })
            };
            match apply_rewrite(&g, &state, &rule) {
                Ok(out) => {
                    emit(&json!({ "graph": g.to_graph6(), "input": state, "output": out }));
                    Ok(0)
                }
                Err(e) => {
                    emit(&json!({
                        "graph": g.to_graph6(),
                        "input": state,
                        "error": e.to_string(),
                    }));
                    Ok(1)
                }
            }
        }
        Command::Extremal { family, parameter, verify } => {
            let spec = FamilySpec { family, parameter };
            if verify {
                let v = verify_family_claims(spec)?;
                let pass = v.all_pass;
                emit(&serde_json::to_value(&v)?);
                Ok(if pass { 0 } else { 1 })
            } else {
                let g = build_family(spec)?;
                emit(&json!({
                    "family": family.to_string(),
                    "parameter": parameter,
                    "n": g.n(),
                    "graph6": g.to_graph6(),
                    "edges": g.edges(),
                }));
                Ok(0)
            }
        }
        Command::Verify { source, full, records, parallelism } => {
            let checks = if full { Checks::ALL } else { Checks::CONCLUSIONS };
            let config = RunConfig { source: source.to_source()?, checks, parallelism };
            let mut writer: Option<Box<dyn Write>> = match &records {
                Some(p) if p.as_os_str() == "-" => Some(Box::new(std::io::stdout().lock())),
                Some(p) => Some(Box::new(std::io::BufWriter::new(fs::File::create(p)?))),
                None => None,
            };
            let summary = verify_corpus(&config, |rec| {
                if let Some(w) = writer.as_mut() {
                    serde_json::to_writer(&mut *w, rec).expect("serializable record");
                    writeln!(w).expect("writable sink");
                }
            })?;
            drop(writer);
            let clean = summary.counterexamples == 0
                && summary.violation_count == 0
                && summary.implication_exception_count == 0;
            emit(&serde_json::to_value(&summary)?);
            Ok(if clean { 0 } else { 1 })
        }
        Command::Compare { source, parallelism } => {
            let checks =
                Checks { conclusions: false, constructors: false, laws: false, priors: true };
            let config = RunConfig { source: source.to_source()?, checks, parallelism };
            let summary = verify_corpus(&config, |_| {})?;
            emit(&json!({
                "graphs": summary.graphs,
                "implication_exceptions": summary.implication_exception_count,
                "strict_containments": summary.strict_containments,
            }));
            Ok(if summary.implication_exception_count == 0 { 0 } else { 1 })
        }
    }
}

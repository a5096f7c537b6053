//! Constructive drivers: build Hamilton cycles / paths by repeated rule
//! application, recording every step in a replayable trace. When the
//! rule search stalls, the exhaustive solver supplies the certificate and
//! the trace records the fallback.

use std::collections::HashSet;

use serde::Serialize;

use crate::conditions::{theorem_ham_hypothesis_with_alpha, theorem_hc_hypothesis_with_alpha, v_star_with_alpha};
use crate::graph::Graph;
use crate::hole::alpha_tilde;
use crate::solver::{hamilton_cycle, hamilton_path_between, longest_path_from, CertKind, HamCertificate};

use super::search::{
    find_closing_rule, find_splice_left_inner, find_splice_left_outer, find_splice_right_inner,
    find_splice_right_outer,
};
use super::split::{compute_neighbor_split_with, SplitMode};
use super::{apply_rewrite, OrientedPath, PathOrCycle, RewriteError, RewriteRule};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceStep {
    /// Solver-assisted starting path (possibly with a virtual edge).
    Seed { verts: Vec<usize>, virtual_pos: Option<usize> },
    /// Greedy endpoint extension by one adjacent vertex.
    Extend { front: bool, vertex: usize },
    Reverse,
    Rewrite { rule: RewriteRule },
    /// The current path's endpoints are adjacent; wrap into a cycle.
    CloseCycle,
    /// Rule search stalled; the exhaustive solver finished the job.
    Fallback { verts: Vec<usize>, kind: CertKind },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
    pub fallback: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionResult {
    pub certificate: HamCertificate,
    pub trace: ConstructionTrace,
}

/// Re-executes a trace step by step, validating each transition, and
/// returns the resulting certificate.
pub fn replay_trace(g: &Graph, steps: &[TraceStep]) -> Result<HamCertificate, RewriteError> {
    let mut state: Option<PathOrCycle> = None;
    for step in steps {
        match step {
            TraceStep::Seed { verts, virtual_pos } => {
                if state.is_some() {
                    return Err(RewriteError::InvalidTrace("seed after the first step"));
                }
                let p = match virtual_pos {
                    None => OrientedPath::new(g, verts.clone())?,
                    Some(k) => OrientedPath::with_virtual(g, verts.clone(), *k)?,
                };
                state = Some(PathOrCycle::Path(p));
            }
            TraceStep::Extend { front, vertex } => {
                let Some(PathOrCycle::Path(p)) = &mut state else {
                    return Err(RewriteError::InvalidTrace("extend needs a path state"));
                };
                if p.virtual_pos.is_some() {
                    return Err(RewriteError::InvalidTrace("extend on a virtual-edge path"));
                }
                let end = if *front { p.verts[0] } else { *p.verts.last().unwrap() };
                if *vertex >= g.n() || p.verts.contains(vertex) || !g.has_edge(end, *vertex) {
                    return Err(RewriteError::InvalidTrace("extend vertex not attachable"));
                }
                if *front {
                    p.verts.insert(0, *vertex);
                    p.virtual_pos = p.virtual_pos.map(|k| k + 1);
                } else {
                    p.verts.push(*vertex);
                }
            }
            TraceStep::Reverse => match &mut state {
                Some(PathOrCycle::Path(p)) => *p = p.reversed(),
                _ => return Err(RewriteError::InvalidTrace("reverse needs a path state")),
            },
            TraceStep::Rewrite { rule } => {
                let Some(cur) = &state else {
                    return Err(RewriteError::InvalidTrace("rewrite before seed"));
                };
                state = Some(apply_rewrite(g, cur, rule)?);
            }
            TraceStep::CloseCycle => {
                let Some(PathOrCycle::Path(p)) = &state else {
                    return Err(RewriteError::InvalidTrace("close needs a path state"));
                };
                if p.virtual_pos.is_some() || p.verts.len() < 3 {
                    return Err(RewriteError::InvalidTrace("close on unclosable path"));
                }
                if !g.has_edge(*p.verts.last().unwrap(), p.verts[0]) {
                    return Err(RewriteError::InvalidTrace("close without wrap edge"));
                }
                state = Some(PathOrCycle::Cycle(p.verts.clone()));
            }
            TraceStep::Fallback { verts, kind } => {
                let cert = HamCertificate { kind: *kind, verts: verts.clone() };
                if !cert.validate(g) {
                    return Err(RewriteError::InvalidTrace("fallback certificate invalid"));
                }
                state = Some(match kind {
                    CertKind::Cycle => PathOrCycle::Cycle(verts.clone()),
                    CertKind::Path => {
                        PathOrCycle::Path(OrientedPath { verts: verts.clone(), virtual_pos: None })
                    }
                });
            }
        }
    }
    match state {
        Some(PathOrCycle::Path(p)) => {
            if p.virtual_pos.is_some() {
                return Err(RewriteError::InvalidTrace("trace ends with a virtual edge"));
            }
            Ok(HamCertificate { kind: CertKind::Path, verts: p.verts })
        }
        Some(PathOrCycle::Cycle(c)) => Ok(HamCertificate { kind: CertKind::Cycle, verts: c }),
        None => Err(RewriteError::InvalidTrace("empty trace")),
    }
}

/// The virtual edge used by the path driver and the spanning-path
/// analyses: a nonadjacent pair inside V* maximizing the smaller degree,
/// smallest pair on ties.
pub(super) fn select_virtual_edge(g: &Graph, alpha: usize) -> Option<(usize, usize)> {
    let vs = v_star_with_alpha(g, alpha).members;
    let mut best: Option<(usize, (usize, usize))> = None;
    for u in vs.iter() {
        for v in vs.iter() {
            if v <= u || g.has_edge(u, v) {
                continue;
            }
            let key = g.degree(u).min(g.degree(v));
            let better = match best {
                None => true,
                Some((bk, bp)) => key > bk || (key == bk && (u, v) < bp),
            };
            if better {
                best = Some((key, (u, v)));
            }
        }
    }
    best.map(|(_, p)| p)
}

fn smallest_new_neighbor(g: &Graph, p: &OrientedPath, front: bool) -> Option<usize> {
    let end = if front { p.verts[0] } else { *p.verts.last().unwrap() };
    g.neighbors(end).iter().find(|v| !p.verts.contains(v))
}

fn ctl_witness(g: &Graph, cyc: &[usize]) -> Option<(usize, usize)> {
    for (i, &cv) in cyc.iter().enumerate() {
        if let Some(w) = g.neighbors(cv).iter().find(|w| !cyc.contains(w)) {
            return Some((i, w));
        }
    }
    None
}

fn as_path(out: PathOrCycle) -> Result<OrientedPath, RewriteError> {
    match out {
        PathOrCycle::Path(p) => Ok(p),
        PathOrCycle::Cycle(_) => Err(RewriteError::Internal("expected a path output")),
    }
}

fn as_cycle(out: PathOrCycle) -> Result<Vec<usize>, RewriteError> {
    match out {
        PathOrCycle::Cycle(c) => Ok(c),
        PathOrCycle::Path(_) => Err(RewriteError::Internal("expected a cycle output")),
    }
}

/// Builds a Hamilton cycle on a graph satisfying the hamiltonicity
/// hypothesis (order >= 3, 2-connected, Fan-type bound at α̃), mostly by
/// extension, rotation and cycle-closing rules.
pub fn construct_hamilton_cycle(g: &Graph) -> Result<ConstructionResult, RewriteError> {
    let alpha = alpha_tilde(g).value;
    if !theorem_ham_hypothesis_with_alpha(g, alpha) {
        return Err(RewriteError::HypothesisViolated(
            "needs order >= 3, 2-connectivity, and the degree bound at the bipartite independence number",
        ));
    }
    let n = g.n();
    let mut steps = Vec::new();
    let seed = longest_path_from(g, &[0]);
    steps.push(TraceStep::Seed { verts: seed.clone(), virtual_pos: None });
    let mut path = OrientedPath { verts: seed, virtual_pos: None };
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut budget = n * n + 16;

    loop {
        if budget == 0 {
            break;
        }
        budget -= 1;

        // Greedy endpoint extension.
        let mut grew = false;
        while let Some(v) = smallest_new_neighbor(g, &path, false) {
            path.verts.push(v);
            steps.push(TraceStep::Extend { front: false, vertex: v });
            grew = true;
        }
        while let Some(v) = smallest_new_neighbor(g, &path, true) {
            path.verts.insert(0, v);
            steps.push(TraceStep::Extend { front: true, vertex: v });
            grew = true;
        }
        if grew {
            seen.clear();
        }

        let m = path.m();
        let first = path.verts[0];
        let last = *path.verts.last().unwrap();

        // Directly closable?
        if m >= 3 && g.has_edge(last, first) {
            steps.push(TraceStep::CloseCycle);
            if m == n {
                let cert = HamCertificate { kind: CertKind::Cycle, verts: path.verts };
                return Ok(ConstructionResult {
                    certificate: cert,
                    trace: ConstructionTrace { steps, fallback: false },
                });
            }
            let cyc = path.verts.clone();
            let Some((i, w)) = ctl_witness(g, &cyc) else { break };
            let rule = RewriteRule::Ctl { i, w };
            let out = apply_rewrite(g, &PathOrCycle::Cycle(cyc), &rule)?;
            steps.push(TraceStep::Rewrite { rule });
            path = as_path(out)?;
            seen.clear();
            continue;
        }

        // Closable through a chord pattern?
        if let Some(rule) = find_closing_rule(g, &path) {
            let out = apply_rewrite(g, &PathOrCycle::Path(path.clone()), &rule)?;
            steps.push(TraceStep::Rewrite { rule });
            let cyc = as_cycle(out)?;
            if m == n {
                let cert = HamCertificate { kind: CertKind::Cycle, verts: cyc };
                return Ok(ConstructionResult {
                    certificate: cert,
                    trace: ConstructionTrace { steps, fallback: false },
                });
            }
            let Some((i, w)) = ctl_witness(g, &cyc) else { break };
            let rule = RewriteRule::Ctl { i, w };
            let out = apply_rewrite(g, &PathOrCycle::Cycle(cyc), &rule)?;
            steps.push(TraceStep::Rewrite { rule });
            path = as_path(out)?;
            seen.clear();
            continue;
        }

        // Rotate to expose a new endpoint. Prefer rotations whose result
        // can extend, then ones that close, then merely unseen endpoint
        // pairs.
        seen.insert((first, last));
        seen.insert((last, first));
        let mut chosen: Option<(bool, RewriteRule, OrientedPath, u8)> = None;
        for reversed in [false, true] {
            let q = if reversed { path.reversed() } else { path.clone() };
            let mut candidates: Vec<RewriteRule> = Vec::new();
            for l in 2..=m - 1 {
                if g.has_edge(q.verts[0], q.verts[l]) {
                    candidates.push(RewriteRule::RtA { l });
                }
            }
            for j in 1..m {
                for jp in j + 2..=m.saturating_sub(2) {
                    if g.has_edge(q.verts[j], q.verts[jp]) && g.has_edge(q.verts[0], q.verts[j + 1])
                    {
                        candidates.push(RewriteRule::RtB { j, jp });
                    }
                }
            }
            for rule in candidates {
                let Ok(out) = apply_rewrite(g, &PathOrCycle::Path(q.clone()), &rule) else {
                    continue;
                };
                let out = as_path(out)?;
                let endpoints = (out.verts[0], *out.verts.last().unwrap());
                let score = if smallest_new_neighbor(g, &out, true).is_some()
                    || smallest_new_neighbor(g, &out, false).is_some()
                {
                    3
                } else if m == out.m() && find_closing_rule(g, &out).is_some() {
                    2
                } else if !seen.contains(&endpoints) {
                    1
                } else {
                    0
                };
                if score > 0 && chosen.as_ref().map(|c| c.3 < score).unwrap_or(true) {
                    chosen = Some((reversed, rule, out, score));
                }
            }
            if matches!(chosen, Some((_, _, _, 3))) {
                break;
            }
        }
        let Some((reversed, rule, out, _)) = chosen else { break };
        if reversed {
            steps.push(TraceStep::Reverse);
        }
        steps.push(TraceStep::Rewrite { rule });
        path = out;
    }

    // Rule search stalled: let the exhaustive solver finish.
    let cert = hamilton_cycle(g)
        .ok_or(RewriteError::Internal("hypothesis-satisfying graph without a Hamilton cycle"))?;
    steps.push(TraceStep::Fallback { verts: cert.verts.clone(), kind: CertKind::Cycle });
    Ok(ConstructionResult { certificate: cert, trace: ConstructionTrace { steps, fallback: true } })
}

/// Builds a Hamilton (x, y)-path on a graph satisfying the
/// hamiltonian-connectedness hypothesis (3-connected, Fan-type bound at
/// α̃+1): solve with one well-chosen virtual edge added, then splice it
/// away with an HP rule.
pub fn construct_hamilton_path(
    g: &Graph,
    x: usize,
    y: usize,
) -> Result<ConstructionResult, RewriteError> {
    let n = g.n();
    if x >= n || y >= n {
        return Err(RewriteError::InvalidPath("endpoint out of range"));
    }
    if x == y {
        return Err(RewriteError::SameEndpoints(x));
    }
    let a = alpha_tilde(g);
    if !theorem_hc_hypothesis_with_alpha(g, a.value) {
        return Err(RewriteError::HypothesisViolated(
            "needs 3-connectivity and the degree bound one above the bipartite independence number",
        ));
    }
    let solve_in = |h: &Graph| -> Result<Option<HamCertificate>, RewriteError> {
        hamilton_path_between(h, x, y).map_err(|_| RewriteError::Internal("solver rejected endpoints"))
    };
    let direct = |verts: Vec<usize>| -> Result<ConstructionResult, RewriteError> {
        let steps = vec![TraceStep::Seed { verts: verts.clone(), virtual_pos: None }];
        Ok(ConstructionResult {
            certificate: HamCertificate { kind: CertKind::Path, verts },
            trace: ConstructionTrace { steps, fallback: false },
        })
    };

    let Some((u, v)) = select_virtual_edge(g, a.value) else {
        let cert = solve_in(g)?
            .ok_or(RewriteError::Internal("hypothesis-satisfying graph without a Hamilton path"))?;
        return direct(cert.verts);
    };
    let gp = g
        .with_edge(u, v)
        .map_err(|_| RewriteError::Internal("virtual edge rejected"))?;
    let mut steps = Vec::new();
    let mut spliced: Option<OrientedPath> = None;
    if let Some(cert) = solve_in(&gp)? {
        let kk = cert
            .verts
            .windows(2)
            .position(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u));
        let Some(kk) = kk else {
            // The path never uses the virtual edge; it is already valid.
            return direct(cert.verts);
        };
        steps.push(TraceStep::Seed { verts: cert.verts.clone(), virtual_pos: Some(kk) });
        let mut path = OrientedPath { verts: cert.verts, virtual_pos: Some(kk) };
        let (mut kk, m) = (kk, path.m());
        if g.degree(path.verts[kk]) > g.degree(path.verts[kk + 1]) {
            path = path.reversed();
            steps.push(TraceStep::Reverse);
            kk = m - 2 - kk;
        }
        debug_assert_eq!(path.virtual_pos, Some(kk));
        let split = match compute_neighbor_split_with(g, &path, SplitMode::VirtualNear, a.witness_s, a.witness_t)
        {
            Err(RewriteError::WrongCase { .. }) => {
                compute_neighbor_split_with(g, &path, SplitMode::VirtualFar, a.witness_s, a.witness_t)
            }
            r => r,
        };
        if let Ok(sp) = split {
            let rule = match sp.mode {
                SplitMode::VirtualNear => find_splice_left_outer(g, &path, &sp)
                    .or_else(|| find_splice_left_inner(g, &path, &sp)),
                SplitMode::VirtualFar => find_splice_right_inner(g, &path, &sp)
                    .or_else(|| find_splice_right_outer(g, &path, &sp)),
                SplitMode::Plain => None,
            };
            if let Some(rule) = rule {
                if let Ok(PathOrCycle::Path(out)) =
                    apply_rewrite(g, &PathOrCycle::Path(path.clone()), &rule)
                {
                    steps.push(TraceStep::Rewrite { rule });
                    spliced = Some(out);
                }
            }
        }
    }
    if let Some(mut out) = spliced {
        if out.verts[0] == y {
            out = out.reversed();
            steps.push(TraceStep::Reverse);
        }
        let cert = HamCertificate { kind: CertKind::Path, verts: out.verts };
        if cert.validate(g) && cert.endpoints() == (x, y) {
            return Ok(ConstructionResult {
                certificate: cert,
                trace: ConstructionTrace { steps, fallback: false },
            });
        }
        return Err(RewriteError::Internal("spliced path failed validation"));
    }
    // No usable splice: solve directly and record the fallback.
    let cert = solve_in(g)?
        .ok_or(RewriteError::Internal("hypothesis-satisfying graph without a Hamilton path"))?;
    steps.push(TraceStep::Fallback { verts: cert.verts.clone(), kind: CertKind::Path });
    Ok(ConstructionResult { certificate: cert, trace: ConstructionTrace { steps, fallback: true } })
}

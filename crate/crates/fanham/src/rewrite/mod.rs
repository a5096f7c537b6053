//! Path and cycle rewriting.
//!
//! Fourteen local transformation rules over oriented paths and cycles:
//! rotations (RT-A, RT-B) that move a path endpoint, cycle closers
//! (RC-0, RC-1, RC-2) that turn a path into a cycle through the same
//! vertices, a cycle-to-longer-path step (CTL) that absorbs an outside
//! vertex, and eight splicing rules (HP-1..HP-8) that repair a Hamilton
//! path which crosses one designated virtual edge, producing a path with
//! the same endpoints that avoids it.
//!
//! Every rule checks its preconditions by name and fully re-validates its
//! output, so an `Ok` result is a checked certificate transformation.

mod driver;
mod lemmas;
mod search;
mod split;
#[cfg(test)]
mod tests;

pub use driver::{
    construct_hamilton_cycle, construct_hamilton_path, replay_trace, ConstructionResult,
    ConstructionTrace, TraceStep,
};
pub use lemmas::{
    check_maximal_path_laws, check_virtual_edge_laws, EndSegmentReport, VirtualEdgeReport,
};
pub use search::{
    find_closing_rule, find_splice_left_inner, find_splice_left_outer, find_splice_right_inner,
    find_splice_right_outer,
};
pub use split::{compute_neighbor_split, compute_neighbor_split_with, NeighborSplit, SplitMode};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RewriteError {
    #[error("invalid path: {0}")]
    InvalidPath(&'static str),
    #[error("precondition of {rule} failed: {check}")]
    Precondition { rule: RuleId, check: &'static str },
    #[error("threshold {what} does not exist for this path")]
    ThresholdNotFound { what: &'static str },
    #[error("path is in the other case (expected {expected})")]
    WrongCase { expected: &'static str },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),
    #[error("endpoints must be distinct (got {0})")]
    SameEndpoints(usize),
    #[error("invalid trace: {0}")]
    InvalidTrace(&'static str),
    #[error("internal invariant broken: {0}")]
    Internal(&'static str),
}

/// A simple path with a fixed traversal direction. `virtual_pos = Some(k)`
/// marks the one allowed non-edge: between positions k and k+1. All other
/// consecutive pairs must be edges of the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientedPath {
    pub verts: Vec<usize>,
    pub virtual_pos: Option<usize>,
}

impl OrientedPath {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self, RewriteError> {
        let p = OrientedPath { verts, virtual_pos: None };
        p.check(g)?;
        Ok(p)
    }

    pub fn with_virtual(g: &Graph, verts: Vec<usize>, k: usize) -> Result<Self, RewriteError> {
        let p = OrientedPath { verts, virtual_pos: Some(k) };
        p.check(g)?;
        Ok(p)
    }

    pub fn m(&self) -> usize {
        self.verts.len()
    }

    pub fn reversed(&self) -> Self {
        let m = self.verts.len();
        OrientedPath {
            verts: self.verts.iter().rev().copied().collect(),
            virtual_pos: self.virtual_pos.map(|k| m - 2 - k),
        }
    }

    /// Full validity check against the graph.
    pub fn check(&self, g: &Graph) -> Result<(), RewriteError> {
        let m = self.verts.len();
        if m == 0 {
            return Err(RewriteError::InvalidPath("empty vertex list"));
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.verts {
            if v >= g.n() {
                return Err(RewriteError::InvalidPath("vertex out of range"));
            }
            if seen.contains(v) {
                return Err(RewriteError::InvalidPath("repeated vertex"));
            }
            seen.insert(v);
        }
        if let Some(k) = self.virtual_pos {
            if k + 2 > m {
                return Err(RewriteError::InvalidPath("virtual position out of range"));
            }
            if g.has_edge(self.verts[k], self.verts[k + 1]) {
                return Err(RewriteError::InvalidPath("virtual pair is a real edge"));
            }
        }
        for (i, w) in self.verts.windows(2).enumerate() {
            if Some(i) == self.virtual_pos {
                continue;
            }
            if !g.has_edge(w[0], w[1]) {
                return Err(RewriteError::InvalidPath("missing consecutive edge"));
            }
        }
        Ok(())
    }
}

/// Input/output of a rewrite step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PathOrCycle {
    Path(OrientedPath),
    /// Vertex sequence with an implicit wrap edge from last to first.
    Cycle(Vec<usize>),
}

impl PathOrCycle {
    pub fn check(&self, g: &Graph) -> Result<(), RewriteError> {
        match self {
            PathOrCycle::Path(p) => p.check(g),
            PathOrCycle::Cycle(c) => {
                if c.len() < 3 {
                    return Err(RewriteError::InvalidPath("cycle shorter than three"));
                }
                let p = OrientedPath { verts: c.clone(), virtual_pos: None };
                p.check(g)?;
                if !g.has_edge(c[c.len() - 1], c[0]) {
                    return Err(RewriteError::InvalidPath("missing wrap edge"));
                }
                Ok(())
            }
        }
    }

    pub fn len(&self) -> usize {
        match self {
            PathOrCycle::Path(p) => p.verts.len(),
            PathOrCycle::Cycle(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RuleId {
    RtA,
    RtB,
    Rc0,
    Rc1,
    Rc2,
    Ctl,
    Hp1,
    Hp2,
    Hp3,
    Hp4,
    Hp5,
    Hp6,
    Hp7,
    Hp8,
}

impl RuleId {
    pub const ALL: [RuleId; 14] = [
        RuleId::RtA,
        RuleId::RtB,
        RuleId::Rc0,
        RuleId::Rc1,
        RuleId::Rc2,
        RuleId::Ctl,
        RuleId::Hp1,
        RuleId::Hp2,
        RuleId::Hp3,
        RuleId::Hp4,
        RuleId::Hp5,
        RuleId::Hp6,
        RuleId::Hp7,
        RuleId::Hp8,
    ];
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleId::RtA => "RT-A",
            RuleId::RtB => "RT-B",
            RuleId::Rc0 => "RC-0",
            RuleId::Rc1 => "RC-1",
            RuleId::Rc2 => "RC-2",
            RuleId::Ctl => "CTL",
            RuleId::Hp1 => "HP-1",
            RuleId::Hp2 => "HP-2",
            RuleId::Hp3 => "HP-3",
            RuleId::Hp4 => "HP-4",
            RuleId::Hp5 => "HP-5",
            RuleId::Hp6 => "HP-6",
            RuleId::Hp7 => "HP-7",
            RuleId::Hp8 => "HP-8",
        };
        f.write_str(s)
    }
}

/// A rule instance: which rule, at which positions. All indices are
/// 0-based positions along the input path/cycle, except `Ctl::w` which is
/// a vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule")]
pub enum RewriteRule {
    /// Rotation at a chord from the first vertex: edge p[0]-p[l] reverses
    /// the prefix, making p[l-1] the new first endpoint.
    RtA { l: usize },
    /// Rotation at a chord pair: edges p[j]-p[jp] and p[0]-p[j+1] make
    /// p[jp-1] the new first endpoint.
    RtB { j: usize, jp: usize },
    /// Close a cycle through chords p[0]-p[i], p[j]-p[m-1] and the
    /// bridging edge p[i-1]-p[j+1].
    Rc0 { i: usize, j: usize },
    /// Close a cycle through chords p[j]-p[m-1] and p[0]-p[j+1].
    Rc1 { j: usize },
    /// Close a cycle through chords p[a]-p[m-1], p[b]-p[0] and the
    /// bridging edge p[a+1]-p[b+1].
    Rc2 { a: usize, b: usize },
    /// Open a cycle at position i and prepend the outside vertex w
    /// (adjacent to cyc[i]), yielding a strictly longer path.
    Ctl { i: usize, w: usize },
    /// Splice with both anchor positions left of the virtual edge.
    Hp1 { a: usize, b: usize },
    /// Splice with one anchor left, one right of the virtual edge.
    Hp2 { a: usize, c: usize },
    Hp3 { a: usize, b: usize },
    Hp4 { a: usize, c: usize },
    /// Splice with both anchor positions right of the virtual edge.
    Hp5 { b: usize, c: usize },
    Hp6 { a: usize, c: usize },
    Hp7 { a: usize, c: usize },
    Hp8 { b: usize, c: usize },
}

impl RewriteRule {
    pub fn id(&self) -> RuleId {
        match self {
            RewriteRule::RtA { .. } => RuleId::RtA,
            RewriteRule::RtB { .. } => RuleId::RtB,
            RewriteRule::Rc0 { .. } => RuleId::Rc0,
            RewriteRule::Rc1 { .. } => RuleId::Rc1,
            RewriteRule::Rc2 { .. } => RuleId::Rc2,
            RewriteRule::Ctl { .. } => RuleId::Ctl,
            RewriteRule::Hp1 { .. } => RuleId::Hp1,
            RewriteRule::Hp2 { .. } => RuleId::Hp2,
            RewriteRule::Hp3 { .. } => RuleId::Hp3,
            RewriteRule::Hp4 { .. } => RuleId::Hp4,
            RewriteRule::Hp5 { .. } => RuleId::Hp5,
            RewriteRule::Hp6 { .. } => RuleId::Hp6,
            RewriteRule::Hp7 { .. } => RuleId::Hp7,
            RewriteRule::Hp8 { .. } => RuleId::Hp8,
        }
    }
}

fn require(cond: bool, rule: RuleId, check: &'static str) -> Result<(), RewriteError> {
    if cond {
        Ok(())
    } else {
        Err(RewriteError::Precondition { rule, check })
    }
}

fn fwd(p: &[usize], lo: usize, hi: usize) -> Vec<usize> {
    p[lo..=hi].to_vec()
}

fn rev(p: &[usize], hi: usize, lo: usize) -> Vec<usize> {
    p[lo..=hi].iter().rev().copied().collect()
}

/// Applies one rule instance. Checks the input, every named
/// precondition, and the output; `Ok` therefore carries a fully valid
/// path or cycle on exactly the expected vertex set.
pub fn apply_rewrite(
    g: &Graph,
    input: &PathOrCycle,
    rule: &RewriteRule,
) -> Result<PathOrCycle, RewriteError> {
    input.check(g)?;
    let id = rule.id();
    let out = match *rule {
        RewriteRule::RtA { l } => {
            let p = plain_path(input, id)?;
            let m = p.len();
            require(l >= 2 && l <= m - 1, id, "2 <= l <= m-1")?;
            require(g.has_edge(p[0], p[l]), id, "edge p[0]-p[l]")?;
            let mut v = rev(p, l - 1, 0);
            v.extend(fwd(p, l, m - 1));
            PathOrCycle::Path(OrientedPath { verts: v, virtual_pos: None })
        }
        RewriteRule::RtB { j, jp } => {
            let p = plain_path(input, id)?;
            let m = p.len();
            require(j >= 1 && j + 2 <= jp && jp <= m - 2, id, "1 <= j, j+2 <= jp <= m-2")?;
            require(g.has_edge(p[j], p[jp]), id, "edge p[j]-p[jp]")?;
            require(g.has_edge(p[0], p[j + 1]), id, "edge p[0]-p[j+1]")?;
            let mut v = rev(p, jp - 1, j + 1);
            v.extend(fwd(p, 0, j));
            v.extend(fwd(p, jp, m - 1));
            PathOrCycle::Path(OrientedPath { verts: v, virtual_pos: None })
        }
        RewriteRule::Rc0 { i, j } => {
            let p = plain_path(input, id)?;
            let m = p.len();
            require(i >= 1 && i <= j && j <= m - 2, id, "1 <= i <= j <= m-2")?;
            require(g.has_edge(p[0], p[i]), id, "edge p[0]-p[i]")?;
            require(g.has_edge(p[j], p[m - 1]), id, "edge p[j]-p[m-1]")?;
            require(g.has_edge(p[i - 1], p[j + 1]), id, "edge p[i-1]-p[j+1]")?;
            let mut v = fwd(p, i, j);
            v.extend(rev(p, m - 1, j + 1));
            v.extend(rev(p, i - 1, 0));
            PathOrCycle::Cycle(v)
        }
        RewriteRule::Rc1 { j } => {
            let p = plain_path(input, id)?;
            let m = p.len();
            require(j >= 1 && j <= m - 2, id, "1 <= j <= m-2")?;
            require(g.has_edge(p[j], p[m - 1]), id, "edge p[j]-p[m-1]")?;
            require(g.has_edge(p[0], p[j + 1]), id, "edge p[0]-p[j+1]")?;
            let mut v = fwd(p, 0, j);
            v.extend(rev(p, m - 1, j + 1));
            PathOrCycle::Cycle(v)
        }
        RewriteRule::Rc2 { a, b } => {
            let p = plain_path(input, id)?;
            let m = p.len();
            require(a >= 1 && a < b && b <= m - 2, id, "1 <= a < b <= m-2")?;
            require(g.has_edge(p[a], p[m - 1]), id, "edge p[a]-p[m-1]")?;
            require(g.has_edge(p[b], p[0]), id, "edge p[b]-p[0]")?;
            require(g.has_edge(p[a + 1], p[b + 1]), id, "edge p[a+1]-p[b+1]")?;
            let mut v = fwd(p, 0, a);
            v.extend(rev(p, m - 1, b + 1));
            v.extend(fwd(p, a + 1, b));
            PathOrCycle::Cycle(v)
        }
        RewriteRule::Ctl { i, w } => {
            let c = match input {
                PathOrCycle::Cycle(c) => c,
                PathOrCycle::Path(_) => {
                    return Err(RewriteError::Precondition { rule: id, check: "input is a cycle" })
                }
            };
            let m = c.len();
            require(i < m, id, "i < cycle length")?;
            require(w < g.n() && !c.contains(&w), id, "w outside the cycle")?;
            require(g.has_edge(w, c[i]), id, "edge w-cyc[i]")?;
            let mut v = Vec::with_capacity(m + 1);
            v.push(w);
            for off in 0..m {
                v.push(c[(i + off) % m]);
            }
            PathOrCycle::Path(OrientedPath { verts: v, virtual_pos: None })
        }
        RewriteRule::Hp1 { a, b } => {
            let (p, k) = virtual_path(input, id)?;
            let m = p.len();
            require(k >= 1 && a < b && b <= k - 1, id, "0 <= a < b <= k-1")?;
            require(g.has_edge(p[a], p[k]), id, "edge p[a]-p[k]")?;
            require(g.has_edge(p[a + 1], p[b + 1]), id, "edge p[a+1]-p[b+1]")?;
            require(g.has_edge(p[b], p[k + 1]), id, "edge p[b]-p[k+1]")?;
            let mut v = fwd(p, 0, a);
            v.extend(rev(p, k, b + 1));
            v.extend(fwd(p, a + 1, b));
            v.extend(fwd(p, k + 1, m - 1));
            PathOrCycle::Path(OrientedPath { verts: v, virtual_pos: None })
        }
        RewriteRule::Hp2 { a, c } | RewriteRule::Hp7 { a, c } => {
            let (p, k) = virtual_path(input, id)?;
            let m = p.len();
            require(k >= 1 && a <= k - 1, id, "0 <= a <= k-1")?;
            require(c >= k + 2 && c <= m - 1, id, "k+2 <= c <= m-1")?;
            require(g.has_edge(p[a], p[k]), id, "edge p[a]-p[k]")?;
            require(g.has_edge(p[a + 1], p[c - 1]), id, "edge p[a+1]-p[c-1]")?;
            require(g.has_edge(p[k + 1], p[c]), id, "edge p[k+1]-p[c]")?;
            let mut v = fwd(p, 0, a);
            v.extend(rev(p, k, a + 1));
            v.extend(rev(p, c - 1, k + 1));
            v.extend(fwd(p, c, m - 1));
            PathOrCycle::Path(OrientedPath { verts: v, virtual_pos: None })
        }
        RewriteRule::Hp3 { a, b } => {
            let (p, k) = virtual_path(input, id)?;
            let m = p.len();
            require(k >= 1 && a >= 1 && a <= b && b <= k - 1, id, "1 <= a <= b <= k-1")?;
            require(g.has_edge(p[a - 1], p[b + 1]), id, "edge p[a-1]-p[b+1]")?;
            require(g.has_edge(p[k], p[b]), id, "edge p[k]-p[b]")?;
            require(g.has_edge(p[a], p[k + 1]), id, "edge p[a]-p[k+1]")?;
            let mut v = fwd(p, 0, a - 1);
            v.extend(fwd(p, b + 1, k));
            v.extend(rev(p, b, a));
            v.extend(fwd(p, k + 1, m - 1));
            PathOrCycle::Path(OrientedPath { verts: v, virtual_pos: None })
        }
        RewriteRule::Hp4 { a, c } => {
            let (p, k) = virtual_path(input, id)?;
            let m = p.len();
            require(k >= 1 && a >= 1 && a <= k - 1, id, "1 <= a <= k-1")?;
            require(c >= k + 2 && c <= m - 1, id, "k+2 <= c <= m-1")?;
            require(g.has_edge(p[a - 1], p[c - 1]), id, "edge p[a-1]-p[c-1]")?;
            require(g.has_edge(p[k + 1], p[a]), id, "edge p[k+1]-p[a]")?;
            require(g.has_edge(p[k], p[c]), id, "edge p[k]-p[c]")?;
            let mut v = fwd(p, 0, a - 1);
            v.extend(rev(p, c - 1, k + 1));
            v.extend(fwd(p, a, k));
            v.extend(fwd(p, c, m - 1));
            PathOrCycle::Path(OrientedPath { verts: v, virtual_pos: None })
        }
        RewriteRule::Hp5 { b, c } => {
            let (p, k) = virtual_path(input, id)?;
            let m = p.len();
            require(b >= k + 2 && b < c && c <= m - 2, id, "k+2 <= b < c <= m-2")?;
            require(g.has_edge(p[k], p[c]), id, "edge p[k]-p[c]")?;
            require(g.has_edge(p[b], p[k + 1]), id, "edge p[b]-p[k+1]")?;
            require(g.has_edge(p[b - 1], p[c + 1]), id, "edge p[b-1]-p[c+1]")?;
            let mut v = fwd(p, 0, k);
            v.extend(rev(p, c, b));
            v.extend(fwd(p, k + 1, b - 1));
            v.extend(fwd(p, c + 1, m - 1));
            PathOrCycle::Path(OrientedPath { verts: v, virtual_pos: None })
        }
        RewriteRule::Hp6 { a, c } => {
            let (p, k) = virtual_path(input, id)?;
            let m = p.len();
            require(k >= 1 && a <= k - 1, id, "0 <= a <= k-1")?;
            require(c >= k + 2 && c <= m - 2, id, "k+2 <= c <= m-2")?;
            require(g.has_edge(p[a], p[k + 1]), id, "edge p[a]-p[k+1]")?;
            require(g.has_edge(p[c], p[k]), id, "edge p[c]-p[k]")?;
            require(g.has_edge(p[a + 1], p[c + 1]), id, "edge p[a+1]-p[c+1]")?;
            let mut v = fwd(p, 0, a);
            v.extend(fwd(p, k + 1, c));
            v.extend(rev(p, k, a + 1));
            v.extend(fwd(p, c + 1, m - 1));
            PathOrCycle::Path(OrientedPath { verts: v, virtual_pos: None })
        }
        RewriteRule::Hp8 { b, c } => {
            let (p, k) = virtual_path(input, id)?;
            let m = p.len();
            require(b >= k + 2 && b < c && c <= m - 1, id, "k+2 <= b < c <= m-1")?;
            require(g.has_edge(p[k], p[b]), id, "edge p[k]-p[b]")?;
            require(g.has_edge(p[c - 1], p[b - 1]), id, "edge p[c-1]-p[b-1]")?;
            require(g.has_edge(p[k + 1], p[c]), id, "edge p[k+1]-p[c]")?;
            let mut v = fwd(p, 0, k);
            v.extend(fwd(p, b, c - 1));
            v.extend(rev(p, b - 1, k + 1));
            v.extend(fwd(p, c, m - 1));
            PathOrCycle::Path(OrientedPath { verts: v, virtual_pos: None })
        }
    };
    check_output(g, input, &out)?;
    Ok(out)
}

fn plain_path<'a>(input: &'a PathOrCycle, id: RuleId) -> Result<&'a [usize], RewriteError> {
    match input {
        PathOrCycle::Path(p) if p.virtual_pos.is_none() => Ok(&p.verts),
        PathOrCycle::Path(_) => {
            Err(RewriteError::Precondition { rule: id, check: "input has no virtual edge" })
        }
        PathOrCycle::Cycle(_) => {
            Err(RewriteError::Precondition { rule: id, check: "input is a path" })
        }
    }
}

fn virtual_path<'a>(input: &'a PathOrCycle, id: RuleId) -> Result<(&'a [usize], usize), RewriteError> {
    match input {
        PathOrCycle::Path(p) => match p.virtual_pos {
            Some(k) => Ok((&p.verts, k)),
            None => Err(RewriteError::Precondition { rule: id, check: "input has a virtual edge" }),
        },
        PathOrCycle::Cycle(_) => {
            Err(RewriteError::Precondition { rule: id, check: "input is a path" })
        }
    }
}

fn check_output(g: &Graph, input: &PathOrCycle, out: &PathOrCycle) -> Result<(), RewriteError> {
    out.check(g).map_err(|_| RewriteError::Internal("rewrite output fails validation"))?;
    let collect = |x: &PathOrCycle| -> VertexSet {
        match x {
            PathOrCycle::Path(p) => VertexSet::from_iter(p.verts.iter().copied()),
            PathOrCycle::Cycle(c) => VertexSet::from_iter(c.iter().copied()),
        }
    };
    let in_set = collect(input);
    let out_set = collect(out);
    let ok = match (input, out) {
        // CTL adds exactly the absorbed vertex.
        (PathOrCycle::Cycle(_), PathOrCycle::Path(_)) => {
            out.len() == input.len() + 1 && in_set.is_subset_of(out_set)
        }
        _ => in_set == out_set,
    };
    if ok {
        Ok(())
    } else {
        Err(RewriteError::Internal("rewrite output on wrong vertex set"))
    }
}

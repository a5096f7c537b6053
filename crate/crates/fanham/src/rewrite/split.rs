//! Neighbor splits: partitions of the neighbor positions of designated
//! path vertices, cut at occurrence thresholds of an (s, t) witness pair.
//!
//! All sets hold *positions along the path*, not vertex labels. The
//! splice-rule searches and the executable lemma checks both consume
//! these sets, and `validate` recomputes everything from scratch so a
//! split can serve as a checked certificate.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::hole::alpha_tilde;

use super::{OrientedPath, RewriteError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitMode {
    /// Plain path (no virtual edge): split the neighbors of both
    /// endpoints at the position of the s-th neighbor of the first
    /// vertex.
    Plain,
    /// Path with a virtual edge at k whose s-th neighbor threshold of
    /// p[k] falls strictly left of k.
    VirtualNear,
    /// Same, with the threshold falling strictly right of k+1.
    VirtualFar,
}

/// Positions are indices into the path. `k` is the cut position: the
/// s-th-neighbor threshold for `Plain`, the virtual-edge position
/// otherwise. `r` is the s-th neighbor position of p[k] (virtual modes),
/// `r_prime` the (s+1)-from-the-end threshold of p[k], and `r_second`
/// the s-from-the-end threshold of p[k+1] when it exists past r_prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborSplit {
    pub mode: SplitMode,
    pub s: usize,
    pub t: usize,
    pub k: usize,
    pub r: Option<usize>,
    pub r_prime: Option<usize>,
    pub r_second: Option<usize>,
    pub s1: VertexSet,
    pub s2: Option<VertexSet>,
    pub s3: Option<VertexSet>,
    pub s4: Option<VertexSet>,
    pub t1: Option<VertexSet>,
    pub t2: Option<VertexSet>,
    pub t3: Option<VertexSet>,
    pub t4: Option<VertexSet>,
    pub u2: Option<VertexSet>,
    pub u3: Option<VertexSet>,
    pub u4: Option<VertexSet>,
    pub r1: Option<VertexSet>,
    pub r3: Option<VertexSet>,
    pub r4: Option<VertexSet>,
}

impl NeighborSplit {
    /// Recomputes the split from the graph and path and compares.
    pub fn validate(&self, g: &Graph, p: &OrientedPath) -> bool {
        matches!(
            compute_neighbor_split_with(g, p, self.mode, self.s, self.t),
            Ok(ref other) if other == self
        )
    }
}

/// Positions i in [lo, hi] (clamped to the path) with p[i] adjacent to
/// `center`.
fn adj_positions(g: &Graph, p: &[usize], center: usize, lo: isize, hi: isize) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    if hi < 0 || hi < lo {
        return out;
    }
    let lo = lo.max(0) as usize;
    let hi = (hi as usize).min(p.len() - 1);
    for (i, &v) in p.iter().enumerate().take(hi + 1).skip(lo) {
        if g.has_edge(center, v) {
            out.insert(i);
        }
    }
    out
}

fn empty_split(mode: SplitMode, s: usize, t: usize, k: usize) -> NeighborSplit {
    NeighborSplit {
        mode,
        s,
        t,
        k,
        r: None,
        r_prime: None,
        r_second: None,
        s1: VertexSet::EMPTY,
        s2: None,
        s3: None,
        s4: None,
        t1: None,
        t2: None,
        t3: None,
        t4: None,
        u2: None,
        u3: None,
        u4: None,
        r1: None,
        r3: None,
        r4: None,
    }
}

/// Computes the split using the (s, t) witness of α̃(G).
pub fn compute_neighbor_split(
    g: &Graph,
    p: &OrientedPath,
    mode: SplitMode,
) -> Result<NeighborSplit, RewriteError> {
    let a = alpha_tilde(g);
    compute_neighbor_split_with(g, p, mode, a.witness_s, a.witness_t)
}

/// Computes the split for an explicit (s, t) pair (callers with a cached
/// α̃ witness use this directly).
pub fn compute_neighbor_split_with(
    g: &Graph,
    p: &OrientedPath,
    mode: SplitMode,
    s: usize,
    t: usize,
) -> Result<NeighborSplit, RewriteError> {
    p.check(g)?;
    assert!(s >= 1 && t >= 1, "witness components must be positive");
    match mode {
        SplitMode::Plain => plain_split(g, p, s, t),
        SplitMode::VirtualNear | SplitMode::VirtualFar => virtual_split(g, p, mode, s, t),
    }
}

fn plain_split(
    g: &Graph,
    p: &OrientedPath,
    s: usize,
    t: usize,
) -> Result<NeighborSplit, RewriteError> {
    if p.virtual_pos.is_some() {
        return Err(RewriteError::InvalidPath("plain split needs no virtual edge"));
    }
    let verts = &p.verts;
    let m = verts.len();
    let first = verts[0];
    let last = verts[m - 1];
    // k = position of the s-th neighbor of the first vertex among the
    // interior positions 1..=m-2.
    let mut count = 0usize;
    let mut k = None;
    for (i, &v) in verts.iter().enumerate().take(m.saturating_sub(1)).skip(1) {
        if g.has_edge(first, v) {
            count += 1;
            if count == s {
                k = Some(i);
                break;
            }
        }
    }
    let k = k.ok_or(RewriteError::ThresholdNotFound { what: "k" })?;
    let mut out = empty_split(SplitMode::Plain, s, t, k);
    out.s1 = adj_positions(g, verts, first, 1, k as isize);
    out.s2 = Some(adj_positions(g, verts, first, k as isize + 1, m as isize - 2));
    out.t1 = Some(adj_positions(g, verts, last, k as isize, m as isize - 2));
    out.t2 = Some(adj_positions(g, verts, last, 1, k as isize - 1));
    Ok(out)
}

fn virtual_split(
    g: &Graph,
    p: &OrientedPath,
    mode: SplitMode,
    s: usize,
    t: usize,
) -> Result<NeighborSplit, RewriteError> {
    let kk = p
        .virtual_pos
        .ok_or(RewriteError::InvalidPath("virtual split needs a virtual edge"))?;
    let verts = &p.verts;
    let m = verts.len();
    let v = verts[kk];
    let w = verts[kk + 1];
    let npos: Vec<usize> = (0..m).filter(|&i| g.has_edge(v, verts[i])).collect();
    if npos.len() < s {
        return Err(RewriteError::ThresholdNotFound { what: "r" });
    }
    let r0 = npos[s - 1];
    let near = r0 < kk;
    debug_assert!(near || r0 >= kk + 2);
    match (mode, near) {
        (SplitMode::VirtualNear, false) => {
            return Err(RewriteError::WrongCase { expected: "virtual-near" })
        }
        (SplitMode::VirtualFar, true) => {
            return Err(RewriteError::WrongCase { expected: "virtual-far" })
        }
        _ => {}
    }
    let mut out = empty_split(mode, s, t, kk);
    out.r = Some(r0);
    out.s1 = adj_positions(g, verts, v, 0, r0 as isize);
    let (kk, r0, m) = (kk as isize, r0 as isize, m as isize);
    if near {
        out.t1 = Some(adj_positions(g, verts, w, r0 + 1, kk - 1));
        out.r1 = Some(adj_positions(g, verts, w, kk + 2, m - 1));
        out.s2 = Some(adj_positions(g, verts, v, r0 + 1, kk - 1));
        out.u2 = Some(adj_positions(g, verts, v, kk + 2, m - 1));
        out.t2 = Some(adj_positions(g, verts, w, 1, r0));
    } else {
        out.s3 = Some(adj_positions(g, verts, v, r0, m - 1));
        if npos.len() < s + 1 {
            return Err(RewriteError::ThresholdNotFound { what: "r'" });
        }
        let r1 = npos[npos.len() - (s + 1)];
        if (r1 as isize) < r0 {
            return Err(RewriteError::ThresholdNotFound { what: "r'" });
        }
        out.r_prime = Some(r1);
        let r1i = r1 as isize;
        out.u3 = Some(adj_positions(g, verts, v, r1i, m - 2));
        out.t3 = Some(adj_positions(g, verts, w, kk + 2, r1i - 1));
        out.r3 = Some(adj_positions(g, verts, w, 0, kk - 1));
        out.t4 = Some(adj_positions(g, verts, w, r1i, m - 1));
        let mpos: Vec<usize> = (0..m as usize).filter(|&i| g.has_edge(w, verts[i])).collect();
        let r2 = if mpos.len() >= s {
            let cand = mpos[mpos.len() - s];
            if cand >= r1 {
                Some(cand)
            } else {
                None
            }
        } else {
            None
        };
        out.r_second = r2;
        if let Some(r2) = r2 {
            out.r4 = Some(adj_positions(g, verts, w, r2 as isize, m - 1));
        }
        out.s4 = Some(adj_positions(g, verts, v, 0, kk - 1));
        out.u4 = Some(adj_positions(g, verts, v, kk + 2, r1i));
    }
    Ok(out)
}

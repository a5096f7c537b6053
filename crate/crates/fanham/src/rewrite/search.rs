//! Witness search: find an applicable rule instance, if one exists, in a
//! fixed deterministic order (rule id first, then lexicographic indices).

use crate::graph::Graph;

use super::split::{NeighborSplit, SplitMode};
use super::{OrientedPath, RewriteRule};

/// First cycle-closing rule (RC-0, then RC-1, then RC-2) applicable to a
/// plain path, in lexicographic index order.
pub fn find_closing_rule(g: &Graph, p: &OrientedPath) -> Option<RewriteRule> {
    if p.virtual_pos.is_some() {
        return None;
    }
    let v = &p.verts;
    let m = v.len();
    if m < 3 {
        return None;
    }
    let first = v[0];
    let last = v[m - 1];
    for i in 1..=m - 2 {
        if !g.has_edge(first, v[i]) {
            continue;
        }
        for j in i..=m - 2 {
            if g.has_edge(v[j], last) && g.has_edge(v[i - 1], v[j + 1]) {
                return Some(RewriteRule::Rc0 { i, j });
            }
        }
    }
    for j in 1..=m - 2 {
        if g.has_edge(v[j], last) && g.has_edge(first, v[j + 1]) {
            return Some(RewriteRule::Rc1 { j });
        }
    }
    for a in 1..=m - 2 {
        if !g.has_edge(v[a], last) {
            continue;
        }
        for b in a + 1..=m - 2 {
            if g.has_edge(v[b], first) && g.has_edge(v[a + 1], v[b + 1]) {
                return Some(RewriteRule::Rc2 { a, b });
            }
        }
    }
    None
}

/// HP-1/HP-2 witness: anchors in s1 paired against t1 (HP-1) or r1
/// (HP-2). Near-threshold splits only.
pub fn find_splice_left_outer(
    g: &Graph,
    p: &OrientedPath,
    sp: &NeighborSplit,
) -> Option<RewriteRule> {
    if sp.mode != SplitMode::VirtualNear {
        return None;
    }
    let v = &p.verts;
    for a in sp.s1.iter() {
        for b in sp.t1?.iter() {
            if g.has_edge(v[a + 1], v[b + 1]) {
                return Some(RewriteRule::Hp1 { a, b });
            }
        }
    }
    for a in sp.s1.iter() {
        for c in sp.r1?.iter() {
            if g.has_edge(v[a + 1], v[c - 1]) {
                return Some(RewriteRule::Hp2 { a, c });
            }
        }
    }
    None
}

/// HP-3/HP-4 witness: anchors in t2 paired against s2 (HP-3) or u2
/// (HP-4). Near-threshold splits only.
pub fn find_splice_left_inner(
    g: &Graph,
    p: &OrientedPath,
    sp: &NeighborSplit,
) -> Option<RewriteRule> {
    if sp.mode != SplitMode::VirtualNear {
        return None;
    }
    let v = &p.verts;
    for a in sp.t2?.iter() {
        for b in sp.s2?.iter() {
            if g.has_edge(v[a - 1], v[b + 1]) {
                return Some(RewriteRule::Hp3 { a, b });
            }
        }
    }
    for a in sp.t2?.iter() {
        for c in sp.u2?.iter() {
            if g.has_edge(v[a - 1], v[c - 1]) {
                return Some(RewriteRule::Hp4 { a, c });
            }
        }
    }
    None
}

/// HP-5/HP-6 witness: anchors in u3 paired against t3 (HP-5) or r3
/// (HP-6). Far-threshold splits only.
pub fn find_splice_right_inner(
    g: &Graph,
    p: &OrientedPath,
    sp: &NeighborSplit,
) -> Option<RewriteRule> {
    if sp.mode != SplitMode::VirtualFar {
        return None;
    }
    let v = &p.verts;
    for b in sp.t3?.iter() {
        for c in sp.u3?.iter() {
            if g.has_edge(v[b - 1], v[c + 1]) {
                return Some(RewriteRule::Hp5 { b, c });
            }
        }
    }
    for a in sp.r3?.iter() {
        for c in sp.u3?.iter() {
            if g.has_edge(v[a + 1], v[c + 1]) {
                return Some(RewriteRule::Hp6 { a, c });
            }
        }
    }
    None
}

/// HP-7/HP-8 witness: anchors in r4 paired against s4 (HP-7) or u4
/// (HP-8). Far-threshold splits with the second back-threshold only.
pub fn find_splice_right_outer(
    g: &Graph,
    p: &OrientedPath,
    sp: &NeighborSplit,
) -> Option<RewriteRule> {
    if sp.mode != SplitMode::VirtualFar || sp.r_second.is_none() {
        return None;
    }
    let v = &p.verts;
    for a in sp.s4?.iter() {
        for c in sp.r4?.iter() {
            if g.has_edge(v[a + 1], v[c - 1]) {
                return Some(RewriteRule::Hp7 { a, c });
            }
        }
    }
    for b in sp.u4?.iter() {
        for c in sp.r4?.iter() {
            if b < c && g.has_edge(v[c - 1], v[b - 1]) {
                return Some(RewriteRule::Hp8 { b, c });
            }
        }
    }
    None
}

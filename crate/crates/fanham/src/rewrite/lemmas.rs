//! Executable forms of the structural laws behind the rewrite rules.
//!
//! Each checker sets up the exact context a law speaks about (a maximal
//! path, or a spanning path crossing a chosen virtual edge), evaluates
//! the stated set identities and bounds, and fires every rule whose
//! preconditions a crossing edge would satisfy — a law violation or a
//! failed rule application is reported as a violation string.

use serde::Serialize;

use crate::graph::Graph;
use crate::hole::alpha_tilde;
use crate::solver::{hamilton_path_between, has_cycle_of_length, longest_path_from};

use super::driver::select_virtual_edge;
use super::search::{
    find_splice_left_inner, find_splice_left_outer, find_splice_right_inner,
    find_splice_right_outer,
};
use super::split::{compute_neighbor_split_with, NeighborSplit, SplitMode};
use super::{apply_rewrite, OrientedPath, PathOrCycle, RewriteError, RewriteRule};

/// Outcome of the maximal-path analysis on one graph.
#[derive(Debug, Clone, Serialize)]
pub struct EndSegmentReport {
    /// The laws' context held: path of length >= 3, no cycle through all
    /// its vertices, first-endpoint degree at least α̃.
    pub context: bool,
    pub path_len: usize,
    pub rules_fired: usize,
    pub violations: Vec<String>,
}

/// Laws of the maximal-path endpoint analysis: take a maximal path,
/// orient it with the smaller-degree endpoint first, split both
/// endpoints' neighbors at the s-th-neighbor threshold, then check the
/// crossing-edge emptiness laws and the set-size identities, and fire a
/// cycle-closing rule for every crossing edge present.
pub fn check_maximal_path_laws(g: &Graph) -> EndSegmentReport {
    let a = alpha_tilde(g);
    let mut p = longest_path_from(g, &[0]);
    let m = p.len();
    if g.degree(p[0]) > g.degree(p[m - 1]) {
        p.reverse();
    }
    let mut report = EndSegmentReport {
        context: false,
        path_len: m,
        rules_fired: 0,
        violations: Vec::new(),
    };
    let path = OrientedPath { verts: p, virtual_pos: None };
    let split = match compute_neighbor_split_with(g, &path, SplitMode::Plain, a.witness_s, a.witness_t)
    {
        Ok(sp) => sp,
        Err(_) => return report,
    };
    let p = &path.verts;
    let (s, t) = (split.s, split.t);
    let s1 = split.s1;
    let s2 = split.s2.unwrap();
    let t1 = split.t1.unwrap();
    let t2 = split.t2.unwrap();
    report.context = m >= 3 && !has_cycle_of_length(g, m);

    let fire = |rule: RewriteRule, report: &mut EndSegmentReport| {
        match apply_rewrite(g, &PathOrCycle::Path(path.clone()), &rule) {
            Ok(PathOrCycle::Cycle(c)) if c.len() == m => report.rules_fired += 1,
            _ => report.violations.push(format!("{} failed to close an {m}-cycle", rule.id())),
        }
    };

    // Crossing edges from the first-endpoint split against the far part
    // of the last-endpoint split: each one closes a cycle through all
    // path vertices, so under the context none may exist.
    for i in s1.iter() {
        for j in t1.iter() {
            if g.has_edge(p[i - 1], p[j + 1]) {
                if report.context {
                    report.violations.push(format!("crossing edge between shifted s1/t1 at ({i},{j})"));
                }
                fire(RewriteRule::Rc0 { i, j }, &mut report);
            }
        }
    }
    for j in t2.iter() {
        if g.has_edge(p[0], p[j + 1]) {
            if report.context {
                report.violations.push(format!("first endpoint adjacent past t2 at {j}"));
            }
            fire(RewriteRule::Rc1 { j }, &mut report);
        }
    }
    for jp in s2.iter() {
        for jj in t2.iter() {
            if g.has_edge(p[jp + 1], p[jj + 1]) {
                if report.context {
                    report.violations.push(format!("crossing edge between shifted s2/t2 at ({jp},{jj})"));
                }
                fire(RewriteRule::Rc2 { a: jj, b: jp }, &mut report);
            }
        }
    }

    if report.context {
        if t1.len() > t - 1 {
            report.violations.push(format!("|t1| = {} exceeds t-1 = {}", t1.len(), t - 1));
        }
        let d_last = g.degree(p[m - 1]);
        if t2.len() != d_last - t1.len().min(d_last) {
            report.violations.push(format!(
                "|t2| = {} is not d(last) - |t1| = {} - {}",
                t2.len(),
                d_last,
                t1.len()
            ));
        }
        // The lower bound on |t2| additionally needs the larger-degree
        // endpoint to reach the bipartite independence number.
        if d_last >= a.value && t2.len() < s {
            report.violations.push(format!("|t2| = {} below s = {s}", t2.len()));
        }
    }
    report
}

/// Outcome of the spanning-path virtual-edge analysis on one graph.
#[derive(Debug, Clone, Serialize)]
pub struct VirtualEdgeReport {
    /// A virtual edge existed: α̃ >= 2 and a nonadjacent high-degree pair.
    pub context: bool,
    pub virtual_edge: Option<(usize, usize)>,
    /// Endpoint pairs whose spanning path crossed the virtual edge.
    pub pairs_with_virtual: usize,
    pub near_contexts: usize,
    pub far_contexts: usize,
    pub rules_fired: usize,
    pub violations: Vec<String>,
}

/// Laws of the spanning-path analysis around a virtual edge: for every
/// endpoint pair whose spanning path (in the graph plus the virtual
/// edge) crosses it, split the neighbors of the two crossing vertices
/// and check that whenever the stated counting bounds hold, a splicing
/// rule applies and removes the virtual edge.
pub fn check_virtual_edge_laws(g: &Graph) -> VirtualEdgeReport {
    let a = alpha_tilde(g);
    let mut report = VirtualEdgeReport {
        context: false,
        virtual_edge: None,
        pairs_with_virtual: 0,
        near_contexts: 0,
        far_contexts: 0,
        rules_fired: 0,
        violations: Vec::new(),
    };
    if a.value < 2 {
        return report;
    }
    let Some((u, v)) = select_virtual_edge(g, a.value) else {
        return report;
    };
    report.context = true;
    report.virtual_edge = Some((u, v));
    let gp = g.with_edge(u, v).expect("nonadjacent pair");
    let n = g.n();
    let (s, t) = (a.witness_s, a.witness_t);

    for x in 0..n {
        for y in x + 1..n {
            let Ok(Some(cert)) = hamilton_path_between(&gp, x, y) else { continue };
            let kk = cert
                .verts
                .windows(2)
                .position(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u));
            let Some(kk) = kk else { continue };
            report.pairs_with_virtual += 1;
            let mut path = OrientedPath { verts: cert.verts, virtual_pos: Some(kk) };
            if g.degree(path.verts[kk]) > g.degree(path.verts[kk + 1]) {
                path = path.reversed();
            }
            let split = match compute_neighbor_split_with(g, &path, SplitMode::VirtualNear, s, t) {
                Err(RewriteError::WrongCase { .. }) => {
                    compute_neighbor_split_with(g, &path, SplitMode::VirtualFar, s, t)
                }
                r => r,
            };
            let split = match split {
                Ok(sp) => sp,
                Err(e) => {
                    report.violations.push(format!("pair ({x},{y}): split failed: {e}"));
                    continue;
                }
            };
            match split.mode {
                SplitMode::VirtualNear => {
                    report.near_contexts += 1;
                    check_near(g, &path, &split, t, s, &mut report, (x, y));
                }
                SplitMode::VirtualFar => {
                    report.far_contexts += 1;
                    check_far(g, &path, &split, t, s, &mut report, (x, y));
                }
                SplitMode::Plain => unreachable!("virtual split cannot be plain"),
            }
        }
    }
    report
}

fn fire_splice(
    g: &Graph,
    path: &OrientedPath,
    rule: Option<RewriteRule>,
    law: &str,
    pair: (usize, usize),
    report: &mut VirtualEdgeReport,
) {
    let (x, y) = pair;
    match rule {
        None => report
            .violations
            .push(format!("pair ({x},{y}): {law} bound met but no splice witness")),
        Some(rule) => match apply_rewrite(g, &PathOrCycle::Path(path.clone()), &rule) {
            Ok(PathOrCycle::Path(out))
                if out.virtual_pos.is_none()
                    && out.verts[0] == path.verts[0]
                    && out.verts.last() == path.verts.last() =>
            {
                report.rules_fired += 1
            }
            _ => report
                .violations
                .push(format!("pair ({x},{y}): {law} witness {} failed to splice", rule.id())),
        },
    }
}

fn check_near(
    g: &Graph,
    path: &OrientedPath,
    sp: &NeighborSplit,
    t: usize,
    s: usize,
    report: &mut VirtualEdgeReport,
    pair: (usize, usize),
) {
    let t1 = sp.t1.unwrap();
    let r1 = sp.r1.unwrap();
    let s2 = sp.s2.unwrap();
    let u2 = sp.u2.unwrap();
    let t2 = sp.t2.unwrap();
    if t1.union(r1).len() >= t {
        fire_splice(g, path, find_splice_left_outer(g, path, sp), "near-outer", pair, report);
    }
    if s2.union(u2).len() >= t && t2.len() >= s {
        fire_splice(g, path, find_splice_left_inner(g, path, sp), "near-inner", pair, report);
    }
}

fn check_far(
    g: &Graph,
    path: &OrientedPath,
    sp: &NeighborSplit,
    t: usize,
    s: usize,
    report: &mut VirtualEdgeReport,
    pair: (usize, usize),
) {
    let kk = sp.k;
    let s3 = sp.s3.unwrap();
    // Counting identity: the s-th-neighbor threshold leaves exactly
    // d - s + 1 neighbors at or past it.
    let d = g.degree(path.verts[kk]);
    if s3.len() != d + 1 - s {
        report.violations.push(format!(
            "pair ({},{}): |s3| = {} is not d - s + 1 = {} - {} + 1",
            pair.0,
            pair.1,
            s3.len(),
            d,
            s
        ));
    }
    let t3 = sp.t3.unwrap();
    let r3 = sp.r3.unwrap();
    let u3 = sp.u3.unwrap();
    if t3.union(r3).len() >= t && u3.len() >= s {
        fire_splice(g, path, find_splice_right_inner(g, path, sp), "far-inner", pair, report);
    }
    if sp.r_second.is_some() {
        let s4 = sp.s4.unwrap();
        let u4 = sp.u4.unwrap();
        // The shifted images of s4 and u4 can coincide in one position
        // when both back-thresholds agree.
        let overlap = usize::from(sp.r_second == sp.r_prime);
        if s4.len() + u4.len() - overlap >= t {
            fire_splice(g, path, find_splice_right_outer(g, path, sp), "far-outer", pair, report);
        }
    }
}

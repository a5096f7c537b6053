//! Exact, certificate-producing Hamilton cycle / path decisions.
//!
//! Backtracking over bitset graphs with connectivity and forced-degree
//! pruning. Exhaustive (a `None` really means no certificate exists) and
//! deterministic: fixed vertex order, no randomization, so identical
//! inputs yield identical certificates.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{BitIter, Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("path endpoints must be distinct (got {0})")]
    SameEndpoints(usize),
    #[error("vertex {0} out of range for graph of order {1}")]
    VertexOutOfRange(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertKind {
    Cycle,
    Path,
}

/// A spanning cycle or path, checkable edge-by-edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamCertificate {
    pub kind: CertKind,
    pub verts: Vec<usize>,
}

impl HamCertificate {
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.verts.len() != n {
            return false;
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.verts {
            if v >= n || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        if !self.verts.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        match self.kind {
            CertKind::Cycle => n >= 3 && g.has_edge(self.verts[n - 1], self.verts[0]),
            CertKind::Path => true,
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (*self.verts.first().unwrap(), *self.verts.last().unwrap())
    }
}

/// Exhaustive Hamilton cycle search. `None` means the graph is not
/// hamiltonian. No graph of order < 3 is hamiltonian.
pub fn hamilton_cycle(g: &Graph) -> Option<HamCertificate> {
    let n = g.n();
    if n < 3 || !g.is_connected() || g.min_degree() < 2 {
        return None;
    }
    let mut path = Vec::with_capacity(n);
    path.push(0usize);
    if dfs_cycle(g, &mut path, VertexSet::singleton(0)) {
        Some(HamCertificate { kind: CertKind::Cycle, verts: path })
    } else {
        None
    }
}

fn dfs_cycle(g: &Graph, path: &mut Vec<usize>, visited: VertexSet) -> bool {
    let n = g.n();
    let last = *path.last().unwrap();
    if path.len() == n {
        return g.has_edge(last, 0);
    }
    let unvisited = g.vertex_set().difference(visited);
    // The closing vertex must stay reachable.
    if g.neighbors(0).0 & (unvisited.0 | (1u64 << last)) == 0 {
        return false;
    }
    // Region the rest of the cycle must thread through.
    let region = VertexSet(unvisited.0 | (1u64 << last));
    if !g.subset_connected(region) {
        return false;
    }
    // Every unvisited vertex needs two usable neighbors: among the
    // unvisited, the current endpoint, or the start.
    let usable = unvisited.0 | (1u64 << last) | 1u64;
    for v in unvisited.iter() {
        if (g.neighbors(v).0 & usable & !(1u64 << v)).count_ones() < 2 {
            return false;
        }
    }
    for v in BitIter(g.neighbors(last).0 & unvisited.0) {
        path.push(v);
        if dfs_cycle(g, path, VertexSet(visited.0 | (1u64 << v))) {
            return true;
        }
        path.pop();
    }
    false
}

/// Exhaustive Hamilton (x, y)-path search.
pub fn hamilton_path_between(
    g: &Graph,
    x: usize,
    y: usize,
) -> Result<Option<HamCertificate>, SolverError> {
    let n = g.n();
    if x >= n {
        return Err(SolverError::VertexOutOfRange(x, n));
    }
    if y >= n {
        return Err(SolverError::VertexOutOfRange(y, n));
    }
    if x == y {
        return Err(SolverError::SameEndpoints(x));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let mut path = Vec::with_capacity(n);
    path.push(x);
    if dfs_path(g, y, &mut path, VertexSet::singleton(x)) {
        Ok(Some(HamCertificate { kind: CertKind::Path, verts: path }))
    } else {
        Ok(None)
    }
}

fn dfs_path(g: &Graph, y: usize, path: &mut Vec<usize>, visited: VertexSet) -> bool {
    let n = g.n();
    let last = *path.last().unwrap();
    if path.len() == n {
        return last == y;
    }
    let unvisited = g.vertex_set().difference(visited);
    let region = VertexSet(unvisited.0 | (1u64 << last));
    if !g.subset_connected(region) {
        return false;
    }
    for v in unvisited.iter() {
        let need = if v == y { 1 } else { 2 };
        if (g.neighbors(v).0 & region.0 & !(1u64 << v)).count_ones() < need as u32 {
            return false;
        }
    }
    // y is only usable as the final vertex.
    let mut cands = g.neighbors(last).0 & unvisited.0;
    if path.len() < n - 1 {
        cands &= !(1u64 << y);
    }
    for v in BitIter(cands) {
        path.push(v);
        if dfs_path(g, y, path, VertexSet(visited.0 | (1u64 << v))) {
            return true;
        }
        path.pop();
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectednessReport {
    pub hamiltonian_connected: bool,
    /// First failing pair in lexicographic order, when not connected.
    pub failing_pair: Option<(usize, usize)>,
    /// One witness path per pair (present only on success and n >= 2).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<HamCertificate>,
}

/// Hamilton path between every pair. K_1 and K_2 hold by convention
/// (for n = 2 the single pair is checked directly, which matches the
/// convention on K_2 itself).
pub fn is_hamiltonian_connected(g: &Graph) -> ConnectednessReport {
    let n = g.n();
    if n == 1 {
        return ConnectednessReport {
            hamiltonian_connected: true,
            failing_pair: None,
            witnesses: Vec::new(),
        };
    }
    let mut witnesses = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            match hamilton_path_between(g, x, y).expect("valid pair") {
                Some(cert) => witnesses.push(cert),
                None => {
                    return ConnectednessReport {
                        hamiltonian_connected: false,
                        failing_pair: Some((x, y)),
                        witnesses: Vec::new(),
                    }
                }
            }
        }
    }
    ConnectednessReport {
        hamiltonian_connected: true,
        failing_pair: None,
        witnesses,
    }
}

/// Longest path containing `seed` as a segment, found exhaustively.
/// The seed must itself be a valid path. Deterministic: first maximum in
/// the fixed exploration order (right extensions before left).
pub fn longest_path_from(g: &Graph, seed: &[usize]) -> Vec<usize> {
    assert!(!seed.is_empty(), "seed must be nonempty");
    assert!(
        seed.windows(2).all(|w| g.has_edge(w[0], w[1])),
        "seed must be a path in the graph"
    );
    let mut visited = VertexSet::EMPTY;
    for &v in seed {
        assert!(v < g.n() && !visited.contains(v), "seed vertices must be distinct");
        visited.insert(v);
    }
    let mut path: Vec<usize> = seed.to_vec();
    let mut best = path.clone();
    extend_right(g, &mut path, visited, &mut best);
    best
}

fn extend_right(g: &Graph, path: &mut Vec<usize>, visited: VertexSet, best: &mut Vec<usize>) {
    extend_left(g, path, visited, best);
    let last = *path.last().unwrap();
    for v in BitIter(g.neighbors(last).0 & !visited.0) {
        path.push(v);
        extend_right(g, path, VertexSet(visited.0 | (1u64 << v)), best);
        path.pop();
    }
}

fn extend_left(g: &Graph, path: &mut Vec<usize>, visited: VertexSet, best: &mut Vec<usize>) {
    if path.len() > best.len() {
        *best = path.clone();
    }
    let first = path[0];
    for v in BitIter(g.neighbors(first).0 & !visited.0) {
        path.insert(0, v);
        extend_left(g, path, VertexSet(visited.0 | (1u64 << v)), best);
        path.remove(0);
    }
}

/// Does the graph contain a cycle of exactly length m?
pub fn has_cycle_of_length(g: &Graph, m: usize) -> bool {
    let n = g.n();
    if m < 3 || m > n {
        return false;
    }
    // Canonical form: smallest cycle vertex is the DFS root, others above it.
    for root in 0..=(n - m) {
        let allowed = VertexSet(g.vertex_set().0 >> root << root);
        let mut path = vec![root];
        if dfs_fixed_len(g, root, m, allowed, &mut path, VertexSet::singleton(root)) {
            return true;
        }
    }
    false
}

fn dfs_fixed_len(
    g: &Graph,
    root: usize,
    m: usize,
    allowed: VertexSet,
    path: &mut Vec<usize>,
    visited: VertexSet,
) -> bool {
    let last = *path.last().unwrap();
    if path.len() == m {
        return g.has_edge(last, root);
    }
    for v in BitIter(g.neighbors(last).0 & allowed.0 & !visited.0) {
        path.push(v);
        if dfs_fixed_len(g, root, m, allowed, path, VertexSet(visited.0 | (1u64 << v))) {
            return true;
        }
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, join};

    fn petersen() -> Graph {
        let mut g = Graph::empty(10).unwrap();
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap(); // outer C_5
            g.add_edge(i, i + 5).unwrap(); // spokes
            g.add_edge(i + 5, (i + 2) % 5 + 5).unwrap(); // inner pentagram
        }
        g
    }

    #[test]
    fn cycle_examples() {
        let cert = hamilton_cycle(&Graph::cycle(5)).unwrap();
        assert_eq!(cert.verts, vec![0, 1, 2, 3, 4]);
        assert!(cert.validate(&Graph::cycle(5)));
    }

    #[test]
    fn k23_and_g1_not_hamiltonian() {
        // K_{2,3}: odd-order bipartite graph has no Hamilton cycle.
        let k23 = join(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert!(hamilton_cycle(&k23).is_none());

        let g1 = join(&Graph::complete(2), &Graph::empty(3).unwrap()).unwrap();
        assert!(hamilton_cycle(&g1).is_none());

        assert!(hamilton_cycle(&petersen()).is_none());
    }

    #[test]
    fn path_examples() {
        let p4 = Graph::path(4);
        let cert = hamilton_path_between(&p4, 0, 3).unwrap().unwrap();
        assert_eq!(cert.verts, vec![0, 1, 2, 3]);

        // (K_3 ∪ K_1) ∨ K_2 on six vertices; the dominating pair is 4, 5.
        let a_part = disjoint_union(&Graph::complete(3), &Graph::complete(1)).unwrap();
        let g3 = join(&a_part, &Graph::complete(2)).unwrap();
        assert!(hamilton_path_between(&g3, 4, 5).unwrap().is_none());

        let k3 = Graph::complete(3);
        assert!(hamilton_path_between(&k3, 0, 2).unwrap().is_some());
        assert_eq!(
            hamilton_path_between(&k3, 1, 1),
            Err(SolverError::SameEndpoints(1))
        );
    }

    #[test]
    fn hamiltonian_connected_examples() {
        assert!(is_hamiltonian_connected(&Graph::complete(4)).hamiltonian_connected);
        assert!(is_hamiltonian_connected(&Graph::complete(1)).hamiltonian_connected);
        assert!(is_hamiltonian_connected(&Graph::complete(2)).hamiltonian_connected);

        let g2 = join(&Graph::complete(3), &Graph::empty(3).unwrap()).unwrap();
        let rep = is_hamiltonian_connected(&g2);
        assert!(!rep.hamiltonian_connected);
        // A path between two clique vertices cannot host all three
        // independent vertices internally, so the first pair already fails.
        assert_eq!(rep.failing_pair, Some((0, 1)));

        let c4 = Graph::cycle(4);
        let rep = is_hamiltonian_connected(&c4);
        assert!(!rep.hamiltonian_connected);
        assert_eq!(rep.failing_pair, Some((0, 2)));
    }

    #[test]
    fn longest_path_examples() {
        let k3bar = Graph::empty(3).unwrap();
        assert_eq!(longest_path_from(&k3bar, &[1]), vec![1]);

        let p4 = Graph::path(4);
        assert_eq!(longest_path_from(&p4, &[1]).len(), 4);

        // Petersen is traceable though non-hamiltonian.
        assert_eq!(longest_path_from(&petersen(), &[0]).len(), 10);
    }

    #[test]
    fn cycle_length_detection() {
        let c5 = Graph::cycle(5);
        assert!(has_cycle_of_length(&c5, 5));
        assert!(!has_cycle_of_length(&c5, 4));
        assert!(!has_cycle_of_length(&c5, 3));
        let k4 = Graph::complete(4);
        assert!(has_cycle_of_length(&k4, 3));
        assert!(has_cycle_of_length(&k4, 4));
    }

    #[test]
    fn hamiltonian_implies_traceable() {
        let g = Graph::cycle(6);
        assert!(hamilton_cycle(&g).is_some());
        let mut found = false;
        'outer: for x in 0..6 {
            for y in x + 1..6 {
                if hamilton_path_between(&g, x, y).unwrap().is_some() {
                    found = true;
                    break 'outer;
                }
            }
        }
        assert!(found);
    }
}

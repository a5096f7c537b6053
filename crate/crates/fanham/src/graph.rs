//! Bitset-backed simple undirected graphs on up to 64 vertices.
//!
//! Adjacency is one `u64` per vertex, which makes neighborhood
//! intersections, subset connectivity checks and degree counts constant
//! time. Everything downstream (hole search, solvers, rewrites) leans on
//! that.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Hard vertex bound imposed by the bitset representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GraphError {
    #[error("vertex count {0} out of range 1..={MAX_VERTICES}")]
    BadOrder(usize),
    #[error("vertex {0} out of range for graph of order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6: empty input")]
    G6Empty,
    #[error("graph6: invalid byte {byte:#x} at position {pos}")]
    G6InvalidByte { pos: usize, byte: u8 },
    #[error("graph6: truncated bit stream, need {need} data bytes, found {found}")]
    G6Truncated { need: usize, found: usize },
    #[error("graph6: trailing data after {expect} data bytes")]
    G6Trailing { expect: usize },
    #[error("edge list: missing or malformed header line (expected \"n m\")")]
    EdgeListHeader,
    #[error("edge list: bad token {0:?}")]
    EdgeListToken(String),
    #[error("edge list: expected {expect} edge lines, found {found}")]
    EdgeListCount { expect: usize, found: usize },
}

/// A set of vertices as a bitmask over `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && (self.0 >> v) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn union(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(&self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> BitIter {
        BitIter(self.0)
    }

    /// The `k` smallest members as a set. Panics if fewer than `k` members.
    pub fn take_smallest(&self, k: usize) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        let mut it = self.iter();
        for _ in 0..k {
            out.insert(it.next().expect("take_smallest: set too small"));
        }
        out
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Iterator over set bits, ascending.
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Enumerates all `size`-subsets of `0..n` as bitmasks, in ascending
/// numeric (colex) order, via Gosper's hack.
pub fn subsets_of_size(n: usize, size: usize) -> SubsetIter {
    debug_assert!(n <= MAX_VERTICES);
    if size > n {
        return SubsetIter { cur: 0, limit: 0, done: true };
    }
    let limit = VertexSet::full(n).0;
    let cur = if size == 0 { 0 } else { (1u64 << size) - 1 };
    SubsetIter { cur, limit, done: false }
}

pub struct SubsetIter {
    cur: u64,
    limit: u64,
    done: bool,
}

impl Iterator for SubsetIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if out == 0 {
            self.done = true;
            return Some(0);
        }
        // Gosper's hack: next mask with the same popcount.
        let c = self.cur & self.cur.wrapping_neg();
        let r = self.cur.wrapping_add(c);
        if r == 0 {
            self.done = true;
        } else {
            self.cur = (((r ^ self.cur) >> 2) / c) | r;
            if self.cur > self.limit {
                self.done = true;
            }
        }
        Some(out)
    }
}

/// Immutable simple undirected graph over vertices `0..n-1`, `1 <= n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        Ok(Graph { n, adj: [0; MAX_VERTICES] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("order in range");
        let full = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = full & !(1u64 << v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("order in range");
        for v in 0..n {
            g.add_edge(v, (v + 1) % n).ok();
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("order in range");
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1).unwrap();
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    /// Copy with one extra edge; `u`,`v` must be a valid non-loop pair.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    /// N(S) = union of neighborhoods of S, minus S itself.
    pub fn neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in s.iter() {
            acc |= self.adj[v];
        }
        VertexSet(acc & !s.0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> (u + 1) << (u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).unwrap();
        let full = VertexSet::full(self.n).0;
        for v in 0..self.n {
            g.adj[v] = full & !self.adj[v] & !(1u64 << v);
        }
        g
    }

    /// Is the induced subgraph on `within` connected? Empty and singleton
    /// sets count as connected.
    pub fn subset_connected(&self, within: VertexSet) -> bool {
        if within.is_empty() {
            return true;
        }
        let start = within.0.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v] & within.0;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & within.0 == within.0
    }

    pub fn is_connected(&self) -> bool {
        self.subset_connected(self.vertex_set())
    }

    /// BFS distance; `None` means the vertices are in different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Ok(Some(0));
        }
        let mut seen = 1u64 << u;
        let mut frontier = seen;
        let mut dist = 0usize;
        while frontier != 0 {
            dist += 1;
            let mut next = 0u64;
            for w in BitIter(frontier) {
                next |= self.adj[w];
            }
            next &= !seen;
            if (next >> v) & 1 == 1 {
                return Ok(Some(dist));
            }
            seen |= next;
            frontier = next;
        }
        Ok(None)
    }

    /// Brute-force k-connectivity: `n > k` and removing any vertex set of
    /// size `< k` leaves the graph connected. Complete graphs come out
    /// (n-1)-connected but not n-connected. Cost grows as C(n, k-1); fine
    /// for the k <= 3 the theorems need, increasingly expensive beyond.
    pub fn is_k_connected(&self, k: usize) -> bool {
        assert!(k >= 1, "k-connectivity requires k >= 1");
        if self.n <= k {
            return false;
        }
        let full = self.vertex_set();
        for size in 0..k {
            for mask in subsets_of_size(self.n, size) {
                if !self.subset_connected(VertexSet(full.0 & !mask)) {
                    return false;
                }
            }
        }
        true
    }

    /// Largest k in 0..=cap with `is_k_connected(k)`; 0 when not even connected.
    pub fn connectivity_up_to(&self, cap: usize) -> usize {
        let mut best = 0;
        for k in 1..=cap {
            if self.is_k_connected(k) {
                best = k;
            } else {
                break;
            }
        }
        best
    }

    /// Unordered nonadjacent pairs {x,y} with a common neighbor, i.e.
    /// d(x,y) = 2.
    pub fn distance2_nonadjacent_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) && self.adj[u] & self.adj[v] != 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    // ---- graph6 ----

    /// Parses one graph6 line (standard format: byte offset 63,
    /// column-major upper triangle, MSB first).
    pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
        let bytes: &[u8] = text.trim_end_matches(['\n', '\r']).as_bytes();
        if bytes.is_empty() {
            return Err(GraphError::G6Empty);
        }
        for (pos, &b) in bytes.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(GraphError::G6InvalidByte { pos, byte: b });
            }
        }
        let (n, data) = if bytes[0] == 126 {
            if bytes.len() >= 2 && bytes[1] == 126 {
                // 8-byte header encodes n up to 2^36; necessarily beyond our bound.
                return Err(GraphError::BadOrder(usize::MAX));
            }
            if bytes.len() < 4 {
                return Err(GraphError::G6Truncated { need: 4, found: bytes.len() });
            }
            let n = (((bytes[1] - 63) as usize) << 12)
                | (((bytes[2] - 63) as usize) << 6)
                | ((bytes[3] - 63) as usize);
            (n, &bytes[4..])
        } else {
            ((bytes[0] - 63) as usize, &bytes[1..])
        };
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        let nbits = n * (n - 1) / 2;
        let need = nbits.div_ceil(6);
        if data.len() < need {
            return Err(GraphError::G6Truncated { need, found: data.len() });
        }
        if data.len() > need {
            return Err(GraphError::G6Trailing { expect: need });
        }
        let mut g = Graph::empty(n)?;
        let mut bit = 0usize;
        for j in 1..n {
            for i in 0..j {
                let byte = data[bit / 6] - 63;
                if (byte >> (5 - bit % 6)) & 1 == 1 {
                    g.add_edge(i, j)?;
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    /// Canonical graph6 encoding.
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = Vec::new();
        if n <= 62 {
            out.push(n as u8 + 63);
        } else {
            out.push(126);
            out.push(((n >> 12) & 63) as u8 + 63);
            out.push(((n >> 6) & 63) as u8 + 63);
            out.push((n & 63) as u8 + 63);
        }
        let nbits = n * (n - 1) / 2;
        let mut cur = 0u8;
        let mut used = 0usize;
        for j in 1..n {
            for i in 0..j {
                cur <<= 1;
                if self.has_edge(i, j) {
                    cur |= 1;
                }
                used += 1;
                if used % 6 == 0 {
                    out.push(cur + 63);
                    cur = 0;
                }
            }
        }
        if nbits % 6 != 0 {
            cur <<= 6 - nbits % 6;
            out.push(cur + 63);
        }
        String::from_utf8(out).unwrap()
    }

    // ---- edge list ----

    /// Plain text format: first line "n m", then m lines "u v".
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or(GraphError::EdgeListHeader)?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .ok_or(GraphError::EdgeListHeader)?
            .parse()
            .map_err(|_| GraphError::EdgeListToken(header.to_string()))?;
        let m: usize = it
            .next()
            .ok_or(GraphError::EdgeListHeader)?
            .parse()
            .map_err(|_| GraphError::EdgeListToken(header.to_string()))?;
        if it.next().is_some() {
            return Err(GraphError::EdgeListHeader);
        }
        let mut g = Graph::empty(n)?;
        let mut found = 0usize;
        for line in lines {
            let mut toks = line.split_whitespace();
            let u: usize = toks
                .next()
                .ok_or_else(|| GraphError::EdgeListToken(line.to_string()))?
                .parse()
                .map_err(|_| GraphError::EdgeListToken(line.to_string()))?;
            let v: usize = toks
                .next()
                .ok_or_else(|| GraphError::EdgeListToken(line.to_string()))?
                .parse()
                .map_err(|_| GraphError::EdgeListToken(line.to_string()))?;
            if toks.next().is_some() {
                return Err(GraphError::EdgeListToken(line.to_string()));
            }
            g.add_edge(u, v)?;
            found += 1;
        }
        if found != m {
            return Err(GraphError::EdgeListCount { expect: m, found });
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Join G ∨ H: disjoint union plus all edges between the two parts.
/// G's vertices keep their labels, H's are shifted by G's order.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let n = g.n() + h.n();
    let mut out = Graph::empty(n)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for (u, v) in h.edges() {
        out.add_edge(u + g.n(), v + g.n())?;
    }
    for u in 0..g.n() {
        for v in 0..h.n() {
            out.add_edge(u, v + g.n())?;
        }
    }
    Ok(out)
}

/// Disjoint union; H's vertices shifted by G's order.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let n = g.n() + h.n();
    let mut out = Graph::empty(n)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for (u, v) in h.edges() {
        out.add_edge(u + g.n(), v + g.n())?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_round_trip_examples() {
        let g = Graph::parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.to_graph6(), "D?{");

        // "A_" decodes to K_2 by hand: n=2, single data byte '_'-63 = 0b100000.
        let g = Graph::parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));

        assert_eq!(Graph::parse_graph6(""), Err(GraphError::G6Empty));
    }

    #[test]
    fn graph6_error_cases() {
        assert!(matches!(
            Graph::parse_graph6("D\x1f{"),
            Err(GraphError::G6InvalidByte { .. })
        ));
        assert!(matches!(
            Graph::parse_graph6("D?"),
            Err(GraphError::G6Truncated { .. })
        ));
        assert!(matches!(
            Graph::parse_graph6("D?{{"),
            Err(GraphError::G6Trailing { .. })
        ));
    }

    #[test]
    fn edge_list_examples() {
        let g = Graph::parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);

        let g = Graph::parse_edge_list("2 0").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 0);

        assert_eq!(
            Graph::parse_edge_list("3 1\n0 3"),
            Err(GraphError::VertexOutOfRange(3, 3))
        );
        assert_eq!(
            Graph::parse_edge_list("3 1\n1 1"),
            Err(GraphError::SelfLoop(1))
        );
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 x"),
            Err(GraphError::EdgeListToken(_))
        ));
    }

    #[test]
    fn distance_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.distance(0, 2).unwrap(), Some(2));
        let k2bar = Graph::empty(2).unwrap();
        assert_eq!(k2bar.distance(0, 1).unwrap(), None);
        let p4 = Graph::path(4);
        assert_eq!(p4.distance(0, 3).unwrap(), Some(3));
        assert!(p4.distance(0, 4).is_err());
    }

    #[test]
    fn k_connectivity_examples() {
        let c5 = Graph::cycle(5);
        assert!(c5.is_k_connected(2));
        assert!(!c5.is_k_connected(3));
        // K_n convention: (n-1)-connected, not n-connected.
        let k4 = Graph::complete(4);
        assert!(k4.is_k_connected(3));
        assert!(!k4.is_k_connected(4));
    }

    #[test]
    fn distance2_pairs_examples() {
        assert!(Graph::complete(5).distance2_nonadjacent_pairs().is_empty());
        assert_eq!(Graph::cycle(5).distance2_nonadjacent_pairs().len(), 5);
        // Nonadjacent but at infinite distance does not count.
        assert!(Graph::empty(3).unwrap().distance2_nonadjacent_pairs().is_empty());
    }

    #[test]
    fn subset_iteration() {
        assert_eq!(subsets_of_size(4, 2).count(), 6);
        assert_eq!(subsets_of_size(4, 0).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        let all: Vec<u64> = subsets_of_size(4, 2).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn join_and_union() {
        // K_1 ∨ K̄_2 = P_3 (star with two leaves).
        let j = join(&Graph::complete(1), &Graph::empty(2).unwrap()).unwrap();
        assert_eq!(j.n(), 3);
        assert_eq!(j.edge_count(), 2);
        assert_eq!(j.degree(0), 2);

        let u = disjoint_union(&Graph::complete(3), &Graph::complete(1)).unwrap();
        assert_eq!(u.n(), 4);
        assert_eq!(u.edge_count(), 3);
        assert!(!u.is_connected());
    }
}

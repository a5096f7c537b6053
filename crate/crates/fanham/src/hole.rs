//! Exact computation of the bipartite independence number α̃(G).
//!
//! α̃(G) is the smallest q for which some s, t >= 1 with s + t = q + 1
//! make every pair of disjoint vertex sets of sizes s and t carry a
//! crossing edge. The computation returns certificates both ways: the
//! successful (s, t) witness, and for each split one level below, a
//! concrete bipartite hole showing α̃ cannot be smaller.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{subsets_of_size, Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HoleError {
    #[error("Dirac premise fails: min degree {delta} < n/2 = {n}/2")]
    DiracPremiseFails { delta: usize, n: usize },
}

/// Witness pair (A, B): disjoint, nonempty, no edge between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BipartiteHole {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl BipartiteHole {
    /// Re-checks the certificate against the graph.
    pub fn validate(&self, g: &Graph, s: usize, t: usize) -> bool {
        self.a.len() == s
            && self.b.len() == t
            && s >= 1
            && t >= 1
            && self.a.is_disjoint(self.b)
            && self.a.union(self.b).is_subset_of(g.vertex_set())
            && self.a.iter().all(|u| g.neighbors(u).is_disjoint(self.b))
    }
}

/// Outcome of the (s, t) universal edge property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StProperty {
    /// No (s, t) bipartite hole exists (vacuously when s + t > n).
    Holds,
    Fails(BipartiteHole),
}

impl StProperty {
    pub fn holds(&self) -> bool {
        matches!(self, StProperty::Holds)
    }
}

/// Does every disjoint (|A| = s, |B| = t) pair carry a crossing edge?
/// Returns the first hole found otherwise, with A enumerated in ascending
/// mask order and B the smallest valid set for that A.
pub fn st_property(g: &Graph, s: usize, t: usize) -> StProperty {
    assert!(s >= 1 && t >= 1, "s and t must be positive");
    match find_hole(g, s, t) {
        None => StProperty::Holds,
        Some(h) => StProperty::Fails(h),
    }
}

fn find_hole(g: &Graph, s: usize, t: usize) -> Option<BipartiteHole> {
    let n = g.n();
    if s + t > n {
        return None; // vacuous: no such disjoint pair exists
    }
    for a_mask in subsets_of_size(n, s) {
        let a = VertexSet(a_mask);
        // B must avoid A and all of N(A).
        let avail = g
            .vertex_set()
            .difference(a.union(g.neighborhood_of_set(a)));
        if avail.len() >= t {
            return Some(BipartiteHole { a, b: avail.take_smallest(t) });
        }
    }
    None
}

#[derive(Debug, Clone, Serialize)]
pub struct AlphaTildeResult {
    pub value: usize,
    /// The (s, t) split with s + t = value + 1 for which the property
    /// holds; smallest s among ties.
    pub witness_s: usize,
    pub witness_t: usize,
    /// For each (s, t) with s + t = value, a hole proving the value
    /// cannot be one smaller. Empty when value == 1.
    pub lower_bound_holes: Vec<(usize, usize, BipartiteHole)>,
}

impl AlphaTildeResult {
    /// Re-validates every stored certificate by direct re-checking, and
    /// the (s, t) witness by full enumeration.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.witness_s + self.witness_t != self.value + 1 {
            return false;
        }
        if !st_property(g, self.witness_s, self.witness_t).holds() {
            return false;
        }
        self.lower_bound_holes
            .iter()
            .all(|&(s, t, ref h)| s + t == self.value && h.validate(g, s, t))
    }
}

/// Exact α̃(G) with certificates. Searches q ascending and s from 1 to
/// ⌊(q+1)/2⌋; always terminates with q <= n because s + t = n + 1 is
/// vacuous.
pub fn alpha_tilde(g: &Graph) -> AlphaTildeResult {
    let n = g.n();
    let mut below: Vec<(usize, usize, BipartiteHole)> = Vec::new();
    for q in 1..=n {
        let mut level: Vec<(usize, usize, BipartiteHole)> = Vec::new();
        let mut witness: Option<(usize, usize)> = None;
        for s in 1..=(q + 1) / 2 {
            let t = q + 1 - s;
            match find_hole(g, s, t) {
                None => {
                    witness = Some((s, t));
                    break;
                }
                Some(h) => level.push((s, t, h)),
            }
        }
        if let Some((s, t)) = witness {
            return AlphaTildeResult {
                value: q,
                witness_s: s,
                witness_t: t,
                lower_bound_holes: below,
            };
        }
        below = level;
    }
    unreachable!("s + t = n + 1 is always vacuously satisfied");
}

/// With δ(G) >= n/2 the pair (1, ⌊n/2⌋) has no hole, so ⌊n/2⌋ bounds
/// α̃ from above.
pub fn alpha_tilde_upper_bound_from_min_degree(g: &Graph) -> Result<usize, HoleError> {
    let n = g.n();
    let delta = g.min_degree();
    if 2 * delta < n {
        return Err(HoleError::DiracPremiseFails { delta, n });
    }
    let bound = n / 2;
    debug_assert!(st_property(g, 1, bound).holds());
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn st_property_examples() {
        assert!(st_property(&Graph::complete(3), 1, 1).holds());

        let c5 = Graph::cycle(5);
        match st_property(&c5, 1, 2) {
            StProperty::Fails(h) => {
                assert!(h.validate(&c5, 1, 2));
                let v = h.a.iter().next().unwrap();
                // B is exactly inside the two non-neighbors of v.
                assert!(h.b.is_subset_of(
                    c5.vertex_set()
                        .difference(c5.neighbors(v).union(VertexSet::singleton(v)))
                ));
            }
            StProperty::Holds => panic!("C_5 has a (1,2) hole"),
        }

        // Vacuity: 1 + 4 > 4.
        assert!(st_property(&Graph::empty(4).unwrap(), 1, 4).holds());
    }

    #[test]
    fn alpha_tilde_examples() {
        for n in 2..=6 {
            assert_eq!(alpha_tilde(&Graph::complete(n)).value, 1);
        }
        for n in 1..=6 {
            assert_eq!(alpha_tilde(&Graph::empty(n).unwrap()).value, n);
        }
        assert_eq!(alpha_tilde(&Graph::cycle(5)).value, 3);
        // G1 with n=2: K_2 ∨ K̄_3.
        let g1 = crate::graph::join(&Graph::complete(2), &Graph::empty(3).unwrap()).unwrap();
        assert_eq!(alpha_tilde(&g1).value, 3);
        // K_1 edge case.
        assert_eq!(alpha_tilde(&Graph::complete(1)).value, 1);
    }

    #[test]
    fn alpha_tilde_certificates_validate() {
        for g in [
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::path(5),
            Graph::empty(4).unwrap(),
            Graph::complete(4),
        ] {
            let r = alpha_tilde(&g);
            assert!(r.validate(&g), "certificates must re-validate: {g:?}");
        }
    }

    #[test]
    fn dirac_upper_bound_examples() {
        assert_eq!(alpha_tilde_upper_bound_from_min_degree(&Graph::complete(4)), Ok(2));
        let c4 = Graph::cycle(4);
        assert_eq!(alpha_tilde_upper_bound_from_min_degree(&c4), Ok(2));
        assert_eq!(alpha_tilde(&c4).value, 2);
        assert!(matches!(
            alpha_tilde_upper_bound_from_min_degree(&Graph::path(3)),
            Err(HoleError::DiracPremiseFails { .. })
        ));
    }
}

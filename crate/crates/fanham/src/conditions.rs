//! Hypothesis predicates: the Fan-type bipartite-independence conditions
//! and the classical sufficient conditions they are compared against.
//!
//! Degree conditions and side conditions (order, connectivity) are
//! reported separately so the harness can count cases like "degree bound
//! holds but connectivity fails".

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::hole::alpha_tilde;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionId {
    Dirac,
    Ore,
    FanClassic,
    McdiarmidYolov,
    ZhouEtAl,
    LiLiuHam,
    LiLiuHc,
    /// The Fan-type α̃ condition with an explicit bound (the
    /// hamiltonicity hypothesis at bound α̃, admissibility at α̃+1).
    FanTilde,
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConditionId::Dirac => "dirac",
            ConditionId::Ore => "ore",
            ConditionId::FanClassic => "fan-classic",
            ConditionId::McdiarmidYolov => "mcdiarmid-yolov",
            ConditionId::ZhouEtAl => "zhou-et-al",
            ConditionId::LiLiuHam => "li-liu-ham",
            ConditionId::LiLiuHc => "li-liu-hc",
            ConditionId::FanTilde => "fan-tilde",
        };
        f.write_str(s)
    }
}

impl FromStr for ConditionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dirac" => Ok(ConditionId::Dirac),
            "ore" => Ok(ConditionId::Ore),
            "fan-classic" | "fan_classic" => Ok(ConditionId::FanClassic),
            "mcdiarmid-yolov" | "mcdiarmid_yolov" => Ok(ConditionId::McdiarmidYolov),
            "zhou-et-al" | "zhou_et_al" => Ok(ConditionId::ZhouEtAl),
            "li-liu-ham" | "li_liu_ham" => Ok(ConditionId::LiLiuHam),
            "li-liu-hc" | "li_liu_hc" => Ok(ConditionId::LiLiuHc),
            "fan-tilde" | "fan_tilde" => Ok(ConditionId::FanTilde),
            other => Err(format!("unknown condition id {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: ConditionId,
    /// The degree condition itself; side conditions are separate.
    pub holds: bool,
    /// Order side condition ("of order at least three"), when the source
    /// theorem states one.
    pub order_ok: Option<bool>,
    /// Connectivity side condition, when the source theorem states one.
    pub connectivity_ok: Option<bool>,
    /// The bound the degree quantity was compared against.
    pub bound_used: usize,
    /// For pair-quantified conditions: a pair falsifying the bound.
    pub violating_pair: Option<(usize, usize)>,
    /// For minimum-degree conditions: a vertex falsifying the bound.
    pub violating_vertex: Option<usize>,
}

impl ConditionReport {
    /// Degree condition and all stated side conditions together.
    pub fn all_ok(&self) -> bool {
        self.holds && self.order_ok.unwrap_or(true) && self.connectivity_ok.unwrap_or(true)
    }
}

/// max{d(x), d(y)} >= bound for every nonadjacent pair at distance two;
/// vacuously true when no such pair exists.
pub fn fan_tilde_condition(g: &Graph, bound: usize) -> ConditionReport {
    let mut holds = true;
    let mut violating_pair = None;
    for (x, y) in g.distance2_nonadjacent_pairs() {
        if g.degree(x).max(g.degree(y)) < bound {
            holds = false;
            violating_pair = Some((x, y));
            break;
        }
    }
    ConditionReport {
        condition: ConditionId::FanTilde,
        holds,
        order_ok: None,
        connectivity_ok: None,
        bound_used: bound,
        violating_pair,
        violating_vertex: None,
    }
}

/// Hypothesis of the hamiltonicity theorem: order >= 3, 2-connected, and
/// the Fan-type condition at bound α̃(G).
pub fn theorem_ham_hypothesis(g: &Graph) -> bool {
    theorem_ham_hypothesis_with_alpha(g, alpha_tilde(g).value)
}

pub fn theorem_ham_hypothesis_with_alpha(g: &Graph, alpha: usize) -> bool {
    g.n() >= 3 && g.is_k_connected(2) && fan_tilde_condition(g, alpha).holds
}

/// Hypothesis of the hamiltonian-connectedness theorem: 3-connected and
/// the Fan-type condition at bound α̃(G)+1. No order floor beyond the
/// n >= 4 that 3-connectivity forces.
pub fn theorem_hc_hypothesis(g: &Graph) -> bool {
    theorem_hc_hypothesis_with_alpha(g, alpha_tilde(g).value)
}

pub fn theorem_hc_hypothesis_with_alpha(g: &Graph, alpha: usize) -> bool {
    g.is_k_connected(3) && fan_tilde_condition(g, alpha + 1).holds
}

/// Evaluates one of the cited prior conditions, exactly as stated.
/// Ore and Li–Liu quantify over all nonadjacent pairs (any distance);
/// Fan-type conditions only over distance-2 pairs.
pub fn prior_condition(g: &Graph, id: ConditionId) -> ConditionReport {
    let alpha = match id {
        ConditionId::McdiarmidYolov
        | ConditionId::ZhouEtAl
        | ConditionId::LiLiuHam
        | ConditionId::LiLiuHc => alpha_tilde(g).value,
        _ => 0,
    };
    prior_condition_with_alpha(g, id, alpha)
}

pub fn prior_condition_with_alpha(g: &Graph, id: ConditionId, alpha: usize) -> ConditionReport {
    let n = g.n();
    match id {
        ConditionId::Dirac => min_degree_report(g, id, n.div_ceil(2), n >= 3),
        ConditionId::McdiarmidYolov => min_degree_report(g, id, alpha, n >= 3),
        ConditionId::ZhouEtAl => min_degree_report(g, id, alpha + 1, n >= 3),
        ConditionId::Ore => degree_sum_report(g, id, n, Some(n >= 3), None),
        ConditionId::LiLiuHam => {
            degree_sum_report(g, id, 2 * alpha, Some(n >= 3), Some(g.is_k_connected(2)))
        }
        ConditionId::LiLiuHc => {
            degree_sum_report(g, id, 2 * alpha + 1, Some(n >= 3), Some(g.is_k_connected(3)))
        }
        ConditionId::FanClassic => {
            let mut rep = fan_tilde_condition(g, n.div_ceil(2));
            rep.condition = id;
            rep.connectivity_ok = Some(g.is_k_connected(2));
            rep
        }
        ConditionId::FanTilde => fan_tilde_condition(g, alpha),
    }
}

fn min_degree_report(g: &Graph, id: ConditionId, bound: usize, order_ok: bool) -> ConditionReport {
    let worst = (0..g.n()).min_by_key(|&v| g.degree(v)).unwrap();
    let holds = g.degree(worst) >= bound;
    ConditionReport {
        condition: id,
        holds,
        order_ok: Some(order_ok),
        connectivity_ok: None,
        bound_used: bound,
        violating_pair: None,
        violating_vertex: if holds { None } else { Some(worst) },
    }
}

fn degree_sum_report(
    g: &Graph,
    id: ConditionId,
    bound: usize,
    order_ok: Option<bool>,
    connectivity_ok: Option<bool>,
) -> ConditionReport {
    let mut holds = true;
    let mut violating_pair = None;
    for (x, y) in g.non_edges() {
        if g.degree(x) + g.degree(y) < bound {
            holds = false;
            violating_pair = Some((x, y));
            break;
        }
    }
    ConditionReport {
        condition: id,
        holds,
        order_ok,
        connectivity_ok,
        bound_used: bound,
        violating_pair,
        violating_vertex: None,
    }
}

/// V* = vertices of degree >= α̃(G)+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VStar {
    pub members: VertexSet,
}

pub fn v_star(g: &Graph) -> VStar {
    v_star_with_alpha(g, alpha_tilde(g).value)
}

pub fn v_star_with_alpha(g: &Graph, alpha: usize) -> VStar {
    VStar {
        members: VertexSet::from_iter((0..g.n()).filter(|&v| g.degree(v) >= alpha + 1)),
    }
}

/// Admissible: every distance-2 nonadjacent pair has max degree >= α̃+1.
pub fn is_admissible(g: &Graph) -> bool {
    fan_tilde_condition(g, alpha_tilde(g).value + 1).holds
}

/// All pairs inside `s` adjacent; empty sets and singletons count.
pub fn induced_is_clique(g: &Graph, s: VertexSet) -> bool {
    let verts: Vec<usize> = s.iter().collect();
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, join};

    fn g1(n: usize) -> Graph {
        join(&Graph::complete(n), &Graph::empty(n + 1).unwrap()).unwrap()
    }

    fn g2(n: usize) -> Graph {
        join(&Graph::complete(n), &Graph::empty(n).unwrap()).unwrap()
    }

    fn g3(a: usize) -> Graph {
        let part = disjoint_union(&Graph::complete(a - 2), &Graph::complete(1)).unwrap();
        join(&part, &Graph::complete(2)).unwrap()
    }

    #[test]
    fn fan_tilde_examples() {
        // K_5: no distance-2 pairs, vacuous at any bound.
        assert!(fan_tilde_condition(&Graph::complete(5), 4).holds);

        // G1 = K_2 ∨ K̄_3: α̃ = 3, every distance-2 pair maxes out at 2.
        let g = g1(2);
        let alpha = alpha_tilde(&g).value;
        assert_eq!(alpha, 3);
        let rep = fan_tilde_condition(&g, alpha);
        assert!(!rep.holds);
        let (x, y) = rep.violating_pair.unwrap();
        assert_eq!(g.degree(x).max(g.degree(y)), alpha - 1);

        // G2 = K_3 ∨ K̄_3: α̃ = 3, max degree over distance-2 pairs is α̃.
        let g = g2(3);
        let alpha = alpha_tilde(&g).value;
        assert_eq!(alpha, 3);
        assert!(fan_tilde_condition(&g, alpha).holds);
        let rep = fan_tilde_condition(&g, alpha + 1);
        assert!(!rep.holds);
        let (x, y) = rep.violating_pair.unwrap();
        assert_eq!(g.degree(x).max(g.degree(y)), alpha);
    }

    #[test]
    fn theorem_hypotheses() {
        assert!(theorem_ham_hypothesis(&Graph::complete(4)));
        assert!(!theorem_ham_hypothesis(&g1(2)));
        assert!(!theorem_ham_hypothesis(&Graph::path(4)));

        assert!(theorem_hc_hypothesis(&Graph::complete(5)));
        assert!(!theorem_hc_hypothesis(&g2(3)));
        // (K_3 ∪ K_1) ∨ K_2: degree condition holds (max over distance-2
        // pairs is 4 = α̃+1) but the graph is not 3-connected.
        let g = g3(5);
        assert!(is_admissible(&g));
        assert!(!g.is_k_connected(3));
        assert!(!theorem_hc_hypothesis(&g));
    }

    #[test]
    fn prior_condition_examples() {
        let rep = prior_condition(&Graph::complete(4), ConditionId::Dirac);
        assert!(rep.holds && rep.all_ok());

        let rep = prior_condition(&Graph::cycle(6), ConditionId::Dirac);
        assert!(!rep.holds);
        assert!(rep.violating_vertex.is_some());

        // K_3 ∨ K̄_3: degree sums over nonadjacent pairs are 3+3 = 6 = 2α̃.
        let rep = prior_condition(&g2(3), ConditionId::LiLiuHam);
        assert!(rep.holds);
        assert_eq!(rep.bound_used, 6);
        assert_eq!(rep.connectivity_ok, Some(true));
    }

    #[test]
    fn v_star_examples() {
        assert!(v_star(&Graph::empty(4).unwrap()).members.is_empty());
        assert_eq!(v_star(&Graph::complete(5)).members.len(), 5);
        // G2: only the three join-clique vertices reach degree α̃+1 = 4.
        let vs = v_star(&g2(3));
        assert_eq!(vs.members, VertexSet::from_iter(0..3));
        assert!(induced_is_clique(&g2(3), vs.members));
    }

    #[test]
    fn clique_examples() {
        let k5 = Graph::complete(5);
        assert!(induced_is_clique(&k5, VertexSet::from_iter([0, 2, 4])));
        let c5 = Graph::cycle(5);
        assert!(!induced_is_clique(&c5, VertexSet::from_iter([0, 1, 2])));
        assert!(induced_is_clique(&c5, VertexSet::from_iter([3])));
        assert!(induced_is_clique(&c5, VertexSet::EMPTY));
    }
}

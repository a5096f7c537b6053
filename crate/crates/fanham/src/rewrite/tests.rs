use crate::graph::{join, Graph, VertexSet};

use super::*;

fn path_graph_with(extra: &[(usize, usize)], n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.extend_from_slice(extra);
    Graph::from_edges(n, &edges).unwrap()
}

fn plain(verts: &[usize]) -> PathOrCycle {
    PathOrCycle::Path(OrientedPath { verts: verts.to_vec(), virtual_pos: None })
}

#[test]
fn rotation_example() {
    let g = path_graph_with(&[(0, 3)], 5);
    let out = apply_rewrite(&g, &plain(&[0, 1, 2, 3, 4]), &RewriteRule::RtA { l: 3 }).unwrap();
    assert_eq!(out, plain(&[2, 1, 0, 3, 4]));
}

#[test]
fn close_cycle_example() {
    let g = path_graph_with(&[(1, 4), (0, 2)], 5);
    let out = apply_rewrite(&g, &plain(&[0, 1, 2, 3, 4]), &RewriteRule::Rc1 { j: 1 }).unwrap();
    assert_eq!(out, PathOrCycle::Cycle(vec![0, 1, 4, 3, 2]));
}

#[test]
fn named_precondition_failures() {
    let g = Graph::path(5);
    assert_eq!(
        apply_rewrite(&g, &plain(&[0, 1, 2, 3, 4]), &RewriteRule::RtA { l: 3 }),
        Err(RewriteError::Precondition { rule: RuleId::RtA, check: "edge p[0]-p[l]" })
    );
    assert_eq!(
        apply_rewrite(&g, &plain(&[0, 1, 2, 3, 4]), &RewriteRule::RtA { l: 1 }),
        Err(RewriteError::Precondition { rule: RuleId::RtA, check: "2 <= l <= m-1" })
    );
}

#[test]
fn cycle_absorbs_outside_vertex() {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)]).unwrap();
    let out =
        apply_rewrite(&g, &PathOrCycle::Cycle(vec![0, 1, 2, 3]), &RewriteRule::Ctl { i: 2, w: 4 })
            .unwrap();
    assert_eq!(out, plain(&[4, 2, 3, 0, 1]));
}

#[test]
fn splice_removes_virtual_edge() {
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (4, 5), (0, 3), (1, 3), (2, 4)]).unwrap();
    let input = PathOrCycle::Path(OrientedPath {
        verts: vec![0, 1, 2, 3, 4, 5],
        virtual_pos: Some(3),
    });
    let out = apply_rewrite(&g, &input, &RewriteRule::Hp1 { a: 0, b: 2 }).unwrap();
    let PathOrCycle::Path(p) = out else { panic!("expected path") };
    assert_eq!(p.verts, vec![0, 3, 1, 2, 4, 5]);
    assert_eq!(p.virtual_pos, None);
}

#[test]
fn plain_split_on_cycle_path() {
    let g = Graph::cycle(6);
    let p = OrientedPath::new(&g, vec![0, 1, 2, 3, 4, 5]).unwrap();
    let sp = compute_neighbor_split_with(&g, &p, SplitMode::Plain, 1, 2).unwrap();
    assert_eq!(sp.k, 1);
    assert_eq!(sp.s1, VertexSet::from_iter([1]));
    assert_eq!(sp.s2, Some(VertexSet::EMPTY));
    assert_eq!(sp.t1, Some(VertexSet::from_iter([4])));
    assert_eq!(sp.t2, Some(VertexSet::EMPTY));
    assert!(sp.validate(&g, &p));
}

#[test]
fn split_threshold_and_case_errors() {
    let g = Graph::path(2);
    let p = OrientedPath::new(&g, vec![0, 1]).unwrap();
    assert_eq!(
        compute_neighbor_split_with(&g, &p, SplitMode::Plain, 1, 1),
        Err(RewriteError::ThresholdNotFound { what: "k" })
    );

    let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let p = OrientedPath::with_virtual(&g, vec![0, 1, 2, 3], 1).unwrap();
    assert!(compute_neighbor_split_with(&g, &p, SplitMode::VirtualNear, 1, 1).is_ok());
    assert_eq!(
        compute_neighbor_split_with(&g, &p, SplitMode::VirtualFar, 1, 1),
        Err(RewriteError::WrongCase { expected: "virtual-far" })
    );
}

#[test]
fn cycle_driver_on_small_graphs() {
    for g in [Graph::complete(4), join(&Graph::empty(3).unwrap(), &Graph::empty(3).unwrap()).unwrap()]
    {
        let res = construct_hamilton_cycle(&g).unwrap();
        assert!(res.certificate.validate(&g));
        assert!(!res.trace.fallback);
        let replayed = replay_trace(&g, &res.trace.steps).unwrap();
        assert_eq!(replayed, res.certificate);
    }
}

#[test]
fn cycle_driver_rejects_hypothesis_failures() {
    let g1 = join(&Graph::complete(2), &Graph::empty(3).unwrap()).unwrap();
    assert!(matches!(
        construct_hamilton_cycle(&g1),
        Err(RewriteError::HypothesisViolated(_))
    ));
    assert!(matches!(
        construct_hamilton_cycle(&Graph::path(4)),
        Err(RewriteError::HypothesisViolated(_))
    ));
}

#[test]
fn path_driver_on_complete_graph() {
    let g = Graph::complete(5);
    let res = construct_hamilton_path(&g, 0, 2).unwrap();
    assert!(res.certificate.validate(&g));
    assert_eq!(res.certificate.endpoints(), (0, 2));
    let replayed = replay_trace(&g, &res.trace.steps).unwrap();
    assert_eq!(replayed, res.certificate);
}

#[test]
fn path_driver_rejects_hypothesis_failures() {
    use crate::graph::disjoint_union;
    let part = disjoint_union(&Graph::complete(3), &Graph::complete(1)).unwrap();
    let g3 = join(&part, &Graph::complete(2)).unwrap();
    assert!(matches!(
        construct_hamilton_path(&g3, 4, 5),
        Err(RewriteError::HypothesisViolated(_))
    ));
    assert_eq!(
        construct_hamilton_path(&Graph::complete(5), 1, 1),
        Err(RewriteError::SameEndpoints(1))
    );
}

#[test]
fn law_checkers_find_no_violations_on_samples() {
    for g in [
        Graph::cycle(5),
        Graph::cycle(6),
        Graph::path(5),
        Graph::complete(5),
        join(&Graph::complete(2), &Graph::empty(3).unwrap()).unwrap(),
        join(&Graph::empty(3).unwrap(), &Graph::empty(3).unwrap()).unwrap(),
    ] {
        let r = check_maximal_path_laws(&g);
        assert!(r.violations.is_empty(), "{g:?}: {:?}", r.violations);
        let r = check_virtual_edge_laws(&g);
        assert!(r.violations.is_empty(), "{g:?}: {:?}", r.violations);
    }
}

#[test]
fn replay_rejects_malformed_traces() {
    let g = Graph::complete(4);
    assert!(matches!(replay_trace(&g, &[]), Err(RewriteError::InvalidTrace(_))));
    let steps = [
        TraceStep::Seed { verts: vec![0, 1], virtual_pos: None },
        TraceStep::Extend { front: false, vertex: 0 },
    ];
    assert!(matches!(replay_trace(&g, &steps), Err(RewriteError::InvalidTrace(_))));
}

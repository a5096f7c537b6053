"""Smoke test for the fanham_py extension module.

Run after `pip install -e python/ --no-build-isolation` (or with the
in-place build artifact on the path):

    python3 python/smoke_test.py
"""

import json

import fanham_py as fp


def main():
    # Graph construction and round trips.
    g = fp.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    assert g.order == 5
    assert g.has_edge(0, 2) and not g.has_edge(1, 3)
    assert fp.Graph.from_graph6(g.to_graph6()) == g
    assert g.connectivity_up_to(3) == 2

    # Bipartite independence number with certificates.
    a = fp.alpha_tilde(g)
    assert a.value == 3, a
    assert a.validate(g)
    s, t = a.witness
    assert s + t == a.value + 1
    assert fp.st_property_hole(g, s, t) is None
    hole = fp.st_property_hole(g, 1, 2)
    assert hole is not None and len(hole[0]) == 1 and len(hole[1]) == 2

    # Hypotheses and exact solvers on a complete graph.
    k5 = fp.Graph.complete(5)
    assert fp.ham_hypothesis(k5) and fp.hc_hypothesis(k5) and fp.is_admissible(k5)
    assert fp.hamilton_cycle(k5) is not None
    assert fp.hamilton_path_between(k5, 0, 3) is not None
    connected, failing = fp.is_hamiltonian_connected(k5)
    assert connected and failing is None

    # Constructive drivers with replayable traces.
    cyc, trace, fallback = fp.construct_hamilton_cycle(k5)
    assert sorted(cyc) == list(range(5)) and not fallback
    assert isinstance(json.loads(trace), list)
    path, _, _ = fp.construct_hamilton_path(k5, 0, 3)
    assert {path[0], path[-1]} == {0, 3}

    # One rewrite step: rotating C5-as-path at the chord 0-2.
    kind, verts = fp.apply_rewrite(g, [1, 0, 2, 3, 4], '{"rule": "RtA", "l": 2}')
    assert kind == "path" and verts == [0, 1, 2, 3, 4]

    # Tightness constructions.
    g2 = fp.build_family("g2", 3)
    assert g2.order == 6 and not fp.is_hamiltonian_connected(g2)[0]
    all_pass, claims = fp.verify_family("g3", 5)
    assert all_pass, claims

    # A small exhaustive harness run.
    summary = json.loads(fp.verify_all_labeled(4, full=True))
    assert summary["graphs"] == 64
    assert summary["counterexamples"] == 0
    assert summary["violation_count"] == 0

    print("smoke test passed")


if __name__ == "__main__":
    main()

//! Python bindings for the fanham graph toolkit.
//!
//! Exposes the graph type, the bipartite independence number with its
//! certificates, the hypothesis checkers, the exact solvers, the rewrite
//! engine with its constructive drivers, the tightness constructions,
//! and the corpus verifier. Structured results (rules, traces, run
//! summaries) cross the boundary as JSON for easy inspection.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fanham::conditions;
use fanham::extremal;
use fanham::graph;
use fanham::harness;
use fanham::hole;
use fanham::rewrite;
use fanham::solver;

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An undirected simple graph on vertices 0..n.
#[pyclass(name = "Graph", from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: graph::Graph,
}

#[pymethods]
impl PyGraph {
    /// Graph with the given order and edge list.
    #[new]
    #[pyo3(signature = (n, edges = vec![]))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: graph::Graph::from_edges(n, &edges).map_err(value_err)? })
    }

    #[staticmethod]
    fn complete(n: usize) -> PyGraph {
        PyGraph { inner: graph::Graph::complete(n) }
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyGraph {
        PyGraph { inner: graph::Graph::cycle(n) }
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: graph::Graph::parse_graph6(text).map_err(value_err)? })
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: graph::Graph::parse_edge_list(text).map_err(value_err)? })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> PyResult<()> {
        self.inner.add_edge(u, v).map_err(value_err)
    }

    fn to_graph6(&self) -> String {
        self.inner.to_graph6()
    }

    fn is_k_connected(&self, k: usize) -> bool {
        self.inner.is_k_connected(k)
    }

    /// Exact vertex connectivity, capped at `cap`.
    fn connectivity_up_to(&self, cap: usize) -> usize {
        self.inner.connectivity_up_to(cap)
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, edges={})", self.inner.n(), self.inner.edge_count())
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

/// The bipartite independence number with its certificates.
#[pyclass(name = "AlphaTilde")]
struct PyAlphaTilde {
    inner: hole::AlphaTildeResult,
}

#[pymethods]
impl PyAlphaTilde {
    #[getter]
    fn value(&self) -> usize {
        self.inner.value
    }

    /// The (s, t) split with s + t = value + 1 that carries a crossing
    /// edge for every disjoint pair.
    #[getter]
    fn witness(&self) -> (usize, usize) {
        (self.inner.witness_s, self.inner.witness_t)
    }

    /// Per (s, t) split summing to the value, an uncrossed pair (A, B)
    /// proving the value cannot be one smaller.
    fn lower_bound_holes(&self) -> Vec<(usize, usize, Vec<usize>, Vec<usize>)> {
        self.inner
            .lower_bound_holes
            .iter()
            .map(|&(s, t, h)| (s, t, h.a.iter().collect(), h.b.iter().collect()))
            .collect()
    }

    /// Re-checks every certificate against the graph.
    fn validate(&self, g: &PyGraph) -> bool {
        self.inner.validate(&g.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "AlphaTilde(value={}, witness=({}, {}))",
            self.inner.value, self.inner.witness_s, self.inner.witness_t
        )
    }
}

/// Exact bipartite independence number with certificates.
#[pyfunction]
fn alpha_tilde(g: &PyGraph) -> PyAlphaTilde {
    PyAlphaTilde { inner: hole::alpha_tilde(&g.inner) }
}

/// Whether every disjoint (s, t) vertex pair carries a crossing edge;
/// returns None when it does, else a violating pair (A, B).
#[pyfunction]
fn st_property_hole(g: &PyGraph, s: usize, t: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    match hole::st_property(&g.inner, s, t) {
        hole::StProperty::Holds => None,
        hole::StProperty::Fails(h) => Some((h.a.iter().collect(), h.b.iter().collect())),
    }
}

/// Hypothesis of the hamiltonicity theorem: order >= 3, 2-connected,
/// degree bound at the bipartite independence number.
#[pyfunction]
fn ham_hypothesis(g: &PyGraph) -> bool {
    conditions::theorem_ham_hypothesis(&g.inner)
}

/// Hypothesis of the hamiltonian-connectedness theorem: 3-connected,
/// degree bound one above the bipartite independence number.
#[pyfunction]
fn hc_hypothesis(g: &PyGraph) -> bool {
    conditions::theorem_hc_hypothesis(&g.inner)
}

#[pyfunction]
fn is_admissible(g: &PyGraph) -> bool {
    conditions::is_admissible(&g.inner)
}

/// Exact solver: a spanning cycle as a vertex list, or None.
#[pyfunction]
fn hamilton_cycle(g: &PyGraph) -> Option<Vec<usize>> {
    solver::hamilton_cycle(&g.inner).map(|c| c.verts)
}

/// Exact solver: a spanning (x, y)-path as a vertex list, or None.
#[pyfunction]
fn hamilton_path_between(g: &PyGraph, x: usize, y: usize) -> PyResult<Option<Vec<usize>>> {
    Ok(solver::hamilton_path_between(&g.inner, x, y)
        .map_err(value_err)?
        .map(|c| c.verts))
}

/// Whether every vertex pair is joined by a spanning path; on failure
/// also the first failing pair.
#[pyfunction]
fn is_hamiltonian_connected(g: &PyGraph) -> (bool, Option<(usize, usize)>) {
    let rep = solver::is_hamiltonian_connected(&g.inner);
    (rep.hamiltonian_connected, rep.failing_pair)
}

/// Builds a spanning cycle by rewriting on a graph satisfying the
/// hamiltonicity hypothesis. Returns (cycle, trace_json, used_fallback).
#[pyfunction]
fn construct_hamilton_cycle(g: &PyGraph) -> PyResult<(Vec<usize>, String, bool)> {
    let res = rewrite::construct_hamilton_cycle(&g.inner).map_err(value_err)?;
    let trace = serde_json::to_string(&res.trace.steps).map_err(value_err)?;
    Ok((res.certificate.verts, trace, res.trace.fallback))
}

/// Builds a spanning (x, y)-path by rewriting on a graph satisfying the
/// hamiltonian-connectedness hypothesis.
#[pyfunction]
fn construct_hamilton_path(
    g: &PyGraph,
    x: usize,
    y: usize,
) -> PyResult<(Vec<usize>, String, bool)> {
    let res = rewrite::construct_hamilton_path(&g.inner, x, y).map_err(value_err)?;
    let trace = serde_json::to_string(&res.trace.steps).map_err(value_err)?;
    Ok((res.certificate.verts, trace, res.trace.fallback))
}

/// Applies one rewrite rule (JSON, e.g. `{"rule": "RtA", "l": 2}`) to a
/// path or cycle; returns ("path" | "cycle", vertex list).
#[pyfunction]
#[pyo3(signature = (g, verts, rule_json, cycle = false, virtual_pos = None))]
fn apply_rewrite(
    g: &PyGraph,
    verts: Vec<usize>,
    rule_json: &str,
    cycle: bool,
    virtual_pos: Option<usize>,
) -> PyResult<(String, Vec<usize>)> {
    let rule: rewrite::RewriteRule = serde_json::from_str(rule_json).map_err(value_err)?;
    let input = if cycle {
        rewrite::PathOrCycle::Cycle(verts)
    } else {
        rewrite::PathOrCycle::Path(rewrite::OrientedPath { verts, virtual_pos })
    };
    match rewrite::apply_rewrite(&g.inner, &input, &rule).map_err(value_err)? {
        rewrite::PathOrCycle::Path(p) => Ok(("path".into(), p.verts)),
        rewrite::PathOrCycle::Cycle(c) => Ok(("cycle".into(), c)),
    }
}

/// Builds a tightness construction ("g1" | "g2" | "g3").
#[pyfunction]
fn build_family(family: &str, parameter: usize) -> PyResult<PyGraph> {
    let family: extremal::Family = family.parse().map_err(value_err)?;
    let spec = extremal::FamilySpec { family, parameter };
    Ok(PyGraph { inner: extremal::build_family(spec).map_err(value_err)? })
}

/// Checks every claimed property of a tightness construction; returns
/// (all_pass, [(claim, pass)]).
#[pyfunction]
fn verify_family(family: &str, parameter: usize) -> PyResult<(bool, Vec<(String, bool)>)> {
    let family: extremal::Family = family.parse().map_err(value_err)?;
    let spec = extremal::FamilySpec { family, parameter };
    let v = extremal::verify_family_claims(spec).map_err(value_err)?;
    Ok((v.all_pass, v.claims.into_iter().map(|c| (c.claim, c.pass)).collect()))
}

/// Runs the verification harness over every labeled graph of the given
/// order and returns the aggregate summary as JSON. `full` also runs the
/// constructive drivers and the structural-law checkers.
#[pyfunction]
#[pyo3(signature = (n, full = false, parallelism = 0))]
fn verify_all_labeled(n: usize, full: bool, parallelism: usize) -> PyResult<String> {
    let config = harness::RunConfig {
        source: harness::GraphSource::AllLabeled { n },
        checks: if full { harness::Checks::ALL } else { harness::Checks::CONCLUSIONS },
        parallelism,
    };
    let summary = harness::verify_corpus(&config, |_| {}).map_err(value_err)?;
    serde_json::to_string(&summary).map_err(value_err)
}

#[pymodule]
fn fanham_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyAlphaTilde>()?;
    m.add_function(wrap_pyfunction!(alpha_tilde, m)?)?;
    m.add_function(wrap_pyfunction!(st_property_hole, m)?)?;
    m.add_function(wrap_pyfunction!(ham_hypothesis, m)?)?;
    m.add_function(wrap_pyfunction!(hc_hypothesis, m)?)?;
    m.add_function(wrap_pyfunction!(is_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(hamilton_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(hamilton_path_between, m)?)?;
    m.add_function(wrap_pyfunction!(is_hamiltonian_connected, m)?)?;
    m.add_function(wrap_pyfunction!(construct_hamilton_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(construct_hamilton_path, m)?)?;
    m.add_function(wrap_pyfunction!(apply_rewrite, m)?)?;
    m.add_function(wrap_pyfunction!(build_family, m)?)?;
    m.add_function(wrap_pyfunction!(verify_family, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all_labeled, m)?)?;
    Ok(())
}

//! Exact machinery around the bipartite independence number α̃(G) and
//! Fan-type degree conditions for hamiltonicity and
//! hamiltonian-connectedness on small graphs (order up to 64):
//!
//! - [`graph`]: bitset graphs, graph6 and edge-list parsing,
//!   connectivity.
//! - [`hole`]: exact α̃ with two-sided certificates.
//! - [`conditions`]: the Fan-type hypotheses and classical conditions.
//! - [`solver`]: exhaustive, certificate-producing Hamilton solvers.
//! - [`rewrite`]: the fourteen path/cycle transformation rules,
//!   constructive drivers with replayable traces, and executable
//!   structural laws.
//! - [`extremal`]: tightness families and their claimed properties.
//! - [`harness`]: corpus verification with per-graph records.

pub mod cli;
pub mod conditions;
pub mod extremal;
pub mod graph;
pub mod harness;
pub mod hole;
pub mod rewrite;
pub mod solver;

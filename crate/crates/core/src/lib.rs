//! Turán numbers and Ramsey numbers for a handful of small-diameter tree
//! families, together with the extremal and Ramsey witness graphs behind
//! them and brute-force oracles that recheck everything at small orders.
//!
//! Module map:
//!
//! * [`graph`]: bitset graphs, graph6, witness descriptors.
//! * [`trees`]: the `path`, `star`, `tprime`, `tstar`, `t1`, `t2` families.
//! * [`containment`]: tree-in-host subgraph search.
//! * [`turan`]: closed-form `ex(p; T)`.
//! * [`ramsey`]: rule table for `r(T_m, T_n)`.
//! * [`constructions`]: extremal and Ramsey witnesses, near-regular graphs,
//!   two-coin representations.
//! * [`oracle`]: isomorphism-free enumeration, exhaustive Turán and Ramsey
//!   checks.
//! * [`acceptance`]: the end-to-end checks behind `trt selftest`.

pub mod acceptance;
pub mod constructions;
pub mod containment;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod ramsey;
pub mod trees;
pub mod turan;

pub use error::{Error, Result};
pub use graph::Graph;
pub use trees::{Family, TreeSpec};

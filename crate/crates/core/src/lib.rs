//! Dyer graphs and the groups they present.
//!
//! A Dyer graph is a finite simplicial graph whose vertices carry orders in
//! `{2, 3, …} ∪ {∞}` and whose edges carry labels `m ≥ 2`, with every edge
//! labelled `m ≠ 2` joining two vertices of order 2. It presents the group
//! generated by its vertices subject to `v^{f(v)} = 1` and the braid relation
//! `vwv… = wvw…` (`m` letters each side) along every edge.
//!
//! * [`graph`] holds the graph model and the graph algorithms.
//! * [`classify`] decides group properties from the graph alone.
//! * [`oracle`] verifies those decisions by computing with presentations.
//! * [`enumerate`] lists small Dyer graphs for exhaustive checks.

pub mod arith;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod oracle;

pub use classify::{
    abelianization_invariants, classify_even_quasi_perfect, component_decomposition, even_quotient,
    graph_product_derived_length, is_even, is_quasi_perfect, is_virtually_free, recognize_finite_coxeter,
    ComponentDecomposition, DerivedLengthClass, EvenQuotientGraph, FiniteCoxeterType, QuasiPerfectFailure,
    QuasiPerfectVerdict, VirtuallyFreeFailure, VirtuallyFreeVerdict,
};
pub use error::{ClassifyError, GraphError, OracleError, Violation, Violations};
pub use graph::{
    validate_dyer, DyerGraph, EdgeLabel, GraphBuilder, IndecomposableWitness, JoinDecomposition, VertexId,
    VertexOrder,
};
pub use oracle::{AbelianInvariants, CosetTable, FiniteGroupTable, GroupPresentation};

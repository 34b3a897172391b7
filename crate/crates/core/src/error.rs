use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeLabel, VertexId};

/// A single reason a vertex/edge list fails to describe a Dyer graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    EmptyVertexSet,
    DuplicateVertex(VertexId),
    UnknownVertex(VertexId),
    LoopEdge(VertexId),
    DuplicateEdge(VertexId, VertexId),
    /// An edge labelled `m != 2` touches a vertex whose order is not 2.
    DyerConditionViolated(VertexId, VertexId, EdgeLabel),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyVertexSet => write!(f, "the vertex set is empty"),
            Violation::DuplicateVertex(v) => write!(f, "vertex {v} is declared more than once"),
            Violation::UnknownVertex(v) => write!(f, "edge endpoint {v} is not a declared vertex"),
            Violation::LoopEdge(v) => write!(f, "loop edge at {v}"),
            Violation::DuplicateEdge(u, v) => write!(f, "edge {{{u},{v}}} is declared more than once"),
            Violation::DyerConditionViolated(u, v, m) => write!(
                f,
                "edge {{{u},{v}}} has label {m} but its endpoints do not both have order 2"
            ),
        }
    }
}

/// All violations found while validating a graph, in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violations(pub Vec<Violation>);

impl fmt::Display for Violations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for Violations {}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid vertex name {0:?}: expected letters, digits or underscore")]
    InvalidName(String),
    #[error("vertex order must be an integer >= 2 or inf, got {0}")]
    InvalidOrder(u64),
    #[error("edge label must be an integer >= 2, got {0}")]
    InvalidLabel(u64),
    #[error("invalid Dyer graph: {0}")]
    Invalid(Violations),
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("graph has an odd edge label")]
    NotEven,
    #[error("graph has an edge label other than 2")]
    NotGraphProduct,
    #[error("graph has a vertex of order other than 2")]
    NotCoxeter,
    #[error("graph is not complete")]
    NotComplete,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("the abelianization is infinite")]
    InfiniteAbelianization,
    #[error("coset table is incompatible with the presentation: {0}")]
    IncompatibleTable(String),
    #[error("coset enumeration exceeded {0} cosets (inconclusive)")]
    Exceeded(usize),
    #[error("{0} is too large for this computation")]
    TooLarge(String),
}

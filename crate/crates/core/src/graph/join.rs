use super::{DyerGraph, VertexId};
use crate::error::GraphError;

/// Partition of the vertex set into join factors.
///
/// Factors are the connected components of the complement graph, so every
/// pair of vertices in different factors is an edge and no factor is itself a
/// join.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinDecomposition {
    pub factors: Vec<Vec<usize>>,
}

impl JoinDecomposition {
    pub fn is_indecomposable(&self) -> bool {
        self.factors.len() == 1
    }

    /// Re-checks the decomposition against `g`: the factors partition the
    /// vertex set, all cross-factor pairs are edges, and each factor has a
    /// connected complement.
    pub fn verify(&self, g: &DyerGraph) -> bool {
        let n = g.len();
        let mut owner = vec![usize::MAX; n];
        for (k, factor) in self.factors.iter().enumerate() {
            if factor.is_empty() {
                return false;
            }
            for &v in factor {
                if v >= n || owner[v] != usize::MAX {
                    return false;
                }
                owner[v] = k;
            }
        }
        if owner.contains(&usize::MAX) {
            return false;
        }
        for u in 0..n {
            for v in u + 1..n {
                if owner[u] != owner[v] && !g.is_adjacent(u, v) {
                    return false;
                }
            }
        }
        self.factors.iter().all(|factor| {
            let sub = g.induced_on(factor).expect("factor is a nonempty vertex subset");
            sub.complement().connected_components().len() == 1
        })
    }
}

pub fn join_decompose(g: &DyerGraph) -> JoinDecomposition {
    JoinDecomposition { factors: g.complement().connected_components() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// Three pairwise non-adjacent vertices.
    Gamma1,
    /// One edge `{x, y}` plus a vertex `z` adjacent to neither.
    Gamma2,
}

/// Induced three-vertex subgraph certifying an indecomposable graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndecomposableWitness {
    pub kind: WitnessKind,
    pub vertices: [VertexId; 3],
}

impl IndecomposableWitness {
    /// Checks that the induced subgraph on the three vertices has the
    /// declared shape.
    pub fn verify(&self, g: &DyerGraph) -> bool {
        let Some(idx) = self
            .vertices
            .iter()
            .map(|v| g.index_of(v.as_str()))
            .collect::<Option<Vec<usize>>>()
        else {
            return false;
        };
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        if x == y || y == z || x == z {
            return false;
        }
        let xy = g.is_adjacent(x, y);
        let xz = g.is_adjacent(x, z);
        let yz = g.is_adjacent(y, z);
        match self.kind {
            WitnessKind::Gamma1 => !xy && !xz && !yz,
            WitnessKind::Gamma2 => xy && !xz && !yz,
        }
    }
}

/// Finds an induced `Γ₁` or `Γ₂` in an indecomposable graph with at least
/// three vertices, scanning vertex triples in lexicographic order.
pub fn find_indecomposable_witness(g: &DyerGraph) -> Result<IndecomposableWitness, GraphError> {
    let n = g.len();
    if n < 3 {
        return Err(GraphError::PreconditionViolated("fewer than 3 vertices"));
    }
    if !join_decompose(g).is_indecomposable() {
        return Err(GraphError::PreconditionViolated("graph is a join"));
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let ij = g.is_adjacent(i, j);
                let ik = g.is_adjacent(i, k);
                let jk = g.is_adjacent(j, k);
                let found = match (ij, ik, jk) {
                    (false, false, false) => Some((WitnessKind::Gamma1, [i, j, k])),
                    (true, false, false) => Some((WitnessKind::Gamma2, [i, j, k])),
                    (false, true, false) => Some((WitnessKind::Gamma2, [i, k, j])),
                    (false, false, true) => Some((WitnessKind::Gamma2, [j, k, i])),
                    _ => None,
                };
                if let Some((kind, [x, y, z])) = found {
                    return Ok(IndecomposableWitness {
                        kind,
                        vertices: [g.name(x).clone(), g.name(y).clone(), g.name(z).clone()],
                    });
                }
            }
        }
    }
    // An indecomposable graph has a connected complement; with three or more
    // vertices that complement contains an induced path or triangle, which is
    // exactly one of the two patterns above.
    unreachable!("indecomposable graph without Γ₁/Γ₂ witness")
}

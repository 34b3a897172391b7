use super::coxeter::{recognize_finite_coxeter, FiniteCoxeterType};
use crate::graph::{is_chordal, maximal_cliques, verify_chordless_cycle, Chordality, DyerGraph, VertexId};

/// The first graph condition that rules out virtual freeness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VirtuallyFreeFailure {
    /// An edge joins two vertices of infinite order.
    InfiniteOrderEdge(VertexId, VertexId),
    /// `u` has infinite order and is adjacent to the finite-order vertices
    /// `v` and `w`, which are not adjacent to each other.
    MissingTriangle(VertexId, VertexId, VertexId),
    /// Induced cycle of length at least 4.
    NotChordal(Vec<VertexId>),
    /// Maximal clique of order-2 vertices whose Coxeter group is infinite.
    InfiniteCoxeterClique(Vec<VertexId>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtuallyFreeVerdict {
    pub result: bool,
    pub failure: Option<VirtuallyFreeFailure>,
}

impl VirtuallyFreeFailure {
    pub fn verify(&self, g: &DyerGraph) -> bool {
        let idx = |v: &VertexId| g.index_of(v.as_str());
        match self {
            VirtuallyFreeFailure::InfiniteOrderEdge(u, v) => match (idx(u), idx(v)) {
                (Some(u), Some(v)) => {
                    g.is_adjacent(u, v) && !g.order(u).is_finite() && !g.order(v).is_finite()
                }
                _ => false,
            },
            VirtuallyFreeFailure::MissingTriangle(u, v, w) => match (idx(u), idx(v), idx(w)) {
                (Some(u), Some(v), Some(w)) => {
                    v != w
                        && !g.order(u).is_finite()
                        && g.order(v).is_finite()
                        && g.order(w).is_finite()
                        && g.is_adjacent(u, v)
                        && g.is_adjacent(u, w)
                        && !g.is_adjacent(v, w)
                }
                _ => false,
            },
            VirtuallyFreeFailure::NotChordal(cycle) => cycle
                .iter()
                .map(idx)
                .collect::<Option<Vec<usize>>>()
                .is_some_and(|c| verify_chordless_cycle(g, &c)),
            VirtuallyFreeFailure::InfiniteCoxeterClique(clique) => {
                let Some(c) = clique.iter().map(idx).collect::<Option<Vec<usize>>>() else {
                    return false;
                };
                let Ok(sub) = g.induced_on(&c) else { return false };
                matches!(recognize_finite_coxeter(&sub), Ok(FiniteCoxeterType::NotFinite { .. }))
            }
        }
    }
}

fn fail(failure: VirtuallyFreeFailure) -> VirtuallyFreeVerdict {
    VirtuallyFreeVerdict { result: false, failure: Some(failure) }
}

/// Checks the four graph conditions characterising virtually free Dyer
/// groups, in order, returning the first violation.
pub fn is_virtually_free(g: &DyerGraph) -> VirtuallyFreeVerdict {
    let n = g.len();
    for (u, v, _) in g.edges() {
        if !g.order(u).is_finite() && !g.order(v).is_finite() {
            return fail(VirtuallyFreeFailure::InfiniteOrderEdge(g.name(u).clone(), g.name(v).clone()));
        }
    }
    for u in (0..n).filter(|&u| !g.order(u).is_finite()) {
        let finite: Vec<usize> =
            g.neighbors(u).iter().map(|&(w, _)| w).filter(|&w| g.order(w).is_finite()).collect();
        for (i, &v) in finite.iter().enumerate() {
            for &w in &finite[i + 1..] {
                if !g.is_adjacent(v, w) {
                    return fail(VirtuallyFreeFailure::MissingTriangle(
                        g.name(u).clone(),
                        g.name(v).clone(),
                        g.name(w).clone(),
                    ));
                }
            }
        }
    }
    if let Chordality::NotChordal { cycle } = is_chordal(g) {
        return fail(VirtuallyFreeFailure::NotChordal(g.names_of(&cycle)));
    }
    let involutions: Vec<usize> = (0..n).filter(|&v| g.order(v).is_two()).collect();
    if !involutions.is_empty() {
        let coxeter_part = g.induced_on(&involutions).expect("nonempty subset");
        for clique in maximal_cliques(&coxeter_part) {
            let sub = coxeter_part.induced_on(&clique).expect("nonempty clique");
            let kind = recognize_finite_coxeter(&sub).expect("clique of order-2 vertices");
            if !kind.is_finite() {
                return fail(VirtuallyFreeFailure::InfiniteCoxeterClique(coxeter_part.names_of(&clique)));
            }
        }
    }
    VirtuallyFreeVerdict { result: true, failure: None }
}

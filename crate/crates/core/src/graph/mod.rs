//! Vertex- and edge-labelled simplicial graphs satisfying the Dyer condition,
//! together with the purely graph-theoretic algorithms the classifiers use.
//!
//! Vertices are stored in lexicographic order of their names, so a vertex
//! index `i < j` always means `name(i) < name(j)`. Every set-valued result in
//! this module is a sorted list of such indices.

mod chordal;
mod cliques;
mod join;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::is_prime;
use crate::error::{GraphError, Violation, Violations};

pub use chordal::{is_chordal, verify_chordless_cycle, verify_elimination_order, Chordality};
pub use cliques::maximal_cliques;
pub use join::{
    find_indecomposable_witness, join_decompose, IndecomposableWitness, JoinDecomposition,
    WitnessKind,
};

/// Name of a vertex: a nonempty token of ASCII letters, digits and underscores.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self, GraphError> {
        let name = name.into();
        if is_token(&name) {
            Ok(VertexId(name))
        } else {
            Err(GraphError::InvalidName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_token(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for VertexId {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VertexId::new(s)
    }
}

/// Order of a vertex generator: a finite integer `>= 2` or infinity.
///
/// The derived ordering puts every finite order below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexOrder {
    Finite(u64),
    Infinite,
}

impl VertexOrder {
    pub fn finite(n: u64) -> Result<Self, GraphError> {
        if n >= 2 {
            Ok(VertexOrder::Finite(n))
        } else {
            Err(GraphError::InvalidOrder(n))
        }
    }

    pub fn value(self) -> Option<u64> {
        match self {
            VertexOrder::Finite(n) => Some(n),
            VertexOrder::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, VertexOrder::Finite(_))
    }

    pub fn is_two(self) -> bool {
        self == VertexOrder::Finite(2)
    }
}

impl fmt::Display for VertexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexOrder::Finite(n) => write!(f, "{n}"),
            VertexOrder::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for VertexOrder {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(VertexOrder::Infinite);
        }
        let n: u64 = s.parse().map_err(|_| GraphError::InvalidOrder(0))?;
        VertexOrder::finite(n)
    }
}

/// Edge label `m >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeLabel(u64);

impl EdgeLabel {
    pub fn new(m: u64) -> Result<Self, GraphError> {
        if m >= 2 {
            Ok(EdgeLabel(m))
        } else {
            Err(GraphError::InvalidLabel(m))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A Dyer graph `(Γ, m, f)`.
///
/// Immutable once built; the only constructor is [`validate_dyer`] (or the
/// [`GraphBuilder`] wrapper around it), so every value satisfies the
/// simplicial and Dyer invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyerGraph {
    names: Vec<VertexId>,
    orders: Vec<VertexOrder>,
    adjacency: Vec<Vec<(usize, EdgeLabel)>>,
}

/// Checks a vertex and edge list and builds the graph, or reports every
/// violation found.
pub fn validate_dyer(
    vertices: Vec<(VertexId, VertexOrder)>,
    edges: Vec<(VertexId, VertexId, EdgeLabel)>,
) -> Result<DyerGraph, Violations> {
    let mut violations = Vec::new();
    if vertices.is_empty() {
        violations.push(Violation::EmptyVertexSet);
    }
    let mut order_of: BTreeMap<VertexId, VertexOrder> = BTreeMap::new();
    for (v, f) in vertices {
        if order_of.contains_key(&v) {
            violations.push(Violation::DuplicateVertex(v));
        } else {
            order_of.insert(v, f);
        }
    }
    let mut edge_map: BTreeMap<(VertexId, VertexId), EdgeLabel> = BTreeMap::new();
    for (u, v, m) in edges {
        if u == v {
            violations.push(Violation::LoopEdge(u));
            continue;
        }
        let mut endpoints_known = true;
        for w in [&u, &v] {
            if !order_of.contains_key(w) {
                violations.push(Violation::UnknownVertex(w.clone()));
                endpoints_known = false;
            }
        }
        let key = if u < v { (u, v) } else { (v, u) };
        if edge_map.contains_key(&key) {
            violations.push(Violation::DuplicateEdge(key.0, key.1));
            continue;
        }
        if endpoints_known
            && m.get() != 2
            && !(order_of[&key.0].is_two() && order_of[&key.1].is_two())
        {
            violations.push(Violation::DyerConditionViolated(
                key.0.clone(),
                key.1.clone(),
                m,
            ));
        }
        edge_map.insert(key, m);
    }
    if !violations.is_empty() {
        violations.sort();
        violations.dedup();
        return Err(Violations(violations));
    }

    let names: Vec<VertexId> = order_of.keys().cloned().collect();
    let orders: Vec<VertexOrder> = order_of.values().copied().collect();
    let index: BTreeMap<&VertexId, usize> = names.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut adjacency = vec![Vec::new(); names.len()];
    for ((u, v), m) in &edge_map {
        let (i, j) = (index[u], index[v]);
        adjacency[i].push((j, *m));
        adjacency[j].push((i, *m));
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(DyerGraph { names, orders, adjacency })
}

/// Convenience constructor taking plain strings and integers.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    vertices: Vec<(String, VertexOrder)>,
    edges: Vec<(String, String, u64)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, name: &str, order: u64) -> Self {
        self.vertices.push((name.to_owned(), VertexOrder::Finite(order)));
        self
    }

    pub fn vertex_inf(mut self, name: &str) -> Self {
        self.vertices.push((name.to_owned(), VertexOrder::Infinite));
        self
    }

    pub fn vertex_with(mut self, name: &str, order: VertexOrder) -> Self {
        self.vertices.push((name.to_owned(), order));
        self
    }

    pub fn edge(mut self, u: &str, v: &str, label: u64) -> Self {
        self.edges.push((u.to_owned(), v.to_owned(), label));
        self
    }

    pub fn build(self) -> Result<DyerGraph, GraphError> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for (name, order) in self.vertices {
            if let VertexOrder::Finite(n) = order {
                VertexOrder::finite(n)?;
            }
            vertices.push((VertexId::new(name)?, order));
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (u, v, m) in self.edges {
            edges.push((VertexId::new(u)?, VertexId::new(v)?, EdgeLabel::new(m)?));
        }
        validate_dyer(vertices, edges).map_err(GraphError::Invalid)
    }
}

impl DyerGraph {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false: a Dyer graph has at least one vertex.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[VertexId] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &VertexId {
        &self.names[v]
    }

    pub fn orders(&self) -> &[VertexOrder] {
        &self.orders
    }

    pub fn order(&self, v: usize) -> VertexOrder {
        self.orders[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    /// Neighbours of `v` with edge labels, sorted by neighbour index.
    pub fn neighbors(&self, v: usize) -> &[(usize, EdgeLabel)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn label(&self, u: usize, v: usize) -> Option<EdgeLabel> {
        let list = &self.adjacency[u];
        list.binary_search_by(|(w, _)| w.cmp(&v)).ok().map(|k| list[k].1)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.label(u, v).is_some()
    }

    /// Edges `(u, v, m)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeLabel)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter().filter(move |(v, _)| *v > u).map(move |&(v, m)| (u, v, m))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Unlabelled adjacency lists.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        self.adjacency.iter().map(|l| l.iter().map(|&(v, _)| v).collect()).collect()
    }

    pub fn vertex_list(&self) -> Vec<(VertexId, VertexOrder)> {
        self.names.iter().cloned().zip(self.orders.iter().copied()).collect()
    }

    pub fn edge_list(&self) -> Vec<(VertexId, VertexId, EdgeLabel)> {
        self.edges().map(|(u, v, m)| (self.names[u].clone(), self.names[v].clone(), m)).collect()
    }

    pub fn names_of(&self, set: &[usize]) -> Vec<VertexId> {
        set.iter().map(|&v| self.names[v].clone()).collect()
    }

    /// Subgraph induced on the given vertex indices.
    pub fn induced_on(&self, subset: &[usize]) -> Result<DyerGraph, GraphError> {
        if subset.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        let mut keep: Vec<usize> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.len()) {
            return Err(GraphError::UnknownVertex(format!("#{bad}")));
        }
        let mut position = vec![usize::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            position[old] = new;
        }
        let adjacency = keep
            .iter()
            .map(|&old| {
                self.adjacency[old]
                    .iter()
                    .filter(|(w, _)| position[*w] != usize::MAX)
                    .map(|&(w, m)| (position[w], m))
                    .collect()
            })
            .collect();
        Ok(DyerGraph {
            names: keep.iter().map(|&v| self.names[v].clone()).collect(),
            orders: keep.iter().map(|&v| self.orders[v]).collect(),
            adjacency,
        })
    }

    /// Subgraph induced on the named vertices.
    pub fn induced_subgraph<S: AsRef<str>>(&self, subset: &[S]) -> Result<DyerGraph, GraphError> {
        let mut indices = Vec::with_capacity(subset.len());
        for name in subset {
            let name = name.as_ref();
            indices.push(self.index_of(name).ok_or_else(|| GraphError::UnknownVertex(name.to_owned()))?);
        }
        self.induced_on(&indices)
    }

    /// `Γᵖ`: the same vertices, keeping only edges whose label `p` does not divide.
    pub fn label_filtered(&self, p: u64) -> Result<DyerGraph, GraphError> {
        if !is_prime(p) {
            return Err(GraphError::NotPrime(p));
        }
        Ok(self.filter_edges(|m| m.get() % p != 0))
    }

    pub(crate) fn filter_edges(&self, keep: impl Fn(EdgeLabel) -> bool) -> DyerGraph {
        DyerGraph {
            names: self.names.clone(),
            orders: self.orders.clone(),
            adjacency: self
                .adjacency
                .iter()
                .map(|l| l.iter().copied().filter(|&(_, m)| keep(m)).collect())
                .collect(),
        }
    }

    /// Connected components, each sorted, listed by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        components(&self.adjacency_lists())
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    pub fn complement(&self) -> UnlabelledGraph {
        let n = self.len();
        let adjacency = (0..n)
            .map(|u| {
                let mut adjacent = vec![false; n];
                for &(v, _) in &self.adjacency[u] {
                    adjacent[v] = true;
                }
                (0..n).filter(|&v| v != u && !adjacent[v]).collect()
            })
            .collect();
        UnlabelledGraph { names: self.names.clone(), adjacency }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.len();
        self.adjacency.iter().all(|l| l.len() == n - 1)
    }

    pub fn is_discrete(&self) -> bool {
        self.adjacency.iter().all(Vec::is_empty)
    }

    /// Same graph with vertices renamed; `rename` must be injective.
    pub fn renamed(&self, rename: impl Fn(&VertexId) -> VertexId) -> Result<DyerGraph, Violations> {
        let vertices = self.names.iter().map(&rename).zip(self.orders.iter().copied()).collect();
        let edges = self.edges().map(|(u, v, m)| (rename(&self.names[u]), rename(&self.names[v]), m)).collect();
        validate_dyer(vertices, edges)
    }
}

/// Graph without labels; used for complements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnlabelledGraph {
    pub names: Vec<VertexId>,
    pub adjacency: Vec<Vec<usize>>,
}

impl UnlabelledGraph {
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        components(&self.adjacency)
    }
}

pub(crate) fn components(adjacency: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adjacency.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut part = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    part.push(w);
                    stack.push(w);
                }
            }
        }
        part.sort_unstable();
        out.push(part);
    }
    out
}

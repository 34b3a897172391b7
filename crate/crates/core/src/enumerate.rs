//! Exhaustive enumeration of small Dyer graphs.
//!
//! A graph on `n` vertices is encoded as a vertex code per vertex (an index
//! into the order pool) followed by a pair code per vertex pair `i < j` in
//! lexicographic order (0 for no edge, `k + 1` for the `k`-th label of the
//! label pool). Vertices are named `v0, v1, …`.

use crate::graph::{DyerGraph, EdgeLabel, VertexId, VertexOrder};

/// Order and label pools for an enumeration.
#[derive(Clone, Debug)]
pub struct Pools {
    pub orders: Vec<VertexOrder>,
    pub labels: Vec<u64>,
}

impl Pools {
    pub fn new(orders: &[VertexOrder], labels: &[u64]) -> Self {
        Pools { orders: orders.to_vec(), labels: labels.to_vec() }
    }

    /// Pair codes allowed between vertices with the given order codes.
    fn allowed(&self, a: usize, b: usize) -> Vec<u8> {
        let both_two = self.orders[a].is_two() && self.orders[b].is_two();
        let mut codes = vec![0u8];
        for (k, &m) in self.labels.iter().enumerate() {
            if m == 2 || both_two {
                codes.push(k as u8 + 1);
            }
        }
        codes
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Vertex name used by the enumerators.
pub fn vertex_name(i: usize) -> String {
    format!("v{i}")
}

fn build(pools: &Pools, vertex_codes: &[usize], pair_list: &[(usize, usize)], pair_codes: &[u8]) -> DyerGraph {
    let vertices = vertex_codes
        .iter()
        .enumerate()
        .map(|(i, &c)| (VertexId::new(vertex_name(i)).expect("valid name"), pools.orders[c]))
        .collect();
    let edges = pair_list
        .iter()
        .zip(pair_codes)
        .filter(|(_, &c)| c != 0)
        .map(|(&(i, j), &c)| {
            (
                VertexId::new(vertex_name(i)).expect("valid name"),
                VertexId::new(vertex_name(j)).expect("valid name"),
                EdgeLabel::new(pools.labels[c as usize - 1]).expect("label pool entries are at least 2"),
            )
        })
        .collect();
    crate::graph::validate_dyer(vertices, edges).expect("enumerated graphs satisfy the Dyer condition")
}

/// Advances a mixed-radix counter; false once it wraps around.
fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for k in (0..digits.len()).rev() {
        digits[k] += 1;
        if digits[k] < radix(k) {
            return true;
        }
        digits[k] = 0;
    }
    false
}

/// Calls `visit` with the vertex codes and pair codes of every valid Dyer
/// graph on `n` vertices over the pools.
fn for_each_code(n: usize, pools: &Pools, mut visit: impl FnMut(&[usize], &[u8])) {
    if n == 0 || pools.orders.is_empty() {
        return;
    }
    let pair_list = pairs(n);
    let mut vertex_codes = vec![0usize; n];
    loop {
        let allowed: Vec<Vec<u8>> = pair_list.iter().map(|&(i, j)| pools.allowed(vertex_codes[i], vertex_codes[j])).collect();
        let mut choice = vec![0usize; pair_list.len()];
        let mut pair_codes = vec![0u8; pair_list.len()];
        loop {
            for (k, &c) in choice.iter().enumerate() {
                pair_codes[k] = allowed[k][c];
            }
            visit(&vertex_codes, &pair_codes);
            if !advance(&mut choice, |k| allowed[k].len()) {
                break;
            }
        }
        if !advance(&mut vertex_codes, |_| pools.orders.len()) {
            return;
        }
    }
}

/// Every valid Dyer graph on exactly `n` labelled vertices over the pools.
pub fn for_each_labelled(n: usize, pools: &Pools, mut visit: impl FnMut(&DyerGraph)) {
    let pair_list = pairs(n);
    for_each_code(n, pools, |v, p| visit(&build(pools, v, &pair_list, p)));
}

/// One representative per isomorphism class of valid Dyer graphs on `n`
/// vertices: the one whose code is lexicographically least among all vertex
/// relabellings.
pub fn for_each_up_to_isomorphism(n: usize, pools: &Pools, mut visit: impl FnMut(&DyerGraph)) {
    let pair_list = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in pair_list.iter().enumerate() {
        index[i][j] = k;
        index[j][i] = k;
    }
    let perms = permutations(n);
    for_each_code(n, pools, |v, p| {
        let canonical = perms.iter().all(|sigma| {
            let image_vertices = sigma.iter().map(|&s| v[s]);
            let image_pairs = pair_list.iter().map(|&(i, j)| p[index[sigma[i]][sigma[j]]] as usize);
            let original = v.iter().copied().chain(p.iter().map(|&c| c as usize));
            image_vertices.chain(image_pairs).cmp(original) != std::cmp::Ordering::Less
        });
        if canonical {
            visit(&build(pools, v, &pair_list, p));
        }
    });
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permute(&mut current, 0, &mut out);
    out
}

fn permute(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permute(current, k + 1, out);
        current.swap(k, i);
    }
}

/// Every simple graph on `n` labelled vertices, as a Dyer graph with all
/// orders and labels 2.
pub fn for_each_simple_graph(n: usize, visit: impl FnMut(&DyerGraph)) {
    let two = VertexOrder::finite(2).expect("2 is a valid order");
    for_each_labelled(n, &Pools::new(&[two], &[2]), visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(values: &[u64]) -> Vec<VertexOrder> {
        values.iter().map(|&f| VertexOrder::finite(f).unwrap()).collect()
    }

    #[test]
    fn labelled_counts() {
        // Order-2 vertices only: every pair is absent or takes any label.
        let pools = Pools::new(&orders(&[2]), &[2, 3]);
        let mut count = 0;
        for_each_labelled(3, &pools, |_| count += 1);
        assert_eq!(count, 27);
        // f ∈ {2,3}, labels {2,3} on two vertices: (2,2) allows 3 codes, the
        // other three order pairs allow 2.
        let pools = Pools::new(&orders(&[2, 3]), &[2, 3]);
        let mut count = 0;
        for_each_labelled(2, &pools, |_| count += 1);
        assert_eq!(count, 3 + 2 * 3);
    }

    #[test]
    fn isomorphism_classes_of_simple_graphs() {
        // OEIS A000088: 1, 2, 4, 11, 34, 156.
        for (n, expected) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            let pools = Pools::new(&orders(&[2]), &[2]);
            let mut count = 0;
            for_each_up_to_isomorphism(n, &pools, |_| count += 1);
            assert_eq!(count, expected, "n = {n}");
        }
    }

    #[test]
    fn two_coloured_graphs_on_three_vertices() {
        // Graphs on 3 vertices with vertices coloured from 2 colours, up to
        // isomorphism: 20 orbits.
        let pools = Pools::new(&orders(&[2, 3]), &[2]);
        let mut count = 0;
        for_each_up_to_isomorphism(3, &pools, |_| count += 1);
        assert_eq!(count, 20);
    }
}

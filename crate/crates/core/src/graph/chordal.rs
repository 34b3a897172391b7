use std::collections::VecDeque;

use super::DyerGraph;

/// Result of chordality recognition, with a certificate either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering: for each vertex, its neighbours later
    /// in the order form a clique.
    Chordal { elimination_order: Vec<usize> },
    /// An induced cycle of length at least 4, listed in cycle order.
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Maximum cardinality search; the reverse visiting order is a perfect
/// elimination ordering exactly when the graph is chordal.
fn maximum_cardinality_search(g: &DyerGraph) -> Vec<usize> {
    let n = g.len();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        // Ties go to the least vertex, keeping the search deterministic.
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for &(w, _) in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order.reverse();
    order
}

/// First vertex (in `order`) whose later neighbours are not a clique, with a
/// non-adjacent pair of those neighbours.
fn first_elimination_failure(g: &DyerGraph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.len();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for &v in order {
        let later: Vec<usize> =
            g.neighbors(v).iter().map(|&(w, _)| w).filter(|&w| position[w] > position[v]).collect();
        for (i, &x) in later.iter().enumerate() {
            for &y in &later[i + 1..] {
                if !g.is_adjacent(x, y) {
                    return Some((v, x, y));
                }
            }
        }
    }
    None
}

pub fn verify_elimination_order(g: &DyerGraph, order: &[usize]) -> bool {
    let n = g.len();
    let mut seen = vec![false; n];
    if order.len() != n {
        return false;
    }
    for &v in order {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    first_elimination_failure(g, order).is_none()
}

/// Checks that `cycle` is an induced cycle of length >= 4 in `g`.
pub fn verify_chordless_cycle(g: &DyerGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k || sorted.iter().any(|&v| v >= g.len()) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.is_adjacent(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Shortest path from `x` to `y` avoiding `v` and every other neighbour of
/// `v`. Closed with `v`, such a path is a chordless cycle.
fn chordless_cycle_through(g: &DyerGraph, v: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let n = g.len();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &(w, _) in g.neighbors(v) {
        if w != x && w != y {
            blocked[w] = true;
        }
    }
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::from([x]);
    parent[x] = x;
    while let Some(u) = queue.pop_front() {
        if u == y {
            break;
        }
        for &(w, _) in g.neighbors(u) {
            if !blocked[w] && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if parent[y] == usize::MAX {
        return None;
    }
    let mut path = vec![y];
    let mut u = y;
    while u != x {
        u = parent[u];
        path.push(u);
    }
    path.reverse();
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(cycle)
}

fn find_chordless_cycle(g: &DyerGraph, hint: (usize, usize, usize)) -> Vec<usize> {
    let (v, x, y) = hint;
    if let Some(cycle) = chordless_cycle_through(g, v, x, y) {
        return cycle;
    }
    for v in 0..g.len() {
        let nbrs: Vec<usize> = g.neighbors(v).iter().map(|&(w, _)| w).collect();
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if !g.is_adjacent(x, y) {
                    if let Some(cycle) = chordless_cycle_through(g, v, x, y) {
                        return cycle;
                    }
                }
            }
        }
    }
    unreachable!("graph failing elimination check must contain a chordless cycle")
}

pub fn is_chordal(g: &DyerGraph) -> Chordality {
    let order = maximum_cardinality_search(g);
    match first_elimination_failure(g, &order) {
        None => Chordality::Chordal { elimination_order: order },
        Some(hint) => Chordality::NotChordal { cycle: find_chordless_cycle(g, hint) },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, final_figure};
    use crate::graph::GraphBuilder;

    fn check(g: &DyerGraph) -> Chordality {
        let c = is_chordal(g);
        match &c {
            Chordality::Chordal { elimination_order } => assert!(verify_elimination_order(g, elimination_order)),
            Chordality::NotChordal { cycle } => assert!(verify_chordless_cycle(g, cycle)),
        }
        c
    }

    #[test]
    fn trees_are_chordal() {
        let g = GraphBuilder::new()
            .vertex("a", 2)
            .vertex("b", 3)
            .vertex("c", 2)
            .vertex("d", 7)
            .edge("a", "b", 2)
            .edge("a", "c", 2)
            .edge("c", "d", 2)
            .build()
            .unwrap();
        assert!(check(&g).is_chordal());
        assert!(check(&complete(5)).is_chordal());
    }

    #[test]
    fn four_cycle_is_its_own_certificate() {
        let g = cycle(4);
        match check(&g) {
            Chordality::NotChordal { cycle } => {
                let mut sorted = cycle.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, vec![0, 1, 2, 3]);
            }
            other => panic!("expected a cycle, got {other:?}"),
        }
        assert!(!check(&cycle(7)).is_chordal());
    }

    #[test]
    fn final_figure_is_chordal() {
        assert!(check(&final_figure()).is_chordal());
    }

    #[test]
    fn certificate_verifiers_reject_bad_input() {
        let g = cycle(5);
        assert!(!verify_chordless_cycle(&g, &[0, 1, 2]));
        assert!(!verify_chordless_cycle(&g, &[0, 1, 2, 4]));
        assert!(verify_chordless_cycle(&g, &[0, 1, 2, 3, 4]));
        assert!(!verify_elimination_order(&g, &[0, 1, 2, 3, 4]));
        assert!(!verify_elimination_order(&g, &[0, 1]));
    }
}

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dyer_core::{GraphBuilder, VertexOrder};

use crate::dyg::DygDocument;

/// Parameters of [`gen_random`].
#[derive(Clone, Debug, PartialEq)]
pub struct GenOptions {
    pub vertices: usize,
    pub seed: u64,
    pub f_pool: Vec<VertexOrder>,
    pub m_pool: Vec<u64>,
    pub edge_prob: f64,
}

impl GenOptions {
    pub fn new(vertices: usize, seed: u64) -> Self {
        GenOptions {
            vertices,
            seed,
            f_pool: vec![VertexOrder::Finite(2), VertexOrder::Finite(3), VertexOrder::Finite(4), VertexOrder::Infinite],
            m_pool: vec![2, 3, 4, 5, 6],
            edge_prob: 0.5,
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Random Dyer graph on vertices `v0, v1, …`. Orders are drawn first, then
/// each pair becomes an edge with probability `edge_prob` and draws a label.
/// An edge labelled `m ≠ 2` resets the orders of its endpoints to 2; each
/// reset is logged as a comment.
///
/// # Panics
/// If a pool is empty, `vertices` is zero, or `edge_prob` is outside `[0, 1]`.
pub fn gen_random(opts: &GenOptions) -> DygDocument {
    assert!(opts.vertices >= 1, "at least one vertex");
    assert!(!opts.f_pool.is_empty() && !opts.m_pool.is_empty(), "pools must be nonempty");
    assert!((0.0..=1.0).contains(&opts.edge_prob), "edge probability must lie in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let n = opts.vertices;
    let name = |i: usize| format!("v{i}");
    let mut orders: Vec<VertexOrder> = (0..n).map(|_| *opts.f_pool.choose(&mut rng).expect("nonempty")).collect();
    let mut edges = Vec::new();
    let mut comments = vec![format!(
        "gen --vertices {n} --seed {} --edge-prob {} --f-pool {} --m-pool {}",
        opts.seed,
        opts.edge_prob,
        join(&opts.f_pool),
        join(&opts.m_pool)
    )];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(opts.edge_prob) {
                let m = *opts.m_pool.choose(&mut rng).expect("nonempty");
                if m != 2 {
                    for v in [i, j] {
                        if !orders[v].is_two() {
                            comments.push(format!("repair: {} order {} -> 2 (edge {} {} {m})", name(v), orders[v], name(i), name(j)));
                            orders[v] = VertexOrder::Finite(2);
                        }
                    }
                }
                edges.push((i, j, m));
            }
        }
    }
    let mut b = GraphBuilder::new();
    for (i, &f) in orders.iter().enumerate() {
        b = b.vertex_with(&name(i), f);
    }
    for (i, j, m) in edges {
        b = b.edge(&name(i), &name(j), m);
    }
    let graph = b.build().expect("repaired graph satisfies the Dyer condition");
    DygDocument { comments, graph }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let doc = gen_random(&GenOptions::new(1, 3));
        assert_eq!(doc.graph.len(), 1);
        assert_eq!(doc.graph.edge_count(), 0);
    }

    #[test]
    fn deterministic_under_seed() {
        let a = gen_random(&GenOptions::new(6, 42)).to_string();
        let b = gen_random(&GenOptions::new(6, 42)).to_string();
        assert_eq!(a, b);
        assert_ne!(a, gen_random(&GenOptions::new(6, 43)).to_string());
    }

    #[test]
    fn dense_graphs_are_repaired() {
        let mut opts = GenOptions::new(5, 1);
        opts.edge_prob = 1.0;
        opts.f_pool = vec![VertexOrder::Finite(3)];
        opts.m_pool = vec![3];
        let doc = gen_random(&opts);
        assert_eq!(doc.graph.edge_count(), 10);
        assert!(doc.graph.orders().iter().all(|f| f.is_two()));
        assert_eq!(doc.comments.iter().filter(|c| c.starts_with("repair:")).count(), 5);
    }
}

use num_integer::Integer;

use super::*;
use crate::graph::tests::{complete, cycle, final_figure};
use crate::oracle::{abelianize_snf, build_presentation};

fn graph(vertices: &[(&str, u64)], edges: &[(&str, &str, u64)]) -> DyerGraph {
    let mut b = GraphBuilder::new();
    for &(v, f) in vertices {
        b = if f == 0 { b.vertex_inf(v) } else { b.vertex(v, f) };
    }
    for &(u, v, m) in edges {
        b = b.edge(u, v, m);
    }
    b.build().unwrap()
}

fn names(g: &DyerGraph, set: &[usize]) -> Vec<String> {
    set.iter().map(|&v| g.name(v).to_string()).collect()
}

#[test]
fn evenness() {
    assert!(is_even(&graph(&[("a", 2), ("b", 3)], &[])));
    assert!(!is_even(&final_figure()));
    let square = graph(
        &[("a", 2), ("b", 2), ("c", 2), ("d", 2)],
        &[("a", "b", 2), ("b", "c", 4), ("c", "d", 2), ("d", "a", 6)],
    );
    assert!(is_even(&square));
}

#[test]
fn even_quasi_perfectness() {
    assert_eq!(classify_even_quasi_perfect(&complete(3)), Ok(true));
    assert_eq!(classify_even_quasi_perfect(&graph(&[("a", 2), ("b", 2)], &[("a", "b", 4)])), Ok(false));
    assert_eq!(classify_even_quasi_perfect(&graph(&[("a", 2), ("b", 2)], &[])), Ok(false));
    assert_eq!(classify_even_quasi_perfect(&final_figure()), Err(ClassifyError::NotEven));
}

#[test]
fn graph_product_classes() {
    use DerivedLengthClass::*;
    let dl = |g: &DyerGraph| graph_product_derived_length(g).unwrap();
    assert_eq!(dl(&graph(&[("a", 0)], &[])), One);
    assert_eq!(dl(&graph(&[("a", 2), ("b", 2)], &[])), Two);
    assert_eq!(dl(&graph(&[("a", 2), ("b", 3)], &[])), Infinite);
    assert_eq!(dl(&graph(&[("a", 2), ("b", 2), ("c", 5)], &[("a", "c", 2), ("b", "c", 2)])), Two);
    assert_eq!(dl(&graph(&[("a", 2), ("b", 2), ("c", 2)], &[])), Infinite);
    assert_eq!(dl(&graph(&[("a", 3), ("b", 0), ("c", 7)], &[("a", "b", 2), ("b", "c", 2), ("a", "c", 2)])), One);
    assert_eq!(graph_product_derived_length(&final_figure()), Err(ClassifyError::NotGraphProduct));
}

#[test]
fn decomposition_of_the_final_figure() {
    let g = final_figure();
    let d = component_decomposition(&g);
    let parts: Vec<Vec<String>> = d.parts.iter().map(|p| names(&g, &p.vertices)).collect();
    assert_eq!(parts, vec![vec!["a", "b", "d"], vec!["c"], vec!["e"]]);
    let reps: Vec<String> = d.parts.iter().map(|p| g.name(p.representative).to_string()).collect();
    assert_eq!(reps, vec!["a", "c", "e"]);
    for part in &d.parts {
        if part.vertices.len() >= 2 {
            assert!(part.vertices.iter().all(|&v| g.order(v).is_two()));
        }
    }
}

#[test]
fn decomposition_small_cases() {
    let even = cycle(4);
    assert_eq!(component_decomposition(&even).parts.len(), 4);
    let odd = graph(&[("v", 2), ("w", 2)], &[("v", "w", 3)]);
    assert_eq!(component_decomposition(&odd).parts.len(), 1);
}

#[test]
fn even_quotient_of_the_final_figure() {
    let q = even_quotient(&final_figure());
    let expected = graph(&[("a", 2), ("c", 3), ("e", 0)], &[("a", "c", 2), ("a", "e", 2), ("c", "e", 2)]);
    assert_eq!(q.graph, expected);
    assert!(q.cross_labels.values().all(|a| a.map(EdgeLabel::get) == Some(2)));
}

#[test]
fn even_quotient_small_cases() {
    let single = even_quotient(&graph(&[("v", 2), ("w", 2)], &[("v", "w", 5)]));
    assert_eq!(single.graph.len(), 1);
    let apart = even_quotient(&graph(&[("v", 2), ("w", 2), ("x", 2)], &[("v", "w", 3)]));
    assert_eq!(apart.graph.len(), 2);
    assert_eq!(apart.graph.edge_count(), 0);
    assert_eq!(apart.cross_labels.get(&(0, 1)), Some(&None));
    // Cross labels 4 and 6 between {a,b} and {c} give gcd 2; 4 alone gives 4.
    let g = graph(&[("a", 2), ("b", 2), ("c", 2), ("d", 2)], &[("a", "b", 3), ("a", "c", 4), ("b", "c", 6), ("c", "d", 4)]);
    let q = even_quotient(&g);
    assert_eq!(q.graph.label(0, 1).map(EdgeLabel::get), Some(2));
    assert_eq!(q.graph.label(1, 2).map(EdgeLabel::get), Some(4));
}

#[test]
fn quasi_perfect_examples() {
    let g = final_figure();
    assert_eq!(is_quasi_perfect(&g), QuasiPerfectVerdict { result: true, failure: None });

    let d10 = graph(&[("v", 2), ("w", 2)], &[("v", "w", 5)]);
    let verdict = is_quasi_perfect(&d10);
    assert!(!verdict.result);
    let failure = verdict.failure.unwrap();
    assert!(matches!(failure, QuasiPerfectFailure::Prime { part: 0, prime: 5, .. }));
    assert!(failure.verify(&d10));

    let free = graph(&[("v", 2), ("w", 2)], &[]);
    let failure = is_quasi_perfect(&free).failure.unwrap();
    assert!(matches!(failure, QuasiPerfectFailure::Pair { first: 0, second: 1, .. }));
    assert!(failure.verify(&free));

    let tri = graph(&[("a", 2), ("b", 2), ("c", 2)], &[("a", "b", 5), ("b", "c", 3), ("a", "c", 2)]);
    assert!(is_quasi_perfect(&tri).result);
    assert!(is_quasi_perfect(&complete(4)).result);
}

#[test]
fn cross_labels_with_gcd_two_suffice() {
    // The H3 triangle is one part; d meets it only through labels 4 and 6.
    let g = graph(
        &[("a", 2), ("b", 2), ("c", 2), ("d", 2)],
        &[("a", "b", 5), ("b", "c", 3), ("a", "c", 2), ("d", "a", 4), ("d", "b", 6)],
    );
    assert!(is_quasi_perfect(&g).result);
    assert!(crate::oracle::oracle_quasi_perfect(&g).unwrap());
    // With 4 alone the gcd is 4 and the pair fails.
    let h = graph(&[("a", 2), ("b", 2), ("c", 2), ("d", 2)], &[("a", "b", 5), ("b", "c", 3), ("a", "c", 2), ("d", "a", 4)]);
    let failure = is_quasi_perfect(&h).failure.unwrap();
    assert!(matches!(failure, QuasiPerfectFailure::Pair { first: 0, second: 1, .. }));
    assert!(failure.verify(&h));
    assert!(!crate::oracle::oracle_quasi_perfect(&h).unwrap());
}

#[test]
fn certificates_reject_wrong_claims() {
    let g = graph(&[("v", 2), ("w", 2)], &[("v", "w", 6)]);
    let v = VertexId::new("v").unwrap();
    let w = VertexId::new("w").unwrap();
    let bad_prime = QuasiPerfectFailure::Prime { part: 0, prime: 5, pieces: vec![vec![v.clone()], vec![w.clone()]] };
    assert!(!bad_prime.verify(&g));
    let tied = graph(&[("v", 2), ("w", 2)], &[("v", "w", 2)]);
    let bad_pair = QuasiPerfectFailure::Pair { first: 0, second: 1, first_part: vec![v], second_part: vec![w] };
    assert!(!bad_pair.verify(&tied));
}

#[test]
fn abelianization_closed_form() {
    let a3 = graph(&[("a", 2), ("b", 2), ("c", 2)], &[("a", "b", 3), ("b", "c", 3)]);
    assert_eq!(abelianization_invariants(&a3), vec![VertexOrder::Finite(2)]);
    assert_eq!(
        abelianization_invariants(&final_figure()),
        vec![VertexOrder::Finite(2), VertexOrder::Finite(3), VertexOrder::Infinite]
    );
    assert_eq!(abelianization_invariants(&graph(&[("a", 7)], &[])), vec![VertexOrder::Finite(7)]);
}

#[test]
fn invariant_factor_regrouping() {
    let f = |xs: &[u64]| xs.iter().map(|&x| VertexOrder::Finite(x)).collect::<Vec<_>>();
    assert_eq!(invariant_factors(&f(&[2, 3])).torsion, vec![6]);
    assert_eq!(invariant_factors(&f(&[2, 4, 6])).torsion, vec![2, 2, 12]);
    assert_eq!(invariant_factors(&[VertexOrder::Infinite]), AbelianInvariants { torsion: vec![], free_rank: 1 });
    let figure = invariant_factors(&abelianization_invariants(&final_figure()));
    assert_eq!(figure, AbelianInvariants { torsion: vec![6], free_rank: 1 });
    assert_eq!(abelianize_snf(&build_presentation(&final_figure())), figure);
}

#[test]
fn virtual_freeness_examples() {
    assert_eq!(is_virtually_free(&final_figure()), VirtuallyFreeVerdict { result: true, failure: None });

    let c4 = cycle(4);
    let verdict = is_virtually_free(&c4);
    assert!(matches!(verdict.failure, Some(VirtuallyFreeFailure::NotChordal(_))));
    assert!(verdict.failure.unwrap().verify(&c4));

    let affine = graph(&[("a", 2), ("b", 2), ("c", 2)], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 3)]);
    let failure = is_virtually_free(&affine).failure.unwrap();
    assert!(matches!(failure, VirtuallyFreeFailure::InfiniteCoxeterClique(_)));
    assert!(failure.verify(&affine));

    let infinite_edge = graph(&[("u", 0), ("v", 0)], &[("u", "v", 2)]);
    let failure = is_virtually_free(&infinite_edge).failure.unwrap();
    assert!(matches!(failure, VirtuallyFreeFailure::InfiniteOrderEdge(_, _)));
    assert!(failure.verify(&infinite_edge));

    let open_star = graph(&[("u", 0), ("v", 3), ("w", 2)], &[("u", "v", 2), ("u", "w", 2)]);
    let failure = is_virtually_free(&open_star).failure.unwrap();
    assert!(matches!(failure, VirtuallyFreeFailure::MissingTriangle(_, _, _)));
    assert!(failure.verify(&open_star));
}

mod properties {
    use proptest::prelude::*;

    use super::*;
    use crate::enumerate::{for_each_labelled, Pools};
    use crate::oracle::{derived_subgroup, oracle_quasi_perfect};

    fn order_pool() -> Vec<VertexOrder> {
        vec![VertexOrder::Finite(2), VertexOrder::Finite(3), VertexOrder::Finite(4), VertexOrder::Infinite]
    }

    /// Random valid Dyer graph: labels are drawn first and orders are forced
    /// to 2 at the endpoints of edges labelled `m ≠ 2`.
    pub(crate) fn dyer_graph(max_vertices: usize) -> impl Strategy<Value = DyerGraph> {
        (1..=max_vertices).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                proptest::collection::vec(0..order_pool().len(), n),
                proptest::collection::vec(prop_oneof![Just(0u64), Just(2), Just(3), Just(4), Just(5), Just(6)], pairs),
            )
                .prop_map(move |(orders, labels)| {
                    let mut f: Vec<VertexOrder> = orders.iter().map(|&k| order_pool()[k]).collect();
                    let mut k = 0;
                    let mut edges = Vec::new();
                    for i in 0..n {
                        for j in i + 1..n {
                            if labels[k] != 0 {
                                edges.push((i, j, labels[k]));
                                if labels[k] != 2 {
                                    f[i] = VertexOrder::Finite(2);
                                    f[j] = VertexOrder::Finite(2);
                                }
                            }
                            k += 1;
                        }
                    }
                    let mut b = GraphBuilder::new();
                    for (i, &order) in f.iter().enumerate() {
                        b = b.vertex_with(&format!("x{i}"), order);
                    }
                    for (i, j, m) in edges {
                        b = b.edge(&format!("x{i}"), &format!("x{j}"), m);
                    }
                    b.build().unwrap()
                })
        })
    }

    fn shuffled_names(g: &DyerGraph, seed: u64) -> DyerGraph {
        // A bijection on names that scrambles their lexicographic order.
        let n = g.len() as u64;
        g.renamed(|v| {
            let i: u64 = v.as_str()[1..].parse().unwrap();
            VertexId::new(format!("y{}", (i * 7 + seed) % n.max(1) + 10 * ((i + seed) % 3))).unwrap()
        })
        .unwrap_or_else(|_| g.clone())
    }

    proptest! {
        #[test]
        fn even_graphs_specialize(g in dyer_graph(6)) {
            if is_even(&g) {
                prop_assert_eq!(is_quasi_perfect(&g).result, classify_even_quasi_perfect(&g).unwrap());
            }
        }

        #[test]
        fn verdict_certificates_recheck(g in dyer_graph(7)) {
            let qp = is_quasi_perfect(&g);
            prop_assert_eq!(qp.result, qp.failure.is_none());
            if let Some(f) = &qp.failure {
                prop_assert!(f.verify(&g));
            }
            let vf = is_virtually_free(&g);
            prop_assert_eq!(vf.result, vf.failure.is_none());
            if let Some(f) = &vf.failure {
                prop_assert!(f.verify(&g));
            }
        }

        #[test]
        fn decomposition_invariants(g in dyer_graph(7)) {
            let d = component_decomposition(&g);
            let owner = d.part_of(g.len());
            let mut all: Vec<usize> = d.parts.iter().flat_map(|p| p.vertices.clone()).collect();
            all.sort_unstable();
            prop_assert_eq!(all, (0..g.len()).collect::<Vec<_>>());
            for (u, v, m) in g.edges() {
                if m.get() % 2 == 1 {
                    prop_assert_eq!(owner[u], owner[v]);
                }
                if owner[u] != owner[v] {
                    prop_assert_eq!(m.get() % 2, 0);
                }
            }
            for part in &d.parts {
                prop_assert_eq!(part.representative, part.vertices[0]);
                if part.vertices.len() >= 2 {
                    prop_assert!(part.vertices.iter().all(|&v| g.order(v).is_two()));
                }
                // Condition (i) at p = 2 holds on every part.
                prop_assert!(part.subgraph.label_filtered(2).unwrap().is_connected());
            }
        }

        #[test]
        fn quotient_is_even_and_matches_condition_two(g in dyer_graph(7)) {
            let q = even_quotient(&g);
            prop_assert!(is_even(&q.graph));
            for (w, part) in component_decomposition(&g).parts.iter().enumerate() {
                prop_assert_eq!(q.graph.order(w), g.order(part.representative));
            }
            let d = component_decomposition(&g);
            let owner = d.part_of(g.len());
            let k = d.parts.len();
            let condition_two = (0..k).all(|i| {
                (i + 1..k).all(|j| {
                    g.edges()
                        .filter(|&(u, v, _)| (owner[u].min(owner[v]), owner[u].max(owner[v])) == (i, j))
                        .fold(0u64, |acc, (_, _, m)| acc.gcd(&m.get()))
                        == 2
                })
            });
            prop_assert_eq!(classify_even_quasi_perfect(&q.graph).unwrap(), condition_two);
        }

        #[test]
        fn verdicts_ignore_vertex_names(g in dyer_graph(6), seed in 0u64..100) {
            let h = shuffled_names(&g, seed);
            prop_assert_eq!(is_quasi_perfect(&g).result, is_quasi_perfect(&h).result);
            prop_assert_eq!(is_virtually_free(&g).result, is_virtually_free(&h).result);
            let mut a = abelianization_invariants(&g);
            let mut b = abelianization_invariants(&h);
            a.sort();
            b.sort();
            prop_assert_eq!(a, b);
            prop_assert_eq!(graph_product_derived_length(&g).ok(), graph_product_derived_length(&h).ok());
        }

        #[test]
        fn closed_form_matches_smith_normal_form(g in dyer_graph(6)) {
            let closed = invariant_factors(&abelianization_invariants(&g));
            prop_assert_eq!(abelianize_snf(&build_presentation(&g)), closed);
        }

        #[test]
        fn single_vertex_factors_mean_class_one(g in dyer_graph(6)) {
            if let Ok(class) = graph_product_derived_length(&g) {
                let singletons = join_decompose(&g).factors.iter().all(|f| f.len() == 1);
                prop_assert_eq!(class == DerivedLengthClass::One, singletons);
                let complete_twos = g.is_complete() && g.edges().all(|(_, _, m)| m.get() == 2);
                prop_assert_eq!(singletons, complete_twos);
            }
        }
    }

    #[test]
    fn oracle_agrees_on_three_vertices() {
        let pools = Pools::new(&[VertexOrder::Finite(2), VertexOrder::Finite(3), VertexOrder::Finite(4)], &[2, 3, 4, 6]);
        for n in 1..=3 {
            for_each_labelled(n, &pools, |g| {
                assert_eq!(is_quasi_perfect(g).result, oracle_quasi_perfect(g).unwrap(), "{:?}", g.edge_list());
            });
        }
    }

    #[test]
    fn coxeter_abelianization_is_elementary_abelian() {
        let pools = Pools::new(&[VertexOrder::Finite(2)], &[2, 3, 4, 5, 6]);
        for n in 1..=4 {
            for_each_labelled(n, &pools, |g| {
                let l = component_decomposition(g).parts.len();
                let inv = abelianize_snf(&build_presentation(g));
                assert_eq!(inv, AbelianInvariants { torsion: vec![2; l], free_rank: 0 });
            });
        }
    }

    #[test]
    fn even_retracts_never_raise_derived_length() {
        use crate::oracle::{derived_length_finite, finite_group, DEFAULT_MAX_COSETS};
        // Even Coxeter groups on complete graphs with labels in {2, 4, 6} are
        // finite; induced subgraphs are retracts.
        let pools = Pools::new(&[VertexOrder::Finite(2)], &[2, 4, 6]);
        let mut checked = 0;
        for_each_labelled(3, &pools, |g| {
            if !g.is_complete() || !recognize_finite_coxeter(g).unwrap().is_finite() {
                return;
            }
            let dl = derived_length_finite(&finite_group(g, DEFAULT_MAX_COSETS).unwrap());
            for subset in [vec![0, 1], vec![0, 2], vec![1, 2], vec![0]] {
                let h = g.induced_on(&subset).unwrap();
                let sub = derived_length_finite(&finite_group(&h, DEFAULT_MAX_COSETS).unwrap());
                assert!(sub <= dl);
            }
            checked += 1;
        });
        assert!(checked > 0);
        // Derived subgroups of S3 and of Z/2 x S3 have the same abelianization.
        let s3 = graph(&[("a", 2), ("b", 2)], &[("a", "b", 3)]);
        let product = graph(&[("a", 2), ("b", 2), ("c", 2)], &[("a", "b", 3), ("a", "c", 2), ("b", "c", 2)]);
        let a = derived_subgroup(&build_presentation(&s3)).unwrap().abelianization;
        let b = derived_subgroup(&build_presentation(&product)).unwrap().abelianization;
        assert_eq!(a, b);
    }
}

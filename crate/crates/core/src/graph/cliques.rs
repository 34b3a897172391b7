use super::DyerGraph;

/// All maximal cliques, each sorted, the list sorted lexicographically.
///
/// Bron–Kerbosch with Tomita pivoting.
pub fn maximal_cliques(g: &DyerGraph) -> Vec<Vec<usize>> {
    let adjacency = g.adjacency_lists();
    let mut out = Vec::new();
    let mut current = Vec::new();
    let candidates: Vec<usize> = (0..g.len()).collect();
    expand(&adjacency, &mut current, candidates, Vec::new(), &mut out);
    for clique in &mut out {
        clique.sort_unstable();
    }
    out.sort();
    out
}

fn expand(
    adjacency: &[Vec<usize>],
    current: &mut Vec<usize>,
    mut candidates: Vec<usize>,
    mut excluded: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    let adjacent = |u: usize, v: usize| adjacency[u].binary_search(&v).is_ok();
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .copied()
        .max_by_key(|&u| candidates.iter().filter(|&&v| adjacent(u, v)).count())
        .expect("candidates nonempty");
    let branch: Vec<usize> = candidates.iter().copied().filter(|&v| !adjacent(pivot, v)).collect();
    for v in branch {
        current.push(v);
        let next_candidates = candidates.iter().copied().filter(|&w| adjacent(v, w)).collect();
        let next_excluded = excluded.iter().copied().filter(|&w| adjacent(v, w)).collect();
        expand(adjacency, current, next_candidates, next_excluded, out);
        current.pop();
        candidates.retain(|&w| w != v);
        excluded.push(v);
    }
}

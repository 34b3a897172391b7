use std::collections::BTreeSet;

use super::presentation::{cyclic_reduce, inverse_word, GroupPresentation, Letter, Word};

/// Relators longer than this are never used to eliminate a generator.
const MAX_ELIMINATION_LENGTH: usize = 12;
/// Substitutions stop once the presentation would grow past this many letters.
const MAX_TOTAL_LENGTH: usize = 200_000;

/// Repeatedly eliminates a generator occurring exactly once in a short
/// relator, substituting its solution into the remaining relators, and
/// discards duplicate relators. The result presents the same group.
pub fn simplify(p: &GroupPresentation) -> GroupPresentation {
    let mut alive: Vec<bool> = vec![true; p.generator_count()];
    let mut relators: Vec<Word> = canonical_set(p.relators.clone());
    loop {
        let Some((k, x)) = elimination_candidate(&relators) else { break };
        let r = &relators[k];
        let at = r.iter().position(|l| l.generator == x).expect("candidate occurs");
        // r = u · x^e · v, so x^e = u⁻¹ v⁻¹ and x = (v u)^(-e).
        let mut vu: Word = r[at + 1..].to_vec();
        vu.extend_from_slice(&r[..at]);
        let solution = if r[at].inverse { vu } else { inverse_word(&vu) };
        let solution_inverse = inverse_word(&solution);
        let grown: usize = relators
            .iter()
            .map(|w| w.len() + w.iter().filter(|l| l.generator == x).count() * solution.len())
            .sum();
        if grown > MAX_TOTAL_LENGTH {
            break;
        }
        let mut next = Vec::with_capacity(relators.len() - 1);
        for (i, w) in relators.iter().enumerate() {
            if i == k {
                continue;
            }
            let mut out = Vec::with_capacity(w.len());
            for &l in w {
                if l.generator != x {
                    out.push(l);
                } else if l.inverse {
                    out.extend_from_slice(&solution_inverse);
                } else {
                    out.extend_from_slice(&solution);
                }
            }
            next.push(out);
        }
        alive[x] = false;
        relators = canonical_set(next);
    }
    let keep: Vec<usize> = (0..alive.len()).filter(|&g| alive[g]).collect();
    let mut renumber = vec![usize::MAX; alive.len()];
    for (k, &g) in keep.iter().enumerate() {
        renumber[g] = k;
    }
    let generators = keep.iter().map(|&g| p.generators[g].clone()).collect();
    let relators = relators
        .iter()
        .map(|w| w.iter().map(|l| Letter { generator: renumber[l.generator], inverse: l.inverse }).collect())
        .collect();
    GroupPresentation::new(generators, relators)
}

/// Shortest relator with a generator occurring exactly once; ties go to the
/// earliest relator and the largest generator.
fn elimination_candidate(relators: &[Word]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (k, r) in relators.iter().enumerate() {
        if r.len() > MAX_ELIMINATION_LENGTH || best.is_some_and(|(len, _, _)| r.len() >= len) {
            continue;
        }
        let mut counts: Vec<(usize, usize)> = Vec::new();
        for l in r {
            match counts.iter_mut().find(|(g, _)| *g == l.generator) {
                Some((_, c)) => *c += 1,
                None => counts.push((l.generator, 1)),
            }
        }
        if let Some(x) = counts.iter().filter(|&&(_, c)| c == 1).map(|&(g, _)| g).max() {
            best = Some((r.len(), k, x));
        }
    }
    best.map(|(_, k, x)| (k, x))
}

/// Cyclically reduces each relator, replaces it by the least rotation of
/// itself or its inverse, and drops empties and duplicates.
fn canonical_set(relators: Vec<Word>) -> Vec<Word> {
    let set: BTreeSet<Vec<(usize, bool)>> = relators
        .iter()
        .map(|w| cyclic_reduce(w))
        .filter(|w| !w.is_empty())
        .map(|w| canonical_rotation(&w))
        .collect();
    set.into_iter().map(|w| w.into_iter().map(|(generator, inverse)| Letter { generator, inverse }).collect()).collect()
}

fn canonical_rotation(w: &[Letter]) -> Vec<(usize, bool)> {
    let inverse = inverse_word(w);
    [w, &inverse[..]]
        .iter()
        .flat_map(|v| {
            (0..v.len()).map(move |k| v[k..].iter().chain(&v[..k]).map(|l| (l.generator, l.inverse)).collect::<Vec<_>>())
        })
        .min()
        .expect("nonempty word")
}

/// True when the presentation visibly defines an abelian group: at most one
/// generator, or a commutator relator `[a, b]` for every pair of generators.
/// A false answer is inconclusive.
pub fn is_evidently_abelian(p: &GroupPresentation) -> bool {
    let n = p.generator_count();
    if n <= 1 {
        return true;
    }
    let present: BTreeSet<Vec<(usize, bool)>> = p.relators.iter().map(|w| canonical_rotation(w)).collect();
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            let commutator = [Letter::gen(a), Letter::gen(b), Letter::inv(a), Letter::inv(b)];
            present.contains(&canonical_rotation(&commutator))
        })
    })
}

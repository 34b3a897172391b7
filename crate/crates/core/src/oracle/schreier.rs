use super::coset::CosetTable;
use super::presentation::{GroupPresentation, Letter, Word};
use crate::error::OracleError;

/// Schreier generator numbering for a coset table: `(coset, generator)`
/// pairs that are not tree edges, in coset-major order.
struct SchreierGenerators {
    generators: usize,
    index: Vec<Option<usize>>,
    names: Vec<String>,
}

impl SchreierGenerators {
    fn new(p: &GroupPresentation, t: &CosetTable) -> Self {
        let generators = p.generator_count();
        let mut index = vec![None; t.len() * generators];
        let mut names = Vec::new();
        for c in 0..t.len() {
            for x in 0..generators {
                if !t.is_tree_edge(c, Letter::gen(x)) {
                    index[c * generators + x] = Some(names.len());
                    names.push(format!("{}_{c}", p.generators[x]));
                }
            }
        }
        SchreierGenerators { generators, index, names }
    }

    fn get(&self, coset: usize, generator: usize) -> Option<usize> {
        self.index[coset * self.generators + generator]
    }
}

/// Rewrites `word`, read from `coset`, as a word in Schreier generators.
/// Returns the rewritten word and the coset reached.
fn rewrite(t: &CosetTable, schreier: &SchreierGenerators, coset: usize, word: &[Letter]) -> (Word, usize) {
    let mut out = Vec::new();
    let mut c = coset;
    for &l in word {
        if l.inverse {
            let d = t.act(c, l);
            if let Some(s) = schreier.get(d, l.generator) {
                out.push(Letter::inv(s));
            }
            c = d;
        } else {
            if let Some(s) = schreier.get(c, l.generator) {
                out.push(Letter::gen(s));
            }
            c = t.act(c, l);
        }
    }
    (out, c)
}

/// Presentation of the subgroup stabilising coset 0 of `t`, on the
/// Schreier generators `t_c · x · t_{cx}⁻¹` (tree-trivial ones deleted), with
/// one rewritten relator per pair (coset, relator of `p`).
pub fn reidemeister_schreier(p: &GroupPresentation, t: &CosetTable) -> Result<GroupPresentation, OracleError> {
    t.verify(p)?;
    let schreier = SchreierGenerators::new(p, t);
    let mut relators = Vec::with_capacity(t.len() * p.relators.len());
    for c in 0..t.len() {
        for r in &p.relators {
            let (word, end) = rewrite(t, &schreier, c, r);
            if end != c {
                return Err(OracleError::IncompatibleTable(format!("relator does not close at coset {c}")));
            }
            relators.push(word);
        }
    }
    Ok(GroupPresentation::new(schreier.names, relators))
}

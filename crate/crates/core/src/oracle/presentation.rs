use std::fmt;

use crate::graph::DyerGraph;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn gen(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn inv(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Column of this letter in a coset table: `2g` for `g`, `2g + 1` for `g⁻¹`.
    pub fn column(self) -> usize {
        2 * self.generator + usize::from(self.inverse)
    }

    pub fn from_column(column: usize) -> Self {
        Letter { generator: column / 2, inverse: column % 2 == 1 }
    }
}

pub type Word = Vec<Letter>;

pub fn inverse_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inverted()).collect()
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cancellation of the ends against each other.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let w = free_reduce(w);
    let mut start = 0;
    let mut end = w.len();
    while end - start >= 2 && w[start] == w[end - 1].inverted() {
        start += 1;
        end -= 1;
    }
    w[start..end].to_vec()
}

/// `π(a, b, n)`: the alternating word `abab…` with `n` letters.
pub fn alternating_word(a: Letter, b: Letter, n: u64) -> Word {
    (0..n).map(|i| if i % 2 == 0 { a } else { b }).collect()
}

/// A finite presentation `⟨generators | relators⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl GroupPresentation {
    /// Cyclically reduces every relator and drops the empty ones.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        let relators = relators.iter().map(|r| cyclic_reduce(r)).filter(|r| !r.is_empty()).collect();
        GroupPresentation { generators, relators }
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".to_owned();
        }
        w.iter()
            .map(|l| {
                let name = &self.generators[l.generator];
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        let relators: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "{} >", relators.join(", "))
    }
}

/// Presentation of `D_Γ`: generators in vertex order, `v^{f(v)}` for every
/// finite-order vertex, then `π(v,w,m)·π(w,v,m)⁻¹` for every edge.
pub fn build_presentation(g: &DyerGraph) -> GroupPresentation {
    let generators = g.names().iter().map(|v| v.as_str().to_owned()).collect();
    let mut relators = Vec::new();
    for v in 0..g.len() {
        if let Some(f) = g.order(v).value() {
            relators.push(vec![Letter::gen(v); f as usize]);
        }
    }
    for (v, w, m) in g.edges() {
        let mut r = alternating_word(Letter::gen(v), Letter::gen(w), m.get());
        r.extend(inverse_word(&alternating_word(Letter::gen(w), Letter::gen(v), m.get())));
        relators.push(r);
    }
    GroupPresentation::new(generators, relators)
}

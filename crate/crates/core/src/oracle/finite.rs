use super::coset::CosetTable;
use super::presentation::Letter;
use crate::error::OracleError;

/// Largest group for which a full multiplication table is built.
pub const MAX_TABLE_ORDER: usize = 1 << 14;

/// Multiplication table of a finite group, elements `0..order` with 0 the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    order: usize,
    product: Vec<u32>,
    inverse: Vec<u32>,
    generators: Vec<usize>,
}

/// Regular representation from a coset table over the trivial subgroup:
/// element `c` is the transversal word of coset `c`, and `a·b` is the coset
/// reached by reading `b`'s word from coset `a`.
pub fn finite_group_table(t: &CosetTable) -> Result<FiniteGroupTable, OracleError> {
    let n = t.len();
    if n > MAX_TABLE_ORDER {
        return Err(OracleError::TooLarge(format!("group of order {n}")));
    }
    let mut product = vec![0u32; n * n];
    for a in 0..n {
        product[a * n] = a as u32;
        // Parents precede children, so each entry extends an earlier one.
        for b in 1..n {
            let (parent, letter) = t.parent(b).expect("non-root coset has a tree parent");
            let via = product[a * n + parent] as usize;
            product[a * n + b] = t.act(via, letter) as u32;
        }
    }
    let mut inverse = vec![0u32; n];
    for a in 0..n {
        let b = (0..n).find(|&b| product[a * n + b] == 0).expect("every element has an inverse");
        inverse[a] = b as u32;
    }
    let generators = (0..t.generator_count()).map(|g| t.act(0, Letter::gen(g))).collect();
    Ok(FiniteGroupTable { order: n, product, inverse, generators })
}

impl FiniteGroupTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Element images of the presentation generators.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// Checks the group axioms: identity and inverses exactly, associativity
    /// on every triple up to order 512 and on `samples` pseudo-random triples
    /// beyond that.
    pub fn verify(&self, samples: usize) -> bool {
        let n = self.order;
        let identity = (0..n).all(|a| self.mul(0, a) == a && self.mul(a, 0) == a);
        let inverses = (0..n).all(|a| self.mul(a, self.inv(a)) == 0 && self.mul(self.inv(a), a) == 0);
        let associative = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        let assoc = if n <= 512 {
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| associative(a, b, c))))
        } else {
            let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            (0..samples).all(|_| {
                let (a, b, c) = (next(), next(), next());
                associative(a, b, c)
            })
        };
        identity && inverses && assoc
    }

    /// Subgroup generated by `gens`, as a membership mask.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elements = vec![0];
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head];
            head += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    elements.push(y);
                }
            }
        }
        member
    }

    /// Commutator subgroup `[H, H]` of the subgroup `H` given by its mask.
    pub fn commutator_subgroup(&self, subgroup: &[bool]) -> Vec<bool> {
        let members: Vec<usize> = (0..self.order).filter(|&a| subgroup[a]).collect();
        let mut seen = vec![false; self.order];
        let mut commutators = Vec::new();
        for &a in &members {
            for &b in &members {
                let c = self.commutator(a, b);
                if !seen[c] {
                    seen[c] = true;
                    commutators.push(c);
                }
            }
        }
        self.closure(&commutators)
    }

    /// Sizes `|G⁽⁰⁾|, |G⁽¹⁾|, …` up to and including the first repeat.
    pub fn derived_series(&self) -> Vec<usize> {
        let mut current = vec![true; self.order];
        let mut sizes = vec![self.order];
        loop {
            let next = self.commutator_subgroup(&current);
            let size = next.iter().filter(|&&m| m).count();
            sizes.push(size);
            if size == *sizes.iter().rev().nth(1).unwrap() {
                return sizes;
            }
            current = next;
        }
    }
}

/// First `i` with `G⁽ⁱ⁾ = G⁽ⁱ⁺¹⁾`.
pub fn derived_length_finite(gt: &FiniteGroupTable) -> usize {
    gt.derived_series().len() - 2
}

use std::collections::VecDeque;

use num_traits::ToPrimitive;

use super::presentation::{GroupPresentation, Letter, Word};
use super::snf::{relation_matrix, triangular_basis};
use crate::error::OracleError;

/// Largest abelianization enumerated element by element.
pub const MAX_DERIVED_INDEX: usize = 1 << 22;

/// Complete coset table with a breadth-first Schreier transversal.
///
/// Columns are indexed by [`Letter::column`]. Coset 0 is the subgroup itself
/// and every coset's tree parent has a smaller index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generators: usize,
    action: Vec<u32>,
    parent: Vec<Option<(usize, Letter)>>,
}

impl CosetTable {
    /// Builds a table from rows of a complete action (`rows[c][column]`),
    /// renumbering cosets in breadth-first order from coset 0 with letters
    /// taken in column order.
    pub fn from_rows(generators: usize, rows: &[Vec<u32>]) -> Self {
        let columns = 2 * generators;
        let mut number = vec![u32::MAX; rows.len()];
        let mut order = Vec::with_capacity(rows.len());
        let mut parent = Vec::with_capacity(rows.len());
        number[0] = 0;
        order.push(0usize);
        parent.push(None);
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            for col in 0..columns {
                let d = rows[c][col] as usize;
                if number[d] == u32::MAX {
                    number[d] = order.len() as u32;
                    order.push(d);
                    parent.push(Some((head, Letter::from_column(col))));
                }
            }
            head += 1;
        }
        let mut action = Vec::with_capacity(order.len() * columns);
        for &c in &order {
            for col in 0..columns {
                action.push(number[rows[c][col] as usize]);
            }
        }
        CosetTable { generators, action, parent }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        self.action[coset * 2 * self.generators + letter.column()] as usize
    }

    pub fn trace(&self, coset: usize, word: &[Letter]) -> usize {
        word.iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Tree edge into `coset`, if any.
    pub fn parent(&self, coset: usize) -> Option<(usize, Letter)> {
        self.parent[coset]
    }

    /// Representative word taking coset 0 to `coset`.
    pub fn transversal(&self, mut coset: usize) -> Word {
        let mut w = Vec::new();
        while let Some((p, l)) = self.parent[coset] {
            w.push(l);
            coset = p;
        }
        w.reverse();
        w
    }

    /// True when `(coset, x)` for a positive letter `x` is a tree edge in
    /// either direction, i.e. its Schreier generator is trivial.
    pub fn is_tree_edge(&self, coset: usize, x: Letter) -> bool {
        let target = self.act(coset, x);
        self.parent[target] == Some((coset, x)) || self.parent[coset] == Some((target, x.inverted()))
    }

    /// Checks completeness and compatibility with `p`: every column is a
    /// permutation inverse to its partner, every relator fixes every coset,
    /// and the transversal reaches each coset.
    pub fn verify(&self, p: &GroupPresentation) -> Result<(), OracleError> {
        let bad = |msg: String| Err(OracleError::IncompatibleTable(msg));
        if self.generators != p.generator_count() {
            return bad(format!("{} generators, presentation has {}", self.generators, p.generator_count()));
        }
        let n = self.len();
        if self.action.len() != n * 2 * self.generators {
            return bad("table has the wrong shape".to_owned());
        }
        for c in 0..n {
            for col in 0..2 * self.generators {
                let l = Letter::from_column(col);
                let d = self.act(c, l);
                if d >= n {
                    return bad(format!("entry ({c}, {col}) out of range"));
                }
                if self.act(d, l.inverted()) != c {
                    return bad(format!("column {col} is not inverted by its partner at coset {c}"));
                }
            }
            for (k, r) in p.relators.iter().enumerate() {
                if self.trace(c, r) != c {
                    return bad(format!("relator {k} moves coset {c}"));
                }
            }
            if self.trace(0, &self.transversal(c)) != c {
                return bad(format!("transversal word of coset {c} is wrong"));
            }
        }
        Ok(())
    }
}

/// Coset table of the commutator subgroup `G′`.
///
/// Cosets of `G′` are the elements of the abelianization, so the table is
/// the translation action of the generators on `G/G′`, read off a triangular
/// basis of the relation lattice.
pub fn derived_subgroup_coset_table(p: &GroupPresentation) -> Result<CosetTable, OracleError> {
    let n = p.generator_count();
    let basis = triangular_basis(&relation_matrix(p)).ok_or(OracleError::InfiniteAbelianization)?;
    let too_large = || OracleError::TooLarge("abelianization".to_owned());
    let mut moduli = Vec::with_capacity(n);
    let mut index: usize = 1;
    for (i, row) in basis.iter().enumerate() {
        let d = row[i].to_usize().ok_or_else(too_large)?;
        index = index.checked_mul(d).filter(|&x| x <= MAX_DERIVED_INDEX).ok_or_else(too_large)?;
        moduli.push(d as i64);
    }
    // Entries are reduced below the diagonal moduli, so they fit in i64.
    let basis: Vec<Vec<i64>> =
        basis.iter().map(|r| r.iter().map(|x| x.to_i64().expect("reduced entry")).collect()).collect();

    let reduce = |v: &mut [i64]| {
        for i in 0..n {
            let q = v[i].div_euclid(moduli[i]);
            if q != 0 {
                for j in i..n {
                    v[j] -= q * basis[i][j];
                }
            }
        }
    };
    let code = |v: &[i64]| v.iter().zip(&moduli).fold(0usize, |acc, (&x, &d)| acc * d as usize + x as usize);

    // Breadth-first numbering from the identity element.
    let columns = 2 * n;
    let mut number = vec![u32::MAX; index];
    let mut elements: Vec<Vec<i64>> = vec![vec![0; n]];
    number[0] = 0;
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(index);
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        let mut row = vec![0u32; columns];
        for (col, slot) in row.iter_mut().enumerate() {
            let l = Letter::from_column(col);
            let mut v = elements[c].clone();
            v[l.generator] += l.exponent();
            reduce(&mut v);
            let k = code(&v);
            if number[k] == u32::MAX {
                number[k] = elements.len() as u32;
                elements.push(v);
                queue.push_back(number[k] as usize);
            }
            *slot = number[k];
        }
        rows.push(row);
    }
    Ok(CosetTable::from_rows(n, &rows))
}

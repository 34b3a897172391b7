//! Integer normal forms: Smith normal form for abelian invariants and a
//! triangular (Hermite) basis for enumerating a finite abelianization.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::presentation::GroupPresentation;

/// `ℤ/d₁ × … × ℤ/d_k × ℤ^r` with `d₁ | d₂ | … | d_k`, every `dᵢ >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub torsion: Vec<u64>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants { torsion: Vec::new(), free_rank: 0 }
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order when finite and representable.
    pub fn order(&self) -> Option<u64> {
        if self.free_rank > 0 {
            return None;
        }
        self.torsion.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d))
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_owned()),
            r => parts.push(format!("Z^{r}")),
        }
        f.write_str(&parts.join(" x "))
    }
}

/// Sparse integer matrix, one sorted `(column, value)` list per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn from_dense(cols: usize, dense: &[Vec<i64>]) -> Self {
        let rows = dense
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &a)| a != 0).map(|(j, &a)| (j, a)).collect())
            .collect();
        IntMatrix { cols, rows }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![0; self.cols];
                for &(j, a) in r {
                    d[j] = a;
                }
                d
            })
            .collect()
    }
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn relation_matrix(p: &GroupPresentation) -> IntMatrix {
    let rows = p
        .relators
        .iter()
        .map(|r| {
            let mut sums: BTreeMap<usize, i64> = BTreeMap::new();
            for l in r {
                *sums.entry(l.generator).or_default() += l.exponent();
            }
            sums.into_iter().filter(|&(_, a)| a != 0).collect()
        })
        .collect();
    IntMatrix { cols: p.generator_count(), rows }
}

/// Nonzero diagonal of the Smith normal form, positive and in divisibility
/// order. Its length is the rank of the matrix.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let (units, rest) = eliminate_unit_pivots(m);
    let mut diagonal = vec![BigInt::one(); units];
    diagonal.extend(dense_smith(rest));
    diagonal
}

/// Abelian invariants of the group presented by `p`.
pub fn abelianize_snf(p: &GroupPresentation) -> AbelianInvariants {
    let m = relation_matrix(p);
    let diagonal = smith_diagonal(&m);
    let torsion = diagonal
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().expect("invariant factor fits in u64"))
        .collect();
    AbelianInvariants { torsion, free_rank: m.cols - diagonal.len() }
}

/// Sparse elimination phase: while some entry is `±1`, use it as the pivot
/// (smallest possible), clear its column by row operations and drop its row
/// and column. Returns the number of unit pivots and the remaining rows as a
/// dense big-integer matrix over the surviving columns.
fn eliminate_unit_pivots(m: &IntMatrix) -> (usize, Vec<Vec<BigInt>>) {
    let mut rows: Vec<BTreeMap<usize, i64>> = m.rows.iter().map(|r| r.iter().copied().collect()).collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
    for (i, r) in rows.iter().enumerate() {
        for &j in r.keys() {
            col_rows[j].insert(i);
        }
    }
    let mut alive = vec![true; rows.len()];
    let mut units = 0;
    loop {
        // Markowitz-style choice among unit entries keeps fill-in low.
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, r) in rows.iter().enumerate() {
            if !alive[i] {
                continue;
            }
            for (&j, &a) in r {
                if a.abs() == 1 {
                    let cost = (r.len() - 1) * (col_rows[j].len() - 1);
                    if best.is_none_or(|(c, _, _)| cost < c) {
                        best = Some((cost, i, j));
                    }
                }
            }
        }
        let Some((_, pivot_row, pivot_col)) = best else { break };
        let sign = rows[pivot_row][&pivot_col];
        let pivot: Vec<(usize, i64)> = rows[pivot_row].iter().map(|(&j, &a)| (j, a)).collect();
        let targets: Vec<usize> = col_rows[pivot_col].iter().copied().filter(|&i| i != pivot_row).collect();

        // Compute every updated row before committing any, so an overflow
        // leaves the matrix untouched for the exact dense phase.
        let mut updates = Vec::with_capacity(targets.len());
        let mut overflow = false;
        'rows: for &t in &targets {
            let factor = rows[t][&pivot_col] * sign;
            let mut changed = Vec::with_capacity(pivot.len());
            for &(j, b) in &pivot {
                let old = rows[t].get(&j).copied().unwrap_or(0);
                let Some(new) = factor.checked_mul(b).and_then(|fb| old.checked_sub(fb)) else {
                    overflow = true;
                    break 'rows;
                };
                changed.push((j, new));
            }
            updates.push((t, changed));
        }
        if overflow {
            break;
        }
        for (t, changed) in updates {
            for (j, new) in changed {
                if new == 0 {
                    rows[t].remove(&j);
                    col_rows[j].remove(&t);
                } else {
                    rows[t].insert(j, new);
                    col_rows[j].insert(t);
                }
            }
        }
        for &(j, _) in &pivot {
            col_rows[j].remove(&pivot_row);
        }
        rows[pivot_row].clear();
        alive[pivot_row] = false;
        units += 1;
    }

    let live_cols: Vec<usize> = (0..m.cols).filter(|&j| !col_rows[j].is_empty()).collect();
    let position: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
    let dense = rows
        .iter()
        .enumerate()
        .filter(|(i, r)| alive[*i] && !r.is_empty())
        .map(|(_, r)| {
            let mut d = vec![BigInt::zero(); live_cols.len()];
            for (&j, &a) in r {
                d[position[&j]] = BigInt::from(a);
            }
            d
        })
        .collect();
    (units, dense)
}

/// Classical Smith normal form with smallest-nonzero pivoting.
fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&a, t..rows, t..cols) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let delta = &q * &a[t][j];
                        a[i][j] -= delta;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let delta = &q * &row[t];
                        row[j] -= delta;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                // A remainder is now smaller than the pivot; move it in.
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match offender {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
    }
    diagonal
}

fn smallest_entry(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let column = (t..a.len()).map(|i| (i, t));
    let row = (t..a[t].len()).map(|j| (t, j));
    column
        .chain(row)
        .filter(|&(i, j)| !a[i][j].is_zero())
        .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
        .expect("pivot cross has a nonzero entry")
}

/// Upper-triangular basis of the relation lattice of a finite abelian
/// group: `basis[i][i] = dᵢ > 0`, `basis[i][j] = 0` for `j < i`, and the
/// off-diagonal entries reduced into `[0, d_j)`.
///
/// Returns `None` when the lattice does not have full rank (the
/// abelianization is infinite).
pub fn triangular_basis(m: &IntMatrix) -> Option<Vec<Vec<BigInt>>> {
    let n = m.cols;
    let mut rows: Vec<Vec<BigInt>> = m
        .to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let mut basis: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for c in 0..n {
        // Euclid on column c across the remaining rows.
        loop {
            rows.retain(|r| r.iter().any(|x| !x.is_zero()));
            let nonzero: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let p = *nonzero.iter().min_by(|&&i, &&k| rows[i][c].abs().cmp(&rows[k][c].abs())).unwrap();
            for &i in &nonzero {
                if i != p {
                    let q = rows[i][c].div_floor(&rows[p][c]);
                    for j in c..n {
                        let delta = &q * &rows[p][j];
                        rows[i][j] -= delta;
                    }
                }
            }
        }
        let i = (0..rows.len()).find(|&i| !rows[i][c].is_zero())?;
        let mut pivot = rows.swap_remove(i);
        if pivot[c].is_negative() {
            for x in pivot.iter_mut() {
                *x = -x.clone();
            }
        }
        basis.push(pivot);
    }
    // Reduce above-diagonal entries, bottom-up.
    for i in (0..n).rev() {
        for j in i + 1..n {
            let q = basis[i][j].div_floor(&basis[j][j]);
            if !q.is_zero() {
                let lower = basis[j].clone();
                for (k, x) in lower.iter().enumerate().skip(j) {
                    basis[i][k] -= &q * x;
                }
            }
        }
    }
    Some(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(dense: &[Vec<i64>]) -> Vec<i64> {
        let cols = dense.first().map_or(0, Vec::len);
        smith_diagonal(&IntMatrix::from_dense(cols, dense)).iter().map(|d| d.to_i64().unwrap()).collect()
    }

    #[test]
    fn textbook_examples() {
        assert_eq!(diag(&[vec![2, 0], vec![0, 2]]), vec![2, 2]);
        assert_eq!(diag(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(diag(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(diag(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(diag(&[vec![4, 6]]), vec![2]);
    }

    #[test]
    fn triangular_basis_of_z6() {
        let m = IntMatrix::from_dense(2, &[vec![2, 0], vec![0, 3], vec![4, 3]]);
        let b = triangular_basis(&m).unwrap();
        let prod: BigInt = (0..2).map(|i| b[i][i].clone()).product();
        assert_eq!(prod, BigInt::from(6));
        assert!(triangular_basis(&IntMatrix::from_dense(2, &[vec![2, 0]])).is_none());
    }
}

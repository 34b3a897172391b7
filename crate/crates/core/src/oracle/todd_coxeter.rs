//! Coset enumeration over the trivial subgroup, HLT strategy.
//!
//! Follows the relator-tracing enumeration with coincidence processing from
//! Holt, Eick & O'Brien, *Handbook of Computational Group Theory*, ch. 5.
//! Deductions are queued and scanned against the relator conjugates that
//! begin with the deduced letter, so collapses are found early.

use super::coset::CosetTable;
use super::presentation::{GroupPresentation, Letter, Word};
use crate::error::OracleError;

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const UNDEFINED: u32 = u32::MAX;
const DEDUCTION_LIMIT: usize = 10_000;

struct Enumeration<'a> {
    columns: usize,
    table: Vec<u32>,
    /// `forward[c] == c` for live cosets; otherwise points towards the coset
    /// `c` was identified with.
    forward: Vec<u32>,
    relators: &'a [Word],
    /// Cyclic conjugates of the relators and their inverses, bucketed by
    /// first letter.
    conjugates: Vec<Vec<Word>>,
    deductions: Vec<(usize, usize)>,
    max_cosets: usize,
}

impl<'a> Enumeration<'a> {
    fn new(p: &'a GroupPresentation, max_cosets: usize) -> Self {
        let columns = 2 * p.generator_count();
        let mut conjugates = vec![Vec::new(); columns];
        for r in &p.relators {
            let inverse: Word = r.iter().rev().map(|l| l.inverted()).collect();
            for w in [r, &inverse] {
                for k in 0..w.len() {
                    let mut rotated = w[k..].to_vec();
                    rotated.extend_from_slice(&w[..k]);
                    let bucket: &mut Vec<Word> = &mut conjugates[rotated[0].column()];
                    if !bucket.contains(&rotated) {
                        bucket.push(rotated);
                    }
                }
            }
        }
        Enumeration {
            columns,
            table: vec![UNDEFINED; columns],
            forward: vec![0],
            relators: &p.relators,
            conjugates,
            deductions: Vec::new(),
            max_cosets,
        }
    }

    fn cosets(&self) -> usize {
        self.forward.len()
    }

    fn get(&self, c: usize, col: usize) -> u32 {
        self.table[c * self.columns + col]
    }

    fn set(&mut self, c: usize, col: usize, d: u32) {
        self.table[c * self.columns + col] = d;
    }

    fn is_live(&self, c: usize) -> bool {
        self.forward[c] as usize == c
    }

    fn push_deduction(&mut self, c: usize, col: usize) {
        if self.deductions.len() < DEDUCTION_LIMIT {
            self.deductions.push((c, col));
        }
    }

    fn define(&mut self, c: usize, col: usize) -> Result<(), OracleError> {
        if self.cosets() >= self.max_cosets {
            return Err(OracleError::Exceeded(self.max_cosets));
        }
        let d = self.cosets();
        self.forward.push(d as u32);
        self.table.extend(std::iter::repeat_n(UNDEFINED, self.columns));
        self.set(c, col, d as u32);
        self.set(d, col ^ 1, c as u32);
        self.push_deduction(c, col);
        Ok(())
    }

    /// Traces `word` from `c` forwards and backwards. With `fill`, gaps
    /// are closed by defining new cosets; otherwise the scan stops at a gap
    /// wider than one letter.
    fn scan(&mut self, c: usize, word: &[Letter], fill: bool) -> Result<(), OracleError> {
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = word.len();
        loop {
            while i < j && self.get(f, word[i].column()) != UNDEFINED {
                f = self.get(f, word[i].column()) as usize;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, word[j - 1].inverted().column()) != UNDEFINED {
                b = self.get(b, word[j - 1].inverted().column()) as usize;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                let col = word[i].column();
                self.set(f, col, b as u32);
                self.set(b, col ^ 1, f as u32);
                self.push_deduction(f, col);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, word[i].column())?;
        }
    }

    fn representative(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.forward[root] as usize != root {
            root = self.forward[root] as usize;
        }
        let mut k = c;
        while self.forward[k] as usize != root {
            let next = self.forward[k] as usize;
            self.forward[k] = root as u32;
            k = next;
        }
        root
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.representative(k), self.representative(l));
        if a == b {
            return;
        }
        let (keep, kill) = (a.min(b), a.max(b));
        self.forward[kill] = keep as u32;
        queue.push(kill);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut head = 0;
        while head < queue.len() {
            let dead = queue[head];
            head += 1;
            for col in 0..self.columns {
                let f = self.get(dead, col);
                if f == UNDEFINED {
                    continue;
                }
                let f = f as usize;
                if self.get(f, col ^ 1) == dead as u32 {
                    self.set(f, col ^ 1, UNDEFINED);
                }
                let e1 = self.representative(dead);
                let f1 = self.representative(f);
                let e1x = self.get(e1, col);
                let f1x = self.get(f1, col ^ 1);
                if e1x != UNDEFINED {
                    self.merge(f1, e1x as usize, &mut queue);
                } else if f1x != UNDEFINED {
                    self.merge(e1, f1x as usize, &mut queue);
                } else {
                    self.set(e1, col, f1 as u32);
                    self.set(f1, col ^ 1, e1 as u32);
                    self.push_deduction(e1, col);
                }
            }
        }
    }

    fn process_deductions(&mut self) -> Result<(), OracleError> {
        while let Some((c, col)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            let words = std::mem::take(&mut self.conjugates[col]);
            let mut outcome = Ok(());
            for w in &words {
                if !self.is_live(c) {
                    break;
                }
                outcome = self.scan(c, w, false);
                if outcome.is_err() {
                    break;
                }
            }
            self.conjugates[col] = words;
            outcome?;
            let d = self.get(c, col);
            if d != UNDEFINED && self.is_live(d as usize) {
                let words = std::mem::take(&mut self.conjugates[col ^ 1]);
                for w in &words {
                    if !self.is_live(d as usize) {
                        break;
                    }
                    self.scan(d as usize, w, false)?;
                }
                self.conjugates[col ^ 1] = words;
            }
        }
        Ok(())
    }

    fn run(&mut self) -> Result<(), OracleError> {
        let mut c = 0;
        loop {
            self.sweep(c)?;
            match self.first_unfinished() {
                Some(k) => c = k,
                None => return Ok(()),
            }
        }
    }

    /// Live coset with an undefined entry or a relator that does not close.
    fn first_unfinished(&self) -> Option<usize> {
        (0..self.cosets()).filter(|&c| self.is_live(c)).find(|&c| {
            (0..self.columns).any(|col| self.get(c, col) == UNDEFINED)
                || self.relators.iter().any(|r| {
                    r.iter().try_fold(c, |d, l| {
                        let e = self.get(d, l.column());
                        (e != UNDEFINED).then_some(e as usize)
                    }) != Some(c)
                })
        })
    }

    fn sweep(&mut self, mut c: usize) -> Result<(), OracleError> {
        while c < self.cosets() {
            for k in 0..self.relators.len() {
                if !self.is_live(c) {
                    break;
                }
                let r = self.relators[k].clone();
                self.scan(c, &r, true)?;
                self.process_deductions()?;
            }
            if self.is_live(c) {
                for col in 0..self.columns {
                    if self.get(c, col) == UNDEFINED {
                        self.define(c, col)?;
                        self.process_deductions()?;
                        if !self.is_live(c) {
                            break;
                        }
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    fn into_table(self, generators: usize) -> CosetTable {
        let live: Vec<usize> = (0..self.cosets()).filter(|&c| self.is_live(c)).collect();
        let mut position = vec![u32::MAX; self.cosets()];
        for (k, &c) in live.iter().enumerate() {
            position[c] = k as u32;
        }
        let rows: Vec<Vec<u32>> = live
            .iter()
            .map(|&c| (0..self.columns).map(|col| position[self.get(c, col) as usize]).collect())
            .collect();
        CosetTable::from_rows(generators, &rows)
    }
}

/// Enumerates the cosets of the trivial subgroup, i.e. the elements of the
/// group, giving up once more than `max_cosets` cosets would be needed.
/// `Exceeded` is inconclusive: it does not show the group is infinite.
pub fn todd_coxeter(p: &GroupPresentation, max_cosets: usize) -> Result<CosetTable, OracleError> {
    let mut e = Enumeration::new(p, max_cosets.max(1));
    e.run()?;
    let table = e.into_table(p.generator_count());
    debug_assert!(table.verify(p).is_ok());
    Ok(table)
}

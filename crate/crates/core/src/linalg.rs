//! Exact linear algebra over GF(2) on an ordered universe of monomials.
//!
//! Pivots sit at the highest set column. With columns sorted ascending in
//! the monomial order, a pivot column of the hit space is a monomial that is
//! the leading term of some hit polynomial.
//!
//! Two engines share that convention. [`EchelonBasis`] keeps packed rows in
//! fully reduced form and supports incremental insertion. [`SparseEchelon`]
//! eliminates a whole batch of sparse rows column by column, from the top
//! column down, which is what makes degree 64 in four variables tractable.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Polynomial};
use crate::steenrod::for_each_composition;

pub const DEFAULT_COLUMN_CAP: usize = 150_000;

/// All monomials of a fixed `(k, degree)`, optionally filtered, sorted
/// ascending in the monomial order.
#[derive(Clone, Debug)]
pub struct ColumnUniverse {
    k: usize,
    degree: u64,
    columns: Vec<Monomial>,
    /// Lexicographic composition rank -> column, `u32::MAX` when filtered out.
    slot: Vec<u32>,
    /// `count[q][r]`: compositions of `r` into `q` parts.
    count: Vec<Vec<u64>>,
}

/// Number of compositions of `n` into `k` parts, without overflow.
pub fn composition_count(k: usize, n: u64) -> u128 {
    // C(n + k - 1, k - 1)
    let mut acc: u128 = 1;
    for i in 1..k as u128 {
        acc = acc * (u128::from(n) + i) / i;
    }
    acc
}

impl ColumnUniverse {
    pub fn new(k: usize, degree: u64, cap: usize) -> Result<ColumnUniverse> {
        Self::filtered(k, degree, cap, |_| true)
    }

    /// The universe restricted to monomials accepted by `keep`. The column
    /// cap applies to the unfiltered count.
    pub fn filtered<F: Fn(&[u32]) -> bool>(k: usize, degree: u64, cap: usize, keep: F) -> Result<ColumnUniverse> {
        if k == 0 {
            return Err(Error::Invalid("need at least one variable".into()));
        }
        let total = composition_count(k, degree);
        if total > cap as u128 || degree > u64::from(u32::MAX) {
            return Err(Error::Capacity { k, degree, columns: total, cap });
        }
        let n = degree as usize;
        let mut count = vec![vec![0u64; n + 1]; k + 1];
        count[1].fill(1);
        for q in 2..=k {
            let (lower, upper) = count.split_at_mut(q);
            let mut acc = 0;
            for (dst, &src) in upper[0].iter_mut().zip(&lower[q - 1]) {
                acc += src;
                *dst = acc;
            }
        }
        let mut all = Vec::with_capacity(total as usize);
        let mut kept = Vec::new();
        for_each_composition(k, degree, |e| {
            kept.push(keep(e));
            all.push(Monomial::new(e));
        });
        let mut order: Vec<u32> = (0..all.len() as u32).filter(|&i| kept[i as usize]).collect();
        order.sort_unstable_by(|&a, &b| all[a as usize].cmp(&all[b as usize]));
        let mut slot = vec![u32::MAX; all.len()];
        for (c, &r) in order.iter().enumerate() {
            slot[r as usize] = c as u32;
        }
        let columns = order.iter().map(|&r| all[r as usize].clone()).collect();
        Ok(ColumnUniverse { k, degree, columns, slot, count })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn monomial(&self, column: usize) -> &Monomial {
        &self.columns[column]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.columns
    }

    fn rank_of(&self, e: &[u32]) -> Option<usize> {
        if e.len() != self.k {
            return None;
        }
        let sum: u64 = e.iter().map(|&a| u64::from(a)).sum();
        if sum != self.degree {
            return None;
        }
        let mut rank = 0u64;
        let mut rem = self.degree as usize;
        for (j, &a) in e[..self.k - 1].iter().enumerate() {
            let q = self.k - j;
            rank += self.count[q][rem] - self.count[q][rem - a as usize];
            rem -= a as usize;
        }
        Some(rank as usize)
    }

    /// Column of the monomial with exponents `e`, if it is in the universe.
    pub fn index_of_exponents(&self, e: &[u32]) -> Option<usize> {
        let s = self.slot[self.rank_of(e)?];
        (s != u32::MAX).then_some(s as usize)
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index_of_exponents(m.exponents())
    }

    pub fn encode(&self, f: &Polynomial) -> Result<BitRow> {
        let mut row = BitRow::zeros(self.len());
        for m in f.terms() {
            let c = self.index_of(m).ok_or_else(|| {
                Error::DegreeArityMismatch(format!(
                    "{m} is not a degree-{} monomial in {} variables",
                    self.degree, self.k
                ))
            })?;
            row.set(c);
        }
        Ok(row)
    }

    pub fn decode(&self, row: &BitRow) -> Polynomial {
        row.ones().map(|c| self.columns[c].clone()).collect()
    }
}

/// Characteristic vector of a polynomial over a column universe.
pub fn encode(f: &Polynomial, u: &ColumnUniverse) -> Result<BitRow> {
    u.encode(f)
}

/// A fixed-width bit vector packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> BitRow {
        BitRow { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_columns<I: IntoIterator<Item = usize>>(len: usize, columns: I) -> BitRow {
        let mut r = BitRow::zeros(len);
        for c in columns {
            r.toggle(c);
        }
        r
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, c: usize) -> bool {
        assert!(c < self.len);
        (self.words[c / 64] >> (c % 64)) & 1 == 1
    }

    pub fn set(&mut self, c: usize) {
        assert!(c < self.len);
        self.words[c / 64] |= 1 << (c % 64);
    }

    pub fn clear(&mut self, c: usize) {
        assert!(c < self.len);
        self.words[c / 64] &= !(1 << (c % 64));
    }

    pub fn toggle(&mut self, c: usize) {
        assert!(c < self.len);
        self.words[c / 64] ^= 1 << (c % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn highest_set(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Set columns in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// Column 0 is the leftmost character.
impl fmt::Display for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in 0..self.len {
            write!(f, "{}", u8::from(self.get(c)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitRow({self})")
    }
}

impl FromStr for BitRow {
    type Err = Error;

    fn from_str(s: &str) -> Result<BitRow> {
        let mut r = BitRow::zeros(s.len());
        for (c, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => r.set(c),
                _ => return Err(Error::Invalid(format!("malformed bit row `{s}`"))),
            }
        }
        Ok(r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insertion {
    Absorbed,
    Added(usize),
}

/// A row space kept in fully reduced echelon form: every pivot column is
/// set in exactly one stored row.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    width: usize,
    rows: Vec<BitRow>,
    pivots: Vec<usize>,
    row_of: Vec<u32>,
}

impl EchelonBasis {
    pub fn new(width: usize) -> EchelonBasis {
        EchelonBasis { width, rows: Vec::new(), pivots: Vec::new(), row_of: vec![u32::MAX; width] }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.row_of[c] != u32::MAX
    }

    /// Pivot columns in ascending order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    /// Stored rows ordered by pivot. Unique for a given row space.
    pub fn canonical_rows(&self) -> Vec<BitRow> {
        self.pivot_columns().into_iter().map(|c| self.rows[self.row_of[c] as usize].clone()).collect()
    }

    /// Reduces `r` against every pivot; the result has no pivot column set.
    pub fn reduce(&self, r: &BitRow) -> BitRow {
        assert_eq!(r.len(), self.width);
        let mut r = r.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, r: &BitRow) -> bool {
        self.reduce(r).is_zero()
    }

    pub fn insert(&mut self, r: BitRow) -> Insertion {
        let r = self.reduce(&r);
        let Some(h) = r.highest_set() else {
            return Insertion::Absorbed;
        };
        for row in &mut self.rows {
            if row.get(h) {
                row.xor_assign(&r);
            }
        }
        self.row_of[h] = self.rows.len() as u32;
        self.rows.push(r);
        self.pivots.push(h);
        Insertion::Added(h)
    }
}

/// Sorts a sparse row descending and cancels repeated columns in pairs.
pub fn normalize_sparse_row(row: &mut Vec<u32>) {
    row.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = 0;
    let mut i = 0;
    while i < row.len() {
        if i + 1 < row.len() && row[i] == row[i + 1] {
            i += 2;
        } else {
            row[out] = row[i];
            out += 1;
            i += 1;
        }
    }
    row.truncate(out);
}

/// Symmetric difference of two descending rows into `out`.
fn xor_desc(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

/// Echelon form of a batch of sparse rows, one pivot row per pivot column.
///
/// Rows are bucketed by leading column and columns are processed from the
/// highest down: the shortest row in a bucket becomes the pivot row and the
/// rest of the bucket is reduced by it and moved to the bucket of its new
/// leading column. Pivot rows are not back-reduced.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    width: usize,
    pivot_rows: Vec<Option<Box<[u32]>>>,
    rank: usize,
}

impl SparseEchelon {
    /// `rows` must hold column indices below `width`, in any order; repeated
    /// columns cancel.
    pub fn from_rows<I: IntoIterator<Item = Vec<u32>>>(width: usize, rows: I) -> SparseEchelon {
        let mut buckets: Vec<Vec<Vec<u32>>> = vec![Vec::new(); width];
        for mut r in rows {
            normalize_sparse_row(&mut r);
            if let Some(&lead) = r.first() {
                assert!((lead as usize) < width, "column {lead} outside width {width}");
                buckets[lead as usize].push(r);
            }
        }
        let mut pivot_rows: Vec<Option<Box<[u32]>>> = vec![None; width];
        let mut rank = 0;
        let mut scratch = Vec::new();
        for c in (0..width).rev() {
            let mut bucket = std::mem::take(&mut buckets[c]);
            if bucket.is_empty() {
                continue;
            }
            let best = (0..bucket.len()).min_by_key(|&i| bucket[i].len()).unwrap();
            let pivot = bucket.swap_remove(best);
            for mut r in bucket {
                xor_desc(&r, &pivot, &mut scratch);
                std::mem::swap(&mut r, &mut scratch);
                if let Some(&lead) = r.first() {
                    buckets[lead as usize].push(r);
                }
            }
            pivot_rows[c] = Some(pivot.into_boxed_slice());
            rank += 1;
        }
        SparseEchelon { width, pivot_rows, rank }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_rows[c].is_some()
    }

    /// Pivot columns in ascending order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.width).filter(|&c| self.is_pivot(c)).collect()
    }

    /// Non-pivot columns in ascending order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.width).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// The pivot row whose leading column is `c`, descending.
    pub fn pivot_row(&self, c: usize) -> Option<&[u32]> {
        self.pivot_rows[c].as_deref()
    }

    /// Reduces a row (columns in any order, repeats cancel) to its unique
    /// remainder supported on non-pivot columns, returned ascending.
    pub fn reduce(&self, columns: &[u32]) -> Vec<u32> {
        let mut words = vec![0u64; self.width.div_ceil(64)];
        for &c in columns {
            words[c as usize / 64] ^= 1 << (c % 64);
        }
        let mut rest = Vec::new();
        for w in (0..words.len()).rev() {
            while words[w] != 0 {
                let b = 63 - words[w].leading_zeros() as usize;
                let c = w * 64 + b;
                match &self.pivot_rows[c] {
                    Some(row) => {
                        for &d in row.iter() {
                            words[d as usize / 64] ^= 1 << (d % 64);
                        }
                    }
                    None => {
                        rest.push(c as u32);
                        words[w] ^= 1 << b;
                    }
                }
            }
        }
        rest.reverse();
        rest
    }

    pub fn contains(&self, columns: &[u32]) -> bool {
        self.reduce(columns).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(s: &str) -> BitRow {
        s.parse().unwrap()
    }

    #[test]
    fn universe_is_sorted_and_indexed() {
        let u = ColumnUniverse::new(4, 5, DEFAULT_COLUMN_CAP).unwrap();
        assert_eq!(u.len(), 56);
        assert!(u.monomials().windows(2).all(|w| w[0] < w[1]));
        for (c, m) in u.monomials().iter().enumerate() {
            assert_eq!(u.index_of(m), Some(c));
        }
        assert_eq!(u.index_of(&Monomial::new(&[1, 1, 1, 1])), None);
        assert_eq!(u.index_of(&Monomial::new(&[1, 1, 3])), None);
    }

    #[test]
    fn filtered_universe_indexes_only_kept_monomials() {
        let u = ColumnUniverse::filtered(4, 6, DEFAULT_COLUMN_CAP, |e| e.iter().all(|&a| a > 0)).unwrap();
        assert_eq!(u.len(), 10);
        assert_eq!(u.index_of(&Monomial::new(&[0, 2, 2, 2])), None);
        assert!(u.index_of(&Monomial::new(&[3, 1, 1, 1])).is_some());
    }

    #[test]
    fn universe_respects_the_column_cap() {
        assert!(matches!(ColumnUniverse::new(4, 100, 1000), Err(Error::Capacity { .. })));
        assert_eq!(composition_count(4, 64), 47905);
    }

    #[test]
    fn encode_examples() {
        let u = ColumnUniverse::new(4, 5, DEFAULT_COLUMN_CAP).unwrap();
        assert!(u.encode(&Polynomial::zero()).unwrap().is_zero());
        let first = Polynomial::from(u.monomial(0).clone());
        assert_eq!(u.encode(&first).unwrap().ones().collect::<Vec<_>>(), vec![0]);
        assert!(u.encode(&(&first + &first)).unwrap().is_zero());
        let wrong = Polynomial::from(Monomial::new(&[1, 1, 1, 1]));
        assert!(matches!(u.encode(&wrong), Err(Error::DegreeArityMismatch(_))));
    }

    #[test]
    fn insert_examples() {
        let mut b = EchelonBasis::new(4);
        assert_eq!(b.rank(), 0);
        assert_eq!(b.insert(row("1100")), Insertion::Added(1));
        assert_eq!(b.insert(row("0110")), Insertion::Added(2));
        assert_eq!(b.rank(), 2);
        assert_eq!(b.pivot_columns(), vec![1, 2]);
        assert_eq!(b.insert(row("1010")), Insertion::Absorbed);
        assert_eq!(b.insert(row("0000")), Insertion::Absorbed);
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn contains_examples() {
        let mut b = EchelonBasis::new(4);
        assert!(!b.contains(&row("0100")));
        b.insert(row("1100"));
        b.insert(row("0110"));
        assert!(b.contains(&row("1100")));
        assert!(b.contains(&row("1010")));
        assert!(!b.contains(&row("0001")));
    }

    #[test]
    fn stored_rows_stay_fully_reduced() {
        let mut b = EchelonBasis::new(6);
        for r in ["110000", "011000", "001101", "100011", "010110"] {
            b.insert(row(r));
        }
        let pivots = b.pivot_columns();
        for r in b.canonical_rows() {
            let own = r.highest_set().unwrap();
            assert!(pivots.contains(&own));
            assert!(pivots.iter().all(|&p| p == own || !r.get(p)));
        }
    }

    #[test]
    fn bitrow_basics() {
        let mut r = BitRow::zeros(130);
        r.set(0);
        r.set(129);
        r.set(64);
        assert_eq!(r.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(r.highest_set(), Some(129));
        r.clear(129);
        assert_eq!(r.highest_set(), Some(64));
        assert_eq!(r.count_ones(), 2);
        assert_eq!(row("0110").to_string(), "0110");
    }

    #[test]
    fn sparse_echelon_small() {
        let e = SparseEchelon::from_rows(4, vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![]]);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivot_columns(), vec![1, 2]);
        assert!(e.contains(&[0, 2]));
        assert!(!e.contains(&[3]));
        assert_eq!(e.reduce(&[2, 3]), vec![0, 3]);
    }

    #[test]
    fn normalize_cancels_pairs() {
        let mut r = vec![3, 1, 3, 2, 3];
        normalize_sparse_row(&mut r);
        assert_eq!(r, vec![3, 2, 1]);
    }
}

//! Monomials and polynomials over F2, dyadic digit data, spikes and the
//! monomial order used throughout the crate.
//!
//! A monomial `x_1^{a_1} ... x_k^{a_k}` is stored as its exponent tuple.
//! The order compares the τ-sequences (row sums of the dyadic digit
//! matrix) lexicographically and breaks ties on the exponent tuple.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u32; 4]>;

/// Number of ones in the binary expansion of `n`.
pub fn alpha(n: u64) -> u32 {
    n.count_ones()
}

/// Least `m >= 1` with `alpha(n + m) <= m`; `beta(0) = 0` by convention.
///
/// This is also the least number of summands of the form `2^s - 1`
/// (`s >= 1`) that add up to `n`, the function usually written μ(n).
pub fn beta(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut m = 1;
    while u64::from(alpha(n + m)) > m {
        m += 1;
    }
    m
}

/// A monomial in `k >= 1` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn new(exponents: &[u32]) -> Monomial {
        assert!(!exponents.is_empty(), "a monomial needs at least one variable");
        Monomial(Exponents::from_slice(exponents))
    }

    pub fn from_exponents(exponents: Exponents) -> Monomial {
        assert!(!exponents.is_empty(), "a monomial needs at least one variable");
        Monomial(exponents)
    }

    /// The constant monomial `1` in `k` variables.
    pub fn one(k: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, k))
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// The σ-sequence, which is the exponent tuple itself.
    pub fn sigma(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| u64::from(a)).sum()
    }

    pub fn tau(&self) -> TauSequence {
        let mut entries = Vec::new();
        for i in 0..32 {
            if self.0.iter().all(|&a| a >> i == 0) {
                break;
            }
            entries.push(self.0.iter().map(|&a| (a >> i) & 1).sum());
        }
        TauSequence(entries)
    }

    /// `τ_1`, the number of odd exponents.
    pub fn tau1(&self) -> u32 {
        self.0.iter().map(|&a| a & 1).sum()
    }

    pub fn epsilon_matrix(&self) -> EpsilonMatrix {
        let k = self.arity();
        assert!(k <= 64, "ε-matrices support at most 64 variables");
        let mut rows = Vec::new();
        for i in 0..32 {
            if self.0.iter().all(|&a| a >> i == 0) {
                break;
            }
            let mut row = 0u64;
            for (j, &a) in self.0.iter().enumerate() {
                row |= u64::from((a >> i) & 1) << j;
            }
            rows.push(row);
        }
        EpsilonMatrix { k, rows }
    }

    /// True iff every exponent is `2^s - 1` for some `s >= 0`.
    pub fn is_spike(&self) -> bool {
        self.0.iter().all(|&a| a & a.wrapping_add(1) == 0)
    }

    pub fn has_zero_exponent(&self) -> bool {
        self.0.contains(&0)
    }

    /// Product of monomials: exponents add.
    pub fn times(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity());
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn squared(&self) -> Monomial {
        Monomial(self.0.iter().map(|a| 2 * a).collect())
    }

    /// True iff `τ(self)` is lexicographically below `t`.
    pub fn in_lower_tau_span(&self, t: &TauSequence) -> Result<bool> {
        if self.degree() != t.degree() {
            return Err(Error::DegreeIncompatibleWithTau);
        }
        Ok(tau_cmp(&self.0, &t.0) == Ordering::Less)
    }
}

/// Compares `τ(x)` with `τ(y)` digit by digit without building the sequences.
fn tau_cmp_monomials(x: &[u32], y: &[u32]) -> Ordering {
    for i in 0..32 {
        let (mut tx, mut ty, mut rest) = (0u32, 0u32, 0u32);
        for &a in x {
            tx += (a >> i) & 1;
            rest |= a >> i;
        }
        for &b in y {
            ty += (b >> i) & 1;
            rest |= b >> i;
        }
        if rest == 0 {
            break;
        }
        if tx != ty {
            return tx.cmp(&ty);
        }
    }
    Ordering::Equal
}

/// Compares `τ(x)` against an explicit τ-sequence.
fn tau_cmp(x: &[u32], t: &[u32]) -> Ordering {
    for i in 0..32 {
        let rest = x.iter().fold(0, |acc, &a| acc | (a >> i));
        let bound = t.get(i).copied().unwrap_or(0);
        if rest == 0 && i >= t.len() {
            break;
        }
        let tx: u32 = x.iter().map(|&a| (a >> i) & 1).sum();
        if tx != bound {
            return tx.cmp(&bound);
        }
    }
    Ordering::Equal
}

/// The monomial order: τ lexicographically, then σ lexicographically.
pub fn compare(x: &Monomial, y: &Monomial) -> Ordering {
    tau_cmp_monomials(&x.0, &y.0).then_with(|| x.0.cmp(&y.0)).then_with(|| x.arity().cmp(&y.arity()))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, a) in self.0.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Monomial> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Invalid(format!("malformed monomial `{s}`")))?;
        let exps = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Exponents, _>>()
            .map_err(|_| Error::Invalid(format!("malformed monomial `{s}`")))?;
        Ok(Monomial(exps))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let exps = Vec::<u32>::deserialize(deserializer)?;
        if exps.is_empty() {
            return Err(D::Error::custom("empty exponent tuple"));
        }
        Ok(Monomial::new(&exps))
    }
}

/// Row sums of the dyadic digit matrix, trailing zeros trimmed: `τ_i` counts
/// the exponents with bit `i - 1` set.
///
/// With trailing zeros removed, the derived lexicographic order agrees with
/// comparing zero-padded sequences.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TauSequence(Vec<u32>);

impl TauSequence {
    pub fn new(mut entries: Vec<u32>) -> TauSequence {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        TauSequence(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `Σ 2^{i-1} τ_i`.
    pub fn degree(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &t)| u64::from(t) << i).sum()
    }
}

impl fmt::Display for TauSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for TauSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TauSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<TauSequence> {
        let t = s.trim();
        let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        let entries = inner
            .split(';')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Invalid(format!("malformed τ-sequence `{s}`")))?;
        Ok(TauSequence::new(entries))
    }
}

/// The 0/1 matrix of dyadic digits: row `i` (from 0), column `j` holds bit
/// `i` of `a_j`. Rows are stored as bit masks with column `j` at bit `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EpsilonMatrix {
    k: usize,
    rows: Vec<u64>,
}

impl EpsilonMatrix {
    pub fn new(k: usize, rows: Vec<u64>) -> EpsilonMatrix {
        assert!((1..=64).contains(&k));
        assert!(rows.iter().all(|&r| k == 64 || r >> k == 0));
        EpsilonMatrix { k, rows }
    }

    /// Builds a matrix from explicit 0/1 rows, all of the same length.
    pub fn from_bits(rows: &[&[u8]]) -> EpsilonMatrix {
        let k = rows.first().map_or(0, |r| r.len());
        let masks = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), k, "ragged ε-matrix");
                r.iter().enumerate().fold(0u64, |acc, (j, &b)| acc | (u64::from(b & 1) << j))
            })
            .collect();
        EpsilonMatrix::new(k, masks)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn bit(&self, i: usize, j: usize) -> u8 {
        ((self.rows[i] >> j) & 1) as u8
    }

    /// The monomial with `a_j = Σ_i 2^i ε_{ij}`.
    pub fn monomial(&self) -> Monomial {
        let mut exps: Exponents = SmallVec::from_elem(0, self.k);
        for (i, &row) in self.rows.iter().enumerate() {
            for (j, a) in exps.iter_mut().enumerate() {
                *a |= (((row >> j) & 1) as u32) << i;
            }
        }
        Monomial(exps)
    }
}

pub fn monomial_of_matrix(m: &EpsilonMatrix) -> Monomial {
    m.monomial()
}

impl fmt::Display for EpsilonMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for j in 0..self.k {
                write!(f, "{}", (row >> j) & 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EpsilonMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Parses rows of 0/1 digits separated by `/`, e.g. `1101/1110`.
impl FromStr for EpsilonMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<EpsilonMatrix> {
        let bad = || Error::Invalid(format!("malformed ε-matrix `{s}`"));
        let rows: Vec<&str> = s.trim().split('/').map(str::trim).collect();
        let k = rows[0].len();
        if k == 0 || k > 64 {
            return Err(bad());
        }
        let mut masks = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != k {
                return Err(bad());
            }
            let mut mask = 0u64;
            for (j, c) in r.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => mask |= 1 << j,
                    _ => return Err(bad()),
                }
            }
            masks.push(mask);
        }
        Ok(EpsilonMatrix { k, rows: masks })
    }
}

/// Multisets of parts `2^s - 1` (`s >= 1`) summing to `n` with at most `k`
/// parts, each as a non-increasing list of the `s` values.
fn spike_partitions(n: u64, k: usize) -> Vec<Vec<u32>> {
    fn go(rem: u64, max_s: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if left == 0 {
            return;
        }
        for s in (1..=max_s).rev() {
            let part = (1u64 << s) - 1;
            if part > rem {
                continue;
            }
            if part * (left as u64) < rem {
                break;
            }
            cur.push(s);
            go(rem - part, s, left - 1, cur, out);
            cur.pop();
        }
    }
    let max_s = (64 - n.leading_zeros()).min(32);
    let mut out = Vec::new();
    go(n, max_s, k, &mut Vec::new(), &mut out);
    out
}

/// The minimal spike of degree `n` in `k` variables: exponents `2^{s_j} - 1`
/// with `s_1 > s_2 > ... > s_{r-1} >= s_r > 0`, or `None` when no spike of
/// that shape fits.
pub fn minimal_spike(n: u64, k: usize) -> Option<Monomial> {
    spike_partitions(n, k)
        .into_iter()
        .find(|s| {
            let r = s.len();
            (0..r.saturating_sub(1)).all(|i| s[i] > s[i + 1] || (i + 2 == r && s[i] == s[i + 1]))
        })
        .map(|s| {
            let mut exps: Exponents = SmallVec::from_elem(0, k);
            for (j, &sj) in s.iter().enumerate() {
                exps[j] = ((1u64 << sj) - 1) as u32;
            }
            Monomial(exps)
        })
}

/// A polynomial over F2, stored as its support in ascending monomial order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial(BTreeSet<Monomial>);

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial(BTreeSet::new())
    }

    /// Adds `m` with coefficient 1; returns whether `m` is now in the support.
    pub fn toggle(&mut self, m: Monomial) -> bool {
        if self.0.remove(&m) {
            false
        } else {
            self.0.insert(m);
            true
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.0.contains(m)
    }

    /// Support monomials in ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.0.iter()
    }

    pub fn leading_term(&self) -> Option<&Monomial> {
        self.0.last()
    }

    /// Degree of the support if it is homogeneous and nonzero.
    pub fn degree(&self) -> Option<u64> {
        let d = self.0.first()?.degree();
        self.0.iter().all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn arity(&self) -> Option<usize> {
        self.0.first().map(Monomial::arity)
    }

    pub fn times(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for a in &self.0 {
            for b in &other.0 {
                out.toggle(a.times(b));
            }
        }
        out
    }

    /// Squaring is additive over F2, so it just doubles every exponent.
    pub fn squared(&self) -> Polynomial {
        Polynomial(self.0.iter().map(Monomial::squared).collect())
    }

    /// True iff every support monomial has τ below `t`.
    pub fn in_lower_tau_span(&self, t: &TauSequence) -> Result<bool> {
        let mut all = true;
        for m in &self.0 {
            all &= m.in_lower_tau_span(t)?;
        }
        Ok(all)
    }

    /// Parses `+`-joined monomials, also returning monomials that appeared
    /// more than once (an even number of copies cancels).
    pub fn parse_with_duplicates(s: &str) -> Result<(Polynomial, Vec<Monomial>)> {
        let mut p = Polynomial::zero();
        let mut seen = BTreeSet::new();
        let mut dups = Vec::new();
        for part in s.split('+') {
            let m: Monomial = part.parse()?;
            if !seen.insert(m.clone()) && !dups.contains(&m) {
                dups.push(m.clone());
            }
            p.toggle(m);
        }
        Ok((p, dups))
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Polynomial {
        Polynomial(BTreeSet::from([m]))
    }
}

impl FromIterator<Monomial> for Polynomial {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Polynomial {
        let mut p = Polynomial::zero();
        for m in iter {
            p.toggle(m);
        }
        p
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for m in &rhs.0 {
            self.toggle(m.clone());
        }
    }
}

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for m in rhs.0 {
            self.toggle(m);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial(self.0.symmetric_difference(&rhs.0).cloned().collect())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += rhs;
        self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polynomial> {
        if s.trim() == "0" {
            return Ok(Polynomial::zero());
        }
        Polynomial::parse_with_duplicates(s).map(|(p, _)| p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    fn tau(t: &[u32]) -> TauSequence {
        TauSequence::new(t.to_vec())
    }

    #[test]
    fn degree_examples() {
        assert_eq!(m(&[0, 0, 0, 0]).degree(), 0);
        assert_eq!(m(&[3, 3, 2, 1]).degree(), 9);
        assert_eq!(m(&[7, 3, 3, 0]).degree(), 13);
    }

    #[test]
    fn alpha_and_beta_examples() {
        assert_eq!(alpha(0), 0);
        assert_eq!(alpha(7), 3);
        assert_eq!(alpha(6), 2);
        assert_eq!(beta(0), 0);
        assert_eq!(beta(7), 1);
        assert_eq!(beta(5), 3);
        assert_eq!(beta(12), 4);
    }

    #[test]
    fn beta_is_the_least_spike_summand_count() {
        // Smallest number of parts 2^s - 1 adding to n, by dynamic programming.
        let mut best = vec![u64::MAX; 200];
        best[0] = 0;
        for n in 1..200usize {
            for s in 1..8 {
                let p = (1usize << s) - 1;
                if p <= n && best[n - p] != u64::MAX {
                    best[n] = best[n].min(best[n - p] + 1);
                }
            }
        }
        for n in 0..200u64 {
            assert_eq!(beta(n), best[n as usize], "n = {n}");
        }
    }

    #[test]
    fn epsilon_matrix_examples() {
        let e = m(&[3, 3, 2, 1]).epsilon_matrix();
        assert_eq!(e, EpsilonMatrix::from_bits(&[&[1, 1, 0, 1], &[1, 1, 1, 0]]));
        assert_eq!(m(&[0, 0, 0, 0]).epsilon_matrix().height(), 0);
        assert_eq!(m(&[2, 1, 0, 1]).epsilon_matrix(), EpsilonMatrix::from_bits(&[&[0, 1, 0, 1], &[1, 0, 0, 0]]));
    }

    #[test]
    fn monomial_of_matrix_examples() {
        let d = EpsilonMatrix::from_bits(&[&[1, 1, 0, 1], &[1, 1, 1, 0]]);
        assert_eq!(monomial_of_matrix(&d), m(&[3, 3, 2, 1]));
        assert_eq!(EpsilonMatrix::new(4, vec![]).monomial(), m(&[0, 0, 0, 0]));
        let d = EpsilonMatrix::from_bits(&[&[0, 0, 0, 1], &[0, 0, 1, 0]]);
        assert_eq!(d.monomial(), m(&[0, 0, 2, 1]));
    }

    #[test]
    fn matrix_text_round_trip() {
        let d: EpsilonMatrix = "1101/1110".parse().unwrap();
        assert_eq!(d.monomial(), m(&[3, 3, 2, 1]));
        assert_eq!(d.to_string(), "1101/1110");
        assert!("1101/111".parse::<EpsilonMatrix>().is_err());
        assert!("1201".parse::<EpsilonMatrix>().is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(m(&[3, 3, 2, 1]).tau(), tau(&[3, 3]));
        assert_eq!(m(&[7, 3, 3, 0]).tau(), tau(&[3, 3, 1]));
        assert_eq!(m(&[1, 1, 1, 1]).tau(), tau(&[4]));
        assert_eq!(m(&[7, 3, 3, 0]).tau().to_string(), "(3;3;1)");
        assert_eq!("(3;3;0)".parse::<TauSequence>().unwrap(), tau(&[3, 3]));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare(&m(&[1, 1, 1, 2]), &m(&[2, 1, 1, 1])), Ordering::Less);
        assert_eq!(compare(&m(&[4, 3, 1, 1]), &m(&[3, 3, 2, 1])), Ordering::Less);
        let x = m(&[5, 0, 2, 9]);
        assert_eq!(compare(&x, &x), Ordering::Equal);
    }

    #[test]
    fn cross_degree_compare_pads_tau() {
        // (1;1) against (1;1;1): the shorter sequence is padded with zeros.
        assert_eq!(compare(&m(&[1, 2]), &m(&[1, 6])), Ordering::Less);
        assert_eq!(compare(&m(&[3, 0]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn spike_examples() {
        assert!(m(&[7, 3, 3, 0]).is_spike());
        assert!(!m(&[2, 1, 1, 1]).is_spike());
        assert!(m(&[0, 0, 0, 0]).is_spike());
    }

    #[test]
    fn minimal_spike_examples() {
        assert_eq!(minimal_spike(13, 4), Some(m(&[7, 3, 3, 0])));
        assert_eq!(minimal_spike(14, 4), Some(m(&[7, 7, 0, 0])));
        assert_eq!(minimal_spike(18, 4), Some(m(&[15, 3, 0, 0])));
        assert_eq!(minimal_spike(9, 4), Some(m(&[7, 1, 1, 0])));
        // 12 needs at least four parts of the form 2^s - 1, none descending.
        assert_eq!(minimal_spike(12, 3), None);
    }

    #[test]
    fn lower_tau_span_examples() {
        assert!(m(&[4, 3, 1, 1]).in_lower_tau_span(&tau(&[3, 3])).unwrap());
        assert!(!m(&[3, 3, 2, 1]).in_lower_tau_span(&tau(&[3, 3])).unwrap());
        assert!(m(&[2, 3, 4, 4]).in_lower_tau_span(&tau(&[3, 3, 1])).unwrap());
        assert_eq!(m(&[1, 1, 1, 1]).in_lower_tau_span(&tau(&[3, 3])), Err(Error::DegreeIncompatibleWithTau));
    }

    #[test]
    fn polynomial_addition_is_symmetric_difference() {
        let f: Polynomial = "(1,0)+(0,1)".parse().unwrap();
        let g: Polynomial = "(0,1)+(2,0)".parse().unwrap();
        assert_eq!(&f + &g, "(1,0)+(2,0)".parse().unwrap());
        assert!((&f + &f).is_zero());
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn duplicates_cancel_and_are_reported() {
        let (p, dups) = Polynomial::parse_with_duplicates("(1,1) + (2,0) + (1, 1)").unwrap();
        assert_eq!(p, Polynomial::from(m(&[2, 0])));
        assert_eq!(dups, vec![m(&[1, 1])]);
    }

    #[test]
    fn monomial_text() {
        assert_eq!(" ( 3, 3,2 ,1 )".parse::<Monomial>().unwrap(), m(&[3, 3, 2, 1]));
        assert!("(3,3".parse::<Monomial>().is_err());
        assert!("()".parse::<Monomial>().is_err());
        assert_eq!(m(&[7, 3, 3, 0]).to_string(), "(7,3,3,0)");
    }

    #[test]
    fn serde_as_array() {
        let x = m(&[0, 1, 1, 3]);
        assert_eq!(serde_json::to_string(&x).unwrap(), "[0,1,1,3]");
        assert_eq!(serde_json::from_str::<Monomial>("[0,1,1,3]").unwrap(), x);
        assert!(serde_json::from_str::<Monomial>("[]").is_err());
    }
}

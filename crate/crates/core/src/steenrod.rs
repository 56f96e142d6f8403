//! The action of Steenrod squares on `F2[x1..xk]` and Kameko's maps.
//!
//! On one variable `Sq^i(x^a) = C(a, i) x^{a+i}`, and `C(a, i)` is odd
//! exactly when the bits of `i` are a subset of the bits of `a`. By the
//! Cartan formula `Sq^i` of a monomial is then the sum of `x^{a+c}` over all
//! compositions `c` of `i` with `c_j ⊆ a_j` bitwise. Distinct compositions
//! give distinct monomials, so nothing cancels inside a single image.

use smallvec::SmallVec;

use crate::monomial::{Exponents, Monomial, Polynomial};

/// `Sq^i(x^a)`: `Some(a + i)` when `C(a, i)` is odd, `None` for zero.
pub fn sq_power(i: u32, a: u32) -> Option<u32> {
    (i & !a == 0).then(|| a.checked_add(i).expect("exponent overflow"))
}

/// Calls `emit` with the exponent tuple of every monomial in `Sq^i(x^a)`.
pub fn for_each_sq_term<F: FnMut(&[u32])>(i: u32, a: &[u32], mut emit: F) {
    let k = a.len();
    // suffix[j] bounds what variables j.. can still absorb.
    let mut suffix: SmallVec<[u64; 8]> = SmallVec::from_elem(0, k + 1);
    for j in (0..k).rev() {
        suffix[j] = suffix[j + 1] + u64::from(a[j]);
    }
    if u64::from(i) > suffix[0] {
        return;
    }
    let mut cur: Exponents = Exponents::from_slice(a);
    fn go<F: FnMut(&[u32])>(j: usize, rem: u32, a: &[u32], suffix: &[u64], cur: &mut Exponents, emit: &mut F) {
        if rem == 0 {
            emit(cur);
            return;
        }
        if j == a.len() || u64::from(rem) > suffix[j] {
            return;
        }
        let aj = a[j];
        if j + 1 == a.len() {
            if rem & !aj == 0 {
                cur[j] = aj + rem;
                emit(cur);
                cur[j] = aj;
            }
            return;
        }
        // Submasks of a_j, largest first, that fit in what remains.
        let mut c = aj;
        loop {
            if c <= rem && u64::from(rem - c) <= suffix[j + 1] {
                cur[j] = aj + c;
                go(j + 1, rem - c, a, suffix, cur, emit);
            }
            if c == 0 {
                break;
            }
            c = (c - 1) & aj;
        }
        cur[j] = aj;
    }
    go(0, i, a, &suffix, &mut cur, &mut emit);
}

/// `Sq^i` of a single monomial.
pub fn sq_monomial(i: u32, m: &Monomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for_each_sq_term(i, m.exponents(), |e| {
        out.toggle(Monomial::new(e));
    });
    out
}

/// `Sq^i` extended linearly.
pub fn sq(i: u32, f: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for m in f.terms() {
        for_each_sq_term(i, m.exponents(), |e| {
            out.toggle(Monomial::new(e));
        });
    }
    out
}

/// Images `Sq^{2^j}(m)` for every source `m` of degree `n - 2^j`; these span
/// the hit elements of degree `n`.
#[derive(Clone, Debug)]
pub struct GeneratorImageSet {
    pub k: usize,
    pub degree: u64,
    /// One block per power `2^j <= n`: the square index and its
    /// (source, image) pairs. Zero images are kept.
    pub blocks: Vec<(u32, Vec<(Monomial, Polynomial)>)>,
}

impl GeneratorImageSet {
    pub fn source_count(&self) -> usize {
        self.blocks.iter().map(|(_, b)| b.len()).sum()
    }

    pub fn images(&self) -> impl Iterator<Item = &Polynomial> {
        self.blocks.iter().flat_map(|(_, b)| b.iter().map(|(_, p)| p))
    }
}

/// All exponent tuples of `k` entries summing to `n`, in lexicographic order.
pub fn compositions(k: usize, n: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for_each_composition(k, n, |e| out.push(Monomial::new(e)));
    out
}

pub(crate) fn for_each_composition<F: FnMut(&[u32])>(k: usize, n: u64, mut emit: F) {
    assert!(k >= 1);
    let n = u32::try_from(n).expect("degree exceeds exponent range");
    let mut cur: Exponents = SmallVec::from_elem(0, k);
    fn go<F: FnMut(&[u32])>(j: usize, rem: u32, cur: &mut Exponents, emit: &mut F) {
        if j + 1 == cur.len() {
            cur[j] = rem;
            emit(cur);
            return;
        }
        for a in 0..=rem {
            cur[j] = a;
            go(j + 1, rem - a, cur, emit);
        }
        cur[j] = 0;
    }
    go(0, n, &mut cur, &mut emit);
}

pub fn hit_generator_images(k: usize, n: u64) -> GeneratorImageSet {
    let mut blocks = Vec::new();
    let mut p = 1u64;
    while p <= n {
        let i = p as u32;
        let pairs = compositions(k, n - p)
            .into_iter()
            .map(|m| {
                let img = sq_monomial(i, &m);
                (m, img)
            })
            .collect();
        blocks.push((i, pairs));
        p <<= 1;
    }
    GeneratorImageSet { k, degree: n, blocks }
}

/// Kameko's `φ`: `x_1 ... x_k · m^2`.
pub fn kameko_phi(m: &Monomial) -> Monomial {
    Monomial::from_exponents(m.exponents().iter().map(|&a| 2 * a + 1).collect())
}

/// The down map on a monomial: `Some(y)` if `m = φ(y)`, else `None`.
pub fn kameko_down_monomial(m: &Monomial) -> Option<Monomial> {
    m.exponents()
        .iter()
        .all(|a| a & 1 == 1)
        .then(|| Monomial::from_exponents(m.exponents().iter().map(|a| a >> 1).collect()))
}

/// The down map extended linearly.
pub fn kameko_down(f: &Polynomial) -> Polynomial {
    f.terms().filter_map(kameko_down_monomial).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn sq_power_examples() {
        assert_eq!(sq_power(1, 3), Some(4));
        assert_eq!(sq_power(1, 4), None);
        assert_eq!(sq_power(2, 2), Some(4));
        assert_eq!(sq_power(0, 9), Some(9));
        assert_eq!(sq_power(3, 2), None);
    }

    #[test]
    fn sq_power_matches_binomial_parity() {
        // Pascal's triangle mod 2.
        let mut row = vec![1u8];
        for a in 0..200u32 {
            for i in 0..=a {
                let odd = row[i as usize] == 1;
                assert_eq!(sq_power(i, a).is_some(), odd, "C({a},{i})");
            }
            let mut next = vec![1u8; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] ^ row[i];
            }
            row = next;
        }
    }

    #[test]
    fn sq_examples() {
        assert_eq!(sq_monomial(1, &m(&[3, 3, 1, 1])), p("(4,3,1,1)+(3,4,1,1)+(3,3,2,1)+(3,3,1,2)"));
        let f = p("(2,1,1,0)+(0,4,0,0)");
        assert_eq!(sq(0, &f), f);
        assert_eq!(sq_monomial(4, &m(&[2, 1, 1, 0])), p("(4,2,2,0)"));
    }

    #[test]
    fn generator_images_for_degree_five() {
        let g = hit_generator_images(4, 5);
        let counts: Vec<(u32, usize)> = g.blocks.iter().map(|(i, b)| (*i, b.len())).collect();
        assert_eq!(counts, vec![(1, 35), (2, 20), (4, 4)]);
        assert_eq!(g.source_count(), 59);
        assert!(g.images().any(Polynomial::is_zero));
        assert!(g.images().all(|f| f.degree().map_or(true, |d| d == 5)));
    }

    #[test]
    fn generator_images_small_cases() {
        let g = hit_generator_images(1, 2);
        assert!(g.images().any(|f| *f == p("(2)")));
        let g = hit_generator_images(2, 2);
        let span: Vec<&Polynomial> = g.images().filter(|f| !f.is_zero()).collect();
        assert!(span.iter().all(|f| f.len() == 1));
        assert!(!span.iter().any(|f| f.contains(&m(&[1, 1]))));
    }

    #[test]
    fn kameko_examples() {
        assert_eq!(kameko_phi(&m(&[0, 0, 0, 0])), m(&[1, 1, 1, 1]));
        assert_eq!(kameko_phi(&m(&[1, 2, 0, 3])), m(&[3, 5, 1, 7]));
        assert_eq!(kameko_phi(&m(&[1, 0, 2, 0])), m(&[3, 1, 5, 1]));
        assert_eq!(kameko_down(&p("(3,5,1,7)")), p("(1,2,0,3)"));
        assert!(kameko_down(&p("(2,1,1,1)")).is_zero());
        assert_eq!(kameko_down(&p("(1,1,1,1)")), p("(0,0,0,0)"));
    }

    #[test]
    fn compositions_are_counted_by_stars_and_bars() {
        assert_eq!(compositions(4, 5).len(), 56);
        assert_eq!(compositions(1, 9).len(), 1);
        assert_eq!(compositions(3, 0), vec![m(&[0, 0, 0])]);
    }
}

//! Cohit dimensions, admissible bases and hitness per `(k, degree)`, plus
//! the standalone criteria: Wood and Singer filters, strictly inadmissible
//! digit matrices, the Q/R summands and Kameko's reduction.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{composition_count, BitRow, ColumnUniverse, EchelonBasis, SparseEchelon, DEFAULT_COLUMN_CAP};
use crate::monomial::{alpha, beta, minimal_spike, EpsilonMatrix, Monomial, Polynomial, TauSequence};
use crate::steenrod::{for_each_composition, for_each_sq_term, kameko_down_monomial};

/// Environment variable overriding the column cap.
pub const COLUMN_CAP_ENV: &str = "HITCALC_COLUMN_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub column_cap: usize,
    /// Treat filter-hit monomials as known hit and project them out before
    /// elimination. Off by default so the filters stay independently testable.
    pub accelerated: bool,
    /// Hit spaces with more columns than this are not kept in the cache
    /// (their reports still are).
    pub retain_columns: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { column_cap: DEFAULT_COLUMN_CAP, accelerated: false, retain_columns: 20_000 }
    }
}

impl SolverConfig {
    /// Defaults, with the column cap taken from `HITCALC_COLUMN_CAP` if set.
    pub fn from_env() -> Result<Self> {
        let mut c = SolverConfig::default();
        if let Ok(v) = std::env::var(COLUMN_CAP_ENV) {
            c.column_cap = v
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("{COLUMN_CAP_ENV} must be a positive integer, got `{v}`")))?;
        }
        Ok(c)
    }
}

/// Which summand of `P_k` a computation is restricted to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Summand {
    All,
    /// Monomials with some zero exponent.
    Q,
    /// Monomials with every exponent positive.
    R,
}

impl Summand {
    fn keeps(self, e: &[u32]) -> bool {
        match self {
            Summand::All => true,
            Summand::Q => e.contains(&0),
            Summand::R => !e.contains(&0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FilterVerdict {
    Hit,
    Unknown,
}

/// Wood's criterion: hit when `β(n) > τ_1`.
pub fn wood_filter(m: &Monomial) -> FilterVerdict {
    if beta(m.degree()) > u64::from(m.tau1()) {
        FilterVerdict::Hit
    } else {
        FilterVerdict::Unknown
    }
}

/// Singer's criterion: when `α(n + k) <= k`, hit if `τ` lies below the
/// minimal spike's `τ`.
pub fn singer_filter(m: &Monomial) -> FilterVerdict {
    match singer_bound(m.degree(), m.arity()) {
        Some(t) if m.tau() < t => FilterVerdict::Hit,
        _ => FilterVerdict::Unknown,
    }
}

fn singer_bound(n: u64, k: usize) -> Option<TauSequence> {
    if alpha(n + k as u64) > k as u32 {
        return None;
    }
    minimal_spike(n, k).map(|z| z.tau())
}

/// True iff some window of `ε(x)` rows equals `d` (rows past the top of
/// `ε(x)` count as zero).
pub fn delta_matches(d: &EpsilonMatrix, x: &Monomial) -> bool {
    if d.k() != x.arity() {
        return false;
    }
    let e = x.epsilon_matrix();
    let row = |i: usize| e.rows().get(i).copied().unwrap_or(0);
    (0..=e.height()).any(|r| d.rows().iter().enumerate().all(|(i, &di)| row(r + i) == di))
}

/// True iff some catalog matrix matches a window of `x`. Every entry is
/// assumed to be strictly inadmissible.
pub fn inadmissible_by_catalog(x: &Monomial, catalog: &[EpsilonMatrix]) -> bool {
    catalog.iter().any(|d| delta_matches(d, x))
}

/// Both descent clauses on τ: after a zero entry everything is zero, and
/// after an entry below `k` everything stays below `k`.
pub fn tau_descent_holds(m: &Monomial) -> bool {
    let t = m.tau();
    let k = m.arity() as u32;
    let e = t.entries();
    let first_zero = e.iter().position(|&v| v == 0);
    let first_short = e.iter().position(|&v| v < k);
    first_zero.map_or(true, |i| e[i..].iter().all(|&v| v == 0))
        && first_short.map_or(true, |i| e[i..].iter().all(|&v| v < k))
}

pub fn monomials_of_degree(k: usize, n: u64) -> Result<ColumnUniverse> {
    ColumnUniverse::new(k, n, DEFAULT_COLUMN_CAP)
}

/// Per-degree result: sizes and the admissible basis in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitReport {
    pub k: usize,
    pub degree: u64,
    #[serde(rename = "monomials")]
    pub monomial_count: usize,
    pub hit_rank: usize,
    #[serde(rename = "dimension")]
    pub cohit_dimension: usize,
    pub admissible: Vec<Monomial>,
}

/// The hit subspace of one degree (or one summand of it) in echelon form.
#[derive(Debug)]
pub struct HitSpace {
    universe: ColumnUniverse,
    echelon: SparseEchelon,
}

impl HitSpace {
    pub fn build(k: usize, n: u64, summand: Summand, config: &SolverConfig) -> Result<HitSpace> {
        let universe = ColumnUniverse::filtered(k, n, config.column_cap, |e| summand.keeps(e))?;
        let known_hit: Vec<bool> = if config.accelerated {
            let bound = singer_bound(n, k);
            let beta_n = beta(n);
            universe
                .monomials()
                .iter()
                .map(|m| beta_n > u64::from(m.tau1()) || bound.as_ref().is_some_and(|t| m.tau() < *t))
                .collect()
        } else {
            Vec::new()
        };
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut p = 1u64;
        while p <= n {
            for_each_composition(k, n - p, |src| {
                if !summand.keeps(src) {
                    return;
                }
                let mut row = Vec::new();
                for_each_sq_term(p as u32, src, |t| {
                    let c = universe.index_of_exponents(t).expect("squares preserve the zero pattern");
                    if known_hit.is_empty() || !known_hit[c] {
                        row.push(c as u32);
                    }
                });
                if !row.is_empty() {
                    rows.push(row);
                }
            });
            p <<= 1;
        }
        for (c, &h) in known_hit.iter().enumerate() {
            if h {
                rows.push(vec![c as u32]);
            }
        }
        let echelon = SparseEchelon::from_rows(universe.len(), rows);
        Ok(HitSpace { universe, echelon })
    }

    pub fn universe(&self) -> &ColumnUniverse {
        &self.universe
    }

    pub fn echelon(&self) -> &SparseEchelon {
        &self.echelon
    }

    pub fn monomial_count(&self) -> usize {
        self.universe.len()
    }

    pub fn hit_rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn dimension(&self) -> usize {
        self.universe.len() - self.echelon.rank()
    }

    /// Non-pivot monomials in ascending order.
    pub fn admissible(&self) -> Vec<Monomial> {
        self.echelon.free_columns().into_iter().map(|c| self.universe.monomial(c).clone()).collect()
    }

    /// Whether `m` is a pivot column, i.e. a leading term of a hit element.
    pub fn is_inadmissible(&self, m: &Monomial) -> Result<bool> {
        let c = self.column(m)?;
        Ok(self.echelon.is_pivot(c))
    }

    fn column(&self, m: &Monomial) -> Result<usize> {
        self.universe.index_of(m).ok_or_else(|| {
            Error::DegreeArityMismatch(format!(
                "{m} is not a degree-{} monomial in {} variables",
                self.universe.degree(),
                self.universe.k()
            ))
        })
    }

    fn columns_of(&self, f: &Polynomial) -> Result<Vec<u32>> {
        f.terms().map(|m| self.column(m).map(|c| c as u32)).collect()
    }

    pub fn is_hit(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.echelon.contains(&self.columns_of(f)?))
    }

    /// The unique sum of admissible monomials congruent to `f` modulo hit
    /// elements.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let rest = self.echelon.reduce(&self.columns_of(f)?);
        Ok(rest.into_iter().map(|c| self.universe.monomial(c as usize).clone()).collect())
    }

    pub fn report(&self) -> HitReport {
        HitReport {
            k: self.universe.k(),
            degree: self.universe.degree(),
            monomial_count: self.monomial_count(),
            hit_rank: self.hit_rank(),
            cohit_dimension: self.dimension(),
            admissible: self.admissible(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KamekoOutcome {
    NotApplicable { beta: u64 },
    Pass { dimension: usize, lower_degree: u64 },
    Fail { upper: usize, lower: usize, image_rank: usize, lower_degree: u64 },
}

/// One monomial's filter verdicts next to the exact answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterAudit {
    pub monomial: Monomial,
    pub wood: FilterVerdict,
    pub singer: FilterVerdict,
    pub hit: bool,
}

impl FilterAudit {
    /// A filter claiming "hit" for a monomial that is not hit.
    pub fn contradiction(&self) -> bool {
        !self.hit && (self.wood == FilterVerdict::Hit || self.singer == FilterVerdict::Hit)
    }
}

type Slot<T> = Arc<OnceLock<Result<T>>>;
type Cache<K, T> = Mutex<HashMap<K, Slot<Arc<T>>>>;

/// Computes hit spaces on demand and caches them by `(k, degree, summand)`.
#[derive(Debug, Default)]
pub struct HitSolver {
    config: SolverConfig,
    spaces: Cache<(usize, u64, Summand), HitSpace>,
    reports: Cache<(usize, u64), HitReport>,
}

impl HitSolver {
    pub fn new(config: SolverConfig) -> HitSolver {
        HitSolver { config, ..HitSolver::default() }
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    fn slot<K: std::hash::Hash + Eq, T>(map: &Mutex<HashMap<K, Slot<T>>>, key: K) -> Slot<T> {
        map.lock().unwrap().entry(key).or_default().clone()
    }

    /// The hit space of `(k, n)` restricted to `summand`.
    pub fn space(&self, k: usize, n: u64, summand: Summand) -> Result<Arc<HitSpace>> {
        let key = (k, n, summand);
        if let Some(slot) = self.spaces.lock().unwrap().get(&key) {
            if let Some(r) = slot.get() {
                return r.clone();
            }
        }
        if composition_count(k, n) > self.config.retain_columns as u128 {
            return HitSpace::build(k, n, summand, &self.config).map(Arc::new);
        }
        let slot = Self::slot(&self.spaces, key);
        slot.get_or_init(|| HitSpace::build(k, n, summand, &self.config).map(Arc::new)).clone()
    }

    pub fn cohit(&self, k: usize, n: u64) -> Result<Arc<HitReport>> {
        let slot = Self::slot(&self.reports, (k, n));
        slot.get_or_init(|| self.space(k, n, Summand::All).map(|s| Arc::new(s.report()))).clone()
    }

    /// Whether a homogeneous polynomial is hit. Zero is hit.
    pub fn is_hit(&self, f: &Polynomial) -> Result<bool> {
        let (Some(k), Some(n)) = (f.arity(), f.degree()) else {
            if f.is_zero() {
                return Ok(true);
            }
            return Err(Error::DegreeArityMismatch(format!("{f} is not homogeneous")));
        };
        if f.terms().any(|m| m.arity() != k) {
            return Err(Error::DegreeArityMismatch(format!("{f} mixes numbers of variables")));
        }
        self.space(k, n, Summand::All)?.is_hit(f)
    }

    /// Cohit dimensions of the Q and R summands.
    pub fn qr_split(&self, k: usize, n: u64) -> Result<(usize, usize)> {
        let q = self.space(k, n, Summand::Q)?.dimension();
        let r = self.space(k, n, Summand::R)?.dimension();
        Ok((q, r))
    }

    /// Whether `x = monomial_of_matrix(d)` lies in the span of smaller
    /// monomials plus the images of `Sq^i` for `0 < i < 2^s`, `s` the number
    /// of rows.
    pub fn strictly_inadmissible(&self, d: &EpsilonMatrix) -> Result<bool> {
        let x = d.monomial();
        let k = x.arity();
        let n = x.degree();
        let s = d.height() as u32;
        if n == 0 || s == 0 {
            return Ok(false);
        }
        let universe = ColumnUniverse::new(k, n, self.config.column_cap)?;
        let base = universe.index_of(&x).expect("x has the universe's degree") as u32;
        // x is in that span iff it is the leading term of an element of the
        // square images, so every column below x can be dropped.
        let top = (1u64 << s.min(63)) - 1;
        let mut rows = Vec::new();
        for i in 1..=top.min(n) {
            for_each_composition(k, n - i, |src| {
                let mut row = Vec::new();
                for_each_sq_term(i as u32, src, |t| {
                    let c = universe.index_of_exponents(t).unwrap() as u32;
                    if c >= base {
                        row.push(c - base);
                    }
                });
                if !row.is_empty() {
                    rows.push(row);
                }
            });
        }
        let echelon = SparseEchelon::from_rows(universe.len() - base as usize, rows);
        Ok(echelon.is_pivot(0))
    }

    pub fn kameko_check(&self, k: usize, n: u64) -> Result<KamekoOutcome> {
        let b = beta(n);
        if b != k as u64 {
            return Ok(KamekoOutcome::NotApplicable { beta: b });
        }
        let diff = n as i64 - k as i64;
        if diff % 2 != 0 {
            return Err(Error::Parity(diff));
        }
        let lower_degree = (diff / 2) as u64;
        let upper = self.space(k, n, Summand::All)?;
        let lower = self.space(k, lower_degree, Summand::All)?;
        let lower_free = lower.echelon().free_columns();
        let mut position = vec![usize::MAX; lower.universe().len()];
        for (i, &c) in lower_free.iter().enumerate() {
            position[c] = i;
        }
        let mut images = EchelonBasis::new(lower_free.len());
        for x in upper.admissible() {
            let Some(y) = kameko_down_monomial(&x) else { continue };
            let c = lower.universe().index_of(&y).unwrap() as u32;
            let coords = lower.echelon().reduce(&[c]).into_iter().map(|c| position[c as usize]);
            images.insert(BitRow::from_columns(lower_free.len(), coords));
        }
        let (up, low, rank) = (upper.dimension(), lower.dimension(), images.rank());
        Ok(if up == low && rank == low {
            KamekoOutcome::Pass { dimension: up, lower_degree }
        } else {
            KamekoOutcome::Fail { upper: up, lower: low, image_rank: rank, lower_degree }
        })
    }

    /// Filter verdicts for every monomial of `(k, n)` against the exact test.
    pub fn filter_audit(&self, k: usize, n: u64) -> Result<Vec<FilterAudit>> {
        let space = self.space(k, n, Summand::All)?;
        space
            .universe()
            .monomials()
            .iter()
            .map(|m| {
                Ok(FilterAudit {
                    monomial: m.clone(),
                    wood: wood_filter(m),
                    singer: singer_filter(m),
                    hit: space.is_hit(&Polynomial::from(m.clone()))?,
                })
            })
            .collect()
    }
}

/// Cohit report with default settings and no cache.
pub fn cohit(k: usize, n: u64) -> Result<HitReport> {
    HitSpace::build(k, n, Summand::All, &SolverConfig::default()).map(|s| s.report())
}

pub fn is_hit(f: &Polynomial) -> Result<bool> {
    HitSolver::default().is_hit(f)
}

pub fn qr_split(k: usize, n: u64) -> Result<(usize, usize)> {
    HitSolver::default().qr_split(k, n)
}

pub fn strictly_inadmissible(d: &EpsilonMatrix) -> Result<bool> {
    HitSolver::default().strictly_inadmissible(d)
}

pub fn kameko_check(k: usize, n: u64) -> Result<KamekoOutcome> {
    HitSolver::default().kameko_check(k, n)
}

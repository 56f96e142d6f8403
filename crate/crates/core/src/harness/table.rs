//! Dimension tables: CSV rows `family,s,t,u,degree,expected_dim,tier`, where
//! `family` is a degree formula such as `2^{s+t+1}+2^{s+1}-3`.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::solver::HitSolver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Required,
    Optional,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TierSelection {
    Required,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct TableRow {
    pub family: String,
    pub s: Option<u32>,
    pub t: Option<u32>,
    pub u: Option<u32>,
    pub degree: u64,
    pub expected_dim: usize,
    pub tier: Tier,
}

#[derive(Clone, Debug, Default)]
pub struct TableFixture {
    pub rows: Vec<TableRow>,
}

/// Evaluates a family formula: a signed sum of integers and powers
/// `2^x` or `2^{...}`, where exponents are signed sums of integers and the
/// parameters `s`, `t`, `u`.
pub fn family_degree(formula: &str, s: Option<u32>, t: Option<u32>, u: Option<u32>) -> Result<u64> {
    let bad = |msg: &str| Error::Invalid(format!("family `{formula}`: {msg}"));
    let chars: Vec<char> = formula.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;

    let atom = |pos: &mut usize| -> Result<i64> {
        match chars.get(*pos) {
            Some(c @ ('s' | 't' | 'u')) => {
                *pos += 1;
                let v = match c {
                    's' => s,
                    't' => t,
                    _ => u,
                };
                v.map(i64::from).ok_or_else(|| bad(&format!("parameter {c} is blank")))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = *pos;
                while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                    *pos += 1;
                }
                chars[start..*pos].iter().collect::<String>().parse().map_err(|_| bad("number too large"))
            }
            _ => Err(bad("expected a number or parameter")),
        }
    };

    let mut total: i64 = 0;
    let mut sign = 1;
    loop {
        let value = if chars.get(pos) == Some(&'2') && chars.get(pos + 1) == Some(&'^') {
            pos += 2;
            let e = if chars.get(pos) == Some(&'{') {
                pos += 1;
                let mut e = atom(&mut pos)?;
                while let Some(&op @ ('+' | '-')) = chars.get(pos) {
                    pos += 1;
                    let a = atom(&mut pos)?;
                    e += if op == '+' { a } else { -a };
                }
                if chars.get(pos) != Some(&'}') {
                    return Err(bad("expected `}`"));
                }
                pos += 1;
                e
            } else {
                atom(&mut pos)?
            };
            if !(0..63).contains(&e) {
                return Err(bad("exponent out of range"));
            }
            1i64 << e
        } else {
            atom(&mut pos)?
        };
        total += sign * value;
        match chars.get(pos) {
            None => break,
            Some('+') => sign = 1,
            Some('-') => sign = -1,
            Some(_) => return Err(bad("expected `+` or `-`")),
        }
        pos += 1;
    }
    u64::try_from(total).map_err(|_| bad("negative degree"))
}

impl TableFixture {
    pub fn from_csv(text: &str) -> Result<TableFixture> {
        let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
        let headers = reader.headers().map_err(|e| Error::Invalid(e.to_string()))?.clone();
        let expected = ["family", "s", "t", "u", "degree", "expected_dim", "tier"];
        if headers.iter().collect::<Vec<_>>() != expected {
            return Err(Error::Invalid(format!("table header must be `{}`", expected.join(","))));
        }
        let mut rows = Vec::new();
        for (i, rec) in reader.deserialize::<TableRow>().enumerate() {
            let row = rec.map_err(|e| Error::Invalid(format!("row {}: {e}", i + 2)))?;
            let computed = family_degree(&row.family, row.s, row.t, row.u)?;
            if computed != row.degree {
                return Err(Error::Invalid(format!(
                    "row {}: {} gives degree {computed}, table says {}",
                    i + 2,
                    row.family,
                    row.degree
                )));
            }
            rows.push(row);
        }
        Ok(TableFixture { rows })
    }

    pub fn load(path: &Path) -> Result<TableFixture> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Fixture { path: path.display().to_string(), message: e.to_string() })?;
        TableFixture::from_csv(&text)
            .map_err(|e| Error::Fixture { path: path.display().to_string(), message: e.to_string() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Pass { computed: usize },
    Fail { computed: usize },
    Skipped { reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableOutcome {
    AllPassed,
    PassedWithSkips,
    Failed,
}

#[derive(Clone, Debug, Default)]
pub struct TableReport {
    pub rows: Vec<(TableRow, RowStatus)>,
}

impl TableReport {
    fn count(&self, f: impl Fn(&RowStatus) -> bool) -> usize {
        self.rows.iter().filter(|(_, s)| f(s)).count()
    }

    pub fn passed(&self) -> usize {
        self.count(|s| matches!(s, RowStatus::Pass { .. }))
    }

    pub fn failed(&self) -> usize {
        self.count(|s| matches!(s, RowStatus::Fail { .. }))
    }

    pub fn skipped(&self) -> usize {
        self.count(|s| matches!(s, RowStatus::Skipped { .. }))
    }

    pub fn outcome(&self) -> TableOutcome {
        if self.failed() > 0 {
            TableOutcome::Failed
        } else if self.skipped() > 0 {
            TableOutcome::PassedWithSkips
        } else {
            TableOutcome::AllPassed
        }
    }
}

/// Compares each selected row with the computed cohit dimension in four
/// variables. Rows beyond the column cap are skipped, never passed.
pub fn verify_table(fix: &TableFixture, tier: TierSelection, solver: &HitSolver) -> TableReport {
    verify_table_with(fix, tier, solver, |_, _| {})
}

/// As [`verify_table`], calling `progress` after each row.
pub fn verify_table_with<F: FnMut(&TableRow, &RowStatus)>(
    fix: &TableFixture,
    tier: TierSelection,
    solver: &HitSolver,
    mut progress: F,
) -> TableReport {
    let mut report = TableReport::default();
    for row in &fix.rows {
        if tier == TierSelection::Required && row.tier != Tier::Required {
            continue;
        }
        let status = match solver.cohit(4, row.degree) {
            Ok(r) if r.cohit_dimension == row.expected_dim => RowStatus::Pass { computed: r.cohit_dimension },
            Ok(r) => RowStatus::Fail { computed: r.cohit_dimension },
            Err(e) => RowStatus::Skipped { reason: e.to_string() },
        };
        progress(row, &status);
        report.rows.push((row.clone(), status));
    }
    report
}

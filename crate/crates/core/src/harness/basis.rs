//! Basis fixtures: JSON `{"k":4,"degree":5,"expected":[[0,1,1,3],...]}`
//! listing an expected admissible basis.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::solver::HitSolver;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisFixture {
    pub k: usize,
    pub degree: u64,
    pub expected: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisOutcome {
    Match,
    /// `missing`: expected but not computed; `extra`: computed but not expected.
    Mismatch {
        missing: Vec<Monomial>,
        extra: Vec<Monomial>,
    },
}

impl BasisFixture {
    /// Parses and checks that monomials are distinct and of the stated shape.
    pub fn from_json(text: &str) -> Result<BasisFixture> {
        let fix: BasisFixture = serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
        fix.validate()?;
        Ok(fix)
    }

    pub fn load(path: &Path) -> Result<BasisFixture> {
        let wrap = |message: String| Error::Fixture { path: path.display().to_string(), message };
        let text = std::fs::read_to_string(path).map_err(|e| wrap(e.to_string()))?;
        BasisFixture::from_json(&text).map_err(|e| wrap(e.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for m in &self.expected {
            if m.arity() != self.k || m.degree() != self.degree {
                return Err(Error::DegreeArityMismatch(format!(
                    "{m} is not a degree-{} monomial in {} variables",
                    self.degree, self.k
                )));
            }
            if !seen.insert(m) {
                return Err(Error::Invalid(format!("{m} listed twice")));
            }
        }
        Ok(())
    }
}

pub fn verify_basis(fix: &BasisFixture, solver: &HitSolver) -> Result<BasisOutcome> {
    let report = solver.cohit(fix.k, fix.degree)?;
    let computed: BTreeSet<&Monomial> = report.admissible.iter().collect();
    let expected: BTreeSet<&Monomial> = fix.expected.iter().collect();
    if computed == expected {
        return Ok(BasisOutcome::Match);
    }
    Ok(BasisOutcome::Mismatch {
        missing: expected.difference(&computed).map(|&m| m.clone()).collect(),
        extra: computed.difference(&expected).map(|&m| m.clone()).collect(),
    })
}

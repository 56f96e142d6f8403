//! Named digit-matrix catalogs, one `name: rows` entry per line, rows of
//! 0/1 digits separated by `/` (e.g. `D1: 1101/1110`).

use std::path::Path;

use crate::error::{Error, Result};
use crate::monomial::EpsilonMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMatrix {
    pub name: String,
    pub matrix: EpsilonMatrix,
}

pub fn parse_matrix_catalog(text: &str) -> Result<Vec<NamedMatrix>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, rows) = line.split_once(':').ok_or_else(|| Error::Syntax {
            line: i + 1,
            column: 1,
            message: "expected `name: rows`".into(),
        })?;
        let matrix = rows.parse().map_err(|e: Error| Error::Syntax {
            line: i + 1,
            column: name.len() + 2,
            message: e.to_string(),
        })?;
        out.push(NamedMatrix { name: name.trim().to_string(), matrix });
    }
    Ok(out)
}

pub fn load_matrix_catalog(path: &Path) -> Result<Vec<NamedMatrix>> {
    let wrap = |message: String| Error::Fixture { path: path.display().to_string(), message };
    let text = std::fs::read_to_string(path).map_err(|e| wrap(e.to_string()))?;
    parse_matrix_catalog(&text).map_err(|e| wrap(e.to_string()))
}

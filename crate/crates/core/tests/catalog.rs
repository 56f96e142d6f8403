use std::path::PathBuf;

use hitcalc_core::harness::load_matrix_catalog;
use hitcalc_core::HitSolver;

fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(rel)
}

#[test]
fn every_catalog_matrix_is_strictly_inadmissible() {
    let catalog = load_matrix_catalog(&fixture("matrices/strictly_inadmissible.txt")).unwrap();
    assert_eq!(catalog.len(), 93);
    let solver = HitSolver::default();
    let mut failures = Vec::new();
    for entry in &catalog {
        if !solver.strictly_inadmissible(&entry.matrix).unwrap() {
            failures.push(format!("{} {}", entry.name, entry.matrix));
        }
    }
    assert!(failures.is_empty(), "not strictly inadmissible: {failures:?}");
}

//! Fixture-driven checks: displayed relations, dimension tables, basis lists
//! and digit-matrix catalogs.

pub mod basis;
pub mod catalog;
pub mod relation;
pub mod table;

pub use basis::{verify_basis, BasisFixture, BasisOutcome};
pub use catalog::{load_matrix_catalog, parse_matrix_catalog, NamedMatrix};
pub use relation::{
    parse_relation, parse_relation_at, parse_relation_file, verify_relation, Relation, RelationEntry, RelationOutcome,
};
pub use table::{
    family_degree, verify_table, verify_table_with, RowStatus, TableFixture, TableOutcome, TableReport, TableRow, Tier,
    TierSelection,
};

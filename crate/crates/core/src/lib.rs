//! Exact computations for the hit problem of `P_k = F2[x1..xk]` over the
//! mod-2 Steenrod algebra: the action of squares, admissible-monomial bases
//! and cohit dimensions, hitness criteria, and checks of relation, table and
//! basis fixtures.
//!
//! ```
//! use hitcalc_core::{cohit, Monomial};
//!
//! let report = cohit(4, 5).unwrap();
//! assert_eq!(report.cohit_dimension, 15);
//! assert_eq!(report.admissible[0], Monomial::new(&[0, 1, 1, 3]));
//! ```

pub mod error;
pub mod harness;
pub mod linalg;
pub mod monomial;
pub mod solver;
pub mod steenrod;

pub use error::{Error, Result};
pub use linalg::{encode, BitRow, ColumnUniverse, EchelonBasis, Insertion, SparseEchelon, DEFAULT_COLUMN_CAP};
pub use monomial::{
    alpha, beta, compare, minimal_spike, monomial_of_matrix, EpsilonMatrix, Monomial, Polynomial, TauSequence,
};
pub use solver::{
    cohit, delta_matches, inadmissible_by_catalog, is_hit, kameko_check, monomials_of_degree, qr_split, singer_filter,
    strictly_inadmissible, tau_descent_holds, wood_filter, FilterAudit, FilterVerdict, HitReport, HitSolver, HitSpace,
    KamekoOutcome, SolverConfig, Summand,
};
pub use steenrod::{
    compositions, for_each_sq_term, hit_generator_images, kameko_down, kameko_down_monomial, kameko_phi, sq,
    sq_monomial, sq_power, GeneratorImageSet,
};

//! The determinant classification of multiplicity-one weight modules.
//!
//! The three relations on `f(p,k+m), f(p,k), f(p,k−m)` are transcribed,
//! their determinant is computed exactly and then compared against the
//! printed factorization, the `b' = b` display and the printed case list.

mod cases;
mod delta;
pub mod reference;
mod system;

use thiserror::Error;

pub use cases::{
    compare_with_printed_cases, condition_pair_holds, enumerate_cases, CaseRecord, CaseShape,
    ClassificationCase, PrintedCaseComparison, Witness, S0_COFACTOR_DEGREE, S0_CUBE,
};
pub use delta::{
    certify_factorization, check_s0_display, compare_computed_with_printed, compare_with_printed,
    compute_delta, computed_shape, delta_at, linear_factors, s0_prefactor, s0_quotient,
    shape_coefficients, specialize_s0, ClassificationData, ComparisonStatus, PrintedComparison,
    ShapeCoefficients,
};
pub use reference::Relation;
pub use system::{
    build_functional_equation, build_linear_system, check_constant_solution,
    constant_solution_residual, residual, ConstantTable, EquationPoint, FunctionTable,
    FunctionalEquation, LinearSystem3, COLUMNS,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("missing table entry {0}")]
    MissingTableEntry(String),
    #[error("factorization: {0}")]
    Factorization(String),
}

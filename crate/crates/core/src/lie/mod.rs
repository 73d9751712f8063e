//! Virasoro-type graded Lie algebras, the axiom checks and the 2-cocycles.

mod algebra;
mod checks;
mod cocycle;
mod element;

use thiserror::Error;

pub use algebra::{make_algebra, AlgebraName, AlgebraSpec, GradedLieAlgebra, Shift};
pub use checks::{antisymmetry_residual, check_antisymmetry, check_jacobi, jacobi_residual};
pub use cocycle::{
    check_cocycle, cocycle_applies, cocycle_form, cocycle_residual, cocycle_value,
    is_antisymmetric_on_window, CocycleName,
};
pub use element::{BasisElement, Element, Family};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("parameter domain: {0}")]
    ParameterDomain(String),
    #[error("{element} is not a basis element of {algebra}")]
    Lattice { element: String, algebra: String },
    #[error("cocycle {cocycle} is not a 2-cocycle class of {algebra}")]
    CocycleMismatch { cocycle: String, algebra: String },
    #[error("window {window} is too small (minimum {min})")]
    WindowTooSmall { window: i64, min: i64 },
}

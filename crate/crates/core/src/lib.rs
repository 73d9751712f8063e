//! Exact verification toolkit for Virasoro-type Lie algebras.
//!
//! * [`arith`]: rationals, multivariate polynomials, 3×3 symbolic determinants.
//! * [`lie`]: the algebras Vir, W(ϱ)[s], sv[s], D(ϱ), axiom and cocycle checks.
//! * [`weight`]: intermediate-series weight modules and their checks.
//! * [`classify`]: the determinant classification of multiplicity-one modules.

pub mod arith;
pub mod classify;
pub mod lie;
pub mod report;
pub mod weight;

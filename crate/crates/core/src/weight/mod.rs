//! Weight modules of the intermediate series and their window checks.

mod checks;
mod module;
mod vector;

use thiserror::Error;

pub use checks::{
    check_module_axiom, check_window_cyclic, module_axiom_violations, module_residual,
    simplicity_criterion, CyclicityReport, GeneratorReach, ModuleViolation,
};
pub use module::{make_module, ModuleKind, ModuleParams, ModuleSpec};
pub use vector::WeightVector;

use crate::lie::LieError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("module {kind} cannot be hosted by {host}")]
    HostMismatch { kind: String, host: String },
    #[error("parameter domain: {0}")]
    Parameter(String),
    #[error("{0}")]
    Lattice(String),
    #[error("window {window} is too small (minimum {min})")]
    WindowTooSmall { window: i64, min: i64 },
    #[error("no simplicity criterion is available for {0}")]
    NoCriterion(String),
    #[error(transparent)]
    Algebra(#[from] LieError),
}

#[cfg(test)]
mod tests;

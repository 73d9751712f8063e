//! Verdicts of the window checks, serializable for the command-line reports.

use serde::Serialize;

use crate::arith::{format_rational, MultiPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualTerm {
    pub basis: String,
    pub coefficient: String,
}

/// What was left over when an identity failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Residual {
    /// A non-zero linear combination of basis vectors.
    Terms {
        terms: Vec<ResidualTerm>,
    },
    Scalar {
        value: String,
    },
    Polynomial {
        value: String,
    },
    /// Free-form description (e.g. the vectors a generator failed to reach).
    Note {
        value: String,
    },
}

impl Residual {
    pub fn terms<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (String, &'a Rational)>,
    {
        Residual::Terms {
            terms: terms
                .into_iter()
                .map(|(basis, c)| ResidualTerm {
                    basis,
                    coefficient: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn scalar(value: &Rational) -> Self {
        Residual::Scalar {
            value: format_rational(value),
        }
    }

    pub fn polynomial(value: &MultiPoly) -> Self {
        Residual::Polynomial {
            value: value.canonical_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub inputs: Vec<String>,
    pub residual: Residual,
}

/// Outcome of a check over a finite window. `passed` holds exactly when no
/// violation was recorded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    passed: bool,
    window: i64,
    violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new(window: i64, violations: Vec<Violation>) -> Self {
        CheckReport {
            passed: violations.is_empty(),
            window,
            violations,
        }
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

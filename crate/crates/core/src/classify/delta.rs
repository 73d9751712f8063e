use std::sync::OnceLock;

use num_traits::One;
use serde::Serialize;

use super::reference::{
    documented_delta3_difference, printed_delta1, printed_delta2, printed_delta3,
    printed_s0_display, DOCUMENTED_SIGN,
};
use super::system::build_linear_system;
use super::ClassifyError;
use crate::arith::{det3, Assignment, MultiPoly, Rational, Variable};
use crate::report::{CheckReport, Residual, Violation};

fn v(x: Variable) -> MultiPoly {
    MultiPoly::var(x)
}

/// `(b' − b + ϱ)` and `(1 + b − b' − ϱ)`.
pub fn linear_factors() -> (MultiPoly, MultiPoly) {
    use Variable::*;
    (
        v(Bp) - v(B) + v(Rho),
        MultiPoly::one() + v(B) - v(Bp) - v(Rho),
    )
}

fn m_power(e: i64) -> MultiPoly {
    v(Variable::M).pow(e).expect("non-negative exponent")
}

fn shape(c1: &MultiPoly, c2: &MultiPoly, c3: &MultiPoly) -> MultiPoly {
    use Variable::*;
    c1 * &m_power(2) + c2 * &(v(A) + v(K)) * &v(P) + c3 * &v(P).pow(2).expect("square")
}

/// The computed determinant next to the transcribed `Δ₁, Δ₂, Δ₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationData {
    pub delta: MultiPoly,
    pub delta1: MultiPoly,
    pub delta2: MultiPoly,
    pub delta3: MultiPoly,
    pub linear_factors: (MultiPoly, MultiPoly),
}

impl ClassificationData {
    /// `(b'−b+ϱ)(1+b−b'−ϱ)·m⁶·(Δ₁m² + Δ₂(a+k)p + Δ₃p²)` from the stored `Δᵢ`.
    pub fn printed_form(&self) -> MultiPoly {
        let (l1, l2) = &self.linear_factors;
        l1 * l2 * &m_power(6) * &shape(&self.delta1, &self.delta2, &self.delta3)
    }

    pub fn with_deltas(&self, delta1: MultiPoly, delta2: MultiPoly, delta3: MultiPoly) -> Self {
        ClassificationData {
            delta1,
            delta2,
            delta3,
            ..self.clone()
        }
    }
}

fn computed_delta() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| det3(&build_linear_system().matrix))
}

pub fn compute_delta() -> ClassificationData {
    ClassificationData {
        delta: computed_delta().clone(),
        delta1: printed_delta1().clone(),
        delta2: printed_delta2().clone(),
        delta3: printed_delta3().clone(),
        linear_factors: linear_factors(),
    }
}

/// Reports whether `delta` equals the printed factorized form; a failure
/// carries the difference `delta − printed` verbatim.
pub fn certify_factorization(data: &ClassificationData) -> CheckReport {
    let diff = &data.delta - &data.printed_form();
    let violations = if diff.is_zero() {
        Vec::new()
    } else {
        vec![Violation {
            inputs: vec!["delta - printed factorization".into()],
            residual: Residual::polynomial(&diff),
        }]
    };
    CheckReport::new(0, violations)
}

/// The coefficients `C₁, C₂, C₃` in
/// `delta = (b'−b+ϱ)(1+b−b'−ϱ)·m⁶·(C₁m² + C₂(a+k)p + C₃p²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeCoefficients {
    pub c1: MultiPoly,
    pub c2: MultiPoly,
    pub c3: MultiPoly,
    /// `delta` divided by both linear factors and `m⁶`.
    pub quotient: MultiPoly,
}

impl ShapeCoefficients {
    pub fn as_array(&self) -> [&MultiPoly; 3] {
        [&self.c1, &self.c2, &self.c3]
    }
}

fn only_in(poly: &MultiPoly, allowed: &[Variable]) -> bool {
    poly.variables().iter().all(|x| allowed.contains(x))
}

/// Divides out the factors and splits the quotient along the shape
/// `C₁m² + C₂(a+k)p + C₃p²`. Fails if any division leaves a remainder or the
/// quotient does not have that shape.
pub fn shape_coefficients(delta: &MultiPoly) -> Result<ShapeCoefficients, ClassifyError> {
    use Variable::*;
    let (l1, l2) = linear_factors();
    let not_div = |what: &str, e: crate::arith::ArithError| {
        ClassifyError::Factorization(format!("division by {what}: {e}"))
    };
    let q = delta.exact_div(&l1).map_err(|e| not_div("b'-b+rho", e))?;
    let q = q.exact_div(&l2).map_err(|e| not_div("1+b-b'-rho", e))?;
    let quotient = q.exact_div(&m_power(6)).map_err(|e| not_div("m^6", e))?;

    let c1 = quotient.coefficient(M, 2);
    let c3 = quotient.coefficient(M, 0).coefficient(P, 2);
    let middle = &quotient - &(&c1 * &m_power(2)) - &c3 * &v(P).pow(2).expect("square");
    let c2 = middle
        .exact_div(&v(P))
        .and_then(|x| x.exact_div(&(v(A) + v(K))))
        .map_err(|e| {
            ClassifyError::Factorization(format!("middle term is not a multiple of (a+k)p: {e}"))
        })?;
    let params = [B, Bp, Rho];
    for (name, c) in [("m^2", &c1), ("(a+k)p", &c2), ("p^2", &c3)] {
        if !only_in(c, &params) {
            return Err(ClassifyError::Factorization(format!(
                "coefficient of {name} involves variables outside b, bp, rho: {c}"
            )));
        }
    }
    Ok(ShapeCoefficients {
        c1,
        c2,
        c3,
        quotient,
    })
}

/// Shape coefficients of the computed determinant, computed once.
pub fn computed_shape() -> &'static ShapeCoefficients {
    static CELL: OnceLock<ShapeCoefficients> = OnceLock::new();
    CELL.get_or_init(|| shape_coefficients(computed_delta()).expect("computed determinant factors"))
}

/// Comparison of computed shape coefficients with the printed `Δᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedComparison {
    /// Overall sign `σ` chosen so that as many `σCᵢ` as possible equal `Δᵢ`.
    pub sign: i64,
    /// `σCᵢ − Δᵢ` in canonical text, `"0"` where they agree.
    pub differences: [String; 3],
}

impl PrintedComparison {
    pub fn exact(&self) -> bool {
        self.sign == 1 && self.differences.iter().all(|d| d == "0")
    }

    /// Whether the disagreement is precisely the recorded erratum.
    pub fn is_documented_erratum(&self) -> bool {
        self.sign == DOCUMENTED_SIGN
            && self.differences[0] == "0"
            && self.differences[1] == "0"
            && self.differences[2] == documented_delta3_difference().canonical_string()
    }

    pub fn status(&self) -> ComparisonStatus {
        if self.exact() {
            ComparisonStatus::Exact
        } else if self.is_documented_erratum() {
            ComparisonStatus::DocumentedErratum
        } else {
            ComparisonStatus::Mismatch
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComparisonStatus {
    Exact,
    DocumentedErratum,
    Mismatch,
}

pub fn compare_with_printed(
    shape: &ShapeCoefficients,
    printed: [&MultiPoly; 3],
) -> PrintedComparison {
    let diffs = |sign: &Rational| -> Vec<MultiPoly> {
        shape
            .as_array()
            .iter()
            .zip(printed)
            .map(|(c, d)| &c.scale(sign) - d)
            .collect()
    };
    let plus = diffs(&Rational::one());
    let minus = diffs(&-Rational::one());
    let zeros = |d: &[MultiPoly]| d.iter().filter(|x| x.is_zero()).count();
    let (sign, chosen) = if zeros(&minus) > zeros(&plus) {
        (-1, minus)
    } else {
        (1, plus)
    };
    PrintedComparison {
        sign,
        differences: [
            chosen[0].canonical_string(),
            chosen[1].canonical_string(),
            chosen[2].canonical_string(),
        ],
    }
}

pub fn compare_computed_with_printed() -> PrintedComparison {
    compare_with_printed(
        computed_shape(),
        [printed_delta1(), printed_delta2(), printed_delta3()],
    )
}

/// `(ϱ−1)ϱ(1+ϱ)`.
pub fn s0_prefactor() -> MultiPoly {
    let rho = v(Variable::Rho);
    (&rho - &MultiPoly::one()) * &rho * (&MultiPoly::one() + &rho)
}

/// The determinant with `b' := b`.
pub fn specialize_s0() -> MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| computed_delta().substitute(Variable::Bp, &v(Variable::B)))
        .clone()
}

/// `specialize_s0()` divided by `(ϱ−1)ϱ(1+ϱ)m⁶`.
pub fn s0_quotient() -> Result<MultiPoly, ClassifyError> {
    let divisor = s0_prefactor() * m_power(6);
    specialize_s0()
        .exact_div(&divisor)
        .map_err(|e| ClassifyError::Factorization(format!("s = 0 prefactor: {e}")))
}

/// Exact comparison of the specialization with the printed display.
pub fn check_s0_display() -> CheckReport {
    let diff = specialize_s0() - printed_s0_display().clone();
    let violations = if diff.is_zero() {
        Vec::new()
    } else {
        vec![Violation {
            inputs: vec!["delta(b'=b) - printed display".into()],
            residual: Residual::polynomial(&diff),
        }]
    };
    CheckReport::new(0, violations)
}

/// Evaluates `delta` at a full assignment of `a, b, b', ϱ, p, k, m`.
pub fn delta_at(sigma: &Assignment) -> Result<Rational, ClassifyError> {
    computed_delta()
        .eval(sigma)
        .map_err(|e| ClassifyError::Factorization(e.to_string()))
}

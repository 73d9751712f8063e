//! Printed reference data, kept as expression text and parsed on demand.
//!
//! Everything here is a transcription and is only ever compared against
//! computed values; nothing downstream trusts it directly.

use std::sync::OnceLock;

use crate::arith::{half, int, parse_poly, rat, MultiPoly, Rational};

/// Version tag of the embedded data table and of the golden files.
pub const DATA_VERSION: &str = "v1";

pub const PRINTED_DELTA1: &str =
    "4*(-1 + b + bp)*rho^2*(-b^2 + b^3 - 2*bp + b^2*bp + 3*bp^2 - b*bp^2 \
     - bp^3 - b*rho - bp*rho + 2*b*bp*rho - b*rho^2 + bp*rho^2)";

pub const PRINTED_DELTA2: &str =
    "-2*rho*(1 + rho)*(-2 + 5*b - 3*b^2 + 7*bp - 6*b*bp - 3*bp^2 - rho \
     + 2*b*rho - 2*bp*rho + rho^2)";

pub const PRINTED_DELTA3: &str = "(-2 + b - bp)*(-1 + b + bp)*(-b + b^2 - 3*bp + 2*b*bp + bp^2) \
     + (2 - 10*b + 10*b^2 - 2*b^3 - 10*bp + 18*b*bp - 6*b^2*bp + 8*bp^2 - 6*b*bp^2 - 2*bp^3)*rho \
     + (3 - 10*b + 6*b^2 - 2*bp + 6*b*bp)*rho^2 + (-2*b + 2*bp)*rho^3 - rho^4";

/// The determinant with `b' = b`, including its prefactor.
pub const PRINTED_S0_DISPLAY: &str =
    "(rho - 1)*rho*(1 + rho)*m^6*(8*rho^2*b*(2*b - 1)*(b - 1)*m^2 \
     - 2*rho*(rho^2 - rho - 12*b^2 + 12*b - 2)*(a + k)*p \
     - (8*b*(2*b - 1)*(b - 1) + rho*(rho^2 - rho - 12*b^2 + 12*b - 2))*p^2)";

/// Known discrepancy between the computed shape coefficients and the
/// transcription: `−C₁ = Δ₁`, `−C₂ = Δ₂`, and `−C₃ − Δ₃` is the polynomial
/// below. It is exactly what replacing the leading factor `(−2 + b − b')` of
/// `Δ₃` by `(−2 − b + b')` changes.
pub const DOCUMENTED_SIGN: i64 = -1;

pub const DOCUMENTED_DELTA3_DIFFERENCE: &str = "2*bp^4 + 4*b*bp^3 - 4*b^3*bp - 2*b^4 - 8*bp^3 \
     - 4*b*bp^2 + 8*b^2*bp + 4*b^3 + 6*bp^2 - 4*b*bp - 2*b^2";

/// `b'` as a function of `b` along one of the printed lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// `b' = b`
    Equal,
    /// `b + b' = 1`
    SumOne,
    /// `b' = b + 1/2`
    ShiftUp,
    /// `b' = b − 1/2`
    ShiftDown,
}

impl Relation {
    pub const ALL: [Relation; 4] = [
        Relation::Equal,
        Relation::SumOne,
        Relation::ShiftUp,
        Relation::ShiftDown,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Relation::Equal => "b'=b",
            Relation::SumOne => "b+b'=1",
            Relation::ShiftUp => "b'=b+1/2",
            Relation::ShiftDown => "b'=b-1/2",
        }
    }

    pub fn apply(self, b: &Rational) -> Rational {
        match self {
            Relation::Equal => b.clone(),
            Relation::SumOne => int(1) - b,
            Relation::ShiftUp => b + half(),
            Relation::ShiftDown => b - half(),
        }
    }

    /// `b'` as a polynomial in `b`.
    pub fn as_poly(self) -> MultiPoly {
        use crate::arith::Variable::B;
        let b = MultiPoly::var(B);
        match self {
            Relation::Equal => b,
            Relation::SumOne => MultiPoly::one() - b,
            Relation::ShiftUp => b + MultiPoly::constant(half()),
            Relation::ShiftDown => b - MultiPoly::constant(half()),
        }
    }

    pub fn holds(self, b: &Rational, bp: &Rational) -> bool {
        self.apply(b) == *bp
    }
}

/// One printed solution entry: a whole line at fixed ϱ, or one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrintedCase {
    Line {
        rho: Rational,
        relation: Relation,
    },
    Point {
        rho: Rational,
        b: Rational,
        bp: Rational,
    },
}

impl PrintedCase {
    pub fn rho(&self) -> &Rational {
        match self {
            PrintedCase::Line { rho, .. } | PrintedCase::Point { rho, .. } => rho,
        }
    }
}

fn line(rho: Rational, relation: Relation) -> PrintedCase {
    PrintedCase::Line { rho, relation }
}

fn point(rho: Rational, b: Rational, bp: Rational) -> PrintedCase {
    PrintedCase::Point { rho, b, bp }
}

/// The printed list for `s = 1/2`, items (i)–(v) in order; (iv) and (v)
/// are both at ϱ = 3/2 and are kept as one union.
pub fn printed_half_cases() -> Vec<(&'static str, PrintedCase)> {
    let (z, o, h, th) = (int(0), int(1), half(), rat(3, 2));
    vec![
        ("i", line(z.clone(), Relation::Equal)),
        ("i", line(z.clone(), Relation::SumOne)),
        ("ii", line(o.clone(), Relation::Equal)),
        ("iii", line(h.clone(), Relation::ShiftUp)),
        ("iii", line(h.clone(), Relation::ShiftDown)),
        ("iv", point(th.clone(), z.clone(), h.clone())),
        ("iv", point(th.clone(), h.clone(), o.clone())),
        ("iv", point(th.clone(), h.clone(), z.clone())),
        ("iv", point(th.clone(), o.clone(), h.clone())),
        ("v", point(th.clone(), z.clone(), o.clone())),
        ("v", point(th, o, z)),
    ]
}

/// The printed answer for `s = 0` (where `b' = b`): ϱ = 0 and ϱ = 1 for
/// every `b`, ϱ = 2 only for `b ∈ {0, 1}`.
pub fn printed_zero_cases() -> Vec<(&'static str, PrintedCase)> {
    vec![
        ("rho=0", line(int(0), Relation::Equal)),
        ("rho=1", line(int(1), Relation::Equal)),
        ("rho=2", point(int(2), int(0), int(0))),
        ("rho=2", point(int(2), int(1), int(1))),
    ]
}

fn parsed(cell: &'static OnceLock<MultiPoly>, text: &str) -> &'static MultiPoly {
    cell.get_or_init(|| parse_poly(text).expect("embedded reference data parses"))
}

pub fn printed_delta1() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    parsed(&CELL, PRINTED_DELTA1)
}

pub fn printed_delta2() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    parsed(&CELL, PRINTED_DELTA2)
}

pub fn printed_delta3() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    parsed(&CELL, PRINTED_DELTA3)
}

pub fn documented_delta3_difference() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    parsed(&CELL, DOCUMENTED_DELTA3_DIFFERENCE)
}

pub fn printed_s0_display() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    parsed(&CELL, PRINTED_S0_DISPLAY)
}

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::delta::{computed_shape, linear_factors, specialize_s0};
use super::reference::{printed_half_cases, printed_zero_cases, PrintedCase, Relation};
use crate::arith::{int, rational_grid, Assignment, MultiPoly, Rational, Variable};
use crate::lie::Shift;

/// Which alternative of a vanishing condition holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// `(b'−b+ϱ)(1+b−b'−ϱ) = 0`.
    LinearFactor,
    /// `Δ₁ = Δ₂ = Δ₃ = 0`.
    DeltaVanishing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseShape {
    /// Every `(b, relation(b))`; `points` counts those in the scanned grid.
    Line {
        relation: Relation,
        points: usize,
    },
    Point {
        b: Rational,
        bp: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationCase {
    pub rho: Rational,
    pub shape: CaseShape,
    /// One witness per condition: two for `s = 1/2`, one for `s = 0`.
    pub satisfied_by: Vec<Witness>,
}

impl ClassificationCase {
    fn sort_key(&self) -> (Rational, usize, Rational, Rational) {
        match &self.shape {
            CaseShape::Line { relation, .. } => (
                self.rho.clone(),
                *relation as usize,
                Rational::zero(),
                Rational::zero(),
            ),
            CaseShape::Point { b, bp } => {
                (self.rho.clone(), Relation::ALL.len(), b.clone(), bp.clone())
            }
        }
    }

    pub fn contains(&self, rho: &Rational, b: &Rational, bp: &Rational) -> bool {
        if *rho != self.rho {
            return false;
        }
        match &self.shape {
            CaseShape::Line { relation, .. } => relation.holds(b, bp),
            CaseShape::Point { b: b0, bp: bp0 } => b0 == b && bp0 == bp,
        }
    }

    /// Whether `other` is implied by this case.
    pub fn covers(&self, other: &ClassificationCase) -> bool {
        match &other.shape {
            CaseShape::Point { b, bp } => self.contains(&other.rho, b, bp),
            CaseShape::Line { relation, .. } => {
                self.rho == other.rho
                    && matches!(&self.shape, CaseShape::Line { relation: r, .. } if r == relation)
            }
        }
    }

    pub fn record(&self) -> CaseRecord {
        let (relation, b, bp, points) = match &self.shape {
            CaseShape::Line { relation, points } => {
                (relation.tag().to_string(), None, None, *points)
            }
            CaseShape::Point { b, bp } => (
                "point".to_string(),
                Some(b.to_string()),
                Some(bp.to_string()),
                1,
            ),
        };
        CaseRecord {
            rho: self.rho.to_string(),
            relation,
            b,
            bp,
            grid_points: points,
            satisfied_by: self.satisfied_by.clone(),
        }
    }
}

impl fmt::Display for ClassificationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            CaseShape::Line { relation, .. } => write!(f, "rho={}: {}", self.rho, relation.tag()),
            CaseShape::Point { b, bp } => write!(f, "rho={}: (b, b')=({b}, {bp})", self.rho),
        }
    }
}

/// Serializable view of a [`ClassificationCase`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub rho: String,
    pub relation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bp: Option<String>,
    pub grid_points: usize,
    pub satisfied_by: Vec<Witness>,
}

/// The polynomials of one vanishing condition: the linear-factor product
/// and the three shape coefficients.
#[derive(Clone, Debug)]
struct Condition {
    factors: MultiPoly,
    deltas: [MultiPoly; 3],
}

impl Condition {
    fn first() -> Self {
        let (l1, l2) = linear_factors();
        let s = computed_shape();
        Condition {
            factors: l1 * l2,
            deltas: [s.c1.clone(), s.c2.clone(), s.c3.clone()],
        }
    }

    fn swapped(&self) -> Self {
        let sw = |p: &MultiPoly| p.swap(Variable::B, Variable::Bp);
        Condition {
            factors: sw(&self.factors),
            deltas: [
                sw(&self.deltas[0]),
                sw(&self.deltas[1]),
                sw(&self.deltas[2]),
            ],
        }
    }

    fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        Condition {
            factors: f(&self.factors),
            deltas: [f(&self.deltas[0]), f(&self.deltas[1]), f(&self.deltas[2])],
        }
    }

    fn at_rho(&self, rho: &Rational) -> Self {
        let sigma = Assignment::new().with(Variable::Rho, rho.clone());
        self.map(|p| p.partial_eval(&sigma))
    }

    fn witness_at(&self, sigma: &Assignment) -> Option<Witness> {
        let zero = |p: &MultiPoly| p.eval(sigma).expect("b, bp, rho bound").is_zero();
        if zero(&self.factors) {
            Some(Witness::LinearFactor)
        } else if self.deltas.iter().all(zero) {
            Some(Witness::DeltaVanishing)
        } else {
            None
        }
    }

    /// Witness valid identically in `b`, for polynomials already free of ϱ and `b'`.
    fn symbolic_witness(&self) -> Option<Witness> {
        if self.factors.is_zero() {
            Some(Witness::LinearFactor)
        } else if self.deltas.iter().all(MultiPoly::is_zero) {
            Some(Witness::DeltaVanishing)
        } else {
            None
        }
    }
}

fn conditions() -> (Condition, Condition) {
    let first = Condition::first();
    let second = first.swapped();
    (first, second)
}

fn point(rho: &Rational, b: &Rational, bp: &Rational) -> Assignment {
    Assignment::new()
        .with(Variable::Rho, rho.clone())
        .with(Variable::B, b.clone())
        .with(Variable::Bp, bp.clone())
}

/// `(first, second)`: the vanishing condition of the determinant, and the
/// same condition with `b` and `b'` interchanged. Both use the computed
/// shape coefficients.
pub fn condition_pair_holds(rho: &Rational, b: &Rational, bp: &Rational) -> (bool, bool) {
    let (first, second) = conditions();
    let sigma = point(rho, b, bp);
    (
        first.witness_at(&sigma).is_some(),
        second.witness_at(&sigma).is_some(),
    )
}

/// Largest absolute value taken by `m`, `p` and `k` in the `s = 0` test cube.
pub const S0_CUBE: i64 = 3;

/// Degree bound on `m`, `p`, `k` in the `s = 0` cofactor that makes
/// [`S0_CUBE`] conclusive: a polynomial of degree at most 2 in each variable
/// vanishing on 3 values of each is zero, and the cube offers 6 non-zero
/// values of `m` and `p` and 7 of `k`.
pub const S0_COFACTOR_DEGREE: u32 = 2;

fn s0_vanishes_on_cube(poly_at: &MultiPoly) -> bool {
    use Variable::*;
    for m in -S0_CUBE..=S0_CUBE {
        for p in (-S0_CUBE..=S0_CUBE).filter(|&p| p != 0) {
            for k in -S0_CUBE..=S0_CUBE {
                let sigma = Assignment::new()
                    .with(A, Rational::zero())
                    .with(M, int(m))
                    .with(P, int(p))
                    .with(K, int(k));
                if !poly_at.eval(&sigma).expect("a, m, p, k bound").is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

fn sort_cases(cases: &mut [ClassificationCase]) {
    cases.sort_by_key(|c| c.sort_key());
}

/// Grid points `(b, relation(b))` with both coordinates in the grid.
fn line_points(grid: &[Rational], relation: Relation) -> Vec<(Rational, Rational)> {
    grid.iter()
        .map(|b| (b.clone(), relation.apply(b)))
        .filter(|(_, bp)| grid.binary_search(bp).is_ok())
        .collect()
}

fn enumerate_half(grid: &[Rational]) -> Vec<ClassificationCase> {
    let (first, second) = conditions();
    let mut out = Vec::new();
    for rho in grid.iter().filter(|r| **r != int(-1)) {
        let (c1, c2) = (first.at_rho(rho), second.at_rho(rho));
        let mut hits = Vec::new();
        for b in grid {
            for bp in grid {
                let sigma = point(rho, b, bp);
                if let (Some(w1), Some(w2)) = (c1.witness_at(&sigma), c2.witness_at(&sigma)) {
                    hits.push((b.clone(), bp.clone(), vec![w1, w2]));
                }
            }
        }
        let mut lines: Vec<ClassificationCase> = Vec::new();
        for relation in Relation::ALL {
            let on_line = |p: &MultiPoly| p.substitute(Variable::Bp, &relation.as_poly());
            let (w1, w2) = (
                c1.map(on_line).symbolic_witness(),
                c2.map(on_line).symbolic_witness(),
            );
            let (Some(w1), Some(w2)) = (w1, w2) else {
                continue;
            };
            let pts = line_points(grid, relation);
            let all_hit = pts
                .iter()
                .all(|(b, bp)| hits.iter().any(|(hb, hbp, _)| hb == b && hbp == bp));
            if pts.len() >= 2 && all_hit {
                lines.push(ClassificationCase {
                    rho: rho.clone(),
                    shape: CaseShape::Line {
                        relation,
                        points: pts.len(),
                    },
                    satisfied_by: vec![w1, w2],
                });
            }
        }
        for (b, bp, witnesses) in hits {
            if !lines.iter().any(|l| l.contains(rho, &b, &bp)) {
                out.push(ClassificationCase {
                    rho: rho.clone(),
                    shape: CaseShape::Point { b, bp },
                    satisfied_by: witnesses,
                });
            }
        }
        out.extend(lines);
    }
    sort_cases(&mut out);
    out
}

fn enumerate_zero(grid: &[Rational]) -> Vec<ClassificationCase> {
    let (first, _) = conditions();
    let specialized = specialize_s0();
    let same_b = MultiPoly::var(Variable::B);
    let factors = first.factors.substitute(Variable::Bp, &same_b);
    let mut out = Vec::new();
    for rho in grid.iter().filter(|r| **r != int(-1)) {
        let at_rho = specialized.partial_eval(&Assignment::new().with(Variable::Rho, rho.clone()));
        let witness = if factors
            .eval(
                &Assignment::new()
                    .with(Variable::Rho, rho.clone())
                    .with(Variable::B, Rational::zero()),
            )
            .expect("rho, b bound")
            .is_zero()
        {
            Witness::LinearFactor
        } else {
            Witness::DeltaVanishing
        };
        if at_rho.is_zero() && grid.len() >= 2 {
            out.push(ClassificationCase {
                rho: rho.clone(),
                shape: CaseShape::Line {
                    relation: Relation::Equal,
                    points: grid.len(),
                },
                satisfied_by: vec![witness],
            });
            continue;
        }
        for b in grid {
            let at_b = at_rho.partial_eval(&Assignment::new().with(Variable::B, b.clone()));
            if s0_vanishes_on_cube(&at_b) {
                out.push(ClassificationCase {
                    rho: rho.clone(),
                    shape: CaseShape::Point {
                        b: b.clone(),
                        bp: b.clone(),
                    },
                    satisfied_by: vec![witness],
                });
            }
        }
    }
    sort_cases(&mut out);
    out
}

/// Scans `(ϱ, b, b')` over the grid `{n/d : |n| <= max_num, 1 <= d <= max_den}`
/// with ϱ ≠ −1.
///
/// For `s = 1/2` both conditions must hold; hits are grouped into lines
/// `b' = b`, `b + b' = 1`, `b' = b ± 1/2` when the line satisfies both
/// conditions identically in `b` and has at least two grid points, and the
/// remaining hits are reported as points. For `s = 0`, `b' = b` and a pair
/// `(ϱ, b)` is a hit when the specialized determinant vanishes on the test
/// cube; a ϱ for which it vanishes identically is reported as a line.
///
/// Output is sorted by ϱ, then lines before points, then `b`.
pub fn enumerate_cases(s: Shift, max_num: u32, max_den: u32) -> Vec<ClassificationCase> {
    let grid = rational_grid(max_num, max_den);
    match s {
        Shift::Half => enumerate_half(&grid),
        Shift::Zero => enumerate_zero(&grid),
    }
}

/// Set comparison of scan output against the printed list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PrintedCaseComparison {
    pub matched: bool,
    pub missing: Vec<String>,
    pub extra: Vec<String>,
    pub outside_bounds: Vec<String>,
}

fn printed_label(item: &str, case: &PrintedCase) -> String {
    match case {
        PrintedCase::Line { rho, relation } => format!("({item}) rho={rho}: {}", relation.tag()),
        PrintedCase::Point { rho, b, bp } => format!("({item}) rho={rho}: (b, b')=({b}, {bp})"),
    }
}

fn printed_contains(case: &PrintedCase, rho: &Rational, b: &Rational, bp: &Rational) -> bool {
    match case {
        PrintedCase::Line { rho: r, relation } => r == rho && relation.holds(b, bp),
        PrintedCase::Point {
            rho: r,
            b: b0,
            bp: bp0,
        } => r == rho && b0 == b && bp0 == bp,
    }
}

pub fn compare_with_printed_cases(
    s: Shift,
    cases: &[ClassificationCase],
    max_num: u32,
    max_den: u32,
) -> PrintedCaseComparison {
    let grid = rational_grid(max_num, max_den);
    let in_grid = |x: &Rational| grid.binary_search(x).is_ok();
    let printed = match s {
        Shift::Half => printed_half_cases(),
        Shift::Zero => printed_zero_cases(),
    };
    let mut out = PrintedCaseComparison::default();
    let mut expected = Vec::new();
    for (item, case) in &printed {
        let inside = match case {
            PrintedCase::Line { rho, relation } => {
                in_grid(rho) && line_points(&grid, *relation).len() >= 2
            }
            PrintedCase::Point { rho, b, bp } => in_grid(rho) && in_grid(b) && in_grid(bp),
        };
        if inside {
            expected.push((*item, case));
        } else {
            out.outside_bounds.push(printed_label(item, case));
        }
    }
    for (item, case) in &expected {
        let found = match case {
            PrintedCase::Line { rho, relation } => cases.iter().any(|c| {
                c.rho == *rho
                    && matches!(&c.shape, CaseShape::Line { relation: r, .. } if r == relation)
            }),
            PrintedCase::Point { rho, b, bp } => cases.iter().any(|c| c.contains(rho, b, bp)),
        };
        if !found {
            out.missing.push(printed_label(item, case));
        }
    }
    for case in cases {
        let known = match &case.shape {
            CaseShape::Line { relation, .. } => expected.iter().any(|(_, p)| {
                matches!(p, PrintedCase::Line { rho, relation: r } if *rho == case.rho && r == relation)
            }),
            CaseShape::Point { b, bp } => expected
                .iter()
                .any(|(_, p)| printed_contains(p, &case.rho, b, bp)),
        };
        if !known {
            out.extra.push(case.to_string());
        }
    }
    out.matched = out.missing.is_empty() && out.extra.is_empty();
    out
}

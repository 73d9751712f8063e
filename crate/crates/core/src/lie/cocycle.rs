//! The 2-cocycles of W(ϱ)[0] and their cocycle identity.
//!
//! Each form is given on ordered pairs by its defining formula and extended
//! by `γ(y, x) = −γ(x, y)`. The abelian generators `I_n` of the formulas are
//! the `Y_n` of W(ϱ)[0].

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::algebra::{AlgebraName, AlgebraSpec, GradedLieAlgebra, Shift};
use super::element::{BasisElement, Element, Family};
use super::LieError;
use crate::arith::{int, rat, Rational};
use crate::report::{CheckReport, Residual, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CocycleName {
    Gamma0,
    Gamma01,
    Gamma02,
    Gamma11,
}

impl CocycleName {
    pub const ALL: [CocycleName; 4] = [
        CocycleName::Gamma0,
        CocycleName::Gamma01,
        CocycleName::Gamma02,
        CocycleName::Gamma11,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CocycleName::Gamma0 => "gamma0",
            CocycleName::Gamma01 => "gamma01",
            CocycleName::Gamma02 => "gamma02",
            CocycleName::Gamma11 => "gamma11",
        }
    }
}

impl FromStr for CocycleName {
    type Err = LieError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CocycleName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| LieError::ParameterDomain(format!("unknown cocycle {s:?}")))
    }
}

impl fmt::Display for CocycleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn virasoro_cubic(m: &Rational) -> Rational {
    (m * m * m - m) * rat(1, 12)
}

/// Value of the formula on an ordered pair, `None` when the formula is
/// stated for the reversed pair instead.
fn ordered_value(name: CocycleName, x: &BasisElement, y: &BasisElement) -> Option<Rational> {
    use Family::*;
    let (m, n) = (&x.degree, &y.degree);
    let opposite = (m + n).is_zero();
    let value = |v: Rational| Some(if opposite { v } else { Rational::zero() });
    match (name, x.family, y.family) {
        (CocycleName::Gamma0, L, L) => value(virasoro_cubic(m)),
        (CocycleName::Gamma01, L, Y) => value(m * m - m),
        (CocycleName::Gamma02, Y, Y) => value(n.clone()),
        (CocycleName::Gamma11, L, Y) => value(virasoro_cubic(m)),
        (CocycleName::Gamma01 | CocycleName::Gamma11, Y, L) => None,
        _ => Some(Rational::zero()),
    }
}

/// `γ(x, y)` on basis elements; pairs outside the formula's families give 0.
pub fn cocycle_value(name: CocycleName, x: &BasisElement, y: &BasisElement) -> Rational {
    match ordered_value(name, x, y) {
        Some(v) => v,
        None => -ordered_value(name, y, x).expect("reversed pair has a formula"),
    }
}

/// Bilinear extension of [`cocycle_value`].
pub fn cocycle_form(name: CocycleName, x: &Element, y: &Element) -> Rational {
    let mut total = Rational::zero();
    for (bx, cx) in x.terms() {
        for (by, cy) in y.terms() {
            total += cocycle_value(name, bx, by) * cx * cy;
        }
    }
    total
}

/// Whether the cocycle belongs to the second cohomology of `alg`.
pub fn cocycle_applies(name: CocycleName, alg: &AlgebraSpec) -> bool {
    let rho_is = |v: i64| alg.rho() == Some(&int(v));
    let w0 = alg.name() == AlgebraName::W && alg.shift() == Shift::Zero;
    match name {
        CocycleName::Gamma0 => alg.name() == AlgebraName::Vir || w0,
        CocycleName::Gamma01 | CocycleName::Gamma02 => w0 && rho_is(0),
        CocycleName::Gamma11 => w0 && rho_is(1),
    }
}

/// `γ([x,y],z) + γ([y,z],x) + γ([z,x],y)`.
pub fn cocycle_residual<A: GradedLieAlgebra + ?Sized>(
    name: CocycleName,
    alg: &A,
    x: &BasisElement,
    y: &BasisElement,
    z: &BasisElement,
) -> Rational {
    let (ex, ey, ez) = (
        Element::basis(x.clone()),
        Element::basis(y.clone()),
        Element::basis(z.clone()),
    );
    cocycle_form(name, &alg.bracket_basis(x, y), &ez)
        + cocycle_form(name, &alg.bracket_basis(y, z), &ex)
        + cocycle_form(name, &alg.bracket_basis(z, x), &ey)
}

/// Checks the 2-cocycle identity on every ordered triple in the window.
pub fn check_cocycle(
    name: CocycleName,
    alg: &AlgebraSpec,
    window: i64,
) -> Result<CheckReport, LieError> {
    if !cocycle_applies(name, alg) {
        return Err(LieError::CocycleMismatch {
            cocycle: name.to_string(),
            algebra: alg.label(),
        });
    }
    if window < 1 {
        return Err(LieError::WindowTooSmall { window, min: 1 });
    }
    let basis = alg.window_basis(window);
    let mut violations = Vec::new();
    for x in &basis {
        for y in &basis {
            for z in &basis {
                let r = cocycle_residual(name, alg, x, y, z);
                if !r.is_zero() {
                    violations.push(Violation {
                        inputs: vec![x.to_string(), y.to_string(), z.to_string()],
                        residual: Residual::scalar(&r),
                    });
                }
            }
        }
    }
    Ok(CheckReport::new(window, violations))
}

/// True when `γ(x, y) = −γ(y, x)` on every window pair.
pub fn is_antisymmetric_on_window(name: CocycleName, alg: &AlgebraSpec, window: i64) -> bool {
    let basis = alg.window_basis(window);
    basis.iter().all(|x| {
        basis
            .iter()
            .all(|y| (cocycle_value(name, x, y) + cocycle_value(name, y, x)).is_zero())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::half;

    fn l(n: i64) -> BasisElement {
        BasisElement::l(int(n))
    }
    fn y(n: i64) -> BasisElement {
        BasisElement::y(int(n))
    }

    #[test]
    fn printed_values() {
        assert_eq!(cocycle_value(CocycleName::Gamma0, &l(2), &l(-2)), half());
        assert!(cocycle_value(CocycleName::Gamma0, &l(2), &l(3)).is_zero());
        assert_eq!(cocycle_value(CocycleName::Gamma02, &y(1), &y(-1)), int(-1));
        assert_eq!(cocycle_value(CocycleName::Gamma01, &l(3), &y(-3)), int(6));
        assert_eq!(cocycle_value(CocycleName::Gamma01, &y(-3), &l(3)), int(-6));
        assert_eq!(cocycle_value(CocycleName::Gamma11, &l(3), &y(-3)), int(2));
        // families outside the formula
        assert!(cocycle_value(CocycleName::Gamma0, &l(1), &y(-1)).is_zero());
        assert!(cocycle_value(CocycleName::Gamma02, &l(1), &l(-1)).is_zero());
    }

    #[test]
    fn case_split() {
        let w0 = AlgebraSpec::w(int(0), Shift::Zero).unwrap();
        let w1 = AlgebraSpec::w(int(1), Shift::Zero).unwrap();
        let w2 = AlgebraSpec::w(int(2), Shift::Zero).unwrap();
        assert!(cocycle_applies(CocycleName::Gamma01, &w0));
        assert!(!cocycle_applies(CocycleName::Gamma11, &w0));
        assert!(cocycle_applies(CocycleName::Gamma11, &w1));
        assert!(!cocycle_applies(CocycleName::Gamma02, &w1));
        assert!(cocycle_applies(CocycleName::Gamma0, &w2));
        assert!(matches!(
            check_cocycle(CocycleName::Gamma11, &w0, 3),
            Err(LieError::CocycleMismatch { .. })
        ));
    }

    #[test]
    fn forms_are_antisymmetric() {
        let w0 = AlgebraSpec::w(int(0), Shift::Zero).unwrap();
        for name in [
            CocycleName::Gamma0,
            CocycleName::Gamma01,
            CocycleName::Gamma02,
            CocycleName::Gamma11,
        ] {
            assert!(is_antisymmetric_on_window(name, &w0, 5), "{name}");
        }
    }
}

//! The algebras Vir, W(ϱ)[s], sv[s] and D(ϱ), given by their structure
//! constants on the bases `{L_n}`, `{Y_p}` and `{M_n}`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::element::{BasisElement, Element, Family};
use super::LieError;
use crate::arith::{abs, half, int, is_half_odd, is_integer, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraName {
    /// Centerless Virasoro (Witt) algebra.
    Vir,
    /// W(ϱ)[s] = Vir ⋉ F_ϱ.
    W,
    /// Schrödinger–Virasoro algebra sv[s].
    SV,
    /// Twisted deformative Schrödinger–Virasoro algebra D(ϱ).
    D,
}

impl AlgebraName {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraName::Vir => "Vir",
            AlgebraName::W => "W",
            AlgebraName::SV => "SV",
            AlgebraName::D => "D",
        }
    }
}

impl FromStr for AlgebraName {
    type Err = LieError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Vir" | "vir" => Ok(AlgebraName::Vir),
            "W" | "w" => Ok(AlgebraName::W),
            "SV" | "sv" => Ok(AlgebraName::SV),
            "D" | "d" => Ok(AlgebraName::D),
            other => Err(LieError::ParameterDomain(format!(
                "unknown algebra {other:?} (expected Vir, W, SV or D)"
            ))),
        }
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The shift `s`: `Y` degrees run over `ℤ + s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shift {
    Zero,
    Half,
}

impl Shift {
    pub fn value(self) -> Rational {
        match self {
            Shift::Zero => Rational::zero(),
            Shift::Half => half(),
        }
    }

    pub fn from_rational(s: &Rational) -> Result<Self, LieError> {
        if s.is_zero() {
            Ok(Shift::Zero)
        } else if *s == half() {
            Ok(Shift::Half)
        } else {
            Err(LieError::ParameterDomain(format!(
                "s must be 0 or 1/2, got {s}"
            )))
        }
    }

    /// Whether `d` lies in `ℤ + s`.
    pub fn contains(self, d: &Rational) -> bool {
        match self {
            Shift::Zero => is_integer(d),
            Shift::Half => is_half_odd(d),
        }
    }

    /// Points of `ℤ + s` with absolute value at most `window`, ascending.
    pub fn window(self, window: i64) -> Vec<Rational> {
        let w = int(window);
        (-window - 1..=window)
            .map(|k| int(k) + self.value())
            .filter(|d| abs(d) <= w)
            .collect()
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shift::Zero => "0",
            Shift::Half => "1/2",
        })
    }
}

/// Interface the window checks run against. [`AlgebraSpec`] is the real
/// implementation; tests substitute deliberately corrupted ones.
pub trait GradedLieAlgebra {
    /// Rejects basis elements that do not belong to the algebra.
    fn validate(&self, x: &BasisElement) -> Result<(), LieError>;

    /// Bracket of two valid basis elements.
    fn bracket_basis(&self, x: &BasisElement, y: &BasisElement) -> Element;

    /// All basis elements with `|degree| <= window`, in a fixed order.
    fn window_basis(&self, window: i64) -> Vec<BasisElement>;

    /// Bilinear extension of [`GradedLieAlgebra::bracket_basis`].
    fn bracket(&self, x: &Element, y: &Element) -> Result<Element, LieError> {
        let mut out = Element::zero();
        for (bx, cx) in x.terms() {
            self.validate(bx)?;
            for (by, cy) in y.terms() {
                self.validate(by)?;
                out = out.add(&self.bracket_basis(bx, by).scale(&(cx * cy)));
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    name: AlgebraName,
    s: Shift,
    rho: Option<Rational>,
}

/// Validates the parameters and builds the algebra.
///
/// W requires ϱ ≠ −1, D requires ϱ ∉ {0, −1, −3} and `s = 0`; Vir and SV
/// take no ϱ, and Vir has no `Y` family so only `s = 0` is accepted.
pub fn make_algebra(
    name: AlgebraName,
    s: Shift,
    rho: Option<Rational>,
) -> Result<AlgebraSpec, LieError> {
    let domain = |msg: String| Err(LieError::ParameterDomain(msg));
    match name {
        AlgebraName::Vir | AlgebraName::SV => {
            if let Some(r) = rho {
                return domain(format!("{name} takes no rho parameter (got {r})"));
            }
            if name == AlgebraName::Vir && s != Shift::Zero {
                return domain("Vir has no Y family; s must be 0".into());
            }
        }
        AlgebraName::W => match &rho {
            None => return domain("W requires a rho parameter".into()),
            Some(r) if *r == -Rational::one() => {
                return domain("W(rho)[s] requires rho != -1".into())
            }
            Some(_) => {}
        },
        AlgebraName::D => {
            match &rho {
                None => return domain("D requires a rho parameter".into()),
                Some(r) if [int(0), int(-1), int(-3)].contains(r) => {
                    return domain(format!(
                        "D(rho) requires rho not in {{0, -1, -3}} (got {r})"
                    ))
                }
                Some(_) => {}
            }
            if s != Shift::Zero {
                return domain("D(rho) is defined only with s = 0".into());
            }
        }
    }
    Ok(AlgebraSpec { name, s, rho })
}

impl AlgebraSpec {
    pub fn vir() -> Self {
        make_algebra(AlgebraName::Vir, Shift::Zero, None).expect("valid parameters")
    }

    pub fn w(rho: Rational, s: Shift) -> Result<Self, LieError> {
        make_algebra(AlgebraName::W, s, Some(rho))
    }

    pub fn sv(s: Shift) -> Self {
        make_algebra(AlgebraName::SV, s, None).expect("valid parameters")
    }

    pub fn d(rho: Rational) -> Result<Self, LieError> {
        make_algebra(AlgebraName::D, Shift::Zero, Some(rho))
    }

    pub fn name(&self) -> AlgebraName {
        self.name
    }

    pub fn shift(&self) -> Shift {
        self.s
    }

    pub fn rho(&self) -> Option<&Rational> {
        self.rho.as_ref()
    }

    pub fn families(&self) -> &'static [Family] {
        match self.name {
            AlgebraName::Vir => &[Family::L],
            AlgebraName::W => &[Family::L, Family::Y],
            AlgebraName::SV | AlgebraName::D => &[Family::L, Family::Y, Family::M],
        }
    }

    /// Coefficient ϑ in `[L_m, Y_p] = (p − ϑm) Y_{m+p}`.
    fn y_twist(&self) -> Rational {
        match self.name {
            AlgebraName::W => self.rho.clone().expect("W carries rho"),
            AlgebraName::SV => half(),
            AlgebraName::D => (self.rho.clone().expect("D carries rho") + int(1)) * half(),
            AlgebraName::Vir => unreachable!("Vir has no Y family"),
        }
    }

    /// Coefficient ϑ in `[L_m, M_n] = (n − ϑm) M_{m+n}`.
    fn m_twist(&self) -> Rational {
        match self.name {
            AlgebraName::SV => Rational::zero(),
            AlgebraName::D => self.rho.clone().expect("D carries rho"),
            _ => unreachable!("no M family"),
        }
    }

    /// Bracket for the ordered pair, before antisymmetric completion.
    fn ordered(&self, x: &BasisElement, y: &BasisElement) -> Option<Element> {
        use Family::*;
        let (m, n) = (&x.degree, &y.degree);
        let e = match (x.family, y.family) {
            (L, L) => Element::term(n - m, BasisElement::l(m + n)),
            (L, Y) => Element::term(n - self.y_twist() * m, BasisElement::y(m + n)),
            (L, M) => Element::term(n - self.m_twist() * m, BasisElement::m(m + n)),
            (Y, Y) if self.name == AlgebraName::W => Element::zero(),
            (Y, Y) => Element::term(n - m, BasisElement::m(m + n)),
            (Y, M) | (M, M) => Element::zero(),
            _ => return None,
        };
        Some(e)
    }

    pub fn label(&self) -> String {
        match (&self.name, &self.rho) {
            (AlgebraName::Vir, _) => "Vir".into(),
            (AlgebraName::SV, _) => format!("sv[{}]", self.s),
            (AlgebraName::W, Some(r)) => format!("W({r})[{}]", self.s),
            (AlgebraName::D, Some(r)) => format!("D({r})"),
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl GradedLieAlgebra for AlgebraSpec {
    fn validate(&self, x: &BasisElement) -> Result<(), LieError> {
        let ok = self.families().contains(&x.family)
            && match x.family {
                Family::L | Family::M => is_integer(&x.degree),
                Family::Y => self.s.contains(&x.degree),
            };
        if ok {
            Ok(())
        } else {
            Err(LieError::Lattice {
                element: x.to_string(),
                algebra: self.label(),
            })
        }
    }

    fn bracket_basis(&self, x: &BasisElement, y: &BasisElement) -> Element {
        match self.ordered(x, y) {
            Some(e) => e,
            None => self
                .ordered(y, x)
                .expect("every family pair has one ordered formula")
                .scale(&-Rational::one()),
        }
    }

    fn window_basis(&self, window: i64) -> Vec<BasisElement> {
        let mut out = Vec::new();
        for &family in self.families() {
            let lattice = match family {
                Family::Y => self.s,
                _ => Shift::Zero,
            };
            out.extend(
                lattice
                    .window(window)
                    .into_iter()
                    .map(|d| BasisElement::new(family, d)),
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn parameter_domains() {
        assert!(AlgebraSpec::w(int(0), Shift::Zero).is_ok());
        assert!(matches!(
            AlgebraSpec::w(int(-1), Shift::Zero),
            Err(LieError::ParameterDomain(_))
        ));
        for bad in [0, -1, -3] {
            assert!(AlgebraSpec::d(int(bad)).is_err());
        }
        assert!(AlgebraSpec::d(int(2)).is_ok());
        assert!(make_algebra(AlgebraName::D, Shift::Half, Some(int(2))).is_err());
        assert!(make_algebra(AlgebraName::SV, Shift::Half, Some(int(2))).is_err());
        assert!(make_algebra(AlgebraName::SV, Shift::Half, None).is_ok());
        assert!(make_algebra(AlgebraName::Vir, Shift::Half, None).is_err());
        assert!(make_algebra(AlgebraName::W, Shift::Zero, None).is_err());
        assert!(Shift::from_rational(&rat(1, 3)).is_err());
    }

    #[test]
    fn bracket_examples() {
        let w = AlgebraSpec::w(rat(3, 7), Shift::Zero).unwrap();
        assert_eq!(
            w.bracket_basis(&BasisElement::l(int(2)), &BasisElement::l(int(3))),
            Element::basis(BasisElement::l(int(5)))
        );

        let w_half = AlgebraSpec::w(half(), Shift::Half).unwrap();
        assert!(w_half
            .bracket_basis(&BasisElement::l(int(1)), &BasisElement::y(half()))
            .is_zero());

        let sv0 = AlgebraSpec::sv(Shift::Zero);
        assert_eq!(
            sv0.bracket_basis(&BasisElement::y(int(1)), &BasisElement::y(int(2))),
            Element::basis(BasisElement::m(int(3)))
        );

        let d2 = AlgebraSpec::d(int(2)).unwrap();
        assert_eq!(
            d2.bracket_basis(&BasisElement::l(int(1)), &BasisElement::y(int(0))),
            Element::term(rat(-3, 2), BasisElement::y(int(1)))
        );
        assert_eq!(
            d2.bracket_basis(&BasisElement::y(int(0)), &BasisElement::l(int(1))),
            Element::term(rat(3, 2), BasisElement::y(int(1)))
        );
        // [L_1, M_2] = (2 - 2*1) M_3
        assert!(d2
            .bracket_basis(&BasisElement::l(int(1)), &BasisElement::m(int(2)))
            .is_zero());
    }

    #[test]
    fn lattice_is_enforced() {
        let w = AlgebraSpec::w(int(1), Shift::Half).unwrap();
        assert!(w.validate(&BasisElement::y(half())).is_ok());
        assert!(w.validate(&BasisElement::y(int(1))).is_err());
        assert!(w.validate(&BasisElement::l(half())).is_err());
        assert!(w.validate(&BasisElement::m(int(0))).is_err());
        assert!(AlgebraSpec::vir()
            .validate(&BasisElement::y(int(0)))
            .is_err());

        let bad = Element::basis(BasisElement::y(int(2)));
        let good = Element::basis(BasisElement::l(int(0)));
        assert!(w.bracket(&good, &bad).is_err());
    }

    #[test]
    fn window_sizes() {
        assert_eq!(AlgebraSpec::vir().window_basis(3).len(), 7);
        assert_eq!(
            AlgebraSpec::w(int(0), Shift::Zero)
                .unwrap()
                .window_basis(3)
                .len(),
            14
        );
        // Y_{±1/2}, ..., Y_{±5/2}
        assert_eq!(
            AlgebraSpec::w(int(0), Shift::Half)
                .unwrap()
                .window_basis(3)
                .len(),
            13
        );
        assert_eq!(AlgebraSpec::sv(Shift::Zero).window_basis(2).len(), 15);
        assert_eq!(Shift::Half.window(1), vec![rat(-1, 2), rat(1, 2)]);
    }
}

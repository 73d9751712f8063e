//! Exhaustive axiom checks over a degree window.

use super::algebra::GradedLieAlgebra;
use super::element::{BasisElement, Element};
use super::LieError;
use crate::report::{CheckReport, Residual, Violation};

fn element_residual(e: &Element) -> Residual {
    Residual::terms(e.terms().map(|(x, c)| (x.to_string(), c)))
}

fn require_window(window: i64) -> Result<(), LieError> {
    if window < 1 {
        Err(LieError::WindowTooSmall { window, min: 1 })
    } else {
        Ok(())
    }
}

/// `[x, y] + [y, x]`.
pub fn antisymmetry_residual<A: GradedLieAlgebra + ?Sized>(
    alg: &A,
    x: &BasisElement,
    y: &BasisElement,
) -> Element {
    alg.bracket_basis(x, y).add(&alg.bracket_basis(y, x))
}

/// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
pub fn jacobi_residual<A: GradedLieAlgebra + ?Sized>(
    alg: &A,
    x: &BasisElement,
    y: &BasisElement,
    z: &BasisElement,
) -> Result<Element, LieError> {
    let (ex, ey, ez) = (
        Element::basis(x.clone()),
        Element::basis(y.clone()),
        Element::basis(z.clone()),
    );
    let t1 = alg.bracket(&alg.bracket(&ex, &ey)?, &ez)?;
    let t2 = alg.bracket(&alg.bracket(&ey, &ez)?, &ex)?;
    let t3 = alg.bracket(&alg.bracket(&ez, &ex)?, &ey)?;
    Ok(t1.add(&t2).add(&t3))
}

pub fn check_antisymmetry<A: GradedLieAlgebra + ?Sized>(
    alg: &A,
    window: i64,
) -> Result<CheckReport, LieError> {
    require_window(window)?;
    let basis = alg.window_basis(window);
    let mut violations = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i..] {
            let r = antisymmetry_residual(alg, x, y);
            if !r.is_zero() {
                violations.push(Violation {
                    inputs: vec![x.to_string(), y.to_string()],
                    residual: element_residual(&r),
                });
            }
        }
    }
    Ok(CheckReport::new(window, violations))
}

/// Checks the Jacobi identity on every ordered triple of window basis
/// elements. Brackets of window elements may leave the window; the formulas
/// are total so nothing is truncated.
pub fn check_jacobi<A: GradedLieAlgebra + ?Sized>(
    alg: &A,
    window: i64,
) -> Result<CheckReport, LieError> {
    require_window(window)?;
    let basis = alg.window_basis(window);
    let mut violations = Vec::new();
    for x in &basis {
        for y in &basis {
            for z in &basis {
                let r = jacobi_residual(alg, x, y, z)?;
                if !r.is_zero() {
                    violations.push(Violation {
                        inputs: vec![x.to_string(), y.to_string(), z.to_string()],
                        residual: element_residual(&r),
                    });
                }
            }
        }
    }
    Ok(CheckReport::new(window, violations))
}

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use super::module::{ModuleKind, ModuleSpec};
use super::vector::WeightVector;
use super::ModuleError;
use crate::arith::{abs, int, is_integer, Rational};
use crate::lie::{BasisElement, Element, GradedLieAlgebra};
use crate::report::{CheckReport, Residual, Violation};

/// One failure of `[x,y]·v = x·(y·v) − y·(x·v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleViolation {
    pub x: BasisElement,
    pub y: BasisElement,
    pub v: Rational,
    /// `[x,y]·v − x·(y·v) + y·(x·v)`.
    pub residual: WeightVector,
}

impl ModuleViolation {
    fn to_violation(&self) -> Violation {
        Violation {
            inputs: vec![
                self.x.to_string(),
                self.y.to_string(),
                format!("v_{}", self.v),
            ],
            residual: Residual::terms(self.residual.terms().map(|(i, c)| (format!("v_{i}"), c))),
        }
    }
}

/// `[x,y]·v_i − (x·(y·v_i) − y·(x·v_i))`.
pub fn module_residual(
    module: &ModuleSpec,
    x: &BasisElement,
    y: &BasisElement,
    i: &Rational,
) -> Result<WeightVector, ModuleError> {
    let host = module.host();
    let v = WeightVector::basis(i.clone());
    let (ex, ey) = (Element::basis(x.clone()), Element::basis(y.clone()));
    let lhs = module.act(&host.bracket(&ex, &ey)?, &v)?;
    let xy = module.act(&ex, &module.act(&ey, &v)?)?;
    let yx = module.act(&ey, &module.act(&ex, &v)?)?;
    Ok(lhs.sub(&xy.sub(&yx)))
}

fn require_window(window: i64, min: i64) -> Result<(), ModuleError> {
    if window < min {
        Err(ModuleError::WindowTooSmall { window, min })
    } else {
        Ok(())
    }
}

/// All axiom failures over window pairs `x` before `y` in the host's basis
/// order and vectors `v_i` with `|i| <= window`.
pub fn module_axiom_violations(
    module: &ModuleSpec,
    window: i64,
) -> Result<Vec<ModuleViolation>, ModuleError> {
    require_window(window, 1)?;
    let basis = module.host().window_basis(window);
    let indices = module.indices(&int(window));
    let mut out = Vec::new();
    for (n, x) in basis.iter().enumerate() {
        for y in &basis[n + 1..] {
            for i in &indices {
                let r = module_residual(module, x, y, i)?;
                if !r.is_zero() {
                    out.push(ModuleViolation {
                        x: x.clone(),
                        y: y.clone(),
                        v: i.clone(),
                        residual: r,
                    });
                }
            }
        }
    }
    Ok(out)
}

pub fn check_module_axiom(module: &ModuleSpec, window: i64) -> Result<CheckReport, ModuleError> {
    let violations = module_axiom_violations(module, window)?;
    Ok(CheckReport::new(
        window,
        violations
            .iter()
            .map(ModuleViolation::to_violation)
            .collect(),
    ))
}

/// What one generator reaches under the truncated operator closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorReach {
    pub generator: String,
    /// Whether every inner-window vector was reached.
    pub full: bool,
    /// Reached inner-window vectors, ascending.
    pub reached: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicityReport {
    pub window: i64,
    pub generators: Vec<GeneratorReach>,
}

impl CyclicityReport {
    pub fn all_full(&self) -> bool {
        self.generators.iter().all(|g| g.full)
    }

    /// The generator for `v_i`, if it was part of the inner window.
    pub fn generator(&self, i: &Rational) -> Option<&GeneratorReach> {
        let name = format!("v_{i}");
        self.generators.iter().find(|g| g.generator == name)
    }

    /// Non-full generators become violations whose residual lists the
    /// vectors that were reached.
    pub fn to_check_report(&self) -> CheckReport {
        let violations = self
            .generators
            .iter()
            .filter(|g| !g.full)
            .map(|g| Violation {
                inputs: vec![g.generator.clone()],
                residual: Residual::Note {
                    value: format!("reaches only span{{{}}}", g.reached.join(", ")),
                },
            })
            .collect();
        CheckReport::new(self.window, violations)
    }
}

/// Closure of each inner generator `v_i`, `|i| <= W/2`, under the host's basis
/// operators, keeping only results with `|index| <= W`.
///
/// Every basis operator sends a basis vector to a multiple of a basis vector,
/// so the reachable span is spanned by the reachable basis vectors.
pub fn check_window_cyclic(
    module: &ModuleSpec,
    window: i64,
) -> Result<CyclicityReport, ModuleError> {
    require_window(window, 2)?;
    let bound = int(window);
    let inner_bound = int(window) / int(2);
    let inner = module.indices(&inner_bound);
    let operators = module.host().window_basis(2 * window);

    let mut generators = Vec::new();
    for g in &inner {
        let mut seen: BTreeSet<Rational> = BTreeSet::from([g.clone()]);
        let mut queue = vec![g.clone()];
        while let Some(j) = queue.pop() {
            for x in &operators {
                let target = &j + &x.degree;
                if abs(&target) > bound || seen.contains(&target) {
                    continue;
                }
                if !module.act_coefficient(x, &j).is_zero() {
                    seen.insert(target.clone());
                    queue.push(target);
                }
            }
        }
        let reached: Vec<&Rational> = inner.iter().filter(|i| seen.contains(i)).collect();
        generators.push(GeneratorReach {
            generator: format!("v_{g}"),
            full: reached.len() == inner.len(),
            reached: reached.iter().map(|i| format!("v_{i}")).collect(),
        });
    }
    Ok(CyclicityReport { window, generators })
}

/// The printed simplicity criteria.
///
/// * `A_{a,b}`: `a ∉ ℤ` or `b ∉ {0, 1}`.
/// * `A_{a,b,c}`: additionally simple when `c ≠ 0`.
/// * `A_{a,b,c1,c2}`: `c1·c2 ≠ 0`.
pub fn simplicity_criterion(module: &ModuleSpec) -> Result<bool, ModuleError> {
    let vir_part = !is_integer(module.a()) || (*module.b() != int(0) && *module.b() != int(1));
    match module.kind() {
        ModuleKind::Aab => Ok(vir_part),
        ModuleKind::Aabc => Ok(vir_part || !module.c().is_zero()),
        ModuleKind::Aabc1c2 => Ok(!(module.c1() * module.c2()).is_zero()),
        kind @ (ModuleKind::Aa | ModuleKind::Ba) => Err(ModuleError::NoCriterion(kind.to_string())),
    }
}

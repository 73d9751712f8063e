use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::vector::WeightVector;
use super::ModuleError;
use crate::arith::{is_half_odd, is_integer, Rational};
use crate::lie::{
    AlgebraName, AlgebraSpec, BasisElement, Element, Family, GradedLieAlgebra, Shift,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    /// `A_{a,b}` over Vir.
    Aab,
    /// `A(a)` over Vir.
    Aa,
    /// `B(a)` over Vir.
    Ba,
    /// `A_{a,b,c}` over W(ϱ)[0].
    Aabc,
    /// `A_{a,b,c1,c2}` over W(ϱ)[1/2].
    Aabc1c2,
}

impl ModuleKind {
    pub const ALL: [ModuleKind; 5] = [
        ModuleKind::Aab,
        ModuleKind::Aa,
        ModuleKind::Ba,
        ModuleKind::Aabc,
        ModuleKind::Aabc1c2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ModuleKind::Aab => "Aab",
            ModuleKind::Aa => "Aa",
            ModuleKind::Ba => "Ba",
            ModuleKind::Aabc => "Aabc",
            ModuleKind::Aabc1c2 => "Aabc1c2",
        }
    }

    fn host_ok(self, host: &AlgebraSpec) -> bool {
        match self {
            ModuleKind::Aab | ModuleKind::Aa | ModuleKind::Ba => host.name() == AlgebraName::Vir,
            ModuleKind::Aabc => host.name() == AlgebraName::W && host.shift() == Shift::Zero,
            ModuleKind::Aabc1c2 => host.name() == AlgebraName::W && host.shift() == Shift::Half,
        }
    }
}

impl FromStr for ModuleKind {
    type Err = ModuleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ModuleKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| ModuleError::Parameter(format!("unknown module kind {s:?}")))
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Raw parameters as supplied by a caller; [`make_module`] decides which
/// are required for a kind.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleParams {
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub bp: Option<Rational>,
    pub c: Option<Rational>,
    pub c1: Option<Rational>,
    pub c2: Option<Rational>,
}

impl ModuleParams {
    pub fn ab(a: Rational, b: Rational) -> Self {
        ModuleParams {
            a: Some(a),
            b: Some(b),
            ..Default::default()
        }
    }

    pub fn a(a: Rational) -> Self {
        ModuleParams {
            a: Some(a),
            ..Default::default()
        }
    }

    pub fn abc(a: Rational, b: Rational, c: Rational) -> Self {
        ModuleParams {
            c: Some(c),
            ..Self::ab(a, b)
        }
    }

    pub fn abc1c2(a: Rational, b: Rational, c1: Rational, c2: Rational) -> Self {
        ModuleParams {
            c1: Some(c1),
            c2: Some(c2),
            ..Self::ab(a, b)
        }
    }

    pub fn with_bp(mut self, bp: Rational) -> Self {
        self.bp = Some(bp);
        self
    }
}

/// A weight module with one-dimensional weight spaces, given by its action
/// formulas on the basis `v_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    kind: ModuleKind,
    a: Rational,
    b: Rational,
    bp: Rational,
    c: Rational,
    c1: Rational,
    c2: Rational,
    host: AlgebraSpec,
}

pub fn make_module(
    kind: ModuleKind,
    params: ModuleParams,
    host: AlgebraSpec,
) -> Result<ModuleSpec, ModuleError> {
    if !kind.host_ok(&host) {
        return Err(ModuleError::HostMismatch {
            kind: kind.to_string(),
            host: host.label(),
        });
    }
    let need = |v: Option<Rational>, name: &str| {
        v.ok_or_else(|| ModuleError::Parameter(format!("{kind} requires parameter {name}")))
    };
    let forbid = |v: &Option<Rational>, name: &str| match v {
        Some(_) => Err(ModuleError::Parameter(format!(
            "{kind} takes no parameter {name}"
        ))),
        None => Ok(()),
    };
    let mut a = need(params.a, "a")?;
    let (mut b, mut bp, mut c, mut c1, mut c2) = (
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
    );
    match kind {
        ModuleKind::Aa | ModuleKind::Ba => {
            forbid(&params.b, "b")?;
            forbid(&params.bp, "bp")?;
            forbid(&params.c, "c")?;
            forbid(&params.c1, "c1")?;
            forbid(&params.c2, "c2")?;
        }
        ModuleKind::Aab | ModuleKind::Aabc => {
            b = need(params.b, "b")?;
            bp = b.clone();
            forbid(&params.bp, "bp")?;
            forbid(&params.c1, "c1")?;
            forbid(&params.c2, "c2")?;
            if kind == ModuleKind::Aabc {
                c = need(params.c, "c")?;
            } else {
                forbid(&params.c, "c")?;
            }
        }
        ModuleKind::Aabc1c2 => {
            b = need(params.b, "b")?;
            bp = params.bp.unwrap_or_else(|| b.clone());
            c1 = need(params.c1, "c1")?;
            c2 = need(params.c2, "c2")?;
            forbid(&params.c, "c")?;
        }
    }
    if matches!(
        kind,
        ModuleKind::Aab | ModuleKind::Aabc | ModuleKind::Aabc1c2
    ) && is_integer(&a)
    {
        a = Rational::zero();
    }
    Ok(ModuleSpec {
        kind,
        a,
        b,
        bp,
        c,
        c1,
        c2,
        host,
    })
}

impl ModuleSpec {
    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn host(&self) -> &AlgebraSpec {
        &self.host
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn bp(&self) -> &Rational {
        &self.bp
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn c1(&self) -> &Rational {
        &self.c1
    }

    pub fn c2(&self) -> &Rational {
        &self.c2
    }

    /// Index lattice of the basis: ℤ, or ½ℤ for [`ModuleKind::Aabc1c2`].
    pub fn index_ok(&self, i: &Rational) -> bool {
        is_integer(i) || (self.kind == ModuleKind::Aabc1c2 && is_half_odd(i))
    }

    /// Basis indices with `|i| <= bound`, ascending.
    pub fn indices(&self, bound: &Rational) -> Vec<Rational> {
        let lattices: &[Shift] = if self.kind == ModuleKind::Aabc1c2 {
            &[Shift::Zero, Shift::Half]
        } else {
            &[Shift::Zero]
        };
        let w = bound.ceil().to_integer();
        let w: i64 = i64::try_from(w).expect("window fits in i64");
        let mut out: Vec<Rational> = lattices
            .iter()
            .flat_map(|s| s.window(w))
            .filter(|i| crate::arith::abs(i) <= *bound)
            .collect();
        out.sort();
        out
    }

    fn check_index(&self, i: &Rational) -> Result<(), ModuleError> {
        if self.index_ok(i) {
            Ok(())
        } else {
            Err(ModuleError::Lattice(format!(
                "v_{i} is not a basis vector of {}",
                self.kind
            )))
        }
    }

    /// Coefficient of `v_{i+d}` in `x · v_i` for a basis operator `x` of
    /// degree `d`.
    pub fn act_coefficient(&self, x: &BasisElement, i: &Rational) -> Rational {
        let m = &x.degree;
        match (self.kind, x.family) {
            (ModuleKind::Aab | ModuleKind::Aabc, Family::L) => &self.a + i + &self.b * m,
            (ModuleKind::Aabc1c2, Family::L) => {
                let b = if is_integer(i) { &self.b } else { &self.bp };
                &self.a + i + b * m
            }
            (ModuleKind::Aa, Family::L) => {
                if i.is_zero() {
                    m * (m + &self.a)
                } else {
                    i + m
                }
            }
            (ModuleKind::Ba, Family::L) => {
                if (i + m).is_zero() {
                    -(m * (m + &self.a))
                } else {
                    i.clone()
                }
            }
            (ModuleKind::Aabc, Family::Y) => self.c.clone(),
            (ModuleKind::Aabc1c2, Family::Y) => {
                if is_integer(i) {
                    self.c1.clone()
                } else {
                    self.c2.clone()
                }
            }
            _ => Rational::zero(),
        }
    }

    /// `x · v_i` for a basis operator.
    pub fn act_basis(&self, x: &BasisElement, i: &Rational) -> Result<WeightVector, ModuleError> {
        self.host.validate(x)?;
        self.check_index(i)?;
        Ok(WeightVector::term(
            self.act_coefficient(x, i),
            &x.degree + i,
        ))
    }

    /// Bilinear extension of [`ModuleSpec::act_basis`].
    pub fn act(&self, x: &Element, v: &WeightVector) -> Result<WeightVector, ModuleError> {
        let mut out = WeightVector::zero();
        for (bx, cx) in x.terms() {
            for (i, cv) in v.terms() {
                out = out.add(&self.act_basis(bx, i)?.scale(&(cx * cv)));
            }
        }
        Ok(out)
    }

    pub fn label(&self) -> String {
        match self.kind {
            ModuleKind::Aab => format!("A_{{{},{}}}", self.a, self.b),
            ModuleKind::Aa => format!("A({})", self.a),
            ModuleKind::Ba => format!("B({})", self.a),
            ModuleKind::Aabc => {
                format!("A_{{{},{},{}}} over {}", self.a, self.b, self.c, self.host)
            }
            ModuleKind::Aabc1c2 => format!(
                "A_{{{},{},{},{}}} (b'={}) over {}",
                self.a, self.b, self.c1, self.c2, self.bp, self.host
            ),
        }
    }
}

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::arith::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    L,
    Y,
    M,
}

impl Family {
    pub fn symbol(self) -> &'static str {
        match self {
            Family::L => "L",
            Family::Y => "Y",
            Family::M => "M",
        }
    }
}

/// A basis vector `L_n`, `Y_p` or `M_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisElement {
    pub family: Family,
    pub degree: Rational,
}

impl BasisElement {
    pub fn new(family: Family, degree: Rational) -> Self {
        BasisElement { family, degree }
    }

    pub fn l(degree: Rational) -> Self {
        Self::new(Family::L, degree)
    }

    pub fn y(degree: Rational) -> Self {
        Self::new(Family::Y, degree)
    }

    pub fn m(degree: Rational) -> Self {
        Self::new(Family::M, degree)
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.symbol(), self.degree)
    }
}

/// Finite linear combination of basis vectors; zero coefficients are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<BasisElement, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(x: BasisElement) -> Self {
        Self::term(Rational::from_integer(1.into()), x)
    }

    pub fn term(c: Rational, x: BasisElement) -> Self {
        let mut e = Self::zero();
        e.add_term(x, c);
        e
    }

    pub fn add_term(&mut self, x: BasisElement, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(x);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.scale(&-Rational::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(x, v)| (x.clone(), v * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, x: &BasisElement) -> Rational {
        self.terms.get(x).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (x, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*{x}")?;
        }
        Ok(())
    }
}

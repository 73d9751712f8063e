use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::Rational;

/// Finite combination `Σ c_i v_i` of weight basis vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightVector {
    terms: BTreeMap<Rational, Rational>,
}

impl WeightVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `v_index`.
    pub fn basis(index: Rational) -> Self {
        Self::term(Rational::one(), index)
    }

    pub fn term(c: Rational, index: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(index, c);
        out
    }

    pub fn add_term(&mut self, index: Rational, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(index).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> WeightVector {
        if c.is_zero() {
            return WeightVector::zero();
        }
        WeightVector {
            terms: self.terms.iter().map(|(i, v)| (i.clone(), v * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(index, coefficient)` pairs in ascending index order.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, index: &Rational) -> Rational {
        self.terms
            .get(index)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (i, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*v_{i}")?;
        }
        Ok(())
    }
}

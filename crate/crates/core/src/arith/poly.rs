//! Sparse multivariate polynomials over the rationals in a fixed nine-letter
//! alphabet.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is the
//! graded lexicographic order with `a < b < bp < rho < p < k < m < n < c`.
//! Zero coefficients are never stored, so structural equality is polynomial
//! equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use super::ArithError;

pub const NVARS: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    A,
    B,
    /// b′
    Bp,
    /// ϱ
    Rho,
    P,
    K,
    M,
    N,
    C,
}

impl Variable {
    pub const ALL: [Variable; NVARS] = [
        Variable::A,
        Variable::B,
        Variable::Bp,
        Variable::Rho,
        Variable::P,
        Variable::K,
        Variable::M,
        Variable::N,
        Variable::C,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Variable::A => "a",
            Variable::B => "b",
            Variable::Bp => "bp",
            Variable::Rho => "rho",
            Variable::P => "p",
            Variable::K => "k",
            Variable::M => "m",
            Variable::N => "n",
            Variable::C => "c",
        }
    }

    pub fn from_name(name: &str) -> Option<Variable> {
        Variable::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dense exponent vector over the alphabet.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Variable, e: u32) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Monomial(exps)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.0;
        for (e, o) in exps.iter_mut().zip(other.0.iter()) {
            *e += o;
        }
        Monomial(exps)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.0;
        for (e, o) in exps.iter_mut().zip(other.0.iter()) {
            *e = e.checked_sub(*o)?;
        }
        Some(Monomial(exps))
    }
}

impl Ord for Monomial {
    // graded, then lex with the last alphabet letter most significant
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Variable::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A (possibly partial) substitution of rationals for variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment([Option<Rational>; NVARS]);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Variable, value: Rational) -> Self {
        self.0[v.index()] = Some(value);
        self
    }

    pub fn set(&mut self, v: Variable, value: Rational) {
        self.0[v.index()] = Some(value);
    }

    pub fn get(&self, v: Variable) -> Option<&Rational> {
        self.0[v.index()].as_ref()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn var(v: Variable) -> Self {
        Self::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, mono: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(mono, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (mono, c) in terms {
            p.add_term(mono, c);
        }
        p
    }

    fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Variable) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    /// Variables that occur with a non-zero exponent, in alphabet order.
    pub fn variables(&self) -> Vec<Variable> {
        Variable::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.exponent(v) > 0))
            .collect()
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    fn mul_term(&self, mono: &Monomial, c: &Rational) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.mul(mono), x * c))
                .collect(),
        }
    }

    /// Integer power; negative exponents are rejected.
    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        if e < 0 {
            return Err(ArithError::NegativeExponent(e));
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    pub fn eval(&self, assignment: &Assignment) -> Result<Rational, ArithError> {
        let mut total = Rational::zero();
        for (mono, c) in &self.terms {
            let mut value = c.clone();
            for v in Variable::ALL {
                let e = mono.exponent(v);
                if e == 0 {
                    continue;
                }
                let x = assignment.get(v).ok_or(ArithError::MissingVariable(v))?;
                value *= num_traits::pow(x.clone(), e as usize);
            }
            total += value;
        }
        Ok(total)
    }

    /// Substitutes only the variables bound in `assignment`.
    pub fn partial_eval(&self, assignment: &Assignment) -> Self {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let mut value = c.clone();
            let mut rest = *mono;
            for v in Variable::ALL {
                let e = mono.exponent(v);
                if e == 0 {
                    continue;
                }
                if let Some(x) = assignment.get(v) {
                    value *= num_traits::pow(x.clone(), e as usize);
                    rest.0[v.index()] = 0;
                }
            }
            out.add_term(rest, value);
        }
        out
    }

    /// Replaces every occurrence of `v` by `replacement`.
    pub fn substitute(&self, v: Variable, replacement: &MultiPoly) -> Self {
        let max_e = self.degree_in(v).unwrap_or(0);
        let mut powers = vec![Self::one()];
        for i in 1..=max_e as usize {
            let next = &powers[i - 1] * replacement;
            powers.push(next);
        }
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let e = mono.exponent(v) as usize;
            let mut rest = *mono;
            rest.0[v.index()] = 0;
            out += &powers[e].mul_term(&rest, c);
        }
        out
    }

    /// Exchanges two variables.
    pub fn swap(&self, x: Variable, y: Variable) -> Self {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut exps = m.0;
            exps.swap(x.index(), y.index());
            (Monomial(exps), c.clone())
        }))
    }

    /// Coefficient of `v^e`, as a polynomial free of `v`.
    pub fn coefficient(&self, v: Variable, e: u32) -> Self {
        MultiPoly::from_terms(self.terms.iter().filter(|(m, _)| m.exponent(v) == e).map(
            |(m, c)| {
                let mut rest = *m;
                rest.0[v.index()] = 0;
                (rest, c.clone())
            },
        ))
    }

    /// Single-divisor reduction with respect to the leading term of `divisor`.
    ///
    /// Returns `(q, r)` with `self = q * divisor + r` and no term of `r`
    /// divisible by the leading monomial of `divisor`.
    pub fn divrem(&self, divisor: &MultiPoly) -> Result<(MultiPoly, MultiPoly), ArithError> {
        let (lead_mono, lead_coeff) = divisor.leading_term().ok_or(ArithError::DivisionByZero)?;
        let lead_mono = *lead_mono;
        let lead_coeff = lead_coeff.clone();
        let mut rest = self.clone();
        let mut quotient = MultiPoly::zero();
        let mut remainder = MultiPoly::zero();
        while let Some((mono, c)) = rest.leading_term() {
            let (mono, c) = (*mono, c.clone());
            match mono.checked_div(&lead_mono) {
                Some(q_mono) => {
                    let q_coeff = &c / &lead_coeff;
                    rest -= &divisor.mul_term(&q_mono, &q_coeff);
                    quotient.add_term(q_mono, q_coeff);
                }
                None => {
                    rest.terms.remove(&mono);
                    remainder.add_term(mono, c);
                }
            }
        }
        Ok((quotient, remainder))
    }

    /// `self / divisor` when the division is exact.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Result<MultiPoly, ArithError> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ArithError::NotDivisible {
                remainder: r.to_string(),
            })
        }
    }

    /// Canonical text form; see the crate README for the grammar.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }
}

fn fmt_coefficient(c: &Rational) -> String {
    format!("({c})")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (mono, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if mono.is_one() {
                if c.is_one() {
                    f.write_str("1")?;
                } else {
                    f.write_str(&fmt_coefficient(c))?;
                }
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_coefficient(c))?;
            }
        }
        Ok(())
    }
}

impl From<Variable> for MultiPoly {
    fn from(v: Variable) -> Self {
        MultiPoly::var(v)
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::integer(n)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

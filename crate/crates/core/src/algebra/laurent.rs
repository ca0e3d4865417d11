//! Laurent polynomials `Q[t, t^-1]`.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::{fmt_terms, Poly};
use super::{AlgebraError, Rational, Ring};

/// `sum coeffs[i] * t^(offset + i)`, trimmed so the first and last stored
/// coefficients are nonzero. The zero polynomial has no coefficients and
/// offset 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn new(offset: i64, coeffs: Vec<Rational>) -> Self {
        let Some(first) = coeffs.iter().position(|c| !c.is_zero()) else {
            return LaurentPoly::zero();
        };
        let last = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        LaurentPoly {
            offset: offset + first as i64,
            coeffs: coeffs[first..=last].to_vec(),
        }
    }

    pub fn from_ints(offset: i64, coeffs: &[i64]) -> Self {
        LaurentPoly::new(offset, coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: &[(i64, Rational)]) -> Self {
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return LaurentPoly::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        LaurentPoly::new(lo, coeffs)
    }

    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exponent: i64) -> Self {
        LaurentPoly::new(exponent, vec![c])
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(Rational::one(), 1)
    }

    pub fn t_inv() -> Self {
        LaurentPoly::monomial(Rational::one(), -1)
    }

    pub fn from_poly(p: &Poly) -> Self {
        LaurentPoly::new(0, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exponent: i64) -> Rational {
        let i = exponent - self.offset;
        if i < 0 {
            return Rational::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentPoly::new(self.offset, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `p(1/t)`.
    pub fn invert_variable(&self) -> Self {
        match self.max_exponent() {
            None => LaurentPoly::zero(),
            Some(hi) => LaurentPoly::new(-hi, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    pub fn has_only_even_exponents(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    /// `p(t) = q(t^2)` gives `q`; `None` if an odd exponent is present.
    pub fn halve_exponents(&self) -> Option<Self> {
        if !self.has_only_even_exponents() {
            return None;
        }
        let terms: Vec<(i64, Rational)> = self.terms().map(|(e, c)| (e / 2, c.clone())).collect();
        Some(LaurentPoly::from_terms(&terms))
    }

    /// Shifts so the lowest exponent is 0 and returns the ordinary polynomial.
    pub fn to_poly_shifted(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    /// Ordinary polynomial if no negative exponents occur.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if self.offset < 0 {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); self.offset as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Some(Poly::new(coeffs))
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational, AlgebraError> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if x.is_zero() && self.offset < 0 {
            return Err(AlgebraError::ZeroElement);
        }
        let base = self.to_poly_shifted().eval(x);
        Ok(base * pow_int(x, self.offset))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.to_poly_shifted().eval_f64(x) * x.powi(self.offset as i32)
    }

    /// If `self = c * t^k * other` for a rational `c != 0`, returns `(c, k)`.
    pub fn unit_ratio(&self, other: &LaurentPoly) -> Option<(Rational, i64)> {
        if self.is_zero() || other.is_zero() || self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        let c = &self.coeffs[0] / &other.coeffs[0];
        let k = self.offset - other.offset;
        (other.shift(k).scale(&c) == *self).then_some((c, k))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = mul(&out, self);
        }
        out
    }
}

fn pow_int(x: &Rational, e: i64) -> Rational {
    let mut out = Rational::one();
    let base = if e < 0 { x.recip() } else { x.clone() };
    for _ in 0..e.unsigned_abs() {
        out *= &base;
    }
    out
}

fn add(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let lo = a.offset.min(b.offset);
    let hi = a.max_exponent().unwrap().max(b.max_exponent().unwrap());
    let coeffs = (lo..=hi).map(|e| a.coeff(e) + b.coeff(e)).collect();
    LaurentPoly::new(lo, coeffs)
}

fn neg(a: &LaurentPoly) -> LaurentPoly {
    LaurentPoly {
        offset: a.offset,
        coeffs: a.coeffs.iter().map(|c| -c).collect(),
    }
}

fn mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    let mut coeffs = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            coeffs[i + j] += x * y;
        }
    }
    LaurentPoly::new(a.offset + b.offset, coeffs)
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add(self, &neg(rhs))
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        mul(self, rhs)
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        neg(self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms(), "t")
    }
}

/// `Q[t, t^-1]` as a ring context.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LaurentRing;

impl Ring for LaurentRing {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one()
    }
    fn from_rational(&self, c: &Rational) -> LaurentPoly {
        LaurentPoly::constant(c.clone())
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        add(a, b)
    }
    fn sub(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        add(a, &neg(b))
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        mul(a, b)
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        neg(a)
    }
    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }
}

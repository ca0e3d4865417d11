//! Dense univariate polynomials over `Q`, lowest degree first.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_rational, parse_rational, rat, AlgebraError, Rational};

/// Invariant: no trailing zero coefficients, so the zero polynomial is `[]`.
/// Serialized as a list of `"num/den"` strings, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Sign of the value at `x`: -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        sign(&self.eval(x))
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Exact quotient; panics in debug builds if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::BothZero);
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Returns `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly), AlgebraError> {
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::BothZero);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc_inv = r0.leading().expect("nonzero gcd").recip();
        Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), t0.scale(&lc_inv)))
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self
                .gcd(&self.derivative())
                .map(|g| g.is_constant())
                .unwrap_or(false),
        }
    }

    /// Yun's square-free decomposition. Factors are monic, square-free and
    /// pairwise coprime; the product of `factor^mult` equals `self` up to its
    /// leading coefficient. Constant inputs give an empty list.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.is_constant() {
            return Ok(out);
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.exact_div(&a0);
        let mut c = df.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut mult = 1;
        while !b.is_constant() {
            let a = b.gcd(&d)?;
            if !a.is_constant() {
                out.push((a.clone(), mult));
            }
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            d = &c - &b.derivative();
            mult += 1;
        }
        Ok(out)
    }

    /// `a(t^2)`.
    pub fn substitute_tsquared(&self) -> Poly {
        let mut coeffs = vec![Rational::zero(); (2 * self.coeffs.len()).saturating_sub(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Poly::new(coeffs)
    }

    /// `t^deg * a(1/t)`.
    pub fn reciprocal(&self) -> Poly {
        Poly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Scales to coprime integer coefficients with a positive leading
    /// coefficient and returns them.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut ints: Vec<BigInt> = ints.into_iter().map(|c| c / &content).collect();
        if ints.last().is_some_and(|c| c.is_negative()) {
            ints.iter_mut().for_each(|c| *c = -c.clone());
        }
        ints
    }

    /// Total order used to sort branches deterministically: by degree, then
    /// coefficients from the top down.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Cauchy bound: every complex root has modulus below the returned value.
    pub fn root_bound(&self) -> Rational {
        let Some(lc) = self.leading() else {
            return Rational::one();
        };
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / lc).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Rational::one() + max
    }
}

pub(crate) fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Integral coefficients serialize as JSON integers, the rest as `"n/d"`.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Int(i64),
    Text(String),
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| {
            match c.is_integer().then(|| c.to_integer().to_i64()).flatten() {
                Some(n) => CoeffRepr::Int(n),
                None => CoeffRepr::Text(format_rational(c)),
            }
        }))
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<CoeffRepr>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|c| match c {
                CoeffRepr::Int(n) => Ok(Rational::from_integer((*n).into())),
                CoeffRepr::Text(t) => parse_rational(t),
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Poly::new(coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.coeffs.iter().enumerate().map(|(i, c)| (i as i64, c)), "t")
    }
}

pub(crate) fn fmt_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I, var: &str) -> fmt::Result
where
    I: DoubleEndedIterator<Item = (i64, &'a Rational)>,
{
    let mut first = true;
    for (e, c) in terms.rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let show_coeff = !abs.is_one() || e == 0;
        if show_coeff {
            write!(f, "{abs}")?;
        }
        match e {
            0 => {}
            1 => write!(f, "{}{var}", if show_coeff { "*" } else { "" })?,
            _ => write!(f, "{}{var}^{e}", if show_coeff { "*" } else { "" })?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

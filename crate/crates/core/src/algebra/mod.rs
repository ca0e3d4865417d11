//! Exact arithmetic: rationals, univariate and Laurent polynomials over `Q`,
//! Sturm sequences, quotient rings `Q[t]/(h)` with gcd splitting, and
//! nullspaces over those rings.

pub mod laurent;
pub mod matrix;
pub mod poly;
pub mod quotient;
pub mod sturm;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use laurent::LaurentPoly;
pub use matrix::{nullspace, Matrix, NullspaceBranch};
pub use poly::Poly;
pub use quotient::{Inversion, ModulusBranch, QuotientRing, SplitRecord};
pub use sturm::{isolate_real_roots, sturm_count, Bound, RootInterval};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("cannot invert the zero element")]
    ZeroElement,
    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(Rational),
    #[error("modulus must be square-free and of positive degree: {0}")]
    BadModulus(String),
    #[error("cannot parse rational {0:?}")]
    RationalSyntax(String),
}

/// A commutative ring given as a context object; elements are plain values.
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_rational(&self, c: &Rational) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&Rational::from_integer(n.into()))
    }
}

/// The field `Q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_rational(&self, c: &Rational) -> Rational {
        c.clone()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `"num/den"`, always with an explicit denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let err = || AlgebraError::RationalSyntax(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| err())?)),
    }
}

/// Decimal string of a rational with `digits` digits after the point,
/// rounded half away from zero.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r * Rational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let neg = rounded.is_negative();
    let abs = rounded.abs();
    let int_part = &abs / &scale;
    let frac_part = &abs % &scale;
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
    }
}

//! Two-bridge knots: continued fractions, Riley presentations, and the
//! `[1,1,2,2,2j]` family.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{Generator, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FractionError {
    #[error("continued fraction must have at least one term")]
    EmptyContinuedFraction,
    #[error("continued fraction terms must be nonzero (term {index} is 0)")]
    ZeroTerm { index: usize },
    #[error("continued fraction does not evaluate to a finite number")]
    Infinite,
    #[error("arithmetic overflow while evaluating fraction")]
    Overflow,
    #[error("p must be odd: {p}/{q} is a two-bridge link, not a knot")]
    EvenNumerator { p: i128, q: i128 },
    #[error("fraction {p}/{q} must satisfy 0 < q < p")]
    OutOfRange { p: i128, q: i128 },
    #[error("fraction {p}/{q} is not in lowest terms")]
    NotReduced { p: i128, q: i128 },
    #[error("cannot parse {0:?} as p/q")]
    Syntax(String),
    #[error("family index j must be at least 1")]
    FamilyIndex,
}

/// Nested expansion `a1 + 1/(a2 + 1/(... + 1/an))` with nonzero terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    terms: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<i64>) -> Result<Self, FractionError> {
        if terms.is_empty() {
            return Err(FractionError::EmptyContinuedFraction);
        }
        if let Some(index) = terms.iter().position(|&a| a == 0) {
            return Err(FractionError::ZeroTerm { index });
        }
        Ok(ContinuedFraction { terms })
    }

    /// The `[1,1,2,2,2j]` expansion.
    pub fn family(j: u64) -> Result<Self, FractionError> {
        if j == 0 {
            return Err(FractionError::FamilyIndex);
        }
        let two_j = i64::try_from(j).ok().and_then(|j| j.checked_mul(2)).ok_or(FractionError::Overflow)?;
        ContinuedFraction::new(vec![1, 1, 2, 2, two_j])
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    /// Evaluates bottom-up in projective coordinates so an intermediate
    /// `1/0` is carried as infinity rather than an error.
    pub fn evaluate(&self) -> Result<(i128, i128), FractionError> {
        let (mut num, mut den): (i128, i128) = (1, 0);
        for &a in self.terms.iter().rev() {
            let a = a as i128;
            // a + 1/(num/den) = (a*num + den)/num
            let next = a
                .checked_mul(num)
                .and_then(|v| v.checked_add(den))
                .ok_or(FractionError::Overflow)?;
            den = num;
            num = next;
        }
        if den == 0 {
            return Err(FractionError::Infinite);
        }
        let g = num.gcd(&den);
        let (mut p, mut q) = (num / g, den / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok((p, q))
    }

    pub fn to_fraction(&self) -> Result<TwoBridgeFraction, FractionError> {
        let (p, q) = self.evaluate()?;
        TwoBridgeFraction::from_signed(p, q)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for ContinuedFraction {
    type Err = FractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let terms = s
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| FractionError::Syntax(s.to_string()))?;
        ContinuedFraction::new(terms)
    }
}

/// A two-bridge knot fraction `p/q`: `p` odd, `0 < q < p`, coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct TwoBridgeFraction {
    p: u64,
    q: u64,
}

impl TwoBridgeFraction {
    pub fn new(p: u64, q: u64) -> Result<Self, FractionError> {
        Self::from_signed(p as i128, q as i128)
    }

    fn from_signed(p: i128, q: i128) -> Result<Self, FractionError> {
        if p.rem_euclid(2) == 0 {
            return Err(FractionError::EvenNumerator { p, q });
        }
        if q <= 0 || q >= p {
            return Err(FractionError::OutOfRange { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(FractionError::NotReduced { p, q });
        }
        let p = u64::try_from(p).map_err(|_| FractionError::Overflow)?;
        let q = u64::try_from(q).map_err(|_| FractionError::Overflow)?;
        Ok(TwoBridgeFraction { p, q })
    }

    /// `(24j+5)/(14j+3)`, the fraction of `[1,1,2,2,2j]`.
    pub fn family(j: u64) -> Result<Self, FractionError> {
        ContinuedFraction::family(j)?.to_fraction()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Numerator used for the Riley word. The formula needs an odd `q`; for
    /// even `q` the mirror image `p/(p-q)` is used, whose group is isomorphic.
    pub fn presentation_q(&self) -> u64 {
        if self.q % 2 == 1 {
            self.q
        } else {
            self.p - self.q
        }
    }

    /// `e_i = (-1)^floor(i q / p)` for `1 <= i <= p - 1`.
    pub fn riley_exponents(&self) -> Vec<i32> {
        let (p, q) = (self.p as u128, self.q as u128);
        (1..p)
            .map(|i| if (i * q / p) % 2 == 0 { 1 } else { -1 })
            .collect()
    }
}

impl fmt::Display for TwoBridgeFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for TwoBridgeFraction {
    type Err = FractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || FractionError::Syntax(s.to_string());
        let (p, q) = s.trim().split_once('/').ok_or_else(syntax)?;
        let p: i128 = p.trim().parse().map_err(|_| syntax())?;
        let q: i128 = q.trim().parse().map_err(|_| syntax())?;
        TwoBridgeFraction::from_signed(p, q)
    }
}

impl TryFrom<String> for TwoBridgeFraction {
    type Error = FractionError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<TwoBridgeFraction> for String {
    fn from(f: TwoBridgeFraction) -> String {
        f.to_string()
    }
}

/// Riley presentation `<x, y | x w = w y>` together with the homological
/// longitude that commutes with the meridian `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotPresentation {
    pub fraction: TwoBridgeFraction,
    pub w: Word,
    pub v: Word,
    pub relator: Word,
    pub longitude: Word,
    pub meridian: Word,
}

impl KnotPresentation {
    pub fn new(fraction: TwoBridgeFraction) -> Self {
        let odd = TwoBridgeFraction {
            p: fraction.p,
            q: fraction.presentation_q(),
        };
        let letters = odd
            .riley_exponents()
            .into_iter()
            .enumerate()
            .map(|(k, e)| {
                // position i = k + 1: odd positions are y, even are x
                let g = if k % 2 == 0 { Generator::Y } else { Generator::X };
                Letter::with_sign(g, e).expect("riley exponents are +-1")
            });
        let w = Word::reduce(letters);
        let v = w.spelled_backwards();
        let x = Word::generator(Generator::X);
        let y_inv = Word::generator(Generator::Y).invert();
        let relator = x.concat(&w).concat(&y_inv).concat(&w.invert());
        let wv = w.concat(&v);
        let correction = Word::power_of(Generator::X, -wv.total_exponent());
        let longitude = correction.concat(&wv);
        KnotPresentation {
            fraction,
            w,
            v,
            relator,
            longitude,
            meridian: x,
        }
    }

    /// Relators of the knot group.
    pub fn knot_relators(&self) -> Vec<Word> {
        vec![self.relator.clone()]
    }

    /// Relators of the longitudinal (0-)filling: the knot relator plus the longitude.
    pub fn filled_relators(&self) -> Vec<Word> {
        vec![self.relator.clone(), self.longitude.clone()]
    }

    /// Exponent of the meridian correction applied to `w v`.
    pub fn longitude_correction(&self) -> i64 {
        -self.w.concat(&self.v).total_exponent()
    }
}

/// The 24-letter block of the family word.
pub const FAMILY_BLOCK: &str = "yx^-1yx y^-1x^-1yx^-1 y^-1xyx^-1 y^-1xy^-1x^-1 yxy^-1x yx^-1y^-1x";
const FAMILY_PREFIX: &str = "yx^-1y^-1x";
const FAMILY_SUFFIX: &str = "xy^-1x^-1y";

/// Closed forms `w = (y x^-1 y^-1 x) u^j` and `v = s^j (x y^-1 x^-1 y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyWords {
    pub j: u64,
    pub prefix: Word,
    pub u: Word,
    pub s: Word,
    pub w: Word,
    pub v: Word,
    pub suffix: Word,
}

impl FamilyWords {
    pub fn new(j: u64) -> Result<Self, FractionError> {
        if j == 0 {
            return Err(FractionError::FamilyIndex);
        }
        let prefix = Word::parse(FAMILY_PREFIX).expect("static word");
        let suffix = Word::parse(FAMILY_SUFFIX).expect("static word");
        let u = Word::parse(FAMILY_BLOCK).expect("static word");
        let s = u.spelled_backwards();
        let w = prefix.concat(&u.pow(j as usize));
        let v = s.pow(j as usize).concat(&suffix);
        Ok(FamilyWords {
            j,
            prefix,
            u,
            s,
            w,
            v,
            suffix,
        })
    }
}

/// Exhaustive check that `floor(i(14j+3)/(24j+5))` has period 24 mod 2 for
/// `5 <= i <= 28`, over every shift `i + 24n` inside `5..=24j+4`.
pub fn family_parity_is_periodic(j: u64) -> bool {
    let (num, den) = (14 * j as u128 + 3, 24 * j as u128 + 5);
    let k = |i: u128| i * num / den;
    let top = 24 * j as u128 + 4;
    (5u128..=28).all(|i| {
        let base = k(i) % 2;
        (0u128..)
            .map(|n| i + 24 * n)
            .take_while(|&idx| idx <= top)
            .all(|idx| k(idx) % 2 == base)
    })
}

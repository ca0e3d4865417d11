//! Real root counting and isolation with Sturm sequences.
//!
//! Endpoints are exact rationals or infinities and are never allowed to be
//! roots; isolation nudges bisection points off roots by `width / 2^k`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{sign, Poly};
use super::{format_rational, parse_rational, to_decimal, AlgebraError, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    At(Rational),
    PosInfinity,
}

impl From<Rational> for Bound {
    fn from(r: Rational) -> Self {
        Bound::At(r)
    }
}

/// Signed remainder sequence `p, p', -rem(p, p'), ...`.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone()];
    if p.is_constant() {
        return seq;
    }
    seq.push(p.derivative());
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_at(p: &Poly, b: &Bound) -> i32 {
    match b {
        Bound::At(x) => p.sign_at(x),
        Bound::PosInfinity => p.leading().map_or(0, sign),
        Bound::NegInfinity => {
            let s = p.leading().map_or(0, sign);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

fn variations(seq: &[Poly], b: &Bound) -> usize {
    let signs: Vec<i32> = seq.iter().map(|p| sign_at(p, b)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn check_endpoint(p: &Poly, b: &Bound) -> Result<(), AlgebraError> {
    if let Bound::At(x) = b {
        if p.eval(x).is_zero() {
            return Err(AlgebraError::EndpointIsRoot(x.clone()));
        }
    }
    Ok(())
}

/// Number of distinct real roots of a square-free `p` in the open interval
/// `(lo, hi)`.
pub fn sturm_count(p: &Poly, lo: &Bound, hi: &Bound) -> Result<usize, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    check_endpoint(p, lo)?;
    check_endpoint(p, hi)?;
    let seq = sturm_sequence(p);
    Ok(count_with(&seq, lo, hi))
}

fn count_with(seq: &[Poly], lo: &Bound, hi: &Bound) -> usize {
    variations(seq, lo).saturating_sub(variations(seq, hi))
}

/// Open interval `(lo, hi)` with rational endpoints containing exactly one root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInterval {
    #[serde(with = "rational_str")]
    pub lo: Rational,
    #[serde(with = "rational_str")]
    pub hi: Rational,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }

    pub fn is_positive(&self) -> bool {
        !self.lo.is_negative()
    }

    pub fn is_negative(&self) -> bool {
        !self.hi.is_positive()
    }

    /// Midpoint as a decimal string; only meaningful once the interval is
    /// narrower than the requested precision.
    pub fn decimal(&self, digits: usize) -> String {
        to_decimal(&self.midpoint(), digits)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// A point strictly inside `(lo, hi)` that is not a root, preferring the midpoint.
fn split_point(p: &Poly, lo: &Rational, hi: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    let mid = (lo + hi) / &two;
    if !p.eval(&mid).is_zero() {
        return mid;
    }
    let mut step = (hi - lo) / Rational::from_integer(4.into());
    loop {
        let cand = &mid + &step;
        if !p.eval(&cand).is_zero() {
            return cand;
        }
        step /= &two;
    }
}

/// Isolating intervals for every real root of a square-free `p`, in
/// increasing order.
pub fn isolate_real_roots(p: &Poly) -> Vec<RootInterval> {
    if p.is_constant() {
        return Vec::new();
    }
    let seq = sturm_sequence(p);
    let bound = p.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_with(&seq, &Bound::At(lo.clone()), &Bound::At(hi.clone()));
        match n {
            0 => {}
            1 => out.push(RootInterval { lo, hi }),
            _ => {
                let m = split_point(p, &lo, &hi);
                stack.push((m.clone(), hi));
                stack.push((lo, m));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Bisects an isolating interval until it is narrower than `width`.
pub fn refine(p: &Poly, interval: &RootInterval, width: &Rational) -> RootInterval {
    let mut cur = interval.clone();
    let lo_sign = p.sign_at(&cur.lo);
    while &cur.width() >= width {
        let m = split_point(p, &cur.lo, &cur.hi);
        if p.sign_at(&m) == lo_sign {
            cur.lo = m;
        } else {
            cur.hi = m;
        }
    }
    cur
}

/// Refines until the midpoint is correct to `digits` decimal places.
pub fn refine_to_digits(p: &Poly, interval: &RootInterval, digits: usize) -> RootInterval {
    let width = Rational::new(One::one(), num_bigint::BigInt::from(10u32).pow(digits as u32 + 2));
    refine(p, interval, &width)
}

pub(crate) mod rational_str {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn delta1() -> Poly {
        p(&[1, -7, 13, -7, 1])
    }

    #[test]
    fn count_examples() {
        assert_eq!(sturm_count(&delta1(), &rat(0).into(), &rat(5).into()).unwrap(), 4);
        assert_eq!(sturm_count(&p(&[1, -3, 1]), &rat(0).into(), &rat(1).into()).unwrap(), 1);
        assert_eq!(
            sturm_count(&p(&[1, 0, 1]), &Bound::NegInfinity, &Bound::PosInfinity).unwrap(),
            0
        );
        assert_eq!(
            sturm_count(&p(&[-2, 0, 1]), &Bound::NegInfinity, &Bound::PosInfinity).unwrap(),
            2
        );
        assert_eq!(
            sturm_count(&p(&[0, -1, 0, 1]), &Bound::NegInfinity, &rat(-1).into()),
            Err(AlgebraError::EndpointIsRoot(rat(-1)))
        );
    }

    #[test]
    fn isolation_examples() {
        let iv = isolate_real_roots(&delta1());
        assert_eq!(iv.len(), 4);
        let cuts = [ratio(0, 1), ratio(1, 2), rat(1), rat(2), rat(5)];
        for (k, r) in iv.iter().enumerate() {
            let r = refine(&delta1(), r, &ratio(1, 1000));
            assert!(r.lo >= cuts[k] && r.hi <= cuts[k + 1], "root {k} in {r}");
        }

        let quad = p(&[1, -3, 1]);
        let iv = isolate_real_roots(&quad);
        assert_eq!(iv.len(), 2);
        let a = refine_to_digits(&quad, &iv[0], 6);
        let b = refine_to_digits(&quad, &iv[1], 6);
        assert_eq!(a.decimal(6), "0.381966");
        assert_eq!(b.decimal(6), "2.618034");

        let lin = isolate_real_roots(&p(&[-1, 1]));
        assert_eq!(lin.len(), 1);
        assert!(lin[0].contains(&rat(1)));
    }

    #[test]
    fn isolation_survives_roots_at_bisection_points() {
        // roots exactly at 0 and at the first midpoints
        let f = &(&p(&[0, 1]) * &p(&[-1, 1])) * &p(&[1, 1]);
        let iv = isolate_real_roots(&f);
        assert_eq!(iv.len(), 3);
        assert!(iv[0].contains(&rat(-1)));
        assert!(iv[1].contains(&rat(0)));
        assert!(iv[2].contains(&rat(1)));
    }

    #[test]
    fn isolation_matches_count() {
        for c in [
            vec![1, -7, 13, -7, 1],
            vec![2, -13, 23, -13, 2],
            vec![-6, 11, -6, 1],
            vec![1, 0, 0, 0, 1],
            vec![-5, 0, 0, 1],
        ] {
            let f = p(&c);
            let n = sturm_count(&f, &Bound::NegInfinity, &Bound::PosInfinity).unwrap();
            let iv = isolate_real_roots(&f);
            assert_eq!(iv.len(), n);
            for w in iv.windows(2) {
                assert!(w[0].hi <= w[1].lo);
            }
        }
    }
}

//! `SL2` matrices over exact rings, the adjoint action on `sl2`, the
//! reducible non-abelian representations of two-bridge knot groups, and the
//! two independent Alexander polynomial computations.

use num_traits::One;
use thiserror::Error;

use crate::algebra::{
    rat, AlgebraError, LaurentPoly, ModulusBranch, Poly, QuotientRing, Rational, Ring,
};
use crate::algebra::laurent::LaurentRing;
use crate::twobridge::{KnotPresentation, TwoBridgeFraction};
use crate::word::{Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("representation condition has odd exponents; the presentation is inconsistent")]
    OddExponent,
    #[error("Alexander polynomial computation produced zero")]
    ZeroAlexander,
    #[error("eigenvalue branch {0} meets t = 0 or t^2 = 1")]
    ExcludedEigenvalue(String),
    #[error("relator does not evaluate to the identity over Q[t]/({0})")]
    RelatorNotSatisfied(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2<E> {
    pub a: E,
    pub b: E,
    pub c: E,
    pub d: E,
}

impl<E: Clone> Mat2<E> {
    pub fn new(a: E, b: E, c: E, d: E) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R) -> Self {
        Mat2::new(ring.one(), ring.zero(), ring.zero(), ring.one())
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, o: &Mat2<E>) -> Mat2<E> {
        let dot = |x: &E, y: &E, z: &E, w: &E| ring.add(&ring.mul(x, y), &ring.mul(z, w));
        Mat2::new(
            dot(&self.a, &o.a, &self.b, &o.c),
            dot(&self.a, &o.b, &self.b, &o.d),
            dot(&self.c, &o.a, &self.d, &o.c),
            dot(&self.c, &o.b, &self.d, &o.d),
        )
    }

    pub fn det<R: Ring<Elem = E>>(&self, ring: &R) -> E {
        ring.sub(&ring.mul(&self.a, &self.d), &ring.mul(&self.b, &self.c))
    }

    pub fn is_unimodular<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        ring.is_zero(&ring.sub(&self.det(ring), &ring.one()))
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse_unimodular<R: Ring<Elem = E>>(&self, ring: &R) -> Mat2<E> {
        Mat2::new(self.d.clone(), ring.neg(&self.b), ring.neg(&self.c), self.a.clone())
    }

    pub fn equals<R: Ring<Elem = E>>(&self, ring: &R, o: &Mat2<E>) -> bool {
        [(&self.a, &o.a), (&self.b, &o.b), (&self.c, &o.c), (&self.d, &o.d)]
            .iter()
            .all(|(x, y)| ring.is_zero(&ring.sub(x, y)))
    }

    pub fn map<F: Clone>(&self, f: impl Fn(&E) -> F) -> Mat2<F> {
        Mat2::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
}

/// 3x3 matrix acting on `sl2` coordinates `(v+, v0, v-)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3<E> {
    pub m: [[E; 3]; 3],
}

pub type Vec3<E> = [E; 3];

impl<E: Clone> Mat3<E> {
    pub fn from_fn(f: impl Fn(usize, usize) -> E) -> Self {
        Mat3 {
            m: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))),
        }
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R) -> Self {
        Mat3::from_fn(|r, c| if r == c { ring.one() } else { ring.zero() })
    }

    pub fn zero<R: Ring<Elem = E>>(ring: &R) -> Self {
        Mat3::from_fn(|_, _| ring.zero())
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, o: &Mat3<E>) -> Mat3<E> {
        Mat3::from_fn(|r, c| {
            (0..3).fold(ring.zero(), |acc, k| {
                ring.add(&acc, &ring.mul(&self.m[r][k], &o.m[k][c]))
            })
        })
    }

    pub fn apply<R: Ring<Elem = E>>(&self, ring: &R, v: &Vec3<E>) -> Vec3<E> {
        std::array::from_fn(|r| {
            (0..3).fold(ring.zero(), |acc, k| ring.add(&acc, &ring.mul(&self.m[r][k], &v[k])))
        })
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, o: &Mat3<E>) -> Mat3<E> {
        Mat3::from_fn(|r, c| ring.add(&self.m[r][c], &o.m[r][c]))
    }

    pub fn sub<R: Ring<Elem = E>>(&self, ring: &R, o: &Mat3<E>) -> Mat3<E> {
        Mat3::from_fn(|r, c| ring.sub(&self.m[r][c], &o.m[r][c]))
    }

    pub fn det<R: Ring<Elem = E>>(&self, ring: &R) -> E {
        let m = &self.m;
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
            ring.sub(&ring.mul(&m[r1][c1], &m[r2][c2]), &ring.mul(&m[r1][c2], &m[r2][c1]))
        };
        let t0 = ring.mul(&m[0][0], &minor(1, 2, 1, 2));
        let t1 = ring.mul(&m[0][1], &minor(1, 2, 0, 2));
        let t2 = ring.mul(&m[0][2], &minor(1, 2, 0, 1));
        ring.add(&ring.sub(&t0, &t1), &t2)
    }

    pub fn equals<R: Ring<Elem = E>>(&self, ring: &R, o: &Mat3<E>) -> bool {
        (0..3).all(|r| (0..3).all(|c| ring.is_zero(&ring.sub(&self.m[r][c], &o.m[r][c]))))
    }
}

/// Matrix of `v -> m v m^-1` on `sl2` in the basis
/// `v+ = [[0,1],[0,0]]`, `v0 = [[1,0],[0,-1]]`, `v- = [[0,0],[1,0]]`.
pub fn adjoint<R: Ring>(ring: &R, m: &Mat2<R::Elem>) -> Result<Mat3<R::Elem>, RepError> {
    if !m.is_unimodular(ring) {
        return Err(RepError::NotUnimodular);
    }
    Ok(adjoint_unchecked(ring, m))
}

fn adjoint_unchecked<R: Ring>(ring: &R, m: &Mat2<R::Elem>) -> Mat3<R::Elem> {
    let (a, b, c, d) = (&m.a, &m.b, &m.c, &m.d);
    let mul = |x: &R::Elem, y: &R::Elem| ring.mul(x, y);
    let two = ring.from_int(2);
    Mat3 {
        m: [
            [mul(a, a), ring.neg(&mul(&two, &mul(a, b))), ring.neg(&mul(b, b))],
            [ring.neg(&mul(a, c)), ring.add(&mul(a, d), &mul(b, c)), mul(b, d)],
            [ring.neg(&mul(c, c)), mul(&two, &mul(c, d)), mul(d, d)],
        ],
    }
}

/// Images of the generators `x`, `y` in `SL2` over a ring.
#[derive(Clone, Debug)]
pub struct RepAssignment<R: Ring> {
    pub ring: R,
    pub image_x: Mat2<R::Elem>,
    pub image_y: Mat2<R::Elem>,
    inv_x: Mat2<R::Elem>,
    inv_y: Mat2<R::Elem>,
}

impl<R: Ring> RepAssignment<R> {
    pub fn new(ring: R, image_x: Mat2<R::Elem>, image_y: Mat2<R::Elem>) -> Result<Self, RepError> {
        if !image_x.is_unimodular(&ring) || !image_y.is_unimodular(&ring) {
            return Err(RepError::NotUnimodular);
        }
        let inv_x = image_x.inverse_unimodular(&ring);
        let inv_y = image_y.inverse_unimodular(&ring);
        Ok(RepAssignment {
            ring,
            image_x,
            image_y,
            inv_x,
            inv_y,
        })
    }

    pub fn image(&self, g: Generator, inverse: bool) -> &Mat2<R::Elem> {
        match (g, inverse) {
            (Generator::X, false) => &self.image_x,
            (Generator::X, true) => &self.inv_x,
            (Generator::Y, false) => &self.image_y,
            (Generator::Y, true) => &self.inv_y,
        }
    }

    pub fn adjoint_of(&self, g: Generator, inverse: bool) -> Mat3<R::Elem> {
        adjoint_unchecked(&self.ring, self.image(g, inverse))
    }

    /// Product of generator images in word order.
    pub fn eval_word(&self, w: &Word) -> Mat2<R::Elem> {
        w.letters().iter().fold(Mat2::identity(&self.ring), |acc, l| {
            acc.mul(&self.ring, self.image(l.generator, l.is_inverse()))
        })
    }

    pub fn satisfies(&self, relator: &Word) -> bool {
        self.eval_word(relator).equals(&self.ring, &Mat2::identity(&self.ring))
    }
}

impl RepAssignment<QuotientRing> {
    /// Reduces every entry into a child branch.
    pub fn restrict(&self, branch: &ModulusBranch) -> Self {
        let ring = self.ring.restrict(branch);
        let red = |m: &Mat2<Poly>| m.map(|e| ring.reduce(e));
        RepAssignment {
            image_x: red(&self.image_x),
            image_y: red(&self.image_y),
            inv_x: red(&self.inv_x),
            inv_y: red(&self.inv_y),
            ring,
        }
    }
}

/// `X -> [[tau, 0], [0, 1/tau]]`, `Y -> [[tau, 1], [0, 1/tau]]` over `Q[tau^±1]`.
pub fn symbolic_assignment() -> RepAssignment<LaurentRing> {
    let t = LaurentPoly::t();
    let ti = LaurentPoly::t_inv();
    let x = Mat2::new(t.clone(), LaurentPoly::zero(), LaurentPoly::zero(), ti.clone());
    let y = Mat2::new(t, LaurentPoly::one(), LaurentPoly::zero(), ti);
    RepAssignment::new(LaurentRing, x, y).expect("diagonal entries are inverse units")
}

pub fn eval_word_matrix<R: Ring>(w: &Word, rep: &RepAssignment<R>) -> Mat2<R::Elem> {
    rep.eval_word(w)
}

/// Upper-right entry of the image of the family word:
/// `-j t^3 + (5j+1) t - (5j+1) t^-1 + j t^-3`.
pub fn f_upper_entry(j: u64) -> LaurentPoly {
    let j = j as i64;
    LaurentPoly::from_ints(-3, &[j, 0, -(5 * j + 1), 0, 5 * j + 1, 0, -j])
}

/// Multiplies by `±t^k` so the constant term is the lowest nonzero term and
/// the leading coefficient is positive, then clears denominators and content.
pub fn normalize_alexander(a: &LaurentPoly) -> Result<Poly, RepError> {
    if a.is_zero() {
        return Err(RepError::ZeroAlexander);
    }
    let p = a.to_poly_shifted();
    let ints = p.primitive_integer_coeffs();
    Ok(Poly::new(ints.into_iter().map(Rational::from_integer).collect()))
}

/// Alexander polynomial from the condition that the reducible assignment
/// factors through the knot group: the `(1,2)` entries of `P(xw)` and
/// `P(wy)` must agree. That difference is `Delta(tau^2)` up to a unit.
pub fn alexander_via_rep(f: TwoBridgeFraction) -> Result<Poly, RepError> {
    let pres = KnotPresentation::new(f);
    let rep = symbolic_assignment();
    let x = Word::generator(Generator::X);
    let y = Word::generator(Generator::Y);
    let xw = rep.eval_word(&x.concat(&pres.w));
    let wy = rep.eval_word(&pres.w.concat(&y));
    let condition = &xw.b - &wy.b;
    let halved = condition.halve_exponents().ok_or(RepError::OddExponent)?;
    normalize_alexander(&halved)
}

/// Alexander polynomial as the abelianized Fox derivative of the relator
/// with respect to `y`.
pub fn alexander_via_fox(f: TwoBridgeFraction) -> Result<Poly, RepError> {
    let pres = KnotPresentation::new(f);
    let mut terms: Vec<(i64, Rational)> = Vec::new();
    let mut height: i64 = 0;
    for l in pres.relator.letters() {
        if l.generator == Generator::Y {
            if l.is_inverse() {
                terms.push((height - 1, rat(-1)));
            } else {
                terms.push((height, rat(1)));
            }
        }
        height += l.sign() as i64;
    }
    normalize_alexander(&LaurentPoly::from_terms(&terms))
}

/// The reducible non-abelian assignment `x -> diag(t, 1/t)`,
/// `y -> [[t, 1], [0, 1/t]]` over `Q[t]/(h)`, after verifying that the knot
/// relator holds there.
pub fn burde_derham_assignment(
    pres: &KnotPresentation,
    branch: &ModulusBranch,
) -> Result<RepAssignment<QuotientRing>, RepError> {
    let h = branch.modulus();
    let bad = Poly::from_ints(&[0, -1, 0, 1]); // t^3 - t
    if !h.gcd(&bad)?.is_constant() {
        return Err(RepError::ExcludedEigenvalue(h.to_string()));
    }
    let ring = QuotientRing::new(branch.clone());
    let t = ring.generator();
    let t_inv = ring
        .unit_inverse(&t)
        .ok_or_else(|| RepError::ExcludedEigenvalue(h.to_string()))?;
    let x = Mat2::new(t.clone(), Poly::zero(), Poly::zero(), t_inv.clone());
    let y = Mat2::new(t, ring.one(), Poly::zero(), t_inv);
    let rep = RepAssignment::new(ring, x, y)?;
    if !rep.satisfies(&pres.relator) {
        return Err(RepError::RelatorNotSatisfied(h.to_string()));
    }
    Ok(rep)
}

/// `tau^deg * Delta(1/tau) == Delta(tau)` (up to sign for odd-degree cases).
pub fn is_reciprocal(p: &Poly) -> bool {
    let r = p.reciprocal();
    r == *p || r == -p
}

/// Value of the normalized Alexander polynomial at 1.
pub fn alexander_at_one(p: &Poly) -> Rational {
    p.eval(&Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leading_positive(p: &Poly) -> bool {
        p.leading().is_some_and(|c| c.is_positive()) && !p.coeff(0).is_zero()
    }
    use crate::algebra::laurent::LaurentRing;
    use crate::twobridge::FamilyWords;
    use num_traits::{Signed, Zero};

    fn lp(offset: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(offset, c)
    }

    fn family_delta(j: i64) -> Poly {
        Poly::from_ints(&[j, -(6 * j + 1), 10 * j + 3, -(6 * j + 1), j])
    }

    /// Coordinates of a traceless matrix in (v+, v0, v-).
    fn coords(m: &Mat2<LaurentPoly>) -> [LaurentPoly; 3] {
        [m.b.clone(), m.a.clone(), m.c.clone()]
    }

    /// Column i of Ad(m) is m v_i m^-1, expanded entrywise.
    fn adjoint_by_conjugation(m: &Mat2<LaurentPoly>) -> Mat3<LaurentPoly> {
        let r = LaurentRing;
        let (o, z) = (LaurentPoly::one(), LaurentPoly::zero());
        let basis = [
            Mat2::new(z.clone(), o.clone(), z.clone(), z.clone()),
            Mat2::new(o.clone(), z.clone(), z.clone(), -&o),
            Mat2::new(z.clone(), z.clone(), o.clone(), z.clone()),
        ];
        let inv = m.inverse_unimodular(&r);
        let cols: Vec<[LaurentPoly; 3]> = basis
            .iter()
            .map(|b| coords(&m.mul(&r, b).mul(&r, &inv)))
            .collect();
        Mat3::from_fn(|row, col| cols[col][row].clone())
    }

    #[test]
    fn adjoint_examples() {
        let r = LaurentRing;
        let t = LaurentPoly::t();
        let ti = LaurentPoly::t_inv();
        let z = LaurentPoly::zero();
        let diag = Mat2::new(t.clone(), z.clone(), z.clone(), ti.clone());
        let ad = adjoint(&r, &diag).unwrap();
        assert_eq!(ad.m[0][0], lp(2, &[1]));
        assert_eq!(ad.m[1][1], LaurentPoly::one());
        assert_eq!(ad.m[2][2], lp(-2, &[1]));
        assert!(ad.m[0][1].is_zero() && ad.m[1][0].is_zero());

        let up = Mat2::new(t.clone(), LaurentPoly::one(), z.clone(), ti.clone());
        let ad = adjoint(&r, &up).unwrap();
        let expected = Mat3 {
            m: [
                [lp(2, &[1]), lp(1, &[-2]), lp(0, &[-1])],
                [z.clone(), LaurentPoly::one(), lp(-1, &[1])],
                [z.clone(), z.clone(), lp(-2, &[1])],
            ],
        };
        assert_eq!(ad, expected);
        assert_eq!(adjoint_by_conjugation(&up), expected);

        let id = Mat2::identity(&r);
        assert_eq!(adjoint(&r, &id).unwrap(), Mat3::identity(&r));

        let bad = Mat2::new(t.clone(), z.clone(), z.clone(), t.clone());
        assert_eq!(adjoint(&r, &bad), Err(RepError::NotUnimodular));
    }

    #[test]
    fn adjoint_matches_conjugation_on_words() {
        let rep = symbolic_assignment();
        for s in ["xyX", "yyxYxy", "XXyxYYx"] {
            let m = rep.eval_word(&Word::parse(s).unwrap());
            let ad = adjoint(&LaurentRing, &m).unwrap();
            assert_eq!(ad, adjoint_by_conjugation(&m));
            assert_eq!(ad.det(&LaurentRing), LaurentPoly::one());
        }
    }

    #[test]
    fn family_word_image() {
        let rep = symbolic_assignment();
        assert_eq!(rep.eval_word(&Word::identity()), Mat2::identity(&LaurentRing));
        for j in 1..=6 {
            let w = FamilyWords::new(j).unwrap().w;
            let m = rep.eval_word(&w);
            assert_eq!(m.a, LaurentPoly::one());
            assert_eq!(m.d, LaurentPoly::one());
            assert!(m.c.is_zero());
            assert_eq!(m.b, f_upper_entry(j));
        }
    }

    #[test]
    fn f_closed_form_examples() {
        assert_eq!(f_upper_entry(1), lp(-3, &[1, 0, -6, 0, 6, 0, -1]));
        assert_eq!(f_upper_entry(2), lp(-3, &[2, 0, -11, 0, 11, 0, -2]));
        for j in 1..10 {
            let f = f_upper_entry(j);
            assert_eq!(f.invert_variable(), -&f);
        }
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_alexander(&lp(-2, &[1, -3, 1])).unwrap(), Poly::from_ints(&[1, -3, 1]));
        assert_eq!(
            normalize_alexander(&lp(0, &[-1, 7, -13, 7, -1])).unwrap(),
            family_delta(1)
        );
        assert_eq!(
            normalize_alexander(&LaurentPoly::from_poly(&family_delta(1))).unwrap(),
            family_delta(1)
        );
        assert_eq!(normalize_alexander(&LaurentPoly::zero()), Err(RepError::ZeroAlexander));
    }

    #[test]
    fn alexander_small_knots() {
        let f = |p, q| TwoBridgeFraction::new(p, q).unwrap();
        for route in [alexander_via_rep, alexander_via_fox] {
            assert_eq!(route(f(29, 17)).unwrap(), family_delta(1));
            assert_eq!(route(f(53, 31)).unwrap(), family_delta(2));
            assert_eq!(route(f(5, 2)).unwrap(), Poly::from_ints(&[1, -3, 1]));
            assert_eq!(route(f(3, 1)).unwrap(), Poly::from_ints(&[1, -1, 1]));
        }
    }

    #[test]
    fn routes_agree_and_are_reciprocal() {
        for p in (3u64..40).step_by(2) {
            for q in 1..p {
                let Ok(f) = TwoBridgeFraction::new(p, q) else { continue };
                let a = alexander_via_rep(f).unwrap();
                let b = alexander_via_fox(f).unwrap();
                assert_eq!(a, b, "{f}");
                assert!(is_reciprocal(&a), "{f}: {a}");
                assert!(leading_positive(&a));
                assert_eq!(alexander_at_one(&a).abs(), Rational::one(), "{f}");
            }
        }
    }

    #[test]
    fn burde_derham_checks_relator() {
        let pres = KnotPresentation::new(TwoBridgeFraction::new(29, 17).unwrap());
        let h = family_delta(1).substitute_tsquared();
        let branch = ModulusBranch::new(&h).unwrap();
        assert!(burde_derham_assignment(&pres, &branch).is_ok());

        let not_root = ModulusBranch::new(&Poly::from_ints(&[-2, 1])).unwrap();
        assert!(matches!(
            burde_derham_assignment(&pres, &not_root),
            Err(RepError::RelatorNotSatisfied(_))
        ));

        let pm1 = ModulusBranch::new(&Poly::from_ints(&[-1, 0, 1])).unwrap();
        assert!(matches!(
            burde_derham_assignment(&pres, &pm1),
            Err(RepError::ExcludedEigenvalue(_))
        ));

        let trefoil = KnotPresentation::new(TwoBridgeFraction::new(3, 1).unwrap());
        let h = ModulusBranch::new(&Poly::from_ints(&[1, 0, -1, 0, 1])).unwrap();
        assert!(burde_derham_assignment(&trefoil, &h).is_ok());
    }

    #[test]
    fn longitude_is_trivial_under_reducible_rep() {
        for (p, q) in [(29u64, 17u64), (5, 2), (3, 1), (7, 3), (53, 31)] {
            let f = TwoBridgeFraction::new(p, q).unwrap();
            let pres = KnotPresentation::new(f);
            let delta = alexander_via_fox(f).unwrap();
            let branch = ModulusBranch::new(&delta.substitute_tsquared()).unwrap();
            let rep = burde_derham_assignment(&pres, &branch).unwrap();
            let l = rep.eval_word(&pres.longitude);
            let id = Mat2::identity(&rep.ring);
            assert!(l.equals(&rep.ring, &id), "{f}: longitude image {l:?}");
        }
    }
}

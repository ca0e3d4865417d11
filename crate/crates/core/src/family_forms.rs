//! Closed forms for cocycles of the `[1,1,2,2,2j]` family in normal form,
//! and the two polynomial identities that force such cocycles to vanish on
//! the longitudinal filling.
//!
//! Everything here is symbolic in `t` over `Q[t^±1]`. A cocycle in normal
//! form is `z(x) = (0, alpha, beta)`, `z(y) = (0, alpha, 0)`; linearity in
//! `(alpha, beta)` lets each coordinate be stored as its two coefficients.

use thiserror::Error;

use crate::algebra::laurent::LaurentRing;
use crate::algebra::{ratio, AlgebraError, LaurentPoly, ModulusBranch, Poly, Rational};
use crate::cohomology::{eval_cocycle, CocycleValues};
use crate::rep::{adjoint, f_upper_entry, symbolic_assignment, Mat3};
use crate::twobridge::{FamilyWords, FractionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error(transparent)]
    Fraction(#[from] FractionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("the longitude identity for j = {j} differs from the closed form")]
    BetaIdentity { j: u64 },
    #[error("the relator identity for j = {j} is not a unit multiple of the closed form")]
    AlphaIdentity { j: u64 },
    #[error("cocycle coordinate {name} for j = {j} has an unexpected alpha part")]
    MixedCoordinate { j: u64, name: &'static str },
}

/// A coordinate `alpha * a + beta * b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linear {
    pub alpha: LaurentPoly,
    pub beta: LaurentPoly,
}

/// Values of a normal-form cocycle along a word, coordinatewise.
pub type LinearVec = [Linear; 3];

fn half_terms(terms: &[(i64, i64)]) -> LaurentPoly {
    let t: Vec<(i64, Rational)> = terms.iter().map(|&(e, c)| (e, ratio(c, 2))).collect();
    LaurentPoly::from_terms(&t)
}

fn ji(j: u64) -> i64 {
    i64::try_from(j).expect("family index fits in i64")
}

/// `t^3 - 5t + 5t^-1 - t^-3`.
pub fn g_entry() -> LaurentPoly {
    LaurentPoly::from_ints(-3, &[-1, 0, 5, 0, -5, 0, 1])
}

/// The closed forms: alpha part of `z(w)_+`, beta parts of `z(w)_0`,
/// `z(v)_0`, `z(w)_-`, `z(v)_-`, and the geometric sums of `Ad(u^i)` and
/// `Ad(s^i)` for `0 <= i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForms {
    pub j: u64,
    pub omega1_alpha: LaurentPoly,
    pub omega2_beta: LaurentPoly,
    pub nu2_beta: LaurentPoly,
    pub omega3_beta: LaurentPoly,
    pub nu3_beta: LaurentPoly,
    pub sum_u: Mat3<LaurentPoly>,
    pub sum_s: Mat3<LaurentPoly>,
}

pub fn family_cocycle_closed_forms(j: u64) -> Result<ClosedForms, IdentityError> {
    if j == 0 {
        return Err(FractionError::FamilyIndex.into());
    }
    let j = ji(j);
    let jj = j * j;
    let omega1_alpha = LaurentPoly::from_ints(-3, &[-2 * j, 0, 0, 0, 10 * j + 2, 0, -4 * j]);
    let omega2_beta = half_terms(&[
        (7, j * (j + 1)),
        (5, -10 * j * (j + 1)),
        (3, 35 * jj + 31 * j + 2),
        (1, -(52 * jj + 28 * j + 4)),
        (-1, j * (35 * j - 3)),
        (-3, -j * (10 * j - 6)),
        (-5, j * (j - 1)),
    ]);
    let nu2_beta = half_terms(&[
        (7, j * (j + 1)),
        (5, -10 * j * (j + 1)),
        (3, 35 * jj + 27 * j + 2),
        (1, -(52 * jj + 12 * j)),
        (-1, j * (35 * j - 7)),
        (-3, -j * (10 * j - 6)),
        (-5, j * (j - 1)),
    ]);
    let tf = &LaurentPoly::t() * &f_upper_entry(j as u64);
    let g = g_entry();
    let jr = LaurentPoly::from_ints(0, &[j]);
    let lin = g.scale(&Rational::from_integer((jj - j).into()));
    let quad = (&g * &g).scale(&(ratio(-(2 * jj * j - 3 * jj + j), 6)));
    let half_lin = g.scale(&ratio(jj - j, 2));
    let z = LaurentPoly::zero;
    let sum_u = Mat3 {
        m: [
            [jr.clone(), lin.clone(), quad.clone()],
            [z(), jr.clone(), -&half_lin],
            [z(), z(), jr.clone()],
        ],
    };
    let sum_s = Mat3 {
        m: [
            [jr.clone(), -&lin, quad],
            [z(), jr.clone(), half_lin],
            [z(), z(), jr],
        ],
    };
    Ok(ClosedForms {
        j: j as u64,
        omega1_alpha,
        omega2_beta,
        nu2_beta,
        omega3_beta: tf.clone(),
        nu3_beta: -&tf,
        sum_u,
        sum_s,
    })
}

/// The same quantities obtained by running the cocycle law along the
/// family words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputedForms {
    pub j: u64,
    /// `z(w)`.
    pub omega: LinearVec,
    /// `z(v)`.
    pub nu: LinearVec,
    /// Upper-right entry of the image of `w`.
    pub f: LaurentPoly,
    pub sum_u: Mat3<LaurentPoly>,
    pub sum_s: Mat3<LaurentPoly>,
}

impl ComputedForms {
    /// Beta part of `z(w)_+`; no closed form is claimed for it.
    pub fn h(&self) -> &LaurentPoly {
        &self.omega[0].beta
    }
}

fn normal_cocycle(alpha: i64, beta: i64) -> CocycleValues<LaurentPoly> {
    let c = |n: i64| LaurentPoly::from_ints(0, &[n]);
    CocycleValues::new([c(0), c(alpha), c(beta)], [c(0), c(alpha), c(0)])
}

fn linear_eval(word: &crate::word::Word) -> LinearVec {
    let rep = symbolic_assignment();
    let a = eval_cocycle(word, &normal_cocycle(1, 0), &rep);
    let b = eval_cocycle(word, &normal_cocycle(0, 1), &rep);
    let [a0, a1, a2] = a;
    let [b0, b1, b2] = b;
    [
        Linear { alpha: a0, beta: b0 },
        Linear { alpha: a1, beta: b1 },
        Linear { alpha: a2, beta: b2 },
    ]
}

fn geometric_sum(word: &crate::word::Word, j: u64) -> Mat3<LaurentPoly> {
    let rep = symbolic_assignment();
    let ring = &LaurentRing;
    let ad = adjoint(ring, &rep.eval_word(word)).expect("unimodular");
    let mut power = Mat3::identity(ring);
    let mut sum = Mat3::zero(ring);
    for _ in 0..j {
        sum = sum.add(ring, &power);
        power = power.mul(ring, &ad);
    }
    sum
}

pub fn family_cocycle_computed(j: u64) -> Result<ComputedForms, IdentityError> {
    let fw = FamilyWords::new(j)?;
    let f = symbolic_assignment().eval_word(&fw.w).b;
    Ok(ComputedForms {
        j,
        omega: linear_eval(&fw.w),
        nu: linear_eval(&fw.v),
        f,
        sum_u: geometric_sum(&fw.u, j),
        sum_s: geometric_sum(&fw.s, j),
    })
}

/// Outcome of comparing one closed-form component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormCheck {
    pub name: &'static str,
    pub matches: bool,
}

impl ClosedForms {
    /// Every stated component, plus the implicit claim that the `v0` and
    /// `v-` coordinates carry no alpha part.
    pub fn compare(&self, c: &ComputedForms) -> Vec<FormCheck> {
        let check = |name, matches| FormCheck { name, matches };
        vec![
            check("omega1_alpha", self.omega1_alpha == c.omega[0].alpha),
            check("omega2_beta", self.omega2_beta == c.omega[1].beta),
            check("nu2_beta", self.nu2_beta == c.nu[1].beta),
            check("omega3_beta", self.omega3_beta == c.omega[2].beta),
            check("nu3_beta", self.nu3_beta == c.nu[2].beta),
            check(
                "pure_beta",
                [&c.omega[1], &c.omega[2], &c.nu[1], &c.nu[2]]
                    .iter()
                    .all(|l| l.alpha.is_zero()),
            ),
            check("sum_u", self.sum_u == c.sum_u),
            check("sum_s", self.sum_s == c.sum_s),
        ]
    }
}

/// The two identities behind the vanishing of `H^1` on the filling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityIdentity {
    pub j: u64,
    /// Beta part of `omega2 + nu2 + f nu3`, the `v0` coordinate of `z(w v)`.
    pub beta_identity: LaurentPoly,
    /// Alpha part of `(t^2 - 1) omega1 + 2 f alpha` at `beta = 0`.
    pub alpha_identity: LaurentPoly,
    /// `(t^4 - 1)(2j t^4 - (6j+1) t^2 + 2j)`.
    pub alpha_core: Poly,
    /// `alpha_identity = unit_coeff * t^unit_shift * alpha_core`.
    pub unit_coeff: Rational,
    pub unit_shift: i64,
}

/// `(t^4 - 1)(t^4 + j (t^4 - 4t^2 + 1)^2) / t^5`.
pub fn beta_identity_closed_form(j: u64) -> LaurentPoly {
    let j = ji(j);
    let q = Poly::from_ints(&[1, 0, -4, 0, 1]);
    let inner = &Poly::from_ints(&[0, 0, 0, 0, 1]) + &(&q * &q).scale(&Rational::from_integer(j.into()));
    let num = &Poly::from_ints(&[-1, 0, 0, 0, 1]) * &inner;
    LaurentPoly::from_poly(&num).shift(-5)
}

pub fn alpha_core(j: u64) -> Poly {
    let j = ji(j);
    &Poly::from_ints(&[-1, 0, 0, 0, 1]) * &Poly::from_ints(&[2 * j, 0, -(6 * j + 1), 0, 2 * j])
}

pub fn rigidity_identity(j: u64) -> Result<RigidityIdentity, IdentityError> {
    let c = family_cocycle_computed(j)?;
    for (name, l) in [("omega2", &c.omega[1]), ("nu2", &c.nu[1]), ("nu3", &c.nu[2])] {
        if !l.alpha.is_zero() {
            return Err(IdentityError::MixedCoordinate { j, name });
        }
    }
    let beta_identity = &(&c.omega[1].beta + &c.nu[1].beta) + &(&c.f * &c.nu[2].beta);
    if beta_identity != beta_identity_closed_form(j) {
        return Err(IdentityError::BetaIdentity { j });
    }

    let t2m1 = LaurentPoly::from_ints(0, &[-1, 0, 1]);
    let two_f = c.f.scale(&Rational::from_integer(2.into()));
    let alpha_identity = &(&t2m1 * &c.omega[0].alpha) + &two_f;
    let core = alpha_core(j);
    let (unit_coeff, unit_shift) = alpha_identity
        .unit_ratio(&LaurentPoly::from_poly(&core))
        .ok_or(IdentityError::AlphaIdentity { j })?;
    Ok(RigidityIdentity {
        j,
        beta_identity,
        alpha_identity,
        alpha_core: core,
        unit_coeff,
        unit_shift,
    })
}

/// Each identity forces its coefficient to vanish at every root of the
/// branch when its numerator is coprime to the modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VanishingSteps {
    pub beta_forced_zero: bool,
    pub alpha_forced_zero: bool,
}

impl VanishingSteps {
    pub fn cocycle_forced_zero(&self) -> bool {
        self.beta_forced_zero && self.alpha_forced_zero
    }
}

pub fn vanishing_steps(id: &RigidityIdentity, branch: &ModulusBranch) -> Result<VanishingSteps, IdentityError> {
    let coprime = |num: &LaurentPoly| -> Result<bool, AlgebraError> {
        Ok(num.to_poly_shifted().gcd(branch.modulus())?.is_constant())
    };
    Ok(VanishingSteps {
        beta_forced_zero: coprime(&id.beta_identity)?,
        alpha_forced_zero: coprime(&id.alpha_identity)?,
    })
}

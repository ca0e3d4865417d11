//! Root analysis of the Alexander polynomial, per-branch rigidity reports,
//! and the final certificate for a two-bridge knot.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::sturm::refine;
use crate::algebra::{
    isolate_real_roots, sturm_count, AlgebraError, Bound, ModulusBranch, Poly, Rational,
    RootInterval, SplitRecord,
};
use crate::cohomology::{cohomology_dims, CohomologyDims, CohomologyError};
use crate::rep::{alexander_via_fox, alexander_via_rep, burde_derham_assignment, RepError};
use crate::twobridge::{FractionError, KnotPresentation, TwoBridgeFraction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error(transparent)]
    Fraction(#[from] FractionError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("Alexander polynomial routes disagree: representation gives {rep}, Fox calculus gives {fox}")]
    AlexanderMismatch { rep: String, fox: String },
    #[error("coefficient {0} does not fit in 64 bits")]
    CoefficientOverflow(String),
}

/// Integer-normalized square-free factor of `Delta` with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquarefreeFactor {
    pub factor: Poly,
    pub multiplicity: usize,
}

/// A positive real root of `Delta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositiveRoot {
    pub interval: RootInterval,
    /// Index into `RootAnalysis::factors`.
    pub factor_index: usize,
    pub multiplicity: usize,
    pub is_one: bool,
}

impl PositiveRoot {
    /// Simple, positive, and different from 1.
    pub fn qualifies(&self) -> bool {
        self.multiplicity == 1 && !self.is_one
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootAnalysis {
    pub factors: Vec<SquarefreeFactor>,
    pub positive_roots: Vec<PositiveRoot>,
    pub simple_positive_roots: usize,
    pub one_is_root: bool,
}

fn normalized(p: &Poly) -> Poly {
    Poly::new(p.primitive_integer_coeffs().into_iter().map(Rational::from_integer).collect())
}

/// Square-free decomposition and classification of positive real roots.
pub fn analyze_roots(delta: &Poly) -> Result<RootAnalysis, CertifyError> {
    if delta.is_zero() {
        return Err(AlgebraError::ZeroPolynomial.into());
    }
    let one = Rational::one();
    let factors: Vec<SquarefreeFactor> = delta
        .squarefree_decomposition()?
        .into_iter()
        .map(|(f, m)| SquarefreeFactor {
            factor: normalized(&f),
            multiplicity: m,
        })
        .collect();
    let mut positive_roots = Vec::new();
    let mut simple_positive_roots = 0;
    for (idx, sf) in factors.iter().enumerate() {
        // a root at 0 is not positive; drop it so Sturm endpoints at 0 are legal
        let f = if sf.factor.eval(&Rational::zero()).is_zero() {
            sf.factor.exact_div(&Poly::x())
        } else {
            sf.factor.clone()
        };
        let roots: Vec<RootInterval> = isolate_real_roots(&f)
            .into_iter()
            .map(|iv| shrink_off_zero(&f, iv))
            .filter(|iv| iv.lo.is_positive() || iv.lo.is_zero())
            .collect();
        if !f.is_constant() {
            let count = sturm_count(&f, &Bound::At(Rational::zero()), &Bound::PosInfinity)?;
            debug_assert_eq!(count, roots.len());
        }
        for iv in roots {
            let is_one = f.eval(&one).is_zero() && iv.contains(&one);
            if sf.multiplicity == 1 && !is_one {
                simple_positive_roots += 1;
            }
            positive_roots.push(PositiveRoot {
                interval: iv,
                factor_index: idx,
                multiplicity: sf.multiplicity,
                is_one,
            });
        }
    }
    positive_roots.sort_by(|a, b| a.interval.lo.cmp(&b.interval.lo));
    Ok(RootAnalysis {
        one_is_root: delta.eval(&one).is_zero(),
        factors,
        positive_roots,
        simple_positive_roots,
    })
}

/// Refines an interval straddling 0 until it lies on one side; `f(0) != 0`.
fn shrink_off_zero(f: &Poly, iv: RootInterval) -> RootInterval {
    let zero = Rational::zero();
    let mut iv = iv;
    while iv.contains(&zero) {
        let w = iv.width() / Rational::from_integer(2.into());
        iv = refine(f, &iv, &w);
    }
    iv
}

/// `h(t) h(-t)` is even; its `t^2 -> xi` image, gcd'ed with the parent
/// factor, is the polynomial in `xi` whose roots this branch covers.
pub fn xi_factor_of(branch: &Poly, parent: &Poly) -> Result<Poly, AlgebraError> {
    let neg: Vec<Rational> = branch
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    let even = branch * &Poly::new(neg);
    let halved: Vec<Rational> = even.coeffs().iter().step_by(2).cloned().collect();
    let g = Poly::new(halved).gcd(parent)?;
    Ok(normalized(&g))
}

/// Certifies `xi + 2 + 1/xi > 4` for `xi = t^2` at one real root `t` by
/// refining the interval away from `0` and `±1`, then bounding `x + 1/x`
/// below on the image of the interval under squaring.
pub fn meridian_trace_check(h: &Poly, t_root: &RootInterval) -> bool {
    let special = [Rational::zero(), Rational::one(), -Rational::one()];
    assert!(
        special.iter().all(|s| !h.eval(s).is_zero()),
        "branches meeting t = 0 or t^2 = 1 are excluded before this check"
    );
    let mut iv = t_root.clone();
    while special.iter().any(|s| &iv.lo <= s && s <= &iv.hi) {
        let w = iv.width() / Rational::from_integer(2.into());
        iv = refine(h, &iv, &w);
    }
    let (a, b) = if iv.lo.is_positive() {
        (iv.lo.clone(), iv.hi.clone())
    } else {
        (iv.hi.abs(), iv.lo.abs())
    };
    let (lo, hi) = (&a * &a, &b * &b);
    let x_plus_inv = |x: &Rational| x + x.recip();
    let min = std::cmp::min(x_plus_inv(&lo), x_plus_inv(&hi));
    min + Rational::from_integer(2.into()) > Rational::from_integer(4.into())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootBranchReport {
    /// Leaf modulus scaled to primitive integer coefficients.
    pub modulus_in_t: Poly,
    /// Split history, each polynomial scaled like `modulus_in_t`.
    pub lineage: Vec<SplitRecord>,
    /// Factor of `Delta` whose roots are `t^2` for `t` a root of the modulus.
    pub xi_factor: Poly,
    pub multiplicity_in_delta: usize,
    pub real_root_intervals: Vec<RootInterval>,
    pub contains_pm1: bool,
    pub dims_knot: CohomologyDims,
    pub dims_filled: CohomologyDims,
    pub rigid: bool,
    /// One flag per entry of `real_root_intervals`.
    pub meridian_trace_exceeds_4: Vec<bool>,
}

/// The branch `f(t^2)` of a square-free factor `f`, with `t(t^2 - 1)` removed.
pub fn admissible_branch(f: &Poly) -> Result<Option<ModulusBranch>, AlgebraError> {
    let h = f.substitute_tsquared();
    let bad = Poly::from_ints(&[0, -1, 0, 1]);
    let h = h.exact_div(&h.gcd(&bad)?);
    if h.degree().unwrap_or(0) == 0 {
        return Ok(None);
    }
    ModulusBranch::new(&h).map(Some)
}

fn rigidity_reports(
    pres: &KnotPresentation,
    parent: &SquarefreeFactor,
    branch: &ModulusBranch,
) -> Result<Vec<RootBranchReport>, CertifyError> {
    let rep = burde_derham_assignment(pres, branch)?;
    let mut reports = Vec::new();
    for knot in cohomology_dims(&pres.knot_relators(), &rep)? {
        let rep_k = rep.restrict(&knot.branch);
        for filled in cohomology_dims(&pres.filled_relators(), &rep_k)? {
            let leaf = &filled.branch;
            let h = leaf.modulus();
            let real = isolate_real_roots(h);
            let trace = real.iter().map(|iv| meridian_trace_check(h, iv)).collect();
            reports.push(RootBranchReport {
                modulus_in_t: normalized(h),
                lineage: leaf
                    .lineage()
                    .iter()
                    .map(|r| SplitRecord {
                        parent: normalized(&r.parent),
                        cofactor: normalized(&r.cofactor),
                    })
                    .collect(),
                xi_factor: xi_factor_of(h, &parent.factor)?,
                multiplicity_in_delta: parent.multiplicity,
                real_root_intervals: real,
                contains_pm1: !h.gcd(&Poly::from_ints(&[-1, 0, 1]))?.is_constant(),
                dims_knot: knot.dims,
                dims_filled: filled.dims,
                rigid: filled.dims.dim_h1 == 0,
                meridian_trace_exceeds_4: trace,
            });
        }
    }
    Ok(reports)
}

/// Reports for one admissible branch of `f`, one per leaf of the splitting.
pub fn check_rigidity(
    f: TwoBridgeFraction,
    branch: &ModulusBranch,
) -> Result<Vec<RootBranchReport>, CertifyError> {
    let pres = KnotPresentation::new(f);
    let delta = alexander_via_rep(f)?;
    let analysis = analyze_roots(&delta)?;
    let parent = analysis
        .factors
        .iter()
        .find(|sf| !xi_factor_of(branch.modulus(), &sf.factor).map_or(true, |g| g.is_constant()))
        .cloned()
        .ok_or_else(|| RepError::RelatorNotSatisfied(branch.modulus().to_string()))?;
    rigidity_reports(&pres, &parent, branch)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Applies,
    InapplicableNoRoot,
    InapplicableNotRigid,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Applies => "APPLIES",
            Verdict::InapplicableNoRoot => "INAPPLICABLE_NO_ROOT",
            Verdict::InapplicableNotRigid => "INAPPLICABLE_NOT_RIGID",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumption {
    pub name: String,
    pub holds: bool,
    pub basis: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QualifyingRoot {
    /// Isolating interval for `xi`.
    pub interval: RootInterval,
    pub xi_factor: Poly,
    pub rigid: bool,
    pub meridian_trace_exceeds_4: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub fraction: TwoBridgeFraction,
    /// Integer coefficients, constant term first.
    pub alexander: Vec<i64>,
    pub qualifying_roots: usize,
    pub all_qualifying_rigid: bool,
    pub roots: Vec<QualifyingRoot>,
    pub verdict: Verdict,
    pub assumptions: Vec<Assumption>,
}

/// Everything computed for one knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certification {
    pub presentation: KnotPresentation,
    pub alexander: Poly,
    pub analysis: RootAnalysis,
    pub branches: Vec<RootBranchReport>,
    pub certificate: Certificate,
}

pub fn integer_coeffs(p: &Poly) -> Result<Vec<i64>, CertifyError> {
    p.coeffs()
        .iter()
        .map(|c| {
            let n = c.to_integer();
            i64::try_from(&n).map_err(|_| CertifyError::CoefficientOverflow(n.to_string()))
        })
        .collect()
}

/// Both Alexander routes, cross-checked.
pub fn checked_alexander(f: TwoBridgeFraction) -> Result<Poly, CertifyError> {
    let rep = alexander_via_rep(f)?;
    let fox = alexander_via_fox(f)?;
    if rep != fox {
        return Err(CertifyError::AlexanderMismatch {
            rep: rep.to_string(),
            fox: fox.to_string(),
        });
    }
    Ok(rep)
}

/// Runs the full pipeline. Branches are processed with rayon in the
/// current pool; results keep factor order.
pub fn certify(f: TwoBridgeFraction) -> Result<Certification, CertifyError> {
    let pres = KnotPresentation::new(f);
    let alexander = checked_alexander(f)?;
    let analysis = analyze_roots(&alexander)?;

    let per_factor: Vec<Result<Vec<RootBranchReport>, CertifyError>> = analysis
        .factors
        .par_iter()
        .map(|sf| match admissible_branch(&sf.factor)? {
            Some(branch) => rigidity_reports(&pres, sf, &branch),
            None => Ok(Vec::new()),
        })
        .collect();
    let mut branches = Vec::new();
    for r in per_factor {
        branches.extend(r?);
    }

    let mut roots = Vec::new();
    for pr in analysis.positive_roots.iter().filter(|r| r.qualifies()) {
        let covering: Vec<&RootBranchReport> = branches
            .iter()
            .filter(|b| {
                !b.xi_factor.is_constant()
                    && sturm_count(&b.xi_factor, &Bound::At(pr.interval.lo.clone()), &Bound::At(pr.interval.hi.clone()))
                        .is_ok_and(|n| n > 0)
            })
            .collect();
        roots.push(QualifyingRoot {
            interval: pr.interval.clone(),
            xi_factor: analysis.factors[pr.factor_index].factor.clone(),
            rigid: !covering.is_empty() && covering.iter().all(|b| b.rigid),
            meridian_trace_exceeds_4: covering
                .iter()
                .all(|b| b.meridian_trace_exceeds_4.iter().all(|&ok| ok)),
        });
    }

    let qualifying_roots = roots.len();
    let any_rigid = roots.iter().any(|r| r.rigid);
    let verdict = if qualifying_roots == 0 {
        Verdict::InapplicableNoRoot
    } else if any_rigid {
        Verdict::Applies
    } else {
        Verdict::InapplicableNotRigid
    };
    let certificate = Certificate {
        fraction: f,
        alexander: integer_coeffs(&alexander)?,
        qualifying_roots,
        all_qualifying_rigid: qualifying_roots > 0 && roots.iter().all(|r| r.rigid),
        roots,
        verdict,
        assumptions: vec![Assumption {
            name: "irreducible exterior".into(),
            holds: true,
            basis: "two-bridge knot exteriors are irreducible; not computed".into(),
        }],
    };
    Ok(Certification {
        presentation: pres,
        alexander,
        analysis,
        branches,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn root_analysis_examples() {
        let a = analyze_roots(&p(&[1, -7, 13, -7, 1])).unwrap();
        assert_eq!(a.simple_positive_roots, 4);
        assert!(!a.one_is_root);
        assert_eq!(a.factors.len(), 1);

        let a = analyze_roots(&p(&[1, -1, 1])).unwrap();
        assert_eq!(a.simple_positive_roots, 0);
        assert!(a.positive_roots.is_empty());

        // (t - 2)^2 (t - 3)
        let f = &(&p(&[-2, 1]) * &p(&[-2, 1])) * &p(&[-3, 1]);
        let a = analyze_roots(&f).unwrap();
        assert_eq!(a.simple_positive_roots, 1);
        let mults: Vec<usize> = a.positive_roots.iter().map(|r| r.multiplicity).collect();
        assert_eq!(mults, vec![2, 1]);
        assert!(a.positive_roots[0].interval.contains(&rat(2)));
        assert!(a.positive_roots[1].interval.contains(&rat(3)));

        // a root at 1 never qualifies
        let a = analyze_roots(&(&p(&[-1, 1]) * &p(&[1, -3, 1]))).unwrap();
        assert!(a.one_is_root);
        assert_eq!(a.simple_positive_roots, 2);
        assert_eq!(a.positive_roots.iter().filter(|r| r.is_one).count(), 1);

        // negative roots are ignored
        let a = analyze_roots(&p(&[2, 3, 1])).unwrap();
        assert_eq!(a.simple_positive_roots, 0);
    }

    #[test]
    fn xi_factor_recovers_parent() {
        let d = p(&[1, -7, 13, -7, 1]);
        let half = p(&[1, 1, -3, -1, 1]);
        assert_eq!(xi_factor_of(&half, &d).unwrap(), d);
        assert_eq!(xi_factor_of(&d.substitute_tsquared(), &d).unwrap(), d);
        assert!(xi_factor_of(&p(&[-5, 1]), &d).unwrap().is_constant());
    }

    #[test]
    fn meridian_trace() {
        let h = p(&[1, -3, 1]).substitute_tsquared();
        for iv in isolate_real_roots(&h) {
            assert!(meridian_trace_check(&h, &iv));
        }
    }

    #[test]
    #[should_panic(expected = "excluded")]
    fn meridian_trace_rejects_unit_root() {
        let h = p(&[-1, 0, 1]);
        let iv = isolate_real_roots(&h)[0].clone();
        meridian_trace_check(&h, &iv);
    }

    #[test]
    fn admissible_branches() {
        let b = admissible_branch(&p(&[1, -7, 13, -7, 1])).unwrap().unwrap();
        assert_eq!(b.degree(), 8);
        assert!(admissible_branch(&p(&[-1, 1])).unwrap().is_none());
        let b = admissible_branch(&p(&[-2, 1])).unwrap().unwrap();
        assert_eq!(b.modulus(), &p(&[-2, 0, 1]));
    }

    #[test]
    fn certify_small_knots() {
        let c = certify(TwoBridgeFraction::new(29, 17).unwrap()).unwrap();
        assert_eq!(c.certificate.verdict, Verdict::Applies);
        assert_eq!(c.certificate.qualifying_roots, 4);
        assert!(c.certificate.all_qualifying_rigid);
        assert!(c.certificate.roots.iter().all(|r| r.meridian_trace_exceeds_4));
        for b in &c.branches {
            assert_eq!(b.dims_knot.dim_h1, 1);
            assert_eq!(b.dims_filled.dim_h1, 0);
            assert!(!b.contains_pm1);
        }

        let c = certify(TwoBridgeFraction::new(3, 1).unwrap()).unwrap();
        assert_eq!(c.certificate.verdict, Verdict::InapplicableNoRoot);
        assert_eq!(c.certificate.alexander, vec![1, -1, 1]);
    }
}

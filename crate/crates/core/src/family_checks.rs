//! The full battery of exact checks for the `[1,1,2,2,2j]` family, one
//! item per claim per `j`.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, sturm_count, Bound, Poly};
use crate::certify::{admissible_branch, checked_alexander};
use crate::cohomology::{cohomology_dims, CohomologyDims};
use crate::family_forms::{
    family_cocycle_closed_forms, family_cocycle_computed, rigidity_identity, vanishing_steps,
};
use crate::rep::{alexander_via_fox, alexander_via_rep, burde_derham_assignment};
use crate::twobridge::{family_parity_is_periodic, FamilyWords, KnotPresentation, TwoBridgeFraction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    FamilyWord,
    AlexanderFormula,
    RootCount,
    CocycleClosedForms,
    RigidityIdentity,
    Cohomology,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::FamilyWord,
        CheckKind::AlexanderFormula,
        CheckKind::RootCount,
        CheckKind::CocycleClosedForms,
        CheckKind::RigidityIdentity,
        CheckKind::Cohomology,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            CheckKind::FamilyWord => "family-word",
            CheckKind::AlexanderFormula => "alexander-formula",
            CheckKind::RootCount => "root-count",
            CheckKind::CocycleClosedForms => "cocycle-closed-forms",
            CheckKind::RigidityIdentity => "rigidity-identity",
            CheckKind::Cohomology => "cohomology",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub j: u64,
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: String,
}

/// `j t^4 - (6j+1) t^3 + (10j+3) t^2 - (6j+1) t + j`.
pub fn family_alexander(j: u64) -> Poly {
    let j = j as i64;
    Poly::from_ints(&[j, -(6 * j + 1), 10 * j + 3, -(6 * j + 1), j])
}

fn item(j: u64, kind: CheckKind, result: Result<(), String>) -> CheckItem {
    let (passed, detail) = match result {
        Ok(()) => (true, String::new()),
        Err(e) => (false, e),
    };
    CheckItem { j, kind, passed, detail }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn check_family_word(j: u64) -> Result<(), String> {
    let fw = FamilyWords::new(j).map_err(|e| e.to_string())?;
    let f = TwoBridgeFraction::family(j).map_err(|e| e.to_string())?;
    let pres = KnotPresentation::new(f);
    ensure(fw.w == pres.w, || format!("w differs from the Riley word: {} vs {}", fw.w, pres.w))?;
    ensure(fw.v == pres.v, || "v differs from w spelled backwards".into())?;
    ensure(family_parity_is_periodic(j), || "parity of floor(iq/p) is not 24-periodic".into())?;
    ensure(pres.longitude_correction() == 0, || "longitude needs a meridian correction".into())
}

pub fn check_alexander_formula(j: u64) -> Result<(), String> {
    let f = TwoBridgeFraction::family(j).map_err(|e| e.to_string())?;
    let expected = family_alexander(j);
    let rep = alexander_via_rep(f).map_err(|e| e.to_string())?;
    let fox = alexander_via_fox(f).map_err(|e| e.to_string())?;
    ensure(rep == expected, || format!("representation route gives {rep}"))?;
    ensure(fox == expected, || format!("Fox route gives {fox}"))
}

pub fn check_root_count(j: u64) -> Result<(), String> {
    let d = family_alexander(j);
    let count = |lo: Bound, hi: Bound| sturm_count(&d, &lo, &hi).map_err(|e| e.to_string());
    let inner = count(Bound::At(rat(0)), Bound::At(rat(5)))?;
    let outer = count(Bound::At(rat(5)), Bound::PosInfinity)?;
    ensure(inner == 4, || format!("{inner} roots in (0, 5)"))?;
    ensure(outer == 0, || format!("{outer} roots in (5, inf)"))?;
    let sqf = d.squarefree_decomposition().map_err(|e| e.to_string())?;
    ensure(sqf.iter().all(|(_, m)| *m == 1), || "repeated factor".into())?;
    ensure(d.eval(&rat(1)).is_one(), || format!("Delta(1) = {}", d.eval(&rat(1))))
}

pub fn check_cocycle_closed_forms(j: u64) -> Result<(), String> {
    let closed = family_cocycle_closed_forms(j).map_err(|e| e.to_string())?;
    let computed = family_cocycle_computed(j).map_err(|e| e.to_string())?;
    let bad: Vec<&str> = closed
        .compare(&computed)
        .into_iter()
        .filter(|c| !c.matches)
        .map(|c| c.name)
        .collect();
    ensure(bad.is_empty(), || format!("mismatched: {}", bad.join(", ")))
}

pub fn check_rigidity_identity(j: u64) -> Result<(), String> {
    let id = rigidity_identity(j).map_err(|e| e.to_string())?;
    ensure(id.unit_coeff == rat(-2) && id.unit_shift == -3, || {
        format!("alpha identity unit is {} t^{}", id.unit_coeff, id.unit_shift)
    })?;
    ensure(id.beta_identity.eval(&rat(1)).is_ok_and(|v| v.is_zero()), || "beta identity nonzero at t = 1".into())?;
    let branch = admissible_branch(&family_alexander(j))
        .map_err(|e| e.to_string())?
        .ok_or("no admissible branch")?;
    let steps = vanishing_steps(&id, &branch).map_err(|e| e.to_string())?;
    ensure(steps.beta_forced_zero, || "beta identity shares a root with the branch".into())?;
    ensure(steps.alpha_forced_zero, || "alpha identity shares a root with the branch".into())
}

/// `H^1 = 1` for the knot group and `H^1 = 0` for the filling on every leaf.
pub fn family_cohomology(j: u64) -> Result<Vec<(CohomologyDims, CohomologyDims)>, String> {
    let f = TwoBridgeFraction::family(j).map_err(|e| e.to_string())?;
    let pres = KnotPresentation::new(f);
    let delta = checked_alexander(f).map_err(|e| e.to_string())?;
    let branch = admissible_branch(&delta)
        .map_err(|e| e.to_string())?
        .ok_or("no admissible branch")?;
    let rep = burde_derham_assignment(&pres, &branch).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for knot in cohomology_dims(&pres.knot_relators(), &rep).map_err(|e| e.to_string())? {
        let r = rep.restrict(&knot.branch);
        for filled in cohomology_dims(&pres.filled_relators(), &r).map_err(|e| e.to_string())? {
            out.push((knot.dims, filled.dims));
        }
    }
    Ok(out)
}

pub fn check_cohomology(j: u64) -> Result<(), String> {
    let expected_knot = CohomologyDims::new(4, 0);
    for (k, f) in family_cohomology(j)? {
        ensure(k == expected_knot, || format!("knot group dims {k:?}"))?;
        ensure(f.dim_h0 == 0 && f.dim_b1 == 3 && f.dim_h1 == 0, || format!("filled dims {f:?}"))?;
    }
    Ok(())
}

pub fn run_check(j: u64, kind: CheckKind) -> CheckItem {
    let r = match kind {
        CheckKind::FamilyWord => check_family_word(j),
        CheckKind::AlexanderFormula => check_alexander_formula(j),
        CheckKind::RootCount => check_root_count(j),
        CheckKind::CocycleClosedForms => check_cocycle_closed_forms(j),
        CheckKind::RigidityIdentity => check_rigidity_identity(j),
        CheckKind::Cohomology => check_cohomology(j),
    };
    item(j, kind, r)
}

/// Every check for `j = 1..=j_max`, in `(j, kind)` order.
pub fn run_family_checks(j_max: u64) -> Vec<CheckItem> {
    let jobs: Vec<(u64, CheckKind)> = (1..=j_max)
        .flat_map(|j| CheckKind::ALL.into_iter().map(move |k| (j, k)))
        .collect();
    jobs.par_iter().map(|&(j, k)| run_check(j, k)).collect()
}

//! Group cohomology with coefficients in `sl2` twisted by the adjoint action:
//! cocycles along words, relator systems, dimensions of `Z^1`, `B^1`, `H^0`,
//! `H^1` per branch, and the normal form of a cocycle at a reducible
//! representation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{nullspace, ModulusBranch, Matrix, Poly, QuotientRing, Ring};
use crate::rep::{Mat2, Mat3, RepAssignment, Vec3};
use crate::word::{Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("a coboundary fails the relator system over Q[t]/({0})")]
    CoboundaryNotCocycle(String),
    #[error("normal form needs t^2 - 1 and t to be units; modulus {0} shares a root with t(t^2 - 1)")]
    DegenerateEigenvalue(String),
    #[error("normal form is only defined for the upper-triangular reducible assignment")]
    UnsupportedAssignment,
}

/// Values of a cocycle on the generators, in coordinates `(v+, v0, v-)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleValues<E> {
    pub z_x: Vec3<E>,
    pub z_y: Vec3<E>,
}

impl<E: Clone> CocycleValues<E> {
    pub fn new(z_x: Vec3<E>, z_y: Vec3<E>) -> Self {
        CocycleValues { z_x, z_y }
    }

    /// From the column convention `(z_x, z_y)` of a relator system.
    pub fn from_flat(v: &[E]) -> Self {
        assert_eq!(v.len(), 6, "cocycle vectors have 6 coordinates");
        CocycleValues {
            z_x: [v[0].clone(), v[1].clone(), v[2].clone()],
            z_y: [v[3].clone(), v[4].clone(), v[5].clone()],
        }
    }

    pub fn to_flat(&self) -> Vec<E> {
        self.z_x.iter().chain(self.z_y.iter()).cloned().collect()
    }

    pub fn value(&self, g: Generator) -> &Vec3<E> {
        match g {
            Generator::X => &self.z_x,
            Generator::Y => &self.z_y,
        }
    }

    pub fn zero<R: Ring<Elem = E>>(ring: &R) -> Self {
        let z = || [ring.zero(), ring.zero(), ring.zero()];
        CocycleValues { z_x: z(), z_y: z() }
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Self {
        CocycleValues {
            z_x: add3(ring, &self.z_x, &o.z_x),
            z_y: add3(ring, &self.z_y, &o.z_y),
        }
    }
}

fn add3<R: Ring>(ring: &R, a: &Vec3<R::Elem>, b: &Vec3<R::Elem>) -> Vec3<R::Elem> {
    std::array::from_fn(|i| ring.add(&a[i], &b[i]))
}

fn neg3<R: Ring>(ring: &R, a: &Vec3<R::Elem>) -> Vec3<R::Elem> {
    std::array::from_fn(|i| ring.neg(&a[i]))
}

/// Extends `z` along `w` by `z(ab) = z(a) + a.z(b)` and
/// `z(g^-1) = -g^-1.z(g)`.
pub fn eval_cocycle<R: Ring>(
    w: &Word,
    z: &CocycleValues<R::Elem>,
    rep: &RepAssignment<R>,
) -> Vec3<R::Elem> {
    let ring = &rep.ring;
    let mut acc: Vec3<R::Elem> = [ring.zero(), ring.zero(), ring.zero()];
    let mut prefix = Mat2::identity(ring);
    for l in w.letters() {
        let zg = z.value(l.generator);
        let step = if l.is_inverse() {
            neg3(ring, &rep.adjoint_of(l.generator, true).apply(ring, zg))
        } else {
            zg.clone()
        };
        let ad = crate::rep::adjoint(ring, &prefix).expect("prefix products stay unimodular");
        acc = add3(ring, &acc, &ad.apply(ring, &step));
        prefix = prefix.mul(ring, rep.image(l.generator, l.is_inverse()));
    }
    acc
}

/// The linear map `(z_x, z_y) -> z(w)` as two 3x3 blocks (Fox
/// derivatives pushed through the adjoint action).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoxJacobian<E> {
    pub d_x: Mat3<E>,
    pub d_y: Mat3<E>,
}

pub fn fox_jacobian<R: Ring>(w: &Word, rep: &RepAssignment<R>) -> FoxJacobian<R::Elem> {
    let ring = &rep.ring;
    let mut d_x = Mat3::zero(ring);
    let mut d_y = Mat3::zero(ring);
    let mut prefix = Mat2::identity(ring);
    for l in w.letters() {
        let target = match l.generator {
            Generator::X => &mut d_x,
            Generator::Y => &mut d_y,
        };
        if l.is_inverse() {
            // -Ad(P g^-1) z_g
            prefix = prefix.mul(ring, rep.image(l.generator, true));
            let ad = crate::rep::adjoint(ring, &prefix).expect("unimodular");
            *target = target.sub(ring, &ad);
        } else {
            let ad = crate::rep::adjoint(ring, &prefix).expect("unimodular");
            *target = target.add(ring, &ad);
            prefix = prefix.mul(ring, rep.image(l.generator, false));
        }
    }
    FoxJacobian { d_x, d_y }
}

/// Stacked `3 x 6` blocks, one per relator; columns are `(z_x, z_y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorSystem<E> {
    pub matrix: Matrix<E>,
}

pub fn relator_system<R: Ring>(relators: &[Word], rep: &RepAssignment<R>) -> RelatorSystem<R::Elem> {
    let blocks: Vec<FoxJacobian<R::Elem>> = relators.iter().map(|r| fox_jacobian(r, rep)).collect();
    let matrix = Matrix::from_fn(3 * blocks.len(), 6, |row, col| {
        let b = &blocks[row / 3];
        let m = if col < 3 { &b.d_x } else { &b.d_y };
        m.m[row % 3][col % 3].clone()
    });
    RelatorSystem { matrix }
}

/// `g -> (Ad(g) - 1) v` on the generators.
pub fn coboundary<R: Ring>(v: &Vec3<R::Elem>, rep: &RepAssignment<R>) -> CocycleValues<R::Elem> {
    let ring = &rep.ring;
    let id = Mat3::identity(ring);
    let dx = rep.adjoint_of(Generator::X, false).sub(ring, &id);
    let dy = rep.adjoint_of(Generator::Y, false).sub(ring, &id);
    CocycleValues {
        z_x: dx.apply(ring, v),
        z_y: dy.apply(ring, v),
    }
}

/// `[Ad(x) - 1; Ad(y) - 1]`, whose kernel is `H^0`.
pub fn fixed_space_system<R: Ring>(rep: &RepAssignment<R>) -> Matrix<R::Elem> {
    let ring = &rep.ring;
    let id = Mat3::identity(ring);
    let dx = rep.adjoint_of(Generator::X, false).sub(ring, &id);
    let dy = rep.adjoint_of(Generator::Y, false).sub(ring, &id);
    Matrix::from_fn(6, 3, |r, c| if r < 3 { dx.m[r][c].clone() } else { dy.m[r - 3][c].clone() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyDims {
    pub dim_z1: usize,
    pub dim_b1: usize,
    pub dim_h0: usize,
    pub dim_h1: usize,
}

impl CohomologyDims {
    pub fn new(dim_z1: usize, dim_h0: usize) -> Self {
        let dim_b1 = 3 - dim_h0;
        CohomologyDims {
            dim_z1,
            dim_b1,
            dim_h0,
            dim_h1: dim_z1 - dim_b1,
        }
    }
}

/// Dimensions valid at every root of `branch`, with a cocycle basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchCohomology {
    pub branch: ModulusBranch,
    pub dims: CohomologyDims,
    pub relator_rank: usize,
    pub cocycle_basis: Vec<CocycleValues<Poly>>,
}

/// Splits the representation's branch as needed so that `Z^1` and `H^0`
/// have constant dimension on each leaf, and checks `B^1 ⊆ Z^1` there.
pub fn cohomology_dims(
    relators: &[Word],
    rep: &RepAssignment<QuotientRing>,
) -> Result<Vec<BranchCohomology>, CohomologyError> {
    let system = relator_system(relators, rep);
    let mut out = Vec::new();
    for z in nullspace(&rep.ring, &system.matrix) {
        let rep_z = rep.restrict(&z.branch);
        for h0 in nullspace(&rep_z.ring, &fixed_space_system(&rep_z)) {
            let leaf = rep_z.restrict(&h0.branch);
            let ring = &leaf.ring;
            for i in 0..3 {
                let mut v = [ring.zero(), ring.zero(), ring.zero()];
                v[i] = ring.one();
                let d = coboundary(&v, &leaf).to_flat();
                if !system.matrix.mul_vec(ring, &d).iter().all(|e| ring.is_zero(e)) {
                    return Err(CohomologyError::CoboundaryNotCocycle(h0.branch.modulus().to_string()));
                }
            }
            let cocycle_basis = z
                .basis
                .iter()
                .map(|v| CocycleValues::from_flat(&v.iter().map(|e| ring.reduce(e)).collect::<Vec<_>>()))
                .collect();
            out.push(BranchCohomology {
                branch: h0.branch.clone(),
                dims: CohomologyDims::new(z.dim, h0.dim),
                relator_rank: z.rank,
                cocycle_basis,
            });
        }
    }
    out.sort_by(|a, b| a.branch.modulus().canonical_cmp(b.branch.modulus()));
    Ok(out)
}

/// A cocycle moved by a coboundary into the shape
/// `z(x) = (0, alpha, beta)`, `z(y) = (0, delta, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub values: CocycleValues<Poly>,
    /// `v` with `values = z + (g -> (Ad(g) - 1) v)`.
    pub correction: Vec3<Poly>,
    pub alpha: Poly,
    pub beta: Poly,
    pub delta: Poly,
}

impl NormalForm {
    pub fn delta_equals_alpha(&self, ring: &QuotientRing) -> bool {
        ring.is_zero(&ring.sub(&self.delta, &self.alpha))
    }
}

/// Normal form at `x -> diag(t, 1/t)`, `y -> [[t, 1], [0, 1/t]]`.
///
/// Solving the `v+` and `v-` coordinates of `z + d(v)` for zero gives
/// `a = -z_x+ / (t^2 - 1)`, `c = -z_y- / (t^-2 - 1)` and
/// `b = (z_y+ + (t^2 - 1) a - c) / 2t`.
pub fn normalized_representative(
    z: &CocycleValues<Poly>,
    rep: &RepAssignment<QuotientRing>,
) -> Result<NormalForm, CohomologyError> {
    let ring = &rep.ring;
    let degenerate = || CohomologyError::DegenerateEigenvalue(ring.modulus().to_string());
    let t = ring.generator();
    let t_inv = ring.unit_inverse(&t).ok_or_else(degenerate)?;
    let expected_x = Mat2::new(t.clone(), Poly::zero(), Poly::zero(), t_inv.clone());
    let expected_y = Mat2::new(t.clone(), ring.one(), Poly::zero(), t_inv.clone());
    if !rep.image_x.equals(ring, &expected_x) || !rep.image_y.equals(ring, &expected_y) {
        return Err(CohomologyError::UnsupportedAssignment);
    }
    let one = ring.one();
    let t2m1 = ring.sub(&ring.mul(&t, &t), &one);
    let tm2m1 = ring.sub(&ring.mul(&t_inv, &t_inv), &one);
    let two_t = ring.add(&t, &t);
    let inv = |e: &Poly| ring.unit_inverse(e).ok_or_else(degenerate);
    let a = ring.neg(&ring.mul(&z.z_x[0], &inv(&t2m1)?));
    let c = ring.neg(&ring.mul(&z.z_y[2], &inv(&tm2m1)?));
    let b_num = ring.sub(&ring.add(&z.z_y[0], &ring.mul(&t2m1, &a)), &c);
    let b = ring.mul(&b_num, &inv(&two_t)?);
    let correction = [a, b, c];
    let values = z.add(ring, &coboundary(&correction, rep));
    let values = CocycleValues {
        z_x: values.z_x.map(|e| ring.reduce(&e)),
        z_y: values.z_y.map(|e| ring.reduce(&e)),
    };
    debug_assert!(ring.is_zero(&values.z_x[0]) && ring.is_zero(&values.z_y[0]) && ring.is_zero(&values.z_y[2]));
    Ok(NormalForm {
        alpha: values.z_x[1].clone(),
        beta: values.z_x[2].clone(),
        delta: values.z_y[1].clone(),
        values,
        correction,
    })
}

//! Exact branch ranks compared with floating-point SVD ranks of the same
//! systems specialized at each isolated real root.

use nalgebra::DMatrix;

use knotcert_core::algebra::sturm::refine;
use knotcert_core::algebra::{isolate_real_roots, ratio, Matrix, Poly};
use knotcert_core::certify::{admissible_branch, analyze_roots, checked_alexander};
use knotcert_core::cohomology::{cohomology_dims, fixed_space_system, relator_system};
use knotcert_core::rep::burde_derham_assignment;
use knotcert_core::twobridge::{KnotPresentation, TwoBridgeFraction};

fn specialize(m: &Matrix<Poly>, t: f64) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |r, c| m.get(r, c).eval_f64(t))
}

fn float_rank(m: &DMatrix<f64>) -> usize {
    let scale = m.iter().fold(1.0f64, |a, e| a.max(e.abs()));
    m.clone().svd(false, false).singular_values.iter().filter(|&&s| s > 1e-9 * scale).count()
}

fn compare_ranks(f: TwoBridgeFraction) -> usize {
    let pres = KnotPresentation::new(f);
    let delta = checked_alexander(f).unwrap();
    let mut roots_checked = 0;
    for sf in analyze_roots(&delta).unwrap().factors {
        let Some(branch) = admissible_branch(&sf.factor).unwrap() else { continue };
        let rep = burde_derham_assignment(&pres, &branch).unwrap();
        for knot in cohomology_dims(&pres.knot_relators(), &rep).unwrap() {
            let rk = rep.restrict(&knot.branch);
            for filled in cohomology_dims(&pres.filled_relators(), &rk).unwrap() {
                let leaf = rk.restrict(&filled.branch);
                let h = filled.branch.modulus();
                let systems = [
                    (relator_system(&pres.knot_relators(), &leaf).matrix, knot.relator_rank),
                    (relator_system(&pres.filled_relators(), &leaf).matrix, filled.relator_rank),
                    (fixed_space_system(&leaf), 3 - filled.dims.dim_h0),
                ];
                for iv in isolate_real_roots(h) {
                    let t = refine(h, &iv, &ratio(1, 1 << 50)).to_f64();
                    for (m, exact) in &systems {
                        assert_eq!(float_rank(&specialize(m, t)), *exact, "{f} at t = {t}");
                    }
                    roots_checked += 1;
                }
            }
        }
    }
    roots_checked
}

#[test]
fn first_family_member() {
    let f = TwoBridgeFraction::family(1).unwrap();
    assert_eq!(compare_ranks(f), 8);
}

#[test]
fn second_family_member() {
    let f = TwoBridgeFraction::family(2).unwrap();
    assert_eq!(compare_ranks(f), 8);
}

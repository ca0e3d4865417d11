//! Random cocycles of the family knot groups reduce to a normal form whose
//! `z(y)` middle coordinate equals the `z(x)` one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use knotcert_core::algebra::{rat, Ring};
use knotcert_core::certify::{admissible_branch, checked_alexander};
use knotcert_core::cohomology::{cohomology_dims, normalized_representative, relator_system, CocycleValues};
use knotcert_core::rep::burde_derham_assignment;
use knotcert_core::twobridge::{KnotPresentation, TwoBridgeFraction};

#[test]
fn delta_equals_alpha_for_first_ten_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for j in 1..=10 {
        let f = TwoBridgeFraction::family(j).unwrap();
        let pres = KnotPresentation::new(f);
        let delta = checked_alexander(f).unwrap();
        let branch = admissible_branch(&delta).unwrap().unwrap();
        let rep = burde_derham_assignment(&pres, &branch).unwrap();
        for leaf in cohomology_dims(&pres.knot_relators(), &rep).unwrap() {
            let r = rep.restrict(&leaf.branch);
            let ring = &r.ring;
            let system = relator_system(&pres.knot_relators(), &r).matrix;
            for _ in 0..5 {
                let z = leaf.cocycle_basis.iter().fold(CocycleValues::zero(ring), |acc, b| {
                    let c = ring.from_rational(&rat(rng.gen_range(-9..=9)));
                    let scaled = CocycleValues::from_flat(&b.to_flat().iter().map(|e| ring.mul(&c, e)).collect::<Vec<_>>());
                    acc.add(ring, &scaled)
                });
                let nf = normalized_representative(&z, &r).unwrap();
                assert!(nf.delta_equals_alpha(ring), "j = {j}, leaf {}", leaf.branch.modulus());
                let residual = system.mul_vec(ring, &nf.values.to_flat());
                assert!(residual.iter().all(|e| ring.reduce(e).is_zero()));
            }
        }
    }
}

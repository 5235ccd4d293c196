//! Randomized invariants.

use fuscond::builtin::{a2n_module_ring, ising, tambara_yamagami, toric_code, vlplus_modular_data};
use fuscond::schema::{ring_from_json, ring_to_json};
use fuscond::semisimple::AssocAlgebra;
use fuscond::{BasedRing, FiniteGroup, ModularData, Subring};
use proptest::prelude::*;

fn group(kind: u8, a: usize, b: usize) -> FiniteGroup {
    match kind % 4 {
        0 => FiniteGroup::cyclic(a).direct_product(&FiniteGroup::cyclic(b)),
        1 => FiniteGroup::dihedral(a + 1),
        2 => FiniteGroup::symmetric(3).direct_product(&FiniteGroup::cyclic(b)),
        _ => FiniteGroup::quaternion().direct_product(&FiniteGroup::cyclic(a.min(3))),
    }
}

fn ring_choice(kind: u8, m: usize) -> BasedRing {
    match kind % 3 {
        0 => tambara_yamagami(m),
        1 => a2n_module_ring(m.min(3)),
        _ => FiniteGroup::dihedral(m + 1).group_ring(),
    }
}

fn modular(kind: u8, n: usize) -> ModularData {
    match kind % 5 {
        0 => toric_code(),
        1 => ising(),
        2 => vlplus_modular_data(n, false),
        3 => vlplus_modular_data(n, true),
        _ => toric_code().tensor(&ising()),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn group_rings_are_valid_and_pointed(kind in 0u8..4, a in 1usize..6, b in 1usize..4) {
        let g = group(kind, a, b);
        let ring = g.group_ring();
        prop_assert!(ring.validate().is_valid());
        let dims = ring.fp_dims().unwrap();
        prop_assert!(dims.values.iter().all(|d| (d - 1.0).abs() < 1e-9));
        prop_assert_eq!(ring.invertibles().len(), g.order());
    }

    #[test]
    fn fp_dims_are_a_homomorphism(kind in 0u8..3, m in 1usize..7) {
        let ring = ring_choice(kind, m);
        let dims = ring.fp_dims().unwrap();
        prop_assert!(dims.homomorphism_residual(&ring) < 1e-9);
        prop_assert!(dims.values.iter().all(|&d| d >= 1.0 - 1e-12));
    }

    #[test]
    fn generated_subrings_are_closures(kind in 0u8..3, m in 1usize..6, seeds in prop::collection::vec(0usize..64, 0..4), more in prop::collection::vec(0usize..64, 0..3)) {
        let ring = ring_choice(kind, m);
        let r = ring.rank();
        let s: Vec<usize> = seeds.iter().map(|i| i % r).collect();
        let gen = ring.subring_generated(&s).unwrap();
        prop_assert!(ring.is_subring(&gen.members));
        prop_assert!(s.iter().all(|&i| gen.contains(i)));
        prop_assert_eq!(ring.subring_generated(&gen.members).unwrap(), gen.clone());
        let mut bigger = s.clone();
        bigger.extend(more.iter().map(|i| i % r));
        prop_assert!(gen.is_subset_of(&ring.subring_generated(&bigger).unwrap()));
    }

    #[test]
    fn s_matrix_idempotents_sum_to_one(kind in 0u8..5, n in 1usize..4) {
        let md = modular(kind, n);
        let ring = md.verlinde().unwrap();
        prop_assert!(md.idempotent_residual(&ring).unwrap() < 1e-9);
        let mut total = vec![num_complex::Complex64::new(0.0, 0.0); md.rank()];
        for x in 0..md.rank() {
            for (t, e) in total.iter_mut().zip(md.central_idempotent(x).unwrap()) {
                *t += e.to_c64();
            }
        }
        prop_assert!((total[0] - 1.0).norm() < 1e-9);
        prop_assert!(total[1..].iter().all(|z| z.norm() < 1e-9));
    }

    #[test]
    fn wedderburn_blocks_fill_the_group_ring(kind in 0u8..4, a in 1usize..5, b in 1usize..3, seed in any::<u64>()) {
        let g = group(kind, a, b);
        let p = AssocAlgebra::from_ring(&g.group_ring()).central_idempotents(seed).unwrap();
        let sum: usize = p.simple_dims().iter().map(|m| m * m).sum();
        prop_assert_eq!(sum, g.order());
        prop_assert_eq!(p.blocks.len(), g.conjugacy_classes().len());
    }

    #[test]
    fn ring_json_round_trips(kind in 0u8..3, m in 1usize..6) {
        let ring = ring_choice(kind, m);
        let text = ring_to_json(&ring).unwrap();
        let back = ring_from_json(&text).unwrap();
        prop_assert_eq!(ring_to_json(&back).unwrap(), text);
        prop_assert_eq!(back, ring);
    }
}

#[test]
fn subring_lattice_contains_unit_and_full() {
    let ring = tambara_yamagami(5);
    let subs = ring.enumerate_subrings(&Subring::unit()).unwrap();
    assert!(subs.contains(&Subring::unit()));
    assert!(subs.contains(&Subring::full(ring.rank())));
}

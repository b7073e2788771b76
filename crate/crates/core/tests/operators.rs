mod common;

use common::{fixture_lattices, ground_oracle};
use simplexnet_core::spectral::{build_hamiltonian, build_hw, build_two_condition_form};
use simplexnet_core::HamiltonianSpec;

#[test]
fn pair_form_equals_two_condition_form() {
    let fixtures = fixture_lattices(12);
    assert!(fixtures.len() >= 10);
    for (name, l) in &fixtures {
        let pair = build_hamiltonian(&HamiltonianSpec::uniform(l, 1.0, 0.0), 12).unwrap();
        let two = build_two_condition_form(l, 12).unwrap();
        assert_eq!(pair.dim(), two.dim());
        let worst = pair
            .diagonal()
            .iter()
            .zip(two.diagonal())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(worst <= 1e-12, "{name}: {worst}");
    }
}

#[test]
fn classical_energy_matches_triangle_sum() {
    for (name, l) in fixture_lattices(10) {
        let spec = HamiltonianSpec::uniform(&l, 1.0, 0.0);
        for x in 0..1u64 << l.n_sites() {
            let e = spec.classical_energy(x);
            assert_eq!(e, common::triangle_pair_energy(&l, x) as f64, "{name} {x}");
        }
    }
}

#[test]
fn hw_zero_space_is_one_excitation_per_triangle() {
    for (name, l) in fixture_lattices(12) {
        let hw = build_hw(&l, 12).unwrap();
        let n = l.n_sites();
        for (x, &e) in hw.diagonal().iter().enumerate() {
            let ok = l
                .up_triangles()
                .iter()
                .all(|t| t.iter().map(|&s| common::spin(x as u64, s, n)).sum::<u64>() == 1);
            assert_eq!(e == 0.0, ok, "{name} {x}");
            assert!(e >= 0.0);
        }
    }
}

#[test]
fn unit_antiferromagnet_ground_energy_on_patches() {
    // every up-triangle can be made non-monochromatic on an open patch
    for side in 1..=4 {
        let l = simplexnet_core::lattice::build_triangular_patch(side).unwrap();
        let (e0, _) = ground_oracle(&l);
        assert_eq!(e0, -(l.up_triangles().len() as i64), "side {side}");
    }
}

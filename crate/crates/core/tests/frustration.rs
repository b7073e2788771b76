mod common;

use common::{fixture_lattices, ground_oracle, spin};
use simplexnet_core::frustration::{
    enumerate_ground, equal_superposition, frustration_indicator, unit_couplings,
    verify_w_structure, wannier_estimate,
};
use simplexnet_core::lattice::{build_six_site, build_triangular_patch};
use simplexnet_core::network::contract_diagonal;
use simplexnet_core::simplex::{mix, w_state, wbar_state};
use simplexnet_core::{Error, NetworkSpec};

#[test]
fn enumeration_matches_oracle() {
    for (name, l) in fixture_lattices(14) {
        let m = enumerate_ground(&l).unwrap();
        let (e0, arg) = ground_oracle(&l);
        assert_eq!(m.energy, e0, "{name}");
        assert_eq!(m.configurations, arg, "{name}");
    }
}

#[test]
fn six_site_degeneracy_regression() {
    // frozen from the plain-loop oracle
    let (e0, arg) = ground_oracle(&build_six_site());
    assert_eq!((e0, arg.len()), (-3, 26));
    let m = enumerate_ground(&build_six_site()).unwrap();
    assert_eq!((m.energy, m.degeneracy()), (-3, 26));
}

#[test]
fn finite_patch_exponent_regression() {
    let (_, arg) = ground_oracle(&build_triangular_patch(2).unwrap());
    let expected = (arg.len() as f64).log2() / 6.0;
    let w = wannier_estimate(&[2]).unwrap();
    assert_eq!(w[0].degeneracy, arg.len());
    assert!((w[0].exponent - expected).abs() < 1e-15);
    assert!((w[0].exponent - 26f64.log2() / 6.0).abs() < 1e-15);
}

#[test]
fn edge_disjoint_ground_states_have_one_aligned_edge_per_triangle() {
    for (name, l) in fixture_lattices(14) {
        if !l.triangles_edge_disjoint() {
            continue;
        }
        let m = enumerate_ground(&l).unwrap();
        if m.energy != -(l.up_triangles().len() as i64) {
            continue;
        }
        let n = l.n_sites();
        for &x in &m.configurations {
            for t in l.up_triangles() {
                let pairs = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])];
                let aligned = pairs
                    .iter()
                    .filter(|&&(a, b)| spin(x, a, n) == spin(x, b, n))
                    .count();
                assert_eq!(aligned, 1, "{name} {x}");
            }
        }
    }
}

#[test]
fn ground_superposition_equals_w_plus_wbar_network() {
    let s = mix(&[(&w_state(), 1.0), (&wbar_state(), 1.0)]).unwrap();
    let mut compared = 0;
    for (name, l) in fixture_lattices(16) {
        if !l.triangles_edge_disjoint() {
            continue;
        }
        let m = enumerate_ground(&l).unwrap();
        let contracted = contract_diagonal(&NetworkSpec::uniform(&l, &s).unwrap());
        if m.energy == -(l.up_triangles().len() as i64) {
            let a = equal_superposition(&m).unwrap();
            let b = contracted.unwrap().state;
            assert!(a.max_abs_diff_up_to_phase(&b) <= 1e-10, "{name}");
            assert!(verify_w_structure(&a, &l).passed());
            compared += 1;
        } else {
            // no configuration avoids a monochromatic triangle
            assert_eq!(contracted.unwrap_err(), Error::ZeroState, "{name}");
        }
    }
    assert!(compared >= 5);
}

#[test]
fn triangular_patches_are_frustrated() {
    for side in 1..=3 {
        let l = build_triangular_patch(side).unwrap();
        let m = enumerate_ground(&l).unwrap();
        let r = frustration_indicator(&unit_couplings(&l), m.energy);
        assert!(r.frustrated());
        assert_eq!(r.verdict(), "frustrated");
    }
}

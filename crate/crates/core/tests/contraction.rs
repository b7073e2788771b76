mod common;

use proptest::prelude::*;
use simplexnet_core::lattice::random_lattice;
use simplexnet_core::network::{
    contract_diagonal, contract_pairwise, contract_sparse, plan_order, DEFAULT_MEMORY_CAP,
};
use simplexnet_core::simplex::random_simplex;
use simplexnet_core::{Complex64, NetworkSpec};

/// Amplitude of `x` as a literal product of simplex entries.
fn product_oracle(spec: &NetworkSpec, x: u64) -> Complex64 {
    let n = spec.n_sites();
    spec.plaquettes()
        .iter()
        .zip(spec.tables())
        .map(|(sites, table)| {
            let idx = sites.iter().fold(0usize, |acc, &s| {
                (acc << 1) | common::spin(x, s, n) as usize
            });
            table[idx]
        })
        .product()
}

fn random_spec(n: usize, extra: usize, disjoint: bool, seed: u64) -> Option<NetworkSpec> {
    let l = random_lattice(n, extra, disjoint, seed).ok()?;
    let simplices = (0..l.up_triangles().len())
        .map(|k| random_simplex(3, seed.wrapping_mul(31).wrapping_add(k as u64)).unwrap())
        .collect();
    Some(NetworkSpec::assigned(&l, simplices).unwrap())
}

#[test]
fn diagonal_contraction_is_the_plaquette_product() {
    for seed in 0..20 {
        let Some(spec) = random_spec(4 + seed as usize % 7, 2, false, seed) else {
            continue;
        };
        let c = contract_diagonal(&spec).unwrap();
        let scale = c.norm_sqr.sqrt();
        for x in 0..1u64 << spec.n_sites() {
            let d = (c.state.amplitude(x) * scale - product_oracle(&spec, x)).norm();
            assert!(d < 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 60, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn pairwise_engine_equals_diagonal_oracle(
        n in 3usize..=16,
        extra in 0usize..4,
        disjoint in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let Some(spec) = random_spec(n, extra, disjoint, seed) else { return Ok(()) };
        let oracle = contract_diagonal(&spec).unwrap();
        let order = plan_order(&spec);
        let pw = contract_pairwise(&spec, &order, DEFAULT_MEMORY_CAP).unwrap();
        prop_assert!((pw.norm_sqr - oracle.norm_sqr).abs() <= 1e-10 * oracle.norm_sqr.max(1.0));
        for (a, b) in pw.state.amplitudes().iter().zip(oracle.state.amplitudes()) {
            prop_assert!((a - b).norm() <= 1e-10);
        }
    }

    #[test]
    fn sparse_support_matches_dense(n in 3usize..=12, seed in any::<u64>()) {
        let Some(spec) = random_spec(n, 1, false, seed) else { return Ok(()) };
        let dense = contract_diagonal(&spec).unwrap();
        let sparse = contract_sparse(&spec).unwrap().to_dense().unwrap();
        prop_assert!(dense.state.max_abs_diff_up_to_phase(&sparse) <= 1e-12);
    }
}

mod common;

use common::cover_oracle;
use proptest::prelude::*;
use simplexnet_core::exactcover::{
    count_solutions_bruteforce, count_solutions_tn, lattice_to_instance, random_instance,
};
use simplexnet_core::lattice::{build_six_site, build_triangular_patch};
use simplexnet_core::spectral::build_hw;

#[test]
fn tn_equals_bruteforce_on_seeded_instances() {
    let mut cases = 0;
    for seed in 0..240u64 {
        let n = 3 + (seed as usize % 14);
        let max = n * (n - 1) * (n - 2) / 6;
        let m = (seed as usize * 7 % (2 * n)).min(max);
        let inst = random_instance(n, m, seed).unwrap();
        let tn = count_solutions_tn(&inst).unwrap();
        assert_eq!(
            tn,
            count_solutions_bruteforce(&inst).unwrap(),
            "seed {seed}"
        );
        assert_eq!(tn, cover_oracle(n, inst.clauses()), "seed {seed}");
        cases += 1;
    }
    assert!(cases >= 200);
}

#[test]
fn random_instance_regression() {
    let inst = random_instance(12, 6, 2024).unwrap();
    let expected = cover_oracle(12, inst.clauses());
    assert_eq!(count_solutions_tn(&inst).unwrap(), expected);
    assert_eq!(expected, FROZEN_COUNT);
}

/// Count for `random_instance(12, 6, 2024)`, frozen from the plain-loop oracle.
const FROZEN_COUNT: u64 = 16;

#[test]
fn lattice_instances_count_hw_zero_space() {
    let mut lattices = vec![build_six_site()];
    for side in 1..=3 {
        lattices.push(build_triangular_patch(side).unwrap());
    }
    for (_, l) in common::fixture_lattices(14) {
        lattices.push(l);
    }
    for l in lattices {
        let zero = build_hw(&l, 14)
            .unwrap()
            .diagonal()
            .iter()
            .filter(|&&e| e == 0.0)
            .count() as u64;
        assert_eq!(count_solutions_tn(&lattice_to_instance(&l)).unwrap(), zero);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn adding_a_clause_never_increases_the_count(
        n in 4usize..=12,
        m in 0usize..8,
        seed in any::<u64>(),
        extra in proptest::array::uniform3(0usize..12),
    ) {
        let m = m.min(n * (n - 1) * (n - 2) / 6);
        let inst = random_instance(n, m, seed).unwrap();
        let clause = [extra[0] % n, extra[1] % n, extra[2] % n];
        let Ok(bigger) = inst.with_clause(clause) else { return Ok(()) };
        prop_assert!(count_solutions_tn(&bigger).unwrap() <= count_solutions_tn(&inst).unwrap());
    }
}

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sheaf_strata::cohomology::{
    chi_line_bundle, cohomology_table, euler_characteristic, h0, h1, h1_from_euler, h1_serre,
    hilbert_polynomial, is_injective,
};
use sheaf_strata::gradedmat::Presentation;
use sheaf_strata::strata::{sample, StratumId};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn any_stratum() -> impl Strategy<Value = StratumId> {
    prop::sample::select(StratumId::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn euler_characteristic_is_linear(seed in any::<u64>(), s in any_stratum()) {
        let p = sample(s, &mut rng(seed), 5).unwrap();
        prop_assert_eq!(euler_characteristic(&p, 0), 3);
        prop_assert_eq!(euler_characteristic(&p, 1), 9);
        prop_assert_eq!(hilbert_polynomial(&p).unwrap(), (6, 3));
        for n in [-5, -1, 0, 1, 5] {
            let h0n = h0(&p, n).unwrap() as i64;
            let h1n = h1(&p, n).unwrap() as i64;
            prop_assert_eq!(h0n - h1n, 6 * n as i64 + 3);
            prop_assert_eq!(h1_from_euler(&p, n).unwrap(), h1_serre(&p, n).unwrap());
        }
    }

    #[test]
    fn extreme_twists_vanish(seed in any::<u64>(), s in any_stratum()) {
        let p = sample(s, &mut rng(seed), 5).unwrap();
        prop_assert_eq!(h0(&p, -10).unwrap(), 0);
        prop_assert_eq!(h1(&p, 10).unwrap(), 0);
    }
}

#[test]
fn line_bundle_euler_characteristic() {
    // χ(O(k)) counts monomials of degree k for k >= 0
    for k in 0..8i64 {
        assert_eq!(chi_line_bundle(k), (k + 1) * (k + 2) / 2);
    }
    assert_eq!(chi_line_bundle(-1), 0);
    assert_eq!(chi_line_bundle(-2), 0);
    assert_eq!(chi_line_bundle(-3), 1);
}

#[test]
fn tables_match_the_stratum() {
    let mut r = rng(11);
    for s in StratumId::ALL {
        let p = sample(s, &mut r, 5).unwrap();
        assert!(is_injective(&p));
        assert_eq!(cohomology_table(&p).unwrap(), s.triple(), "{s}");
    }
}

#[test]
fn h0_of_the_sextic_sheaf_matches_the_restriction_sequence() {
    // 0 -> O(n-4) -> O(n+2) -> O_C(n+2) -> 0
    let f = sheaf_strata::forms::Form::parse("X^6+Y^6+Z^6", None).unwrap();
    let p = sheaf_strata::builders::sextic_sheaf(&f).unwrap();
    for n in -5..=5 {
        let sections = |k: i32| sheaf_strata::forms::monomial_basis(k).len();
        assert_eq!(
            h0(&p, n).unwrap(),
            sections(n + 2) - sections(n - 4),
            "n = {n}"
        );
    }
}

#[test]
fn non_injective_map_is_detected() {
    let zero = Presentation::zero(vec![-1; 3], vec![0; 3]);
    assert!(!is_injective(&zero));
}

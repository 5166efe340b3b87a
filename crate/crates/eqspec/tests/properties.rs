//! Property tests for the structural invariants: semigroup closure,
//! closed-form super-additivity, solver scale invariance, and the
//! congruence characterization of sharpness.

use std::collections::BTreeSet;

use eqspec::closed_form::{
    disk_bar_sigma, hps_sharp, lambda_equivariant_sphere, steklov_equivariant_disk,
    NormalizedEigenvalue,
};
use eqspec::disk_steklov::{glue_family, steklov_solve};
use eqspec::semigroup::NumericalSemigroup;
use eqspec::symmetry::GroupSpec;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn semigroup_closed_under_addition(
        gens in proptest::collection::btree_set(1u64..30, 1..4),
        a in 0u64..120,
        b in 0u64..120,
    ) {
        let s = NumericalSemigroup::new(gens);
        if s.contains(a) && s.contains(b) {
            prop_assert!(s.contains(a + b));
        }
    }

    #[test]
    fn max_element_monotone_and_idempotent(
        gens in proptest::collection::btree_set(2u64..25, 1..4),
        k in 0u64..150,
    ) {
        let s = NumericalSemigroup::new(gens);
        let m = s.max_element_leq(k);
        prop_assert!(m <= k);
        prop_assert!(s.contains(m));
        prop_assert_eq!(s.max_element_leq(m), m);
        if k > 0 {
            prop_assert!(s.max_element_leq(k - 1) <= m);
        }
    }

    #[test]
    fn disk_formula_is_superadditive(n in 1u64..12, k in 1u64..120) {
        let total = steklov_equivariant_disk(n, k);
        for b in (n..=k).step_by(n as usize) {
            if b == k {
                break;
            }
            let split = steklov_equivariant_disk(n, k - b)
                + NormalizedEigenvalue::from_pi_multiple(2 * b as i64, 1);
            prop_assert!(total >= split, "n={} k={} b={}", n, k, b);
        }
    }

    #[test]
    fn sphere_formula_is_superadditive_for_octahedral(k in 1u64..80) {
        let (total, _, _) = lambda_equivariant_sphere(GroupSpec::O, k);
        let gens: BTreeSet<u64> = [6u64, 8, 12, 24].into_iter().collect();
        let s = NumericalSemigroup::new(gens);
        for b in s.members_leq(k) {
            if b == 0 || b == k {
                continue;
            }
            let (rest, _, _) = lambda_equivariant_sphere(GroupSpec::O, k - b);
            let split = rest + NormalizedEigenvalue::from_pi_multiple(8 * b as i64, 1);
            prop_assert!(total >= split, "k={} b={}", k, b);
        }
    }

    #[test]
    fn hps_sharp_iff_residue_in_0_1(n in 1u64..20, k in 1u64..200) {
        prop_assert_eq!(hps_sharp(n, k), k % n == 0 || k % n == 1);
        // equivalently: the floor term reproduces the residue
        let r = k % n;
        prop_assert_eq!(hps_sharp(n, k), (r + 1) / 2 == r);
    }

    #[test]
    fn pi_multiple_views_are_consistent(num in -4000i64..4000, den in 1i64..12) {
        let v = NormalizedEigenvalue::from_pi_multiple(num, den);
        let expect = num as f64 / den as f64 * std::f64::consts::PI;
        prop_assert!((v.as_f64() - expect).abs() <= 1e-9 * expect.abs().max(1.0));
        prop_assert!(v.symbolic().contains("pi"));
    }
}

proptest! {
    // solver-backed properties get fewer cases
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn normalized_spectrum_invariant_under_scaling(c in 1e-3f64..1e3) {
        let d = glue_family(2, 1, 0.4, None);
        let s1 = steklov_solve(&d, 32).unwrap();
        let s2 = steklov_solve(&d.scaled(c), 32).unwrap();
        for k in 0..=10 {
            prop_assert!((s1.normalized(k) - s2.normalized(k)).abs() <= 1e-9);
        }
    }

    #[test]
    fn uniform_disk_matches_closed_form_at_any_scale(c in 0.1f64..40.0) {
        let s = steklov_solve(&eqspec::disk_steklov::BoundaryDensity::uniform(c), 24).unwrap();
        for k in 0..=10usize {
            let expect = disk_bar_sigma(k as u64).as_f64();
            prop_assert!((s.normalized(k) - expect).abs() <= 1e-8);
        }
    }
}

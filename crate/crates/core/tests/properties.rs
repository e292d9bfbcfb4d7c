//! Property tests for the arithmetic backbone and the classifier laws.

use proptest::prelude::*;

use lefkappa_core::{
    compute_invariants, endo_signature, enumerate_hyperelliptic, hyperelliptic_k_squared,
    kappa_lefschetz, pencil_consistency, plurigenus_general_type, singular_fiber_count,
    subadditivity_holds, ConventionMode, FibrationData, FibrationFlags, KodairaDim, PencilData,
    Rational,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i128..=1000, 1i128..=1000).prop_map(|(n, d)| Rational::new(n, d))
}

fn kodaira_dim() -> impl Strategy<Value = KodairaDim> {
    prop_oneof![
        Just(KodairaDim::MinusInfinity),
        Just(KodairaDim::Zero),
        Just(KodairaDim::One),
        Just(KodairaDim::Two),
    ]
}

proptest! {
    #[test]
    fn rational_addition_commutes_and_associates(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a * b) * c, a * (b * c));
    }

    #[test]
    fn rational_round_trips_through_normalization(a in rational(), scale in 1i128..=50) {
        let rescaled = Rational::new(a.numerator() * scale, a.denominator() * scale);
        prop_assert_eq!(rescaled, a);
        prop_assert!(rescaled.denominator() > 0);
        prop_assert_eq!(rescaled.numerator(), a.numerator());
    }

    #[test]
    fn k_squared_identity_is_exact(chi in -100_000i64..=100_000, sigma in -100_000i64..=100_000) {
        let inv = compute_invariants(chi, sigma);
        prop_assert_eq!(inv.k_squared - 2 * chi - 3 * sigma, 0);
        prop_assert_eq!(inv.chi_h * Rational::from(4), Rational::from(chi) + Rational::from(sigma));
        prop_assert_eq!(inv.almost_complex_admissible, (chi + sigma).rem_euclid(4) == 0);
    }

    #[test]
    fn extended_addition_is_monotone(a in kodaira_dim(), b in kodaira_dim(), c in kodaira_dim()) {
        if a <= b {
            prop_assert!(a.extended_add(c) <= b.extended_add(c));
            prop_assert!(c.extended_add(a) <= c.extended_add(b));
        }
    }

    #[test]
    fn plurigenus_discrete_derivative(n in 2i64..=60, k_squared in 1i64..=50, chi_h in -20i64..=20) {
        // With 1 - b1 + b+ = 2*chi_h the formula's constant term is chi_h.
        let b1 = 0;
        let b_plus = 2 * chi_h - 1;
        let here = plurigenus_general_type(n, k_squared, b1, b_plus).unwrap();
        let next = plurigenus_general_type(n + 1, k_squared, b1, b_plus).unwrap();
        prop_assert_eq!(next - here, n * k_squared);
    }

    #[test]
    fn subadditivity_across_the_table(g in 0u32..=8, h in 1u32..=8, n in 0i64..=40) {
        let verdict = kappa_lefschetz(g, h, n).unwrap();
        prop_assert!(subadditivity_holds(verdict.dim, g, h));
    }

    #[test]
    fn euler_consistent_counts_satisfy_the_blow_up_identity(
        a in 1i64..=30,
        k in 0i64..=15,
        chi in -24i64..=60,
        sigma in -40i64..=40,
    ) {
        let k_dot_h = 2 * k - 2 - a;
        if let Ok(counted) = singular_fiber_count(chi, a, k_dot_h, ConventionMode::EulerConsistent) {
            let pencil = PencilData::new(k, a, counted.value, chi, sigma, None).unwrap();
            prop_assert!(pencil_consistency(&pencil));
        }
    }
}

#[test]
fn signature_is_additive_on_the_admissible_grid() {
    // sigma is Q-linear in the cycle counts, so integral data add exactly;
    // checked over every pair of admissible genus-2..4 records.
    for g in 2..=4u32 {
        let report = enumerate_hyperelliptic(g, g, 6).unwrap();
        let records: Vec<_> = report
            .records
            .iter()
            .map(|r| (r.data.clone(), r.sigma))
            .collect();
        let flags = FibrationFlags {
            hyperelliptic: true,
            ..FibrationFlags::default()
        };
        for (left, sigma_left) in &records {
            for (right, sigma_right) in &records {
                let combined = FibrationData::new(
                    g,
                    1,
                    left.nonseparating() + right.nonseparating(),
                    left.separating()
                        .iter()
                        .zip(right.separating())
                        .map(|(l, r)| l + r)
                        .collect(),
                    flags,
                )
                .unwrap();
                assert_eq!(endo_signature(&combined).unwrap(), sigma_left + sigma_right);
                assert_eq!(
                    hyperelliptic_k_squared(&combined).unwrap(),
                    3 * (sigma_left + sigma_right) + 2 * combined.n()
                );
            }
        }
    }
}

use bohr_radii::classes::{
    area_functional, class_area_bound, class_majorant_bound, majorant_of, ClassId,
    CoefficientSequence, ExtremalFunction, MappingClass, DEFAULT_TRUNCATION,
};
use bohr_radii::problems::registry;
use bohr_radii::rootfind::{self, DEFAULT_TOLERANCE};
use bohr_radii::series::{closed_sum, finite_sum, truncated_sum};
use bohr_radii::verification::{full_report, VerifyOptions};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn class_id() -> impl Strategy<Value = ClassId> {
    prop_oneof![
        Just(ClassId::StableConvexHarmonic),
        Just(ClassId::StableUnivalentHarmonic),
        Just(ClassId::StableUnivalentLogharmonic),
    ]
}

proptest! {
    #[test]
    fn tail_identity(p in 0u32..=3, n in 2u64..40, r in 0.01f64..0.95) {
        let full = closed_sum(p, 1, r).unwrap();
        let split = finite_sum(p, 1, n - 1, r).unwrap() + closed_sum(p, n, r).unwrap();
        prop_assert!((split - full).abs() <= 1e-12 * full.max(1.0));
    }

    #[test]
    fn closed_form_matches_term_sum(p in 0u32..=3, n in 1u64..40, r in 0.01f64..0.9) {
        let closed = closed_sum(p, n, r).unwrap();
        let t = truncated_sum(p, n, r, 1e-16).unwrap();
        prop_assert!((closed - t.value).abs() <= 1e-12 * closed.max(1.0));
    }

    #[test]
    fn majorant_ignores_rotation(
        moduli in prop::collection::vec(0.0f64..1.0, 1..40),
        phases in prop::collection::vec(0.0f64..std::f64::consts::TAU, 40),
        theta in 0.0f64..std::f64::consts::TAU,
        r in 0.01f64..0.9,
    ) {
        // |aₙ e^{inθ}| = |aₙ|, so the majorant sees the same moduli.
        let coeff: Vec<Complex64> = moduli
            .iter()
            .zip(&phases)
            .map(|(&m, &ph)| Complex64::from_polar(m, ph))
            .collect();
        let seq = |t: f64| {
            let a: Vec<f64> = coeff
                .iter()
                .enumerate()
                .map(|(i, c)| (c * Complex64::from_polar(1.0, t * (i + 1) as f64)).norm())
                .collect();
            let b = vec![0.0; a.len()];
            CoefficientSequence::new(a, b, ClassId::StableConvexHarmonic).unwrap()
        };
        let m0 = majorant_of(&seq(0.0), r, DEFAULT_TRUNCATION).unwrap();
        let m1 = majorant_of(&seq(theta), r, DEFAULT_TRUNCATION).unwrap();
        prop_assert!((m0 - m1).abs() <= 1e-13 * m0.max(1.0));
    }

    #[test]
    fn koebe_saturates_area(r in 0.01f64..0.9) {
        let class = MappingClass::UNIVALENT_HARMONIC;
        let len = 4000;
        let seq = ExtremalFunction::Koebe.sequence(class.id, len).unwrap();
        let a = area_functional(&seq, r, len).unwrap();
        let b = class_area_bound(class, r).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * b);
    }

    #[test]
    fn random_members_stay_below_class_majorant(
        id in class_id(),
        seed in any::<u64>(),
        r in 0.01f64..0.6,
    ) {
        let class = MappingClass::from(id);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let seq = CoefficientSequence::random(id, DEFAULT_TRUNCATION, &mut rng);
        let m = majorant_of(&seq, r, DEFAULT_TRUNCATION).unwrap();
        prop_assert!(m <= class_majorant_bound(class, r).unwrap() * (1.0 + 1e-12));
    }
}

#[test]
fn extremal_attains_class_majorant() {
    for class in MappingClass::ALL {
        let seq = class.extremal().sequence(class.id, 4000).unwrap();
        for r in [0.1, 0.3, 0.6] {
            let m = majorant_of(&seq, r, 4000).unwrap();
            let b = class_majorant_bound(class, r).unwrap();
            assert!((m - b).abs() <= 1e-10 * b, "{:?} at {r}", class.id);
        }
    }
}

#[test]
fn every_registered_problem_is_bracketed() {
    for outcome in rootfind::solve_all(DEFAULT_TOLERANCE) {
        let res = outcome.unwrap();
        assert!(res.bracket.0 <= res.root && res.root <= res.bracket.1);
        assert!(res.bracket.1 - res.bracket.0 <= DEFAULT_TOLERANCE);
        assert!(res.single_sign_change, "{}", res.problem_id);
        assert!(res.slope_estimate > 0.0, "{}", res.problem_id);
    }
}

#[test]
fn every_registered_lhs_is_strictly_increasing() {
    let bad: Vec<String> = rootfind::solve_all(DEFAULT_TOLERANCE)
        .into_iter()
        .filter_map(Result::ok)
        .filter(|r| !r.unique_certified)
        .map(|r| r.problem_id)
        .collect();
    assert!(bad.is_empty(), "not strictly increasing: {bad:?}");
}

#[test]
fn saturated_problems_hold_below_and_break_above() {
    let report = full_report(&VerifyOptions::default());
    let mut seen = 0;
    for r in report
        .reports
        .iter()
        .filter(|r| r.unique_certified && r.saturated)
    {
        seen += 1;
        assert!(r.inequality_holds_below, "{}", r.problem_id);
        assert!(r.sharpness_fails_above, "{}", r.problem_id);
    }
    assert!(seen > 20, "only {seen} saturated problems");
}

#[test]
fn solving_and_verifying_is_deterministic() {
    assert_eq!(
        rootfind::solve_all(DEFAULT_TOLERANCE),
        rootfind::solve_all(DEFAULT_TOLERANCE)
    );
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| full_report(&VerifyOptions::default()));
    assert_eq!(single, full_report(&VerifyOptions::default()));

    let ids: Vec<String> = registry().into_iter().map(|p| p.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

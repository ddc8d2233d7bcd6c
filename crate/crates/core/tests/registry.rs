use std::collections::HashSet;

use bohr_radii::problems::{
    corollary, find, refined_convex, refined_univalent, registry, Family, Order, TailForm, Variant,
};
use bohr_radii::rootfind::{solve, DEFAULT_TOLERANCE};
use bohr_radii::verification::{full_report, VerifyOptions};

fn root_of(p: &bohr_radii::problems::RadiusProblem) -> f64 {
    solve(p, DEFAULT_TOLERANCE).unwrap().root
}

#[test]
fn ids_are_unique_and_resolvable() {
    let all = registry();
    let ids: HashSet<&str> = all.iter().map(|p| p.id.as_str()).collect();
    assert_eq!(ids.len(), all.len());
    for p in &all {
        assert_eq!(find(&p.id).unwrap(), *p);
        if p.variant == Variant::DerivedCorrected {
            assert!(p.id.ends_with(".corrected"), "{}", p.id);
        }
    }
    assert!(find("harm.convex.bohr.bogus").is_err());
}

#[test]
fn printed_and_corrected_tails_agree_at_first_index() {
    // With N = 1 the printed tail reduces to r/(1 − r)², which is exact.
    for (printed, corrected) in [
        (
            Family::UnivalentRog(TailForm::Printed),
            Family::UnivalentRog(TailForm::BruteForce),
        ),
        (
            Family::UnivalentRogSquared(TailForm::Printed),
            Family::UnivalentRogSquared(TailForm::BruteForce),
        ),
    ] {
        for m in [1u32, 2, 5, 20] {
            let a = printed.problem(m.into(), 1.into());
            let b = corrected.problem(m.into(), 1.into());
            for r in [0.05, 0.1, 0.2, 0.3] {
                let (fa, fb) = (a.evaluate(r).unwrap(), b.evaluate(r).unwrap());
                assert!(
                    (fa - fb).abs() <= 1e-14 * fa.abs().max(1.0),
                    "m = {m}, r = {r}"
                );
            }
            assert!((root_of(&a) - root_of(&b)).abs() < 1e-12);
        }
        let a = corollary(printed, 1);
        let b = corollary(corrected, 1);
        assert!((root_of(&a) - root_of(&b)).abs() < 1e-12);
    }
}

#[test]
fn rogosinski_roots_grow_with_m_and_n() {
    for family in Family::ALL {
        if matches!(
            family,
            Family::UnivalentRog(TailForm::Printed)
                | Family::UnivalentRogSquared(TailForm::Printed)
        ) {
            continue;
        }
        for m in [1u32, 2, 5] {
            let roots: Vec<f64> = [1u32, 2, 5, 20]
                .iter()
                .map(|&n| root_of(&family.problem(m.into(), n.into())))
                .collect();
            assert!(
                roots.windows(2).all(|w| w[1] > w[0]),
                "{} m = {m}: {roots:?}",
                family.id()
            );
        }
        for n in [1u32, 2, 5] {
            let roots: Vec<f64> = [1u32, 2, 5, 20]
                .iter()
                .map(|&m| root_of(&family.problem(m.into(), n.into())))
                .collect();
            assert!(
                roots.windows(2).all(|w| w[1] >= w[0]),
                "{} n = {n}: {roots:?}",
                family.id()
            );
        }
    }
}

#[test]
fn weighted_roots_shrink_as_c_grows() {
    for class in ["convex", "univalent"] {
        let roots: Vec<f64> = ["c0.1", "c0.5", "c1"]
            .iter()
            .map(|c| root_of(&find(&format!("harm.improved.c.{class}.{c}")).unwrap()))
            .collect();
        assert!(roots.windows(2).all(|w| w[1] < w[0]), "{class}: {roots:?}");
    }
}

#[test]
fn refined_roots_converge_to_bohr_roots() {
    let psi: Vec<f64> = [1u32, 2, 5, 20, 200]
        .iter()
        .map(|&n| root_of(&refined_convex(n)))
        .collect();
    let phi: Vec<f64> = [1u32, 2, 5, 20, 200]
        .iter()
        .map(|&n| root_of(&refined_univalent(n)))
        .collect();
    assert!(psi.windows(2).all(|w| w[1] >= w[0]));
    assert!(phi.windows(2).all(|w| w[1] >= w[0]));
    assert!((psi[4] - 1.0 / 3.0).abs() < 1e-6);
    assert!((phi[4] - (3.0 - 8f64.sqrt())).abs() < 1e-6);
}

#[test]
fn limit_problems_use_infinite_orders() {
    use bohr_radii::problems::LimitDirection;
    let p = Family::ConvexRog
        .limit_problem(LimitDirection::NToInfinity { m: 1 })
        .unwrap();
    assert_eq!(p.params.n, Some(Order::Infinite));
    assert!(Family::UnivalentRog(TailForm::Printed)
        .limit_problem(LimitDirection::NToInfinity { m: 1 })
        .is_err());
}

#[test]
fn discrepancy_set_matches_golden_file() {
    let golden = include_str!("golden/discrepancies.txt");
    let report = full_report(&VerifyOptions::default());
    let got: Vec<String> = report
        .discrepancies
        .iter()
        .map(|d| {
            format!(
                "{} {:?} {:.6} {:.6}",
                d.problem_id, d.kind, d.paper_value, d.computed_value
            )
        })
        .collect();
    let want: Vec<&str> = golden.lines().collect();
    assert_eq!(got, want);
}

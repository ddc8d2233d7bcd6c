//! Runs the full verification and summarises what disagrees with the printed
//! statements.

use std::collections::BTreeMap;

use bohr_radii::verification::{full_report, PaperMatch, VerifyOptions};

fn main() {
    let report = full_report(&VerifyOptions::default());
    let mut by_match = BTreeMap::new();
    for r in &report.reports {
        *by_match.entry(format!("{:?}", r.paper_match)).or_insert(0) += 1;
    }
    println!("{} problems verified: {by_match:?}", report.reports.len());

    for r in report.reports.iter().filter(|r| !r.flags().is_empty()) {
        println!("{:<42} {}", r.problem_id, r.flags().join(","));
    }

    let mut by_kind = BTreeMap::new();
    for d in &report.discrepancies {
        *by_kind.entry(format!("{:?}", d.kind)).or_insert(0) += 1;
    }
    println!("\n{} discrepancies {by_kind:?}", report.discrepancies.len());
    for d in &report.discrepancies {
        println!("  {:<40} {}", d.problem_id, d.explanation);
    }

    let mismatched = report
        .reports
        .iter()
        .filter(|r| r.paper_match == PaperMatch::Mismatch)
        .count();
    println!("\nprinted roots not reproduced: {mismatched}");
    for f in &report.failures {
        println!("failed: {f}");
    }
}

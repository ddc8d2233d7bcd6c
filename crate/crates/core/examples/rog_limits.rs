//! Follows the Bohr-Rogosinski radii as m or N grows and compares the limit
//! equation with the stated limits.

use bohr_radii::problems::Family;
use bohr_radii::verification::{check_rog_limits, limit_directions, TREND_POINTS};

fn main() {
    for family in Family::ALL {
        println!("{}", family.id());
        for direction in limit_directions(family) {
            let check = check_rog_limits(family, direction, &TREND_POINTS).unwrap();
            let trend: Vec<String> = check
                .trend
                .iter()
                .map(|(k, v)| format!("{k}:{v:.4}"))
                .collect();
            println!(
                "  {:<24} limit {:.6}  trend {}",
                format!("{direction:?}"),
                check.limit_root,
                trend.join(" ")
            );
            for c in &check.claims {
                let verdict = if c.agrees { "agrees" } else { "DISAGREES" };
                println!("      {verdict:<9} {} ({})", c.claim.text, c.claim.value);
            }
        }
    }
}

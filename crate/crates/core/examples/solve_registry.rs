//! Solves every registered problem and prints the roots next to any printed value.

use bohr_radii::problems::registry;
use bohr_radii::rootfind::{solve_many, DEFAULT_TOLERANCE};

fn main() {
    let problems = registry();
    for outcome in solve_many(&problems, DEFAULT_TOLERANCE) {
        match outcome {
            Ok(res) => {
                let claim = problems
                    .iter()
                    .find(|p| p.id == res.problem_id)
                    .and_then(|p| p.paper_root)
                    .map(|c| format!("{c:.6}"))
                    .unwrap_or_default();
                let unique = match (res.unique_certified, res.single_sign_change) {
                    (true, _) => "",
                    (false, true) => "  single sign change, not monotone",
                    (false, false) => "  not certified",
                };
                println!(
                    "{:<44} {:.12} {:>9}{unique}",
                    res.problem_id, res.root, claim
                );
            }
            Err(e) => println!("{e}"),
        }
    }
}

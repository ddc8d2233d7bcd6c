//! Solves one registered problem and shows how the root was certified.
//!
//! Usage: `cargo run --example solve_problem -- [id]`

use bohr_radii::problems::find;
use bohr_radii::rootfind::{solve, DEFAULT_TOLERANCE};

fn main() {
    let id = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "harm.univalent.bohr.d".into());
    let problem = match find(&id) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("{}  ({})", problem.id, problem.theorem_ref);
    println!("  F(r) = {} - {}", problem.lhs, problem.target);

    let res = solve(&problem, DEFAULT_TOLERANCE).expect("registered problems have a root");
    println!("  root        {:.15}", res.root);
    println!(
        "  bracket     [{:.15}, {:.15}]",
        res.bracket.0, res.bracket.1
    );
    println!("  residual    {:.3e}", res.residual);
    println!("  iterations  {}", res.iterations);
    println!("  slope       {:.6}", res.slope_estimate);
    println!("  monotone    {}", res.unique_certified);
    println!("  one sign change {}", res.single_sign_change);
    if let Some(claim) = problem.paper_root {
        println!("  printed     {claim}");
    }
}

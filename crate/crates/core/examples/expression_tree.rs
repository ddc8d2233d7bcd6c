//! Builds a defining function from the expression primitives and solves it
//! with the generic bracket and refine steps.
//!
//! The example asks where `r + Σ_{n≥N} n rⁿ` first reaches 1/2, for a few `N`.

use bohr_radii::problems::expr::{r, sum};
use bohr_radii::problems::{Order, SeriesArg};
use bohr_radii::rootfind::{find_bracket, refine, DEFAULT_GRID_STEP};

fn main() {
    for n in [
        Order::Finite(1),
        Order::Finite(2),
        Order::Finite(5),
        Order::Infinite,
    ] {
        let f = r() + sum(1, n, SeriesArg::R) - 0.5;
        let g = |x: f64| f.eval(x).unwrap_or(f64::NAN);
        let bracket = find_bracket(g, DEFAULT_GRID_STEP).unwrap();
        let ((lo, hi), iters) = refine(g, bracket, 1e-13).unwrap();
        println!(
            "N = {n:<4} {f}  root {:.12} after {iters} steps",
            0.5 * (lo + hi)
        );
    }
}

//! Closed-form power sums next to their compensated partial sums.

use bohr_radii::series::{closed_sum, finite_sum, truncated_sum, SeriesSum};

fn main() {
    println!(
        "{:>2} {:>5} {:>5} {:>22} {:>22} {:>7}",
        "p", "start", "r", "closed", "truncated", "terms"
    );
    for p in 0..=3 {
        for start in [1u64, 2, 20] {
            for r in [0.1, 0.5, 0.9] {
                let closed = closed_sum(p, start, r).unwrap();
                let t = truncated_sum(p, start, r, 1e-15).unwrap();
                println!(
                    "{p:>2} {start:>5} {r:>5} {closed:>22.15e} {:>22.15e} {:>7}",
                    t.value, t.terms_used
                );
            }
        }
    }

    // Splitting a sum at N: head plus tail recovers the full sum.
    let (r, n) = (0.7, 12);
    let head = finite_sum(2, 1, n - 1, r).unwrap();
    let tail = SeriesSum::new(2, n, r).unwrap().value;
    println!(
        "\nsum n^2 r^n at r = {r}: head + tail = {:.15}, full = {:.15}",
        head + tail,
        closed_sum(2, 1, r).unwrap()
    );

    match closed_sum(1, 1, 1.0) {
        Ok(v) => println!("r = 1 gave {v}"),
        Err(e) => println!("r = 1 rejected: {e}"),
    }
}

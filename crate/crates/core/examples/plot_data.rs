//! Emits CSV plot data: F(r) for one problem and the majorant against the
//! distance constant for another.

use bohr_radii::cli::{cmd_scan, render_scan, Format};

fn main() {
    let f = cmd_scan("harm.univalent.bohr.d", 0.0, 0.4, 9, false).unwrap();
    print!("{}", render_scan(&f, Format::Csv).unwrap());
    println!();
    let curves = cmd_scan("log.bohr.d", 0.0, 0.3, 7, true).unwrap();
    print!("{}", render_scan(&curves, Format::Csv).unwrap());
}

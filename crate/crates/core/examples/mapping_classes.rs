//! Coefficient bounds, extremal maps and majorants for the three classes.

use bohr_radii::classes::{
    area_functional, class_area_bound, class_majorant_bound, distance_lower_bound, majorant_of,
    CoefficientSequence, MappingClass, DEFAULT_TRUNCATION,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let r = 0.3;
    for class in MappingClass::ALL {
        let extremal = class.extremal();
        println!("{:?}", class.id);
        println!(
            "  c_1..c_5 = {:?}",
            (1..=5)
                .map(|n| class.coefficient_bound(n))
                .collect::<Vec<_>>()
        );
        println!(
            "  extremal {:?}: distance to boundary {:.4} (class lower bound {})",
            extremal,
            extremal.boundary_distance(1.0 - 1e-9, 4096),
            distance_lower_bound(class)
        );

        let bound = class_majorant_bound(class, r).unwrap();
        let ext = extremal.sequence(class.id, DEFAULT_TRUNCATION).unwrap();
        println!(
            "  majorant at r = {r}: class bound {bound:.6}, extremal {:.6}",
            majorant_of(&ext, r, DEFAULT_TRUNCATION).unwrap()
        );
        let worst = (0..200)
            .map(|_| CoefficientSequence::random(class.id, DEFAULT_TRUNCATION, &mut rng))
            .map(|s| majorant_of(&s, r, DEFAULT_TRUNCATION).unwrap())
            .fold(0.0, f64::max);
        println!("  largest of 200 random admissible sequences {worst:.6}");

        if class.is_harmonic() {
            println!(
                "  area S_r/pi: class bound {:.6}, extremal {:.6}",
                class_area_bound(class, r).unwrap(),
                area_functional(&ext, r, DEFAULT_TRUNCATION).unwrap()
            );
        }
    }
}

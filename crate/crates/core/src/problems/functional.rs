//! The left-hand side of each theorem, evaluable two ways: from class-level
//! coefficient and distortion bounds, or from a concrete coefficient sequence.

use serde::Serialize;

use crate::classes::{
    self, class_area_bound, class_majorant_bound, exp_majorant, ClassError, CoefficientSequence,
    MajorantKind, MappingClass,
};
use crate::series;

use super::expr::Order;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Functional {
    /// `M_f(r)` or `B_f(r)`.
    Majorant,
    /// `M_f(r) + (S_r/π)^k`.
    MajorantPlusArea { k: u32 },
    /// `M_f(r) + c Σ (|aₙ|^p + |bₙ|^p) rⁿ`.
    MajorantPlusWeighted { c: f64, power: u32 },
    /// `M_f(r) + r^N/(1−r^N) Σ (|aₙ|² + |bₙ|²) r^{2n}`.
    MajorantPlusSquares { n: u32 },
    /// `r exp(Σ (|aₙ| + |bₙ| + |aₙ||bₙ|) rⁿ)`.
    LogWithProducts,
    /// `r exp(Σ (|aₙ|+|bₙ|) rⁿ + (|aₙ|+|bₙ|)² r^{2n})`.
    LogWithSquares,
    /// `|f(z^m)|^{1|2} + tail from N`.
    Rogosinski { m: Order, n: Order, squared: bool },
}

/// Truncation long enough that `Σ n³ rⁿ` beyond it is negligible.
pub fn truncation_for(r: f64) -> usize {
    let needed = series::terms_needed(3, r, 1e-18).unwrap_or(series::DEFAULT_TERM_BUDGET);
    (needed as usize).max(classes::DEFAULT_TRUNCATION)
}

fn pow_order(x: f64, k: Order) -> f64 {
    match k {
        Order::Finite(k) => x.powi(k as i32),
        Order::Infinite => 0.0,
    }
}

impl Functional {
    /// Supremum of the functional over the class, assembled from the
    /// coefficient bound `|aₙ|+|bₙ| ≤ cₙ` and the distortion envelope.
    pub fn class_bound(&self, class: MappingClass, r: f64) -> Result<f64, ClassError> {
        let e = class.coeff_bound_exponent;
        Ok(match *self {
            Functional::Majorant => class_majorant_bound(class, r)?,
            Functional::MajorantPlusArea { k } => {
                class_majorant_bound(class, r)? + class_area_bound(class, r)?.powi(k as i32)
            }
            Functional::MajorantPlusWeighted { c, power } => {
                // a^p + b^p ≤ (a+b)^p ≤ cₙ^p for p ≥ 1
                class_majorant_bound(class, r)? + c * series::closed_sum(e * power, 1, r)?
            }
            Functional::MajorantPlusSquares { n } => {
                let rn = r.powi(n as i32);
                class_majorant_bound(class, r)?
                    + rn / (1.0 - rn) * series::closed_sum(2 * e, 1, r * r)?
            }
            Functional::LogWithProducts => {
                // a + b + ab with a + b ≤ n peaks at a = b = n/2
                let x = series::closed_sum(1, 1, r)? + 0.25 * series::closed_sum(2, 1, r)?;
                exp_majorant(r, x)
            }
            Functional::LogWithSquares => {
                let x = series::closed_sum(1, 1, r)? + series::closed_sum(2, 1, r * r)?;
                exp_majorant(r, x)
            }
            Functional::Rogosinski { m, n, squared } => match (m, n) {
                (Order::Finite(m), Order::Finite(n)) => {
                    classes::rogosinski_class_sum(class, m, n, r, squared)?
                }
                _ => {
                    series::check_arg(r)?;
                    let point = class.distortion_upper_kind.upper(pow_order(r, m));
                    let point = if squared { point * point } else { point };
                    let tail = match n {
                        Order::Finite(n) => series::closed_sum(e, u64::from(n), r)?,
                        Order::Infinite => 0.0,
                    };
                    let tail = match class.majorant_kind {
                        MajorantKind::Linear => tail,
                        MajorantKind::Exponential => exp_majorant(r, tail),
                    };
                    point + tail
                }
            },
        })
    }

    /// The functional for one coefficient sequence. `point_modulus(x)` bounds
    /// `|f(x)|` and is only consulted by the Rogosinski form.
    pub fn witness(
        &self,
        seq: &CoefficientSequence,
        point_modulus: &dyn Fn(f64) -> f64,
        r: f64,
        truncation: usize,
    ) -> Result<f64, ClassError> {
        let majorant = || classes::majorant_of(seq, r, truncation);
        Ok(match *self {
            Functional::Majorant => majorant()?,
            Functional::MajorantPlusArea { k } => {
                // the Jacobian of a sense-preserving map is nonnegative
                let area = classes::area_functional(seq, r, truncation)?.max(0.0);
                majorant()? + area.powi(k as i32)
            }
            Functional::MajorantPlusWeighted { c, power } => {
                let p = power as i32;
                majorant()?
                    + c * seq.weighted_sum(r, 1, truncation, |_, a, b| a.powi(p) + b.powi(p))
            }
            Functional::MajorantPlusSquares { n } => {
                let rn = r.powi(n as i32);
                let squares = seq.weighted_sum(r * r, 1, truncation, |_, a, b| a * a + b * b);
                majorant()? + rn / (1.0 - rn) * squares
            }
            Functional::LogWithProducts => {
                let x = seq.weighted_sum(r, 1, truncation, |_, a, b| a + b + a * b);
                exp_majorant(r, x)
            }
            Functional::LogWithSquares => {
                let x = seq.weighted_sum(r, 1, truncation, |_, a, b| a + b)
                    + seq.weighted_sum(r * r, 1, truncation, |_, a, b| (a + b) * (a + b));
                exp_majorant(r, x)
            }
            Functional::Rogosinski { m, n, squared } => {
                let point = point_modulus(pow_order(r, m));
                let point = if squared { point * point } else { point };
                let tail = match n {
                    Order::Finite(n) => {
                        seq.weighted_sum(r, n as usize, truncation, |_, a, b| a + b)
                    }
                    Order::Infinite => 0.0,
                };
                let tail = match MappingClass::from(seq.class()).majorant_kind {
                    MajorantKind::Linear => tail,
                    MajorantKind::Exponential => exp_majorant(r, tail),
                };
                point + tail
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{ClassId, ExtremalFunction};

    fn saturates(f: Functional, class: MappingClass, r: f64) {
        let ext = class.extremal();
        let len = truncation_for(r);
        let seq = ext.sequence(class.id, len).unwrap();
        let w = f.witness(&seq, &|x| ext.value(x), r, len).unwrap();
        let b = f.class_bound(class, r).unwrap();
        assert!((w - b).abs() <= 1e-12 * b.max(1.0), "{f:?} {w} vs {b}");
    }

    #[test]
    fn extremal_sequences_saturate_class_bounds() {
        let convex = MappingClass::CONVEX_HARMONIC;
        let univalent = MappingClass::UNIVALENT_HARMONIC;
        let log = MappingClass::UNIVALENT_LOGHARMONIC;
        for &r in &[0.05, 0.2, 0.35] {
            saturates(Functional::Majorant, convex, r);
            saturates(Functional::Majorant, univalent, r);
            saturates(Functional::Majorant, log, r);
            saturates(Functional::MajorantPlusArea { k: 2 }, convex, r);
            saturates(Functional::MajorantPlusArea { k: 1 }, univalent, r);
            saturates(
                Functional::MajorantPlusWeighted { c: 0.5, power: 2 },
                univalent,
                r,
            );
            saturates(Functional::MajorantPlusSquares { n: 3 }, convex, r);
            saturates(Functional::MajorantPlusSquares { n: 3 }, univalent, r);
            saturates(Functional::LogWithSquares, log, r);
            let rog = Functional::Rogosinski {
                m: Order::Finite(2),
                n: Order::Finite(3),
                squared: true,
            };
            saturates(rog, convex, r);
            saturates(rog, univalent, r);
            saturates(rog, log, r);
        }
    }

    #[test]
    fn koebe_does_not_saturate_product_term() {
        let log = MappingClass::UNIVALENT_LOGHARMONIC;
        let seq = ExtremalFunction::Koebe
            .sequence(ClassId::StableUnivalentLogharmonic, 600)
            .unwrap();
        let f = Functional::LogWithProducts;
        let w = f.witness(&seq, &|x| x, 0.2, 600).unwrap();
        assert!(w < f.class_bound(log, 0.2).unwrap());
    }

    #[test]
    fn infinite_orders_drop_terms() {
        let f = Functional::Rogosinski {
            m: Order::Infinite,
            n: Order::Finite(1),
            squared: false,
        };
        let v = f.class_bound(MappingClass::CONVEX_HARMONIC, 0.25).unwrap();
        assert!((v - 0.25 / 0.75).abs() < 1e-15);
    }
}

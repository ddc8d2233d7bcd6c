//! Mapping-class descriptors, extremal functions and coefficient functionals.
//!
//! Every functional here depends only on the coefficient moduli
//! `(|aₙ|, |bₙ|)`, so sequences store nonnegative reals and nothing else.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::series::{self, CompensatedSum, SeriesError};

/// Default number of coefficients used by truncated functionals.
pub const DEFAULT_TRUNCATION: usize = 512;

/// Exponent arguments above this value are reported as `+∞`.
pub const EXP_OVERFLOW: f64 = 700.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("coefficient {index}: a = {a}, b = {b} violates the {class} bound {bound}")]
    CoefficientBound {
        class: ClassId,
        index: usize,
        a: f64,
        b: f64,
        bound: f64,
    },
    #[error("coefficient {index} must be finite and nonnegative")]
    NegativeCoefficient { index: usize },
    #[error("a and b must have the same length ({a} vs {b})")]
    LengthMismatch { a: usize, b: usize },
    #[error("truncation must be at least 1")]
    Truncation,
    #[error("no area bound is available for {0}")]
    UnsupportedClass(ClassId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassId {
    StableConvexHarmonic,
    StableUnivalentHarmonic,
    StableUnivalentLogharmonic,
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassId::StableConvexHarmonic => "stable convex harmonic",
            ClassId::StableUnivalentHarmonic => "stable univalent harmonic",
            ClassId::StableUnivalentLogharmonic => "stable univalent logharmonic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MajorantKind {
    /// `Σ (|aₙ| + |bₙ|) rⁿ`
    Linear,
    /// `r · exp(Σ (|aₙ| + |bₙ|) rⁿ)`
    Exponential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DistortionKind {
    /// `|f(z)| ≤ r/(1−r)`
    HalfPlane,
    /// `|f(z)| ≤ r/(1−r)²`
    Koebe,
}

impl DistortionKind {
    pub fn upper(self, r: f64) -> f64 {
        match self {
            DistortionKind::HalfPlane => r / (1.0 - r),
            DistortionKind::Koebe => r / ((1.0 - r) * (1.0 - r)),
        }
    }
}

/// Coefficient bound, distortion envelope and boundary distance of a class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MappingClass {
    pub id: ClassId,
    /// `|aₙ| + |bₙ| ≤ n^exponent`.
    pub coeff_bound_exponent: u32,
    pub distance_lower: f64,
    pub majorant_kind: MajorantKind,
    pub distortion_upper_kind: DistortionKind,
}

impl MappingClass {
    pub const CONVEX_HARMONIC: MappingClass = MappingClass {
        id: ClassId::StableConvexHarmonic,
        coeff_bound_exponent: 0,
        distance_lower: 0.5,
        majorant_kind: MajorantKind::Linear,
        distortion_upper_kind: DistortionKind::HalfPlane,
    };

    pub const UNIVALENT_HARMONIC: MappingClass = MappingClass {
        id: ClassId::StableUnivalentHarmonic,
        coeff_bound_exponent: 1,
        distance_lower: 0.25,
        majorant_kind: MajorantKind::Linear,
        distortion_upper_kind: DistortionKind::Koebe,
    };

    pub const UNIVALENT_LOGHARMONIC: MappingClass = MappingClass {
        id: ClassId::StableUnivalentLogharmonic,
        coeff_bound_exponent: 1,
        distance_lower: 0.25,
        majorant_kind: MajorantKind::Exponential,
        distortion_upper_kind: DistortionKind::Koebe,
    };

    pub const ALL: [MappingClass; 3] = [
        Self::CONVEX_HARMONIC,
        Self::UNIVALENT_HARMONIC,
        Self::UNIVALENT_LOGHARMONIC,
    ];

    pub fn coefficient_bound(&self, n: usize) -> f64 {
        (n as f64).powi(self.coeff_bound_exponent as i32)
    }

    /// The extremal analytic map whose coefficients saturate the class bound.
    pub fn extremal(&self) -> ExtremalFunction {
        match self.coeff_bound_exponent {
            0 => ExtremalFunction::HalfPlaneMap,
            _ => ExtremalFunction::Koebe,
        }
    }

    pub fn is_harmonic(&self) -> bool {
        self.majorant_kind == MajorantKind::Linear
    }
}

impl From<ClassId> for MappingClass {
    fn from(id: ClassId) -> Self {
        match id {
            ClassId::StableConvexHarmonic => Self::CONVEX_HARMONIC,
            ClassId::StableUnivalentHarmonic => Self::UNIVALENT_HARMONIC,
            ClassId::StableUnivalentLogharmonic => Self::UNIVALENT_LOGHARMONIC,
        }
    }
}

/// Koebe map `z/(1−z)²` and half-plane map `z/(1−z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtremalFunction {
    Koebe,
    HalfPlaneMap,
}

impl ExtremalFunction {
    pub fn coefficient(self, n: usize) -> f64 {
        match self {
            ExtremalFunction::Koebe => n as f64,
            ExtremalFunction::HalfPlaneMap => 1.0,
        }
    }

    pub fn eval(self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match self {
            ExtremalFunction::Koebe => z / ((one - z) * (one - z)),
            ExtremalFunction::HalfPlaneMap => z / (one - z),
        }
    }

    /// Value on the positive real axis, where it equals the modulus maximum on `|z| = x`.
    pub fn value(self, x: f64) -> f64 {
        match self {
            ExtremalFunction::Koebe => DistortionKind::Koebe.upper(x),
            ExtremalFunction::HalfPlaneMap => DistortionKind::HalfPlane.upper(x),
        }
    }

    /// Coefficient sequence `aₙ = coefficient(n)`, `bₙ = 0`.
    pub fn sequence(self, class: ClassId, len: usize) -> Result<CoefficientSequence, ClassError> {
        let a = (1..=len).map(|n| self.coefficient(n)).collect();
        CoefficientSequence::new(a, vec![0.0; len], class)
    }

    /// Numerical `d(f(0), ∂f(U))`: the minimum of `|f|` over a circle of
    /// radius `rho` close to 1, sampled at `samples` angles.
    pub fn boundary_distance(self, rho: f64, samples: usize) -> f64 {
        (0..samples)
            .map(|i| {
                let theta = std::f64::consts::TAU * i as f64 / samples as f64;
                self.eval(Complex64::from_polar(rho, theta)).norm()
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// Coefficient moduli `aₙ = |aₙ|`, `bₙ = |bₙ|` for `n ≥ 1`, validated
/// against the class bound on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSequence {
    a: Vec<f64>,
    b: Vec<f64>,
    class: ClassId,
}

impl CoefficientSequence {
    pub fn new(a: Vec<f64>, b: Vec<f64>, class: ClassId) -> Result<Self, ClassError> {
        if a.len() != b.len() {
            return Err(ClassError::LengthMismatch {
                a: a.len(),
                b: b.len(),
            });
        }
        let descriptor = MappingClass::from(class);
        for (i, (&an, &bn)) in a.iter().zip(&b).enumerate() {
            let index = i + 1;
            if !(an >= 0.0 && bn >= 0.0 && an.is_finite() && bn.is_finite()) {
                return Err(ClassError::NegativeCoefficient { index });
            }
            let bound = descriptor.coefficient_bound(index);
            if an + bn > bound * (1.0 + 1e-12) {
                return Err(ClassError::CoefficientBound {
                    class,
                    index,
                    a: an,
                    b: bn,
                    bound,
                });
            }
        }
        Ok(Self { a, b, class })
    }

    /// Random admissible moduli: `aₙ ~ U[0, cₙ]`, then `bₙ ~ U[0, cₙ − aₙ]`.
    pub fn random(class: ClassId, len: usize, rng: &mut impl Rng) -> Self {
        let descriptor = MappingClass::from(class);
        let (a, b) = (1..=len)
            .map(|n| {
                let c = descriptor.coefficient_bound(n);
                let a = rng.gen_range(0.0..=c);
                (a, rng.gen_range(0.0..=(c - a)))
            })
            .unzip();
        Self { a, b, class }
    }

    pub fn class(&self) -> ClassId {
        self.class
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `(n, aₙ, bₙ)` for `n = 1..=min(len, truncation)`.
    pub fn terms(&self, truncation: usize) -> impl Iterator<Item = (usize, f64, f64)> + '_ {
        self.a
            .iter()
            .zip(&self.b)
            .take(truncation)
            .enumerate()
            .map(|(i, (&a, &b))| (i + 1, a, b))
    }

    /// `Σ_{n=from}^{truncation} weight(n, aₙ, bₙ) · xⁿ`.
    pub fn weighted_sum(
        &self,
        x: f64,
        from: usize,
        truncation: usize,
        weight: impl Fn(usize, f64, f64) -> f64,
    ) -> f64 {
        let acc: CompensatedSum = self
            .terms(truncation)
            .filter(|&(n, _, _)| n >= from)
            .map(|(n, a, b)| weight(n, a, b) * series::pow_index(x, n as u64))
            .collect();
        acc.value()
    }
}

/// `r · exp(x)` with the overflow sentinel.
pub fn exp_majorant(r: f64, x: f64) -> f64 {
    if x > EXP_OVERFLOW {
        f64::INFINITY
    } else {
        r * x.exp()
    }
}

/// Upper bound of the majorant over the whole class.
pub fn class_majorant_bound(class: MappingClass, r: f64) -> Result<f64, ClassError> {
    Ok(match class.majorant_kind {
        MajorantKind::Linear => series::closed_sum(class.coeff_bound_exponent, 1, r)?,
        MajorantKind::Exponential => exp_majorant(r, series::closed_sum(1, 1, r)?),
    })
}

/// `M_f(r)` for harmonic classes, `B_f(r)` (worst case over the rotation) for
/// the logharmonic class, truncated after `truncation` terms.
pub fn majorant_of(
    seq: &CoefficientSequence,
    r: f64,
    truncation: usize,
) -> Result<f64, ClassError> {
    if truncation == 0 {
        return Err(ClassError::Truncation);
    }
    series::check_arg(r)?;
    let linear = seq.weighted_sum(r, 1, truncation, |_, a, b| a + b);
    Ok(match MappingClass::from(seq.class).majorant_kind {
        MajorantKind::Linear => linear,
        MajorantKind::Exponential => exp_majorant(r, linear),
    })
}

/// `S_r/π = Σ n(aₙ² − bₙ²) r^{2n}`.
pub fn area_functional(
    seq: &CoefficientSequence,
    r: f64,
    truncation: usize,
) -> Result<f64, ClassError> {
    if truncation == 0 {
        return Err(ClassError::Truncation);
    }
    series::check_arg(r)?;
    Ok(seq.weighted_sum(r * r, 1, truncation, |n, a, b| n as f64 * (a * a - b * b)))
}

/// Class bound on `S_r/π`: `Σ n r^{2n}` (convex) or `Σ n³ r^{2n}` (univalent).
pub fn class_area_bound(class: MappingClass, r: f64) -> Result<f64, ClassError> {
    if !class.is_harmonic() {
        return Err(ClassError::UnsupportedClass(class.id));
    }
    let p = 2 * class.coeff_bound_exponent + 1;
    Ok(series::closed_sum(p, 1, r * r)?)
}

/// Class bound on `|f(z^m)|^{1 or 2} + Σ_{n≥N} (|aₙ|+|bₙ|) rⁿ`; for the
/// logharmonic class the tail enters as `r·exp(Σ_{n≥N} …)`.
pub fn rogosinski_class_sum(
    class: MappingClass,
    m: u32,
    n: u32,
    r: f64,
    squared: bool,
) -> Result<f64, ClassError> {
    series::check_arg(r)?;
    let point = class.distortion_upper_kind.upper(r.powi(m as i32));
    let point = if squared { point * point } else { point };
    let tail = series::closed_sum(class.coeff_bound_exponent, u64::from(n), r)?;
    let tail = match class.majorant_kind {
        MajorantKind::Linear => tail,
        MajorantKind::Exponential => exp_majorant(r, tail),
    };
    Ok(point + tail)
}

/// Lower bound on `d(f(0), ∂f(U))` for every member of the class.
pub fn distance_lower_bound(class: MappingClass) -> f64 {
    class.distance_lower
}

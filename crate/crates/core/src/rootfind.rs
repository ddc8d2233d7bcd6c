//! Bracketed root finding on `(0, 1)` with a monotonicity certificate.
//!
//! Bisection only needs the sign change; secant steps are interleaved only
//! when they land strictly inside the current bracket. Uniqueness is
//! certified separately by a strict-monotonicity scan of the left-hand side.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::problems::{registry, ProblemError, RadiusProblem};
use crate::series::DOMAIN_CAP;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_GRID_STEP: f64 = 1e-3;
pub const MAX_BISECTIONS: u32 = 200;
pub const MONOTONICITY_POINTS: usize = 1000;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum RootError {
    #[error("no sign change on (0, 1) with grid step {step}")]
    NoSignChange { step: f64 },
    #[error("bracket not reduced below {tol} within {cap} bisections")]
    IterationLimit { cap: u32, tol: f64 },
    #[error("tolerance must be positive and finite, got {0}")]
    Tolerance(f64),
    #[error("grid step must lie in (0, 1), got {0}")]
    GridStep(f64),
    #[error(transparent)]
    Problem(#[from] ProblemError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootResult {
    pub problem_id: String,
    pub root: f64,
    pub bracket: (f64, f64),
    pub residual: f64,
    pub iterations: u32,
    pub unique_certified: bool,
    /// `F` changes sign exactly once on the certificate grid.
    pub single_sign_change: bool,
    pub tolerance: f64,
    /// Central difference of `F` at the root.
    pub slope_estimate: f64,
}

/// A failed solve, tagged with the problem it belongs to.
#[derive(Debug, Clone, Error, PartialEq)]
#[error("{problem_id}: {error}")]
pub struct SolveFailure {
    pub problem_id: String,
    pub error: RootError,
}

fn nonnegative(v: f64) -> bool {
    v >= 0.0
}

/// First sign-change interval found scanning from `ε` towards `1 − ε`.
pub fn find_bracket(f: impl Fn(f64) -> f64, grid_step: f64) -> Result<(f64, f64), RootError> {
    if !(grid_step > 0.0 && grid_step < 1.0) {
        return Err(RootError::GridStep(grid_step));
    }
    let end = 1.0 - DOMAIN_CAP;
    let mut lo = DOMAIN_CAP;
    let mut sign = nonnegative(f(lo));
    let mut k = 1u64;
    loop {
        let hi = (DOMAIN_CAP + k as f64 * grid_step).min(end);
        let s = nonnegative(f(hi));
        if s != sign {
            return Ok((lo, hi));
        }
        if hi >= end {
            return Err(RootError::NoSignChange { step: grid_step });
        }
        lo = hi;
        sign = s;
        k += 1;
    }
}

/// True when `f` is strictly increasing at `points` equispaced nodes of
/// `[ε, 1 − ε]`. Once `f` reaches `+∞` it must stay there.
pub fn monotone_increasing(f: impl Fn(f64) -> f64, points: usize) -> bool {
    if points < 2 {
        return true;
    }
    let h = (1.0 - 2.0 * DOMAIN_CAP) / (points - 1) as f64;
    let mut prev = f(DOMAIN_CAP);
    if prev.is_nan() {
        return false;
    }
    for i in 1..points {
        let x = if i == points - 1 {
            1.0 - DOMAIN_CAP
        } else {
            DOMAIN_CAP + i as f64 * h
        };
        let v = f(x);
        let ok = v > prev || (v == f64::INFINITY && prev == f64::INFINITY);
        if !ok {
            return false;
        }
        prev = v;
    }
    true
}

/// Number of sign changes of `f` over `points` equispaced nodes of `[ε, 1 − ε]`.
pub fn sign_changes(f: impl Fn(f64) -> f64, points: usize) -> usize {
    let h = (1.0 - 2.0 * DOMAIN_CAP) / (points.max(2) - 1) as f64;
    let signs: Vec<bool> = (0..points)
        .map(|i| nonnegative(f((DOMAIN_CAP + i as f64 * h).min(1.0 - DOMAIN_CAP))))
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Shrinks a sign-change bracket of `f` to width `tol`. Returns the final
/// bracket and the iteration count.
pub fn refine(
    f: impl Fn(f64) -> f64,
    (mut lo, mut hi): (f64, f64),
    tol: f64,
) -> Result<((f64, f64), u32), RootError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(RootError::Tolerance(tol));
    }
    let mut flo = f(lo);
    let mut fhi = f(hi);
    let mut iterations = 0;
    while hi - lo > tol {
        if iterations == MAX_BISECTIONS {
            return Err(RootError::IterationLimit {
                cap: MAX_BISECTIONS,
                tol,
            });
        }
        iterations += 1;
        let mid = 0.5 * (lo + hi);
        let secant = hi - fhi * (hi - lo) / (fhi - flo);
        let x = if iterations % 2 == 0 && secant.is_finite() && secant > lo && secant < hi {
            secant
        } else {
            mid
        };
        if x <= lo || x >= hi {
            break;
        }
        let fx = f(x);
        if nonnegative(fx) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
    }
    Ok(((lo, hi), iterations))
}

/// Solves `F(r) = 0` for a registered problem.
pub fn solve(problem: &RadiusProblem, tol: f64) -> Result<RootResult, RootError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(RootError::Tolerance(tol));
    }
    let f = |r: f64| problem.eval_unchecked(r);
    let bracket = find_bracket(f, DEFAULT_GRID_STEP)?;
    let ((lo, hi), iterations) = refine(f, bracket, tol)?;
    let root = 0.5 * (lo + hi);
    let h = 1e-6_f64.min(root - DOMAIN_CAP).min(1.0 - DOMAIN_CAP - root);
    let slope_estimate = (f(root + h) - f(root - h)) / (2.0 * h);
    Ok(RootResult {
        problem_id: problem.id.clone(),
        root,
        bracket: (lo, hi),
        residual: problem.evaluate(root)?.abs(),
        iterations,
        unique_certified: monotone_increasing(|r| problem.lhs_unchecked(r), MONOTONICITY_POINTS),
        single_sign_change: sign_changes(f, MONOTONICITY_POINTS) == 1,
        tolerance: tol,
        slope_estimate,
    })
}

/// Solves every problem in parallel; results are ordered by id.
pub fn solve_many(problems: &[RadiusProblem], tol: f64) -> Vec<Result<RootResult, SolveFailure>> {
    let mut sorted: Vec<&RadiusProblem> = problems.iter().collect();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));
    sorted
        .par_iter()
        .map(|p| {
            solve(p, tol).map_err(|error| SolveFailure {
                problem_id: p.id.clone(),
                error,
            })
        })
        .collect()
}

/// [`solve_many`] over the whole registry.
pub fn solve_all(tol: f64) -> Vec<Result<RootResult, SolveFailure>> {
    solve_many(&registry(), tol)
}

//! Power sums `Σ_{n≥N} nᵖ rⁿ` for `p ∈ {0, 1, 2, 3}`.
//!
//! Two independent routes are provided: [`closed_sum`] evaluates the rational
//! closed forms, and [`truncated_sum`] adds terms one by one under compensated
//! accumulation until a proven tail bound drops below the requested error.
//! The second route exists to check the first.

use std::env;

use thiserror::Error;

/// Distance from `r = 1` below which every sum is rejected.
pub const DOMAIN_CAP: f64 = 1e-9;

/// Largest supported power `p`.
pub const MAX_POWER: u32 = 3;

/// Default number of terms [`truncated_sum`] may add before giving up.
pub const DEFAULT_TERM_BUDGET: u64 = 1_000_000;

/// Environment variable overriding [`DEFAULT_TERM_BUDGET`].
pub const TERM_BUDGET_ENV: &str = "BOHR_RADII_TERM_BUDGET";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("argument r = {r} is outside [0, 1 - {DOMAIN_CAP}]")]
    Domain { r: f64 },
    #[error("power p = {p} is not in 0..={MAX_POWER}")]
    Power { p: u32 },
    #[error("start index must be at least 1")]
    StartIndex,
    #[error("empty range {from}..={to}")]
    Range { from: u64, to: u64 },
    #[error("target error must be positive and finite, got {0}")]
    Target(f64),
    #[error("term budget of {budget} exhausted before the tail bound reached {target}")]
    IterationLimit { budget: u64, target: f64 },
}

/// A validated power sum together with its closed-form value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub power: u32,
    pub start: u64,
    pub arg: f64,
    pub value: f64,
}

impl SeriesSum {
    pub fn new(power: u32, start: u64, arg: f64) -> Result<Self, SeriesError> {
        let value = closed_sum(power, start, arg)?;
        Ok(Self {
            power,
            start,
            arg,
            value,
        })
    }
}

/// Upper bound on `Σ_{n≥start} nᵖ rⁿ`, the part of a series not yet summed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBound {
    pub start: u64,
    pub arg: f64,
    pub bound: f64,
}

/// Result of [`truncated_sum`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncated {
    pub value: f64,
    pub terms_used: u64,
    pub tail: TailBound,
}

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        acc.extend(iter);
        acc
    }
}

/// Term budget from [`TERM_BUDGET_ENV`], falling back to the default.
pub fn term_budget() -> u64 {
    env::var(TERM_BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&b: &u64| b > 0)
        .unwrap_or(DEFAULT_TERM_BUDGET)
}

pub(crate) fn check_arg(r: f64) -> Result<(), SeriesError> {
    if (0.0..=1.0 - DOMAIN_CAP).contains(&r) {
        Ok(())
    } else {
        Err(SeriesError::Domain { r })
    }
}

fn check_power(p: u32) -> Result<(), SeriesError> {
    if p <= MAX_POWER {
        Ok(())
    } else {
        Err(SeriesError::Power { p })
    }
}

/// `rⁿ` for an index that may exceed `i32`.
pub(crate) fn pow_index(r: f64, n: u64) -> f64 {
    match i32::try_from(n) {
        Ok(k) => r.powi(k),
        Err(_) => r.powf(n as f64),
    }
}

/// `Σ_{j≥0} jᵏ rʲ` with `0⁰ = 1`.
fn moment(k: u32, r: f64) -> f64 {
    let q = 1.0 - r;
    match k {
        0 => 1.0 / q,
        1 => r / (q * q),
        2 => r * (1.0 + r) / (q * q * q),
        3 => r * (1.0 + r * (4.0 + r)) / (q * q * q * q),
        _ => unreachable!("power checked by caller"),
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

/// Closed-form value of `Σ_{n≥start} nᵖ rⁿ`.
///
/// For `start = 1` this is `r/(1−r)`, `r/(1−r)²`, `r(1+r)/(1−r)³` or
/// `r(1+4r+r²)/(1−r)⁴`. Later starts use the shifted expansion
/// `r^N Σ_k C(p,k) N^{p−k} Σ_j jᵏ rʲ`, which avoids subtracting the head of
/// the series and so keeps full relative accuracy in tiny tails.
pub fn closed_sum(p: u32, start: u64, r: f64) -> Result<f64, SeriesError> {
    check_power(p)?;
    check_arg(r)?;
    if start == 0 {
        return Err(SeriesError::StartIndex);
    }
    if r == 0.0 {
        return Ok(0.0);
    }
    if start == 1 {
        return Ok(match p {
            0 => r / (1.0 - r),
            _ => moment(p, r),
        });
    }
    let n = start as f64;
    let shifted: f64 = (0..=p)
        .map(|k| binomial(p, k) * n.powi((p - k) as i32) * moment(k, r))
        .sum();
    Ok(pow_index(r, start) * shifted)
}

/// Brute-force `Σ_{n≥start} nᵖ rⁿ`, summed until the omitted tail is provably
/// below `target_abs_err`. Uses the budget from [`term_budget`].
///
/// The guarantee covers truncation; floating-point rounding of the partial
/// sum is kept small by compensated accumulation but is not part of the bound.
pub fn truncated_sum(
    p: u32,
    start: u64,
    r: f64,
    target_abs_err: f64,
) -> Result<Truncated, SeriesError> {
    truncated_sum_with_budget(p, start, r, target_abs_err, term_budget())
}

pub fn truncated_sum_with_budget(
    p: u32,
    start: u64,
    r: f64,
    target_abs_err: f64,
    budget: u64,
) -> Result<Truncated, SeriesError> {
    check_power(p)?;
    check_arg(r)?;
    if start == 0 {
        return Err(SeriesError::StartIndex);
    }
    if !(target_abs_err > 0.0 && target_abs_err.is_finite()) {
        return Err(SeriesError::Target(target_abs_err));
    }
    if r == 0.0 {
        return Ok(Truncated {
            value: 0.0,
            terms_used: 0,
            tail: TailBound {
                start,
                arg: r,
                bound: 0.0,
            },
        });
    }

    let mut acc = CompensatedSum::new();
    let mut n = start;
    let mut terms_used = 0;
    loop {
        if terms_used >= budget {
            return Err(SeriesError::IterationLimit {
                budget,
                target: target_abs_err,
            });
        }
        let term = (n as f64).powi(p as i32) * pow_index(r, n);
        acc.add(term);
        terms_used += 1;
        if let Some(bound) = tail_after(p, n, r, term) {
            if bound <= target_abs_err {
                return Ok(Truncated {
                    value: acc.value(),
                    terms_used,
                    tail: TailBound {
                        start: n + 1,
                        arg: r,
                        bound,
                    },
                });
            }
        }
        n += 1;
    }
}

/// Bound on `Σ_{n>last} nᵖ rⁿ` given the last added term.
///
/// The ratio of consecutive terms `r((n+1)/n)ᵖ` decreases in `n`, so the tail
/// is dominated by a geometric series with ratio `ρ = r((last+1)/last)ᵖ`. The
/// bound is only issued once `ρ` sits at or below the midpoint `(1+r)/2`;
/// before that the caller keeps summing.
fn tail_after(p: u32, last: u64, r: f64, last_term: f64) -> Option<f64> {
    let growth = ((last as f64 + 1.0) / last as f64).powi(p as i32);
    let rho = r * growth;
    if rho <= 0.5 * (1.0 + r) {
        Some(last_term * rho / (1.0 - rho))
    } else {
        None
    }
}

/// Number of terms after which the tail of `Σ nᵖ rⁿ` (from `n = 1`) is below
/// `target_abs_err`.
pub fn terms_needed(p: u32, r: f64, target_abs_err: f64) -> Result<u64, SeriesError> {
    let t = truncated_sum(p, 1, r, target_abs_err)?;
    Ok(t.terms_used)
}

/// `Σ_{n=from}^{to} nᵖ rⁿ` by direct evaluation, with `0⁰ = 1`.
pub fn finite_sum(p: u32, from: u64, to: u64, r: f64) -> Result<f64, SeriesError> {
    check_power(p)?;
    if from > to {
        return Err(SeriesError::Range { from, to });
    }
    if !r.is_finite() {
        return Err(SeriesError::Domain { r });
    }
    let acc: CompensatedSum = (from..=to)
        .map(|n| (n as f64).powi(p as i32) * pow_index(r, n))
        .collect();
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_sum_reference_values() {
        assert!((closed_sum(0, 1, 1.0 / 3.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((closed_sum(1, 1, 0.5).unwrap() - 2.0).abs() < 1e-15);
        // Σ_{n≥3} n/2ⁿ = 2 − (1/2 + 2/4)
        assert!((closed_sum(1, 3, 0.5).unwrap() - 1.0).abs() < 1e-15);
        // Σ_{n≥5} 0.9ⁿ
        let geo = 0.9_f64.powi(5) / 0.1;
        assert!((closed_sum(0, 5, 0.9).unwrap() - geo).abs() < 1e-12);
    }

    #[test]
    fn cube_sum_at_square_matches_printed_rational() {
        let r: f64 = 0.25;
        let r2 = r * r;
        let printed = (r.powi(6) + 4.0 * r.powi(4) + r2) / (r2 - 1.0).powi(4);
        let closed = closed_sum(3, 1, r2).unwrap();
        assert!((closed - printed).abs() <= 1e-15 * printed);
    }

    #[test]
    fn linear_tail_matches_shifted_closed_form() {
        for &n in &[1_u64, 2, 3, 7, 20] {
            for &r in &[0.1f64, 0.4, 0.8] {
                let nf = n as f64;
                let expect = r.powi(n as i32) * (nf - nf * r + r) / (1.0 - r).powi(2);
                let got = closed_sum(1, n, r).unwrap();
                assert!((got - expect).abs() <= 1e-14 * expect, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn closed_sum_errors() {
        assert_eq!(closed_sum(4, 1, 0.5), Err(SeriesError::Power { p: 4 }));
        assert!(matches!(
            closed_sum(1, 1, 1.0),
            Err(SeriesError::Domain { .. })
        ));
        assert!(matches!(
            closed_sum(1, 1, -0.1),
            Err(SeriesError::Domain { .. })
        ));
        assert!(matches!(
            closed_sum(1, 1, f64::NAN),
            Err(SeriesError::Domain { .. })
        ));
        assert_eq!(closed_sum(1, 0, 0.5), Err(SeriesError::StartIndex));
        assert!(closed_sum(3, 1, 1.0 - DOMAIN_CAP).unwrap().is_finite());
    }

    #[test]
    fn zero_at_origin() {
        for p in 0..=MAX_POWER {
            for n in [1, 4] {
                assert_eq!(closed_sum(p, n, 0.0).unwrap(), 0.0);
            }
        }
    }

    #[test]
    fn truncated_reference_values() {
        let t = truncated_sum(1, 1, 0.5, 1e-12).unwrap();
        assert!((t.value - 2.0).abs() < 1e-12);
        assert!(t.tail.bound <= 1e-12);

        let expect = 0.3 * 1.3 / 0.343;
        let t = truncated_sum(2, 1, 0.3, 1e-12).unwrap();
        assert!((t.value - expect).abs() < 1e-12);

        let t = truncated_sum(0, 5, 0.9, 1e-10).unwrap();
        assert!((t.value - 0.9_f64.powi(5) / 0.1).abs() < 1e-10);
    }

    #[test]
    fn tail_bound_dominates_true_tail() {
        for p in 0..=MAX_POWER {
            for &r in &[0.2, 0.6, 0.9] {
                let t = truncated_sum(p, 1, r, 1e-6).unwrap();
                let rest = closed_sum(p, t.tail.start, r).unwrap();
                assert!(
                    rest <= t.tail.bound * (1.0 + 1e-12),
                    "p={p} r={r}: {rest} > {}",
                    t.tail.bound
                );
            }
        }
    }

    #[test]
    fn truncated_budget_exhaustion() {
        let err = truncated_sum_with_budget(3, 1, 0.99, 1e-14, 10).unwrap_err();
        assert!(matches!(
            err,
            SeriesError::IterationLimit { budget: 10, .. }
        ));
        assert!(matches!(
            truncated_sum(1, 1, 0.5, 0.0),
            Err(SeriesError::Target(_))
        ));
    }

    #[test]
    fn finite_sum_values() {
        assert!((finite_sum(0, 1, 3, 0.5).unwrap() - 0.875).abs() < 1e-15);
        assert!((finite_sum(1, 1, 2, 0.5).unwrap() - 1.0).abs() < 1e-15);
        let head = finite_sum(1, 1, 100, 0.5).unwrap();
        assert!((head - closed_sum(1, 1, 0.5).unwrap()).abs() < 1e-12);
        assert_eq!(
            finite_sum(1, 3, 2, 0.5),
            Err(SeriesError::Range { from: 3, to: 2 })
        );
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = CompensatedSum::new();
        acc.add(1.0);
        for _ in 0..10_000 {
            acc.add(1e-16);
        }
        assert!((acc.value() - (1.0 + 1e-12)).abs() < 1e-20);
    }

    #[test]
    fn series_sum_carries_value() {
        let s = SeriesSum::new(1, 1, 0.5).unwrap();
        assert_eq!(s.value, 2.0);
        assert!(SeriesSum::new(1, 1, 2.0).is_err());
    }
}

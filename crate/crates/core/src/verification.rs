//! Independent checks of the registered problems: the class-level inequality
//! below each root, failure of the extremal sequence above it, closed forms
//! against brute-force sums, Rogosinski limits, and a discrepancy list
//! against the printed values.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classes::{
    majorant_of, ClassError, CoefficientSequence, ExtremalFunction, MappingClass,
};
use crate::problems::functional::truncation_for;
use crate::problems::registry::ROG_GRID;
use crate::problems::{
    registry, Family, LimitDirection, Order, ProblemError, RadiusProblem, TailForm,
};
use crate::rootfind::{self, find_bracket, refine, RootError, RootResult, DEFAULT_GRID_STEP};
use crate::series::{self, DOMAIN_CAP};

/// Absolute tolerance for agreement with a printed three-decimal value.
pub const PAPER_MATCH_TOL: f64 = 5e-4;
pub const INEQUALITY_SLACK: f64 = 1e-12;
pub const INEQUALITY_GRID: usize = 50;
pub const SHARPNESS_DELTA: f64 = 1e-3;
/// Closed form against truncated sum, relative to `max(1, |value|)`.
pub const SERIES_ORACLE_TOL: f64 = 2e-13;
pub const LIMIT_TOL: f64 = 1e-3;
/// Relative gap between the extremal witness at the root and the constant
/// below which the extremal sequence counts as saturating.
pub const SATURATION_TOL: f64 = 1e-8;
pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_SAMPLES: usize = 16;
pub const TREND_POINTS: [u32; 5] = [5, 10, 20, 40, 80];
const SAMPLED_GRID: usize = 10;
const BOUNDARY_RHO: f64 = 1.0 - 1e-9;
const BOUNDARY_SAMPLES: usize = 4096;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum VerificationError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error("root + delta = {0} is outside [0, 1 − ε]")]
    Domain(f64),
    #[error("delta must be positive, got {0}")]
    Delta(f64),
}

impl From<series::SeriesError> for VerificationError {
    fn from(e: series::SeriesError) -> Self {
        VerificationError::Class(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PaperMatch {
    Match3SF,
    Mismatch,
    NoClaim,
}

pub fn paper_match(computed: f64, claim: Option<f64>) -> PaperMatch {
    match claim {
        None => PaperMatch::NoClaim,
        Some(c) if (computed - c).abs() < PAPER_MATCH_TOL => PaperMatch::Match3SF,
        Some(_) => PaperMatch::Mismatch,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DiscrepancyKind {
    RootVsClaim,
    FormulaVsTailOracle,
    LimitVsClaim,
    SharpnessClaim,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscrepancyRecord {
    pub problem_id: String,
    pub kind: DiscrepancyKind,
    pub paper_value: f64,
    pub computed_value: f64,
    pub explanation: String,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub tol: f64,
    pub seed: u64,
    /// Random admissible sequences per problem.
    pub samples: usize,
    pub delta: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tol: rootfind::DEFAULT_TOLERANCE,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            delta: SHARPNESS_DELTA,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub problem_id: String,
    pub computed_root: f64,
    pub paper_root: Option<f64>,
    pub paper_match: PaperMatch,
    pub unique_certified: bool,
    pub inequality_holds_below: bool,
    pub sharpness_fails_above: bool,
    /// The extremal sequence meets the conclusion constant at the root.
    pub saturated: bool,
    pub oracle_series_ok: bool,
    /// Root of the class-level functional minus the conclusion constant.
    pub class_level_root: Option<f64>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// Short machine-readable flags for tables.
    pub fn flags(&self) -> Vec<&'static str> {
        let mut f = Vec::new();
        if self.paper_match == PaperMatch::Mismatch {
            f.push("paper_mismatch");
        }
        if !self.unique_certified {
            f.push("not_monotone");
        }
        if !self.inequality_holds_below {
            f.push("inequality_fails");
        }
        if !self.sharpness_fails_above {
            f.push("not_sharp");
        }
        if !self.oracle_series_ok {
            f.push("tail_oracle");
        }
        f
    }
}

/// `points` equispaced radii in `(0, upper]`.
pub fn grid_up_to(upper: f64, points: usize) -> Vec<f64> {
    (1..=points)
        .map(|i| upper * i as f64 / points as f64)
        .collect()
}

/// True iff the class-level functional stays at or below the conclusion
/// constant (plus slack) on every grid point.
pub fn check_inequality(problem: &RadiusProblem, class: MappingClass, grid: &[f64]) -> bool {
    let constant = problem.conclusion.constant(class);
    grid.iter().all(|&r| {
        problem
            .functional
            .class_bound(class, r)
            .is_ok_and(|v| v <= constant + INEQUALITY_SLACK)
    })
}

fn point_bound(seq: &CoefficientSequence, x: f64, truncation: usize) -> f64 {
    let class = MappingClass::from(seq.class());
    let own = majorant_of(seq, x, truncation).unwrap_or(f64::INFINITY);
    own.min(class.distortion_upper_kind.upper(x))
}

fn stream_seed(seed: u64, id: &str) -> u64 {
    // FNV-1a keeps the per-problem stream independent of evaluation order
    id.bytes().fold(0xcbf2_9ce4_8422_2325_u64, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    }) ^ seed
}

/// Evaluates the functional for random admissible sequences on a grid up to
/// `upper`; true iff none exceeds the conclusion constant.
pub fn check_inequality_sampled(
    problem: &RadiusProblem,
    upper: f64,
    seed: u64,
    samples: usize,
) -> bool {
    let class = problem.mapping_class();
    let constant = problem.conclusion.constant(class);
    let len = truncation_for(upper);
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(seed, &problem.id));
    let grid = grid_up_to(upper, SAMPLED_GRID);
    (0..samples).all(|_| {
        let seq = CoefficientSequence::random(class.id, len, &mut rng);
        let point = |x: f64| point_bound(&seq, x, len);
        grid.iter().all(|&r| {
            problem
                .functional
                .witness(&seq, &point, r, len)
                .is_ok_and(|v| v <= constant + INEQUALITY_SLACK)
        })
    })
}

/// Functional of the extremal sequence at `r`.
pub fn extremal_witness(
    problem: &RadiusProblem,
    extremal: ExtremalFunction,
    r: f64,
) -> Result<f64, VerificationError> {
    let len = truncation_for(r);
    let seq = extremal.sequence(problem.class, len)?;
    Ok(problem
        .functional
        .witness(&seq, &|x| extremal.value(x), r, len)?)
}

/// True iff the extremal sequence exceeds the conclusion constant at
/// `root + delta`.
pub fn check_sharpness(
    problem: &RadiusProblem,
    root: f64,
    extremal: ExtremalFunction,
    delta: f64,
) -> Result<bool, VerificationError> {
    if delta.is_nan() || delta <= 0.0 {
        return Err(VerificationError::Delta(delta));
    }
    let r = root + delta;
    if r > 1.0 - DOMAIN_CAP {
        return Err(VerificationError::Domain(r));
    }
    Ok(extremal_witness(problem, extremal, r)? > problem.conclusion_constant())
}

/// Radii `0.05, 0.10, …, 0.95` used by the series oracle.
pub fn oracle_grid() -> Vec<f64> {
    (1..=19).map(|i| 0.05 * i as f64).collect()
}

fn brute_force(p: u32, start: u64, x: f64, reference: f64) -> Result<f64, VerificationError> {
    let target = 1e-16 * reference.abs().max(1.0);
    Ok(series::truncated_sum(p, start, x, target)?.value)
}

fn printed_tail(n: u32, r: f64) -> f64 {
    let nf = f64::from(n);
    r.powi(n as i32) * (1.0 - nf * r + r) / ((1.0 - r) * (1.0 - r))
}

/// Compares every series node and printed tail of the expression with
/// term-by-term summation on `grid`.
pub fn check_series_oracle(
    problem: &RadiusProblem,
    grid: &[f64],
) -> Result<bool, VerificationError> {
    for node in problem.lhs.series_nodes() {
        let Order::Finite(start) = node.start else {
            continue;
        };
        for &r in grid {
            let x = node.arg.apply(r);
            let closed = series::closed_sum(node.power, u64::from(start), x)?;
            let brute = brute_force(node.power, u64::from(start), x, closed)?;
            if (closed - brute).abs() > SERIES_ORACLE_TOL * closed.abs().max(1.0) {
                return Ok(false);
            }
        }
    }
    for n in problem.lhs.literal_tails() {
        for &r in grid {
            let printed = printed_tail(n, r);
            let brute = brute_force(1, u64::from(n), r, printed)?;
            if (printed - brute).abs() > SERIES_ORACLE_TOL * printed.abs().max(1.0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Root of the class-level functional minus the conclusion constant.
pub fn class_level_root(problem: &RadiusProblem, tol: f64) -> Result<f64, VerificationError> {
    let class = problem.mapping_class();
    let constant = problem.conclusion.constant(class);
    let f = |r: f64| {
        problem
            .functional
            .class_bound(class, r)
            .map_or(f64::NAN, |v| v - constant)
    };
    let bracket = find_bracket(f, DEFAULT_GRID_STEP)?;
    let ((lo, hi), _) = refine(f, bracket, tol)?;
    Ok(0.5 * (lo + hi))
}

/// Bracketed root without the uniqueness scans; `1` when the function stays
/// negative on the whole interval.
pub fn limit_root(problem: &RadiusProblem, tol: f64) -> Result<f64, VerificationError> {
    let f = |r: f64| problem.eval_unchecked(r);
    match find_bracket(f, DEFAULT_GRID_STEP) {
        Ok(bracket) => {
            let ((lo, hi), _) = refine(f, bracket, tol)?;
            Ok(0.5 * (lo + hi))
        }
        Err(RootError::NoSignChange { .. }) if f(1.0 - DOMAIN_CAP) < 0.0 => Ok(1.0),
        Err(e) => Err(e.into()),
    }
}

fn root_of(f: impl Fn(f64) -> f64) -> f64 {
    find_bracket(&f, DEFAULT_GRID_STEP)
        .and_then(|b| refine(&f, b, rootfind::DEFAULT_TOLERANCE))
        .map_or(f64::NAN, |((lo, hi), _)| 0.5 * (lo + hi))
}

/// A printed statement about a limit, with the tolerance its precision allows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitClaim {
    pub text: String,
    pub value: f64,
    pub tolerance: f64,
}

impl LimitClaim {
    fn new(text: impl Into<String>, value: f64) -> Self {
        Self {
            text: text.into(),
            value,
            tolerance: LIMIT_TOL,
        }
    }

    /// A value printed with `decimals` digits after the point.
    fn rounded(text: impl Into<String>, value: f64, decimals: i32) -> Self {
        Self {
            text: text.into(),
            value,
            tolerance: LIMIT_TOL.max(0.5 * 10f64.powi(-decimals)),
        }
    }
}

/// Printed limit statements for a family in a given direction.
pub fn printed_limit_claims(family: Family, direction: LimitDirection) -> Vec<LimitClaim> {
    use LimitDirection::*;
    let log_tail = |n: u32| {
        let nf = f64::from(n);
        move |r: f64| {
            r * (r.powi(n as i32) * (nf - nf * r + r) / ((1.0 - r) * (1.0 - r))).exp() - 0.25
        }
    };
    match (family, direction) {
        (Family::ConvexRog, NToInfinity { m }) => vec![LimitClaim::new(
            "(1/2)^(1/m)",
            0.5f64.powf(1.0 / f64::from(m)),
        )],
        (Family::ConvexRog, MToInfinity { n }) => {
            let mut v = vec![LimitClaim::new(
                "root of r^N = 1 - r",
                root_of(|r| r.powi(n as i32) - 1.0 + r),
            )];
            if n == 1 {
                v.push(LimitClaim::new("remark: r_1 = 1/3", 1.0 / 3.0));
            }
            v
        }
        (Family::ConvexRogSquared, NToInfinity { m }) => vec![LimitClaim::new(
            "(sqrt(2) - 1)^(1/m)",
            (2f64.sqrt() - 1.0).powf(1.0 / f64::from(m)),
        )],
        (Family::ConvexRogSquared, MToInfinity { n }) => vec![LimitClaim::new(
            "root of 2r^N = 1 - r",
            root_of(|r| 2.0 * r.powi(n as i32) - 1.0 + r),
        )],
        (Family::ConvexRog | Family::ConvexRogSquared | Family::UnivalentRog(_), Joint) => {
            vec![LimitClaim::new("1", 1.0)]
        }
        (Family::UnivalentRog(_), NToInfinity { m }) => vec![LimitClaim::new(
            "(1/5)^(1/m)",
            0.2f64.powf(1.0 / f64::from(m)),
        )],
        (Family::UnivalentRog(_), MToInfinity { n }) => {
            let nf = f64::from(n);
            let mut v = vec![LimitClaim::new(
                "root of 4r^N(N - Nr + 1) = (1 - r)^2",
                root_of(|r| 4.0 * r.powi(n as i32) * (nf - nf * r + 1.0) - (1.0 - r) * (1.0 - r)),
            )];
            if n == 1 {
                v.push(LimitClaim::rounded("remark: r_1 = 0.17", 0.17, 2));
            }
            v
        }
        (Family::UnivalentRogSquared(_), _) => Vec::new(),
        (Family::LogRog, NToInfinity { m }) => vec![LimitClaim::new(
            "a_m, root of r^m/(1 - r^m)^2 + r = 1/4",
            root_of(|r| {
                let x = r.powi(m as i32);
                x / ((1.0 - x) * (1.0 - x)) + r - 0.25
            }),
        )],
        (Family::LogRogSquared, NToInfinity { m }) => vec![LimitClaim::new(
            "a_m, root of r^(2m)/(1 - r^m)^4 + r = 1/4",
            root_of(|r| {
                let x = r.powi(m as i32);
                x * x / (1.0 - x).powi(4) + r - 0.25
            }),
        )],
        (Family::LogRog | Family::LogRogSquared, MToInfinity { n }) => {
            let mut v = vec![LimitClaim::new(
                "root of r exp(r^N(N - Nr + r)/(1 - r)^2) = 1/4",
                root_of(log_tail(n)),
            )];
            if n == 1 && family == Family::LogRog {
                v.push(LimitClaim::rounded(
                    "remark: r_1 = 0.286 for large m",
                    0.286,
                    3,
                ));
            }
            v
        }
        (Family::LogRog | Family::LogRogSquared, Joint) => vec![LimitClaim::new("1/4", 0.25)],
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimOutcome {
    #[serde(flatten)]
    pub claim: LimitClaim,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitCheck {
    pub family: String,
    pub direction: LimitDirection,
    pub limit_problem_id: String,
    /// `(k, root)` along the trend; `k` is the parameter sent to infinity.
    pub trend: Vec<(u32, f64)>,
    pub limit_root: f64,
    pub claims: Vec<ClaimOutcome>,
}

impl LimitCheck {
    pub fn discrepancies(&self) -> Vec<DiscrepancyRecord> {
        let trend = self
            .trend
            .last()
            .map(|(k, v)| format!("; along the trend the root is {v:.6} at {k}"))
            .unwrap_or_default();
        self.claims
            .iter()
            .filter(|c| !c.agrees)
            .map(|c| DiscrepancyRecord {
                problem_id: self.limit_problem_id.clone(),
                kind: DiscrepancyKind::LimitVsClaim,
                paper_value: c.claim.value,
                computed_value: self.limit_root,
                explanation: format!(
                    "stated limit {} = {:.6}; the limit equation gives {:.6}{trend}",
                    c.claim.text, c.claim.value, self.limit_root
                ),
            })
            .collect()
    }
}

/// Solves a family along `trend_points` in the given direction and compares
/// the limit equation's root with every printed claim.
pub fn check_rog_limits(
    family: Family,
    direction: LimitDirection,
    trend_points: &[u32],
) -> Result<LimitCheck, VerificationError> {
    let limit = family.limit_problem(direction)?;
    let tol = rootfind::DEFAULT_TOLERANCE;
    let root = limit_root(&limit, tol)?;
    let trend = trend_points
        .iter()
        .map(|&k| {
            let (m, n) = match direction {
                LimitDirection::NToInfinity { m } => (m, k),
                LimitDirection::MToInfinity { n } => (k, n),
                LimitDirection::Joint => (k, k),
            };
            let p = family.problem(m.into(), n.into());
            limit_root(&p, tol).map(|r| (k, r))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let claims = printed_limit_claims(family, direction)
        .into_iter()
        .map(|claim| ClaimOutcome {
            agrees: (claim.value - root).abs() <= claim.tolerance,
            claim,
        })
        .collect();
    Ok(LimitCheck {
        family: family.id(),
        direction,
        limit_problem_id: limit.id,
        trend,
        limit_root: root,
        claims,
    })
}

/// Every limit direction the report examines for a family.
pub fn limit_directions(family: Family) -> Vec<LimitDirection> {
    let printed = matches!(
        family,
        Family::UnivalentRog(TailForm::Printed) | Family::UnivalentRogSquared(TailForm::Printed)
    );
    let mut v = Vec::new();
    if !printed {
        v.extend(ROG_GRID.iter().map(|&m| LimitDirection::NToInfinity { m }));
    }
    let starts: &[u32] = if printed { &[1, 2] } else { &ROG_GRID };
    v.extend(starts.iter().map(|&n| LimitDirection::MToInfinity { n }));
    if !printed {
        v.push(LimitDirection::Joint);
    }
    v
}

/// Checks for one solved problem.
pub fn verify_problem(
    problem: &RadiusProblem,
    solved: &RootResult,
    options: &VerifyOptions,
) -> Result<VerificationReport, VerificationError> {
    let class = problem.mapping_class();
    let extremal = class.extremal();
    let constant = problem.conclusion_constant();
    let (lo, _) = solved.bracket;
    let inequality = check_inequality(problem, class, &grid_up_to(lo, INEQUALITY_GRID))
        && check_inequality_sampled(problem, lo, options.seed, options.samples);
    let at_root = extremal_witness(problem, extremal, solved.root)?;
    let mut notes = Vec::new();
    let class_root = class_level_root(problem, options.tol).ok();
    if let Some(c) = class_root {
        if c - solved.root > PAPER_MATCH_TOL {
            notes.push(format!(
                "equation is conservative: the class-level inequality holds up to {c:.6}"
            ));
        }
    }
    if !solved.unique_certified && solved.single_sign_change {
        notes.push("left-hand side is not monotone, but F changes sign only once".into());
    }
    Ok(VerificationReport {
        problem_id: problem.id.clone(),
        computed_root: solved.root,
        paper_root: problem.paper_root,
        paper_match: paper_match(solved.root, problem.paper_root),
        unique_certified: solved.unique_certified,
        inequality_holds_below: inequality,
        sharpness_fails_above: check_sharpness(problem, solved.root, extremal, options.delta)?,
        saturated: (at_root - constant).abs() <= SATURATION_TOL * constant,
        oracle_series_ok: check_series_oracle(problem, &oracle_grid())?,
        class_level_root: class_root,
        notes,
    })
}

/// Everything `verify` reports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FullReport {
    pub solutions: Vec<RootResult>,
    pub reports: Vec<VerificationReport>,
    pub discrepancies: Vec<DiscrepancyRecord>,
    pub limits: Vec<LimitCheck>,
    pub failures: Vec<CheckFailure>,
}

/// A problem whose solve or checks failed.
#[derive(Debug, Clone, Error, PartialEq, Serialize)]
#[error("{problem_id}: {error}")]
pub struct CheckFailure {
    pub problem_id: String,
    #[serde(serialize_with = "display")]
    pub error: VerificationError,
}

fn display<S: serde::Serializer>(e: &VerificationError, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(e)
}

impl FullReport {
    pub fn report(&self, id: &str) -> Option<&VerificationReport> {
        self.reports.iter().find(|r| r.problem_id == id)
    }

    pub fn solution(&self, id: &str) -> Option<&RootResult> {
        self.solutions.iter().find(|r| r.problem_id == id)
    }

    pub fn has_mismatch(&self) -> bool {
        self.reports
            .iter()
            .any(|r| r.paper_match == PaperMatch::Mismatch)
    }
}

fn root_vs_claim(
    problem: &RadiusProblem,
    report: &VerificationReport,
    all: &[(RadiusProblem, VerificationReport)],
) -> Option<DiscrepancyRecord> {
    let claim = problem.paper_root?;
    if report.paper_match != PaperMatch::Mismatch {
        return None;
    }
    let mut explanation = format!(
        "printed root {claim} differs from the computed root {:.6} by {:.2e}",
        report.computed_root,
        (report.computed_root - claim).abs()
    );
    let reproduced: Vec<&str> = all
        .iter()
        .filter(|(p, r)| {
            p.id != problem.id
                && p.theorem_ref == problem.theorem_ref
                && p.class == problem.class
                && paper_match(r.computed_root, Some(claim)) == PaperMatch::Match3SF
        })
        .map(|(p, _)| p.id.as_str())
        .collect();
    if !reproduced.is_empty() {
        explanation.push_str(&format!(
            "; the printed value is the root of {}",
            reproduced.join(", ")
        ));
    }
    Some(DiscrepancyRecord {
        problem_id: problem.id.clone(),
        kind: DiscrepancyKind::RootVsClaim,
        paper_value: claim,
        computed_value: report.computed_root,
        explanation,
    })
}

fn problem_discrepancies(
    problem: &RadiusProblem,
    report: &VerificationReport,
    all: &[(RadiusProblem, VerificationReport)],
) -> Vec<DiscrepancyRecord> {
    let mut out: Vec<DiscrepancyRecord> = root_vs_claim(problem, report, all).into_iter().collect();
    let root = report.computed_root;
    for n in problem.lhs.literal_tails() {
        let printed = printed_tail(n, root);
        let brute = series::closed_sum(1, u64::from(n), root).unwrap_or(f64::NAN);
        if (printed - brute).abs() > SERIES_ORACLE_TOL * brute.abs().max(1.0) {
            out.push(DiscrepancyRecord {
                problem_id: problem.id.clone(),
                kind: DiscrepancyKind::FormulaVsTailOracle,
                paper_value: printed,
                computed_value: brute,
                explanation: format!(
                    "at r = {root:.6} the printed tail r^N(1 - Nr + r)/(1 - r)^2 with N = {n} is {printed:.6}, \
                     the brute-force sum of n r^n from N is {brute:.6}"
                ),
            });
        }
    }
    if !report.inequality_holds_below {
        let class_root = report.class_level_root.unwrap_or(f64::NAN);
        out.push(DiscrepancyRecord {
            problem_id: problem.id.clone(),
            kind: DiscrepancyKind::FormulaVsTailOracle,
            paper_value: root,
            computed_value: class_root,
            explanation: format!(
                "the class-level functional exceeds {} below the root {root:.6} of the equation; \
                 the inequality only holds up to {class_root:.6}",
                problem.conclusion_constant()
            ),
        });
    }
    if problem.sharpness_claimed && !report.sharpness_fails_above {
        let extremal = problem.mapping_class().extremal();
        let r = root + SHARPNESS_DELTA;
        let w = extremal_witness(problem, extremal, r).unwrap_or(f64::NAN);
        out.push(DiscrepancyRecord {
            problem_id: problem.id.clone(),
            kind: DiscrepancyKind::SharpnessClaim,
            paper_value: problem.conclusion_constant(),
            computed_value: w,
            explanation: format!(
                "radius is stated to be best possible, but the {extremal:?} sequence gives {w:.6} \
                 at r = {r:.6}, still below {}",
                problem.conclusion_constant()
            ),
        });
    }
    if problem.id == "harm.convex.bohr" {
        let d = ExtremalFunction::HalfPlaneMap.boundary_distance(BOUNDARY_RHO, BOUNDARY_SAMPLES);
        out.push(DiscrepancyRecord {
            problem_id: problem.id.clone(),
            kind: DiscrepancyKind::SharpnessClaim,
            paper_value: 0.25,
            computed_value: d,
            explanation: format!(
                "sharpness remark gives boundary distance 1/4 for z/(1 - z); the class bound is 1/2 \
                 and the half-plane image has distance {d:.6}"
            ),
        });
    }
    out
}

/// Solves and verifies the whole registry, then checks every Rogosinski limit.
pub fn full_report(options: &VerifyOptions) -> FullReport {
    full_report_for(&registry(), options)
}

/// [`full_report`] over an explicit problem list.
pub fn full_report_for(problems: &[RadiusProblem], options: &VerifyOptions) -> FullReport {
    let mut sorted: Vec<&RadiusProblem> = problems.iter().collect();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));
    let outcomes: Vec<Result<(RootResult, VerificationReport), CheckFailure>> = sorted
        .par_iter()
        .map(|p| {
            let fail = |error: VerificationError| CheckFailure {
                problem_id: p.id.clone(),
                error,
            };
            let solved = rootfind::solve(p, options.tol).map_err(|e| fail(e.into()))?;
            let report = verify_problem(p, &solved, options).map_err(fail)?;
            Ok((solved, report))
        })
        .collect();

    let mut solutions = Vec::new();
    let mut failures = Vec::new();
    let mut pairs = Vec::new();
    for (p, outcome) in sorted.iter().zip(outcomes) {
        match outcome {
            Ok((s, r)) => {
                solutions.push(s);
                pairs.push(((*p).clone(), r));
            }
            Err(f) => failures.push(f),
        }
    }

    let mut discrepancies: Vec<DiscrepancyRecord> = pairs
        .iter()
        .flat_map(|(p, r)| problem_discrepancies(p, r, &pairs))
        .collect();

    let limit_jobs: Vec<(Family, LimitDirection)> = Family::ALL
        .into_iter()
        .flat_map(|f| limit_directions(f).into_iter().map(move |d| (f, d)))
        .collect();
    let limits: Vec<LimitCheck> = if problems.is_empty() {
        Vec::new()
    } else {
        limit_jobs
            .par_iter()
            .filter_map(|&(f, d)| check_rog_limits(f, d, &TREND_POINTS).ok())
            .collect()
    };
    discrepancies.extend(limits.iter().flat_map(LimitCheck::discrepancies));
    discrepancies.sort_by(|a, b| {
        (&a.problem_id, a.kind, &a.explanation).cmp(&(&b.problem_id, b.kind, &b.explanation))
    });

    FullReport {
        solutions,
        reports: pairs.into_iter().map(|(_, r)| r).collect(),
        discrepancies,
        limits,
        failures,
    }
}

//! Every defining equation as a [`RadiusProblem`], keyed by a stable id.
//!
//! Ids follow `<class>.<theorem>[.<params>][.corrected]`, with `harm.` for the
//! harmonic classes and `log.` for the logharmonic class. Where the printed
//! formula and an independently derived one disagree, the printed form keeps
//! the base id and the alternative carries the `.corrected` suffix.

use serde::Serialize;

use crate::classes::{ClassId, MappingClass};
use crate::series::{self, SeriesError};

use super::expr::{exp, literal_tail, pow, r, sum, Expr, Order, SeriesArg};
use super::functional::Functional;
use super::ProblemError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    PaperLiteral,
    DerivedCorrected,
}

impl Variant {
    pub fn suffix(self) -> &'static str {
        match self {
            Variant::PaperLiteral => "",
            Variant::DerivedCorrected => ".corrected",
        }
    }
}

/// What the theorem's left-hand side is compared with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Conclusion {
    BelowOne,
    BelowDistance,
}

impl Conclusion {
    pub fn constant(self, class: MappingClass) -> f64 {
        match self {
            Conclusion::BelowOne => 1.0,
            Conclusion::BelowDistance => class.distance_lower,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<Order>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n: Option<Order>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

impl Params {
    fn mn(m: impl Into<Order>, n: impl Into<Order>) -> Self {
        Self {
            m: Some(m.into()),
            n: Some(n.into()),
            ..Self::default()
        }
    }

    /// `m=1;N=2` style rendering for tables.
    pub fn compact(&self) -> String {
        let mut parts = Vec::new();
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("N={n}"));
        }
        if let Some(c) = self.c {
            parts.push(format!("c={c}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        parts.join(";")
    }
}

/// One defining equation `F(r) = lhs(r) − target = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusProblem {
    pub id: String,
    pub theorem_ref: String,
    pub class: ClassId,
    pub lhs: Expr,
    pub target: f64,
    pub params: Params,
    pub paper_root: Option<f64>,
    pub variant: Variant,
    pub conclusion: Conclusion,
    pub functional: Functional,
    pub sharpness_claimed: bool,
    pub notes: String,
}

impl RadiusProblem {
    /// `F(r)` on `[0, 1 − ε]`.
    pub fn evaluate(&self, r: f64) -> Result<f64, ProblemError> {
        series::check_arg(r)?;
        Ok(self.lhs.eval(r)? - self.target)
    }

    /// `F(r)` for root finding; `NaN` outside the domain.
    pub fn eval_unchecked(&self, r: f64) -> f64 {
        self.evaluate(r).unwrap_or(f64::NAN)
    }

    /// Left-hand side alone, `NaN` outside the domain. Monotonicity is judged
    /// here because subtracting the target absorbs increments below its ulp.
    pub fn lhs_unchecked(&self, r: f64) -> f64 {
        if series::check_arg(r).is_err() {
            return f64::NAN;
        }
        self.lhs.eval(r).unwrap_or(f64::NAN)
    }

    pub fn mapping_class(&self) -> MappingClass {
        self.class.into()
    }

    /// The constant the theorem's left-hand side must stay below.
    pub fn conclusion_constant(&self) -> f64 {
        self.conclusion.constant(self.mapping_class())
    }

    /// Id with any variant suffix removed.
    pub fn base_id(&self) -> &str {
        self.id
            .strip_suffix(Variant::DerivedCorrected.suffix())
            .unwrap_or(&self.id)
    }
}

/// `F(r)` for the problem with the given id.
pub fn evaluate(problem: &RadiusProblem, r: f64) -> Result<f64, ProblemError> {
    problem.evaluate(r)
}

struct Entry {
    id: String,
    theorem_ref: &'static str,
    class: ClassId,
    lhs: Expr,
    target: f64,
    params: Params,
    paper_root: Option<f64>,
    variant: Variant,
    conclusion: Conclusion,
    functional: Functional,
    sharpness_claimed: bool,
    notes: String,
}

impl From<Entry> for RadiusProblem {
    fn from(s: Entry) -> Self {
        RadiusProblem {
            id: s.id,
            theorem_ref: s.theorem_ref.to_owned(),
            class: s.class,
            lhs: s.lhs,
            target: s.target,
            params: s.params,
            paper_root: s.paper_root,
            variant: s.variant,
            conclusion: s.conclusion,
            functional: s.functional,
            sharpness_claimed: s.sharpness_claimed,
            notes: s.notes,
        }
    }
}

const HARM_BOHR: &str = "Bohr radius, stable harmonic";
const HARM_AREA: &str = "improved Bohr inequality with area term, stable harmonic";
const HARM_WEIGHTED: &str =
    "improved Bohr inequality with weighted coefficient sum, stable harmonic";
const HARM_REFINED: &str = "refined Bohr inequality, stable harmonic";
const HARM_ROG: &str = "Bohr-Rogosinski radius, stable harmonic";
const HARM_ROG_COR: &str = "Bohr-Rogosinski radius with m = 1, stable harmonic";
const LOG_BOHR: &str = "Bohr radius, stable logharmonic";
const LOG_IMPROVED: &str = "improved Bohr inequality, stable logharmonic";
const LOG_REFINED: &str = "refined Bohr inequality, stable logharmonic";
const LOG_ROG: &str = "Bohr-Rogosinski radius, stable logharmonic";
const LOG_ROG_COR: &str = "Bohr-Rogosinski radius with m = 1, stable logharmonic";

/// Printed `(1 − N r + r)` or brute-force `(N − N r + r)` leading factor of
/// the coefficient tail `Σ_{n≥N} n rⁿ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TailForm {
    Printed,
    BruteForce,
}

impl TailForm {
    fn variant(self) -> Variant {
        match self {
            TailForm::Printed => Variant::PaperLiteral,
            TailForm::BruteForce => Variant::DerivedCorrected,
        }
    }

    fn expr(self, n: Order) -> Expr {
        match self {
            TailForm::Printed => literal_tail(n),
            TailForm::BruteForce => sum(1, n, SeriesArg::R),
        }
    }

    /// Values of `N` for which the printed tail is registered. For `N ≥ 3`
    /// the printed factor turns negative inside `(0, 1)` and the resulting
    /// function has no sign change on the unit interval.
    pub fn registered_starts(self) -> &'static [u32] {
        match self {
            TailForm::Printed => &[1, 2],
            TailForm::BruteForce => &ROG_GRID,
        }
    }
}

/// Families of Bohr-Rogosinski equations indexed by `(m, N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    ConvexRog,
    ConvexRogSquared,
    UnivalentRog(TailForm),
    UnivalentRogSquared(TailForm),
    LogRog,
    LogRogSquared,
}

/// Grid for `m` and `N` in the Rogosinski families.
pub const ROG_GRID: [u32; 4] = [1, 2, 5, 20];

/// Direction of a limit taken in a Rogosinski family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LimitDirection {
    NToInfinity { m: u32 },
    MToInfinity { n: u32 },
    Joint,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::ConvexRog,
        Family::ConvexRogSquared,
        Family::UnivalentRog(TailForm::Printed),
        Family::UnivalentRog(TailForm::BruteForce),
        Family::UnivalentRogSquared(TailForm::Printed),
        Family::UnivalentRogSquared(TailForm::BruteForce),
        Family::LogRog,
        Family::LogRogSquared,
    ];

    pub fn base_id(self) -> &'static str {
        match self {
            Family::ConvexRog => "harm.convex.rog",
            Family::ConvexRogSquared => "harm.convex.rog.sq",
            Family::UnivalentRog(_) => "harm.univalent.rog",
            Family::UnivalentRogSquared(_) => "harm.univalent.rog.sq",
            Family::LogRog => "log.rog",
            Family::LogRogSquared => "log.rog.sq",
        }
    }

    pub fn variant(self) -> Variant {
        match self {
            Family::UnivalentRog(t) | Family::UnivalentRogSquared(t) => t.variant(),
            _ => Variant::PaperLiteral,
        }
    }

    /// Family id including the variant suffix, e.g. `harm.univalent.rog.corrected`.
    pub fn id(self) -> String {
        format!("{}{}", self.base_id(), self.variant().suffix())
    }

    pub fn from_id(id: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.id() == id)
    }

    pub fn class(self) -> ClassId {
        match self {
            Family::ConvexRog | Family::ConvexRogSquared => ClassId::StableConvexHarmonic,
            Family::UnivalentRog(_) | Family::UnivalentRogSquared(_) => {
                ClassId::StableUnivalentHarmonic
            }
            Family::LogRog | Family::LogRogSquared => ClassId::StableUnivalentLogharmonic,
        }
    }

    pub fn squared(self) -> bool {
        matches!(
            self,
            Family::ConvexRogSquared | Family::UnivalentRogSquared(_) | Family::LogRogSquared
        )
    }

    fn theorem_ref(self) -> &'static str {
        match self.class() {
            ClassId::StableUnivalentLogharmonic => LOG_ROG,
            _ => HARM_ROG,
        }
    }

    fn starts(self) -> &'static [u32] {
        match self {
            Family::UnivalentRog(t) | Family::UnivalentRogSquared(t) => t.registered_starts(),
            _ => &ROG_GRID,
        }
    }

    /// `(lhs, target)` of the family member `(m, N)`.
    pub fn expression(self, m: Order, n: Order) -> (Expr, f64) {
        let rm = || pow(r(), m);
        let point = || rm() / pow(1.0 - rm(), 2);
        let point_sq = || pow(rm(), 2) / pow(1.0 - rm(), 4);
        let log_tail = || r() * exp(sum(1, n, SeriesArg::R));
        match self {
            Family::ConvexRog => (
                2.0 * pow(r(), n) * (1.0 - rm()) / (1.0 - r()) + 3.0 * rm(),
                1.0,
            ),
            Family::ConvexRogSquared => (
                2.0 * pow(r(), n) * pow(1.0 - rm(), 2) / (1.0 - r()) + pow(rm(), 2) + 2.0 * rm(),
                1.0,
            ),
            Family::UnivalentRog(t) => (point() + t.expr(n), 0.25),
            Family::UnivalentRogSquared(t) => (point_sq() + t.expr(n), 0.25),
            Family::LogRog => (point() + log_tail(), 0.25),
            Family::LogRogSquared => (point_sq() + log_tail(), 0.25),
        }
    }

    fn formula(self) -> &'static str {
        match self {
            Family::ConvexRog => "2r^N(1-r^m)/(1-r) + 3r^m - 1 = 0",
            Family::ConvexRogSquared => "2r^N(1-r^m)^2/(1-r) + r^(2m) + 2r^m - 1 = 0",
            Family::UnivalentRog(TailForm::Printed) => {
                "r^m/(1-r^m)^2 + r^N(1-Nr+r)/(1-r)^2 - 1/4 = 0"
            }
            Family::UnivalentRog(TailForm::BruteForce) => {
                "r^m/(1-r^m)^2 + r^N(N-Nr+r)/(1-r)^2 - 1/4 = 0"
            }
            Family::UnivalentRogSquared(TailForm::Printed) => {
                "r^(2m)/(1-r^m)^4 + r^N(1-Nr+r)/(1-r)^2 - 1/4 = 0"
            }
            Family::UnivalentRogSquared(TailForm::BruteForce) => {
                "r^(2m)/(1-r^m)^4 + r^N(N-Nr+r)/(1-r)^2 - 1/4 = 0"
            }
            Family::LogRog => "r^m/(1-r^m)^2 + r exp(r^N(N-Nr+r)/(1-r)^2) - 1/4 = 0",
            Family::LogRogSquared => "r^(2m)/(1-r^m)^4 + r exp(r^N(N-Nr+r)/(1-r)^2) - 1/4 = 0",
        }
    }

    /// Member `(m, N)` of the family.
    pub fn problem(self, m: Order, n: Order) -> RadiusProblem {
        let (lhs, target) = self.expression(m, n);
        let mut notes = self.formula().to_owned();
        if let Family::UnivalentRog(TailForm::BruteForce)
        | Family::UnivalentRogSquared(TailForm::BruteForce) = self
        {
            notes.push_str("; tail factor replaced by the brute-force sum of n r^n from N");
        }
        Entry {
            id: format!("{}.m{m}.n{n}{}", self.base_id(), self.variant().suffix()),
            theorem_ref: self.theorem_ref(),
            class: self.class(),
            lhs,
            target,
            params: Params::mn(m, n),
            paper_root: None,
            variant: self.variant(),
            conclusion: Conclusion::BelowDistance,
            functional: Functional::Rogosinski {
                m,
                n,
                squared: self.squared(),
            },
            sharpness_claimed: true,
            notes,
        }
        .into()
    }

    /// The equation obtained by letting `N`, `m` or both tend to infinity,
    /// i.e. by dropping the vanishing coefficient tail or distortion term.
    pub fn limit_problem(self, direction: LimitDirection) -> Result<RadiusProblem, ProblemError> {
        let (m, n) = match direction {
            LimitDirection::NToInfinity { m } => (Order::Finite(m), Order::Infinite),
            LimitDirection::MToInfinity { n } => (Order::Infinite, Order::Finite(n)),
            LimitDirection::Joint => (Order::Infinite, Order::Infinite),
        };
        let printed_tail = matches!(
            self,
            Family::UnivalentRog(TailForm::Printed)
                | Family::UnivalentRogSquared(TailForm::Printed)
        );
        if printed_tail && n == Order::Infinite {
            return Err(ProblemError::UnsupportedDirection {
                family: self.id(),
                direction,
            });
        }
        let mut p = self.problem(m, n);
        p.sharpness_claimed = false;
        p.notes = format!("limit of: {}", self.formula());
        Ok(p)
    }
}

/// Refined inequality, convex class: `ψ_N`.
pub fn refined_convex(n: u32) -> RadiusProblem {
    let rn = || pow(r(), n);
    Entry {
        id: format!("harm.refined.convex.n{n}"),
        theorem_ref: HARM_REFINED,
        class: ClassId::StableConvexHarmonic,
        lhs: sum(0, 1, SeriesArg::R) + pow(r(), n + 2) / ((1.0 - pow(r(), 2)) * (1.0 - rn())),
        target: 0.5,
        params: Params {
            n: Some(n.into()),
            ..Params::default()
        },
        paper_root: match n {
            1 => Some(0.29),
            20 => Some(0.33),
            _ => None,
        },
        variant: Variant::PaperLiteral,
        conclusion: Conclusion::BelowDistance,
        functional: Functional::MajorantPlusSquares { n },
        sharpness_claimed: true,
        notes: "r/(1-r) + r^(N+2)/((1-r^2)(1-r^N)) - 1/2 = 0; printed value for a larger N is 0.33"
            .into(),
    }
    .into()
}

/// Refined inequality, univalent class: `φ_N`.
pub fn refined_univalent(n: u32) -> RadiusProblem {
    let r2 = || pow(r(), 2);
    Entry {
        id: format!("harm.refined.univalent.n{n}"),
        theorem_ref: HARM_REFINED,
        class: ClassId::StableUnivalentHarmonic,
        lhs: sum(1, 1, SeriesArg::R)
            - pow(r(), n + 2) * (1.0 + r2()) / (pow(r2() - 1.0, 3) * (1.0 - pow(r(), n))),
        target: 0.25,
        params: Params {
            n: Some(n.into()),
            ..Params::default()
        },
        paper_root: (n > 1).then_some(0.172),
        variant: Variant::PaperLiteral,
        conclusion: Conclusion::BelowDistance,
        functional: Functional::MajorantPlusSquares { n },
        sharpness_claimed: true,
        notes:
            "r/(1-r)^2 - r^(N+2)(1+r^2)/((r^2-1)^3(1-r^N)) - 1/4 = 0; printed value 0.172 for N > 1"
                .into(),
    }
    .into()
}

fn harmonic_bohr() -> Vec<RadiusProblem> {
    let bohr = |id: &str, class, lhs, target, root, conclusion, notes: &str| -> RadiusProblem {
        Entry {
            id: id.into(),
            theorem_ref: HARM_BOHR,
            class,
            lhs,
            target,
            params: Params::default(),
            paper_root: Some(root),
            variant: Variant::PaperLiteral,
            conclusion,
            functional: Functional::Majorant,
            sharpness_claimed: true,
            notes: notes.into(),
        }
        .into()
    };
    vec![
        bohr(
            "harm.convex.bohr",
            ClassId::StableConvexHarmonic,
            sum(0, 1, SeriesArg::R),
            0.5,
            1.0 / 3.0,
            Conclusion::BelowDistance,
            "r/(1-r) = 1/2; sharpness argument states the half-plane map has boundary distance 1/4",
        ),
        bohr(
            "harm.univalent.bohr.one",
            ClassId::StableUnivalentHarmonic,
            sum(1, 1, SeriesArg::R),
            1.0,
            0.382,
            Conclusion::BelowOne,
            "r/(1-r)^2 = 1",
        ),
        bohr(
            "harm.univalent.bohr.d",
            ClassId::StableUnivalentHarmonic,
            sum(1, 1, SeriesArg::R),
            0.25,
            0.172,
            Conclusion::BelowDistance,
            "r/(1-r)^2 = 1/4",
        ),
    ]
}

/// Exponents `k` of the area term.
pub const AREA_EXPONENTS: [u32; 3] = [1, 2, 10];

fn harmonic_area() -> Vec<RadiusProblem> {
    let mut out = Vec::new();
    for k in AREA_EXPONENTS {
        out.push(
            Entry {
                id: format!("harm.improved.convex.k{k}"),
                theorem_ref: HARM_AREA,
                class: ClassId::StableConvexHarmonic,
                lhs: sum(0, 1, SeriesArg::R) + pow(sum(1, 1, SeriesArg::RSquared), k),
                target: 0.5,
                params: Params {
                    k: Some(k),
                    ..Params::default()
                },
                paper_root: match k {
                    1 => Some(0.268),
                    10 => Some(0.33),
                    _ => None,
                },
                variant: Variant::PaperLiteral,
                conclusion: Conclusion::BelowDistance,
                functional: Functional::MajorantPlusArea { k },
                sharpness_claimed: true,
                notes: "r/(1-r) + r^(2k)/(1-r^2)^(2k) = 1/2".into(),
            }
            .into(),
        );
        out.push(
            Entry {
                id: format!("harm.improved.univalent.k{k}"),
                theorem_ref: HARM_AREA,
                class: ClassId::StableUnivalentHarmonic,
                lhs: sum(1, 1, SeriesArg::R) + pow(sum(3, 1, SeriesArg::RSquared), k),
                target: 0.25,
                params: Params {
                    k: Some(k),
                    ..Params::default()
                },
                paper_root: match k {
                    1 => Some(0.157),
                    10 => Some(0.172),
                    _ => None,
                },
                variant: Variant::PaperLiteral,
                conclusion: Conclusion::BelowDistance,
                functional: Functional::MajorantPlusArea { k },
                sharpness_claimed: true,
                notes: "r/(1-r)^2 + (r^6+4r^4+r^2)^k/(r^2-1)^(4k) = 1/4; the statement also quotes 0.382 as the root"
                    .into(),
            }
            .into(),
        );
    }
    out
}

/// Weights `c` of the weighted coefficient sum.
pub const WEIGHTS: [f64; 3] = [0.1, 0.5, 1.0];

fn harmonic_weighted() -> Vec<RadiusProblem> {
    let mut out = Vec::new();
    for c in WEIGHTS {
        let params = Params {
            c: Some(c),
            ..Params::default()
        };
        let convex_claim = if c == 1.0 {
            Some(0.142)
        } else if c == 0.1 {
            Some(0.29)
        } else {
            None
        };
        let univalent_claim = if c == 1.0 {
            Some(0.148)
        } else if c == 0.1 {
            Some(0.168)
        } else {
            None
        };
        out.push(
            Entry {
                id: format!("harm.improved.c.convex.c{c}"),
                theorem_ref: HARM_WEIGHTED,
                class: ClassId::StableConvexHarmonic,
                lhs: (1.0 + 2.0 * c) * sum(0, 1, SeriesArg::R),
                target: 0.5,
                params: params.clone(),
                paper_root: convex_claim,
                variant: Variant::PaperLiteral,
                conclusion: Conclusion::BelowDistance,
                functional: Functional::MajorantPlusWeighted { c, power: 1 },
                sharpness_claimed: false,
                notes: "(1+2c) r/(1-r) = 1/2, closed-form root 1/(3+4c)".into(),
            }
            .into(),
        );
        out.push(
            Entry {
                id: format!("harm.improved.c.univalent.c{c}"),
                theorem_ref: HARM_WEIGHTED,
                class: ClassId::StableUnivalentHarmonic,
                lhs: sum(1, 1, SeriesArg::R) + 2.0 * c * sum(3, 1, SeriesArg::RSquared),
                target: 0.25,
                params: params.clone(),
                paper_root: univalent_claim,
                variant: Variant::PaperLiteral,
                conclusion: Conclusion::BelowDistance,
                functional: Functional::MajorantPlusWeighted { c, power: 2 },
                sharpness_claimed: false,
                notes: "r/(1-r)^2 + 2c(r^6+4r^4+r^2)/(r^2-1)^4 = 1/4".into(),
            }
            .into(),
        );
        out.push(
            Entry {
                id: format!("harm.improved.c.univalent.c{c}.corrected"),
                theorem_ref: HARM_WEIGHTED,
                class: ClassId::StableUnivalentHarmonic,
                lhs: sum(1, 1, SeriesArg::R) + c * sum(2, 1, SeriesArg::R),
                target: 0.25,
                params,
                paper_root: univalent_claim,
                variant: Variant::DerivedCorrected,
                conclusion: Conclusion::BelowDistance,
                functional: Functional::MajorantPlusWeighted { c, power: 2 },
                sharpness_claimed: false,
                notes: "r/(1-r)^2 + c r(1+r)/(1-r)^3 = 1/4, from |a_n|^2+|b_n|^2 <= n^2".into(),
            }
            .into(),
        );
    }
    out
}

/// Values of `N` for the refined inequality.
pub const REFINED_STARTS: [u32; 4] = [1, 2, 5, 20];

fn harmonic_refined() -> Vec<RadiusProblem> {
    REFINED_STARTS
        .iter()
        .flat_map(|&n| [refined_convex(n), refined_univalent(n)])
        .collect()
}

fn rogosinski_families() -> Vec<RadiusProblem> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for &m in &ROG_GRID {
            for &n in family.starts() {
                out.push(family.problem(m.into(), n.into()));
            }
        }
    }
    out
}

/// Corollary forms with `m = 1`, as printed (polynomial where the printed
/// form clears denominators).
pub fn corollary(family: Family, n: u32) -> RadiusProblem {
    let nf = f64::from(n);
    let rn = || pow(r(), n);
    let (lhs, target, formula, root) = match family {
        Family::ConvexRog => (
            2.0 * rn() + 3.0 * r(),
            1.0,
            "2r^N + 3r - 1 = 0",
            // remark: r_1 = 2 - sqrt(3)
            (n == 1).then(|| 2.0 - 3.0_f64.sqrt()),
        ),
        Family::ConvexRogSquared => (
            2.0 * rn() * (1.0 - r()) + pow(r(), 2) + 2.0 * r(),
            1.0,
            "2r^N(1-r) + r^2 + 2r - 1 = 0",
            // remark: R_1 = 1/5
            (n == 1).then_some(0.2),
        ),
        Family::UnivalentRog(form) => {
            let lead = match form {
                TailForm::Printed => 1.0 - nf * r() + r(),
                TailForm::BruteForce => nf - nf * r() + r(),
            };
            (
                r() + rn() * lead + (0.25 - 0.25 * pow(1.0 - r(), 2)),
                0.25,
                match form {
                    TailForm::Printed => "r + r^N(1-Nr+r) - (1-r)^2/4 = 0",
                    TailForm::BruteForce => "r + r^N(N-Nr+r) - (1-r)^2/4 = 0",
                },
                None,
            )
        }
        Family::UnivalentRogSquared(form) => (
            pow(r(), 2) / pow(1.0 - r(), 4) + form.expr(n.into()),
            0.25,
            match form {
                TailForm::Printed => "r^2/(1-r)^4 + r^N(1-Nr+r)/(1-r)^2 - 1/4 = 0",
                TailForm::BruteForce => "r^2/(1-r)^4 + r^N(N-Nr+r)/(1-r)^2 - 1/4 = 0",
            },
            None,
        ),
        Family::LogRog => (
            r() / pow(1.0 - r(), 2) + r() * exp(sum(1, n, SeriesArg::R)),
            0.25,
            "r/(1-r)^2 + r exp(r^N(N-Nr+r)/(1-r)^2) - 1/4 = 0",
            None,
        ),
        Family::LogRogSquared => (
            pow(r(), 2) / pow(1.0 - r(), 4) + r() * exp(sum(1, n, SeriesArg::R)),
            0.25,
            "r^2/(1-r)^4 + r exp(r^N(N-Nr+r)/(1-r)^2) - 1/4 = 0",
            None,
        ),
    };
    let theorem_ref = match family.class() {
        ClassId::StableUnivalentLogharmonic => LOG_ROG_COR,
        _ => HARM_ROG_COR,
    };
    Entry {
        id: format!("{}.cor.n{n}{}", family.base_id(), family.variant().suffix()),
        theorem_ref,
        class: family.class(),
        lhs,
        target,
        params: Params::mn(1, n),
        paper_root: root,
        variant: family.variant(),
        conclusion: Conclusion::BelowDistance,
        functional: Functional::Rogosinski {
            m: Order::Finite(1),
            n: Order::Finite(n),
            squared: family.squared(),
        },
        sharpness_claimed: true,
        notes: formula.into(),
    }
    .into()
}

fn corollaries() -> Vec<RadiusProblem> {
    Family::ALL
        .into_iter()
        .flat_map(|f| f.starts().iter().map(move |&n| corollary(f, n)))
        .collect()
}

fn logharmonic() -> Vec<RadiusProblem> {
    let log = ClassId::StableUnivalentLogharmonic;
    let koebe_exp = || r() * exp(sum(1, 1, SeriesArg::R));
    let plain = |id: &str, target, root, variant, conclusion, notes: &str| -> RadiusProblem {
        Entry {
            id: id.into(),
            theorem_ref: LOG_BOHR,
            class: log,
            lhs: koebe_exp(),
            target,
            params: Params::default(),
            paper_root: Some(root),
            variant,
            conclusion,
            functional: Functional::Majorant,
            sharpness_claimed: false,
            notes: notes.into(),
        }
        .into()
    };
    let refined_lhs = || r() * exp(sum(1, 1, SeriesArg::R) + sum(2, 1, SeriesArg::RSquared));
    let refined = |id: &str, target, variant, notes: &str| -> RadiusProblem {
        Entry {
            id: id.into(),
            theorem_ref: LOG_REFINED,
            class: log,
            lhs: refined_lhs(),
            target,
            params: Params::default(),
            paper_root: Some(0.271),
            variant,
            conclusion: Conclusion::BelowDistance,
            functional: Functional::LogWithSquares,
            sharpness_claimed: false,
            notes: notes.into(),
        }
        .into()
    };
    vec![
        plain(
            "log.bohr.one",
            1.0,
            0.378,
            Variant::PaperLiteral,
            Conclusion::BelowOne,
            "r exp(r/(1-r)^2) = 1",
        ),
        plain(
            "log.bohr.d",
            0.25,
            0.286,
            Variant::PaperLiteral,
            Conclusion::BelowDistance,
            "r exp(r/(1-r)^2) = 1/4",
        ),
        plain(
            "log.bohr.d.corrected",
            0.5,
            0.286,
            Variant::DerivedCorrected,
            Conclusion::BelowDistance,
            "r exp(r/(1-r)^2) = 1/2, the right-hand side reproducing the printed root",
        ),
        Entry {
            id: "log.improved".into(),
            theorem_ref: LOG_IMPROVED,
            class: log,
            lhs: r() * exp(sum(1, 1, SeriesArg::R) + sum(2, 1, SeriesArg::R)),
            target: 0.25,
            params: Params::default(),
            paper_root: Some(0.152),
            variant: Variant::PaperLiteral,
            conclusion: Conclusion::BelowDistance,
            functional: Functional::LogWithProducts,
            sharpness_claimed: true,
            notes: "r exp(r/(1-r)^2 - r(r+1)/(r-1)^3) = 1/4".into(),
        }
        .into(),
        refined(
            "log.refined",
            0.25,
            Variant::PaperLiteral,
            "r exp(r/(1-r)^2 - (r^4+r^2)/(r^2-1)^3) = 1/4",
        ),
        refined(
            "log.refined.corrected",
            0.5,
            Variant::DerivedCorrected,
            "r exp(r/(1-r)^2 - (r^4+r^2)/(r^2-1)^3) = 1/2, the right-hand side reproducing the printed root",
        ),
    ]
}

/// The complete registry, sorted by id.
pub fn registry() -> Vec<RadiusProblem> {
    let mut all: Vec<RadiusProblem> = harmonic_bohr()
        .into_iter()
        .chain(harmonic_area())
        .chain(harmonic_weighted())
        .chain(harmonic_refined())
        .chain(rogosinski_families())
        .chain(corollaries())
        .chain(logharmonic())
        .collect();
    all.sort_by(|a, b| a.id.cmp(&b.id));
    all
}

/// Looks up a registered problem.
pub fn find(id: &str) -> Result<RadiusProblem, ProblemError> {
    registry()
        .into_iter()
        .find(|p| p.id == id)
        .ok_or_else(|| ProblemError::UnknownProblem(id.to_owned()))
}

/// Looks up a family by id and takes the requested limit.
pub fn limit_problem(
    family: &str,
    direction: LimitDirection,
) -> Result<RadiusProblem, ProblemError> {
    Family::from_id(family)
        .ok_or_else(|| ProblemError::UnknownFamily(family.to_owned()))?
        .limit_problem(direction)
}

impl From<SeriesError> for ProblemError {
    fn from(e: SeriesError) -> Self {
        ProblemError::Domain(e)
    }
}

//! Radius problems: defining equations, the functionals behind them and the
//! registry of every problem instance.

pub mod expr;
pub mod functional;
pub mod registry;

use thiserror::Error;

use crate::series::SeriesError;

pub use expr::{Expr, Order, SeriesArg};
pub use functional::Functional;
pub use registry::{
    corollary, evaluate, find, limit_problem, refined_convex, refined_univalent, registry,
    Conclusion, Family, LimitDirection, Params, RadiusProblem, TailForm, Variant,
};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ProblemError {
    #[error(transparent)]
    Domain(SeriesError),
    #[error("unknown problem id `{0}`")]
    UnknownProblem(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` has no limit in direction {direction:?}")]
    UnsupportedDirection {
        family: String,
        direction: LimitDirection,
    },
}

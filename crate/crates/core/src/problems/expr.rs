//! Defining expressions: small trees over `r`, constants, closed-form power
//! sums, integer powers and `exp`.
//!
//! Integer orders may be [`Order::Infinite`]; a power `x^∞` with `|x| < 1`
//! and a tail sum starting at `∞` both evaluate to zero. This is how limiting
//! equations are obtained from a family without rewriting it.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::classes::EXP_OVERFLOW;
use crate::series::{self, SeriesError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl From<u32> for Order {
    fn from(n: u32) -> Self {
        Order::Finite(n)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => s.serialize_u32(*n),
            Order::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Argument fed to a series node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesArg {
    R,
    RSquared,
}

impl SeriesArg {
    pub fn apply(self, r: f64) -> f64 {
        match self {
            SeriesArg::R => r,
            SeriesArg::RSquared => r * r,
        }
    }
}

/// A closed-form power-sum node `Σ_{n≥start} nᵖ xⁿ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeriesNode {
    pub power: u32,
    pub start: Order,
    pub arg: SeriesArg,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    R,
    Series(SeriesNode),
    /// `r^N (1 − N r + r)/(1 − r)²`, a tail written with a constant leading
    /// factor; kept as its own node because it is not a power sum.
    LiteralTail(Order),
    Pow(Box<Expr>, Order),
    Exp(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
}

pub fn r() -> Expr {
    Expr::R
}

pub fn constant(x: f64) -> Expr {
    Expr::Const(x)
}

pub fn pow(base: Expr, k: impl Into<Order>) -> Expr {
    Expr::Pow(Box::new(base), k.into())
}

pub fn exp(x: Expr) -> Expr {
    Expr::Exp(Box::new(x))
}

pub fn sum(power: u32, start: impl Into<Order>, arg: SeriesArg) -> Expr {
    Expr::Series(SeriesNode {
        power,
        start: start.into(),
        arg,
    })
}

pub fn literal_tail(n: impl Into<Order>) -> Expr {
    Expr::LiteralTail(n.into())
}

fn pow_order(base: f64, k: Order) -> f64 {
    match k {
        Order::Finite(k) => base.powi(k as i32),
        Order::Infinite if base.abs() < 1.0 => 0.0,
        Order::Infinite if base == 1.0 => 1.0,
        Order::Infinite => f64::INFINITY,
    }
}

impl Expr {
    /// Evaluates at `r`. Series nodes are delegated to [`series::closed_sum`];
    /// an `exp` argument above the overflow threshold yields `+∞`.
    pub fn eval(&self, r: f64) -> Result<f64, SeriesError> {
        Ok(match self {
            Expr::Const(c) => *c,
            Expr::R => r,
            Expr::Series(node) => match node.start {
                Order::Finite(start) => {
                    series::closed_sum(node.power, u64::from(start), node.arg.apply(r))?
                }
                Order::Infinite => 0.0,
            },
            Expr::LiteralTail(n) => match n {
                Order::Finite(n) => {
                    let nf = f64::from(*n);
                    r.powi(*n as i32) * (1.0 - nf * r + r) / ((1.0 - r) * (1.0 - r))
                }
                Order::Infinite => 0.0,
            },
            Expr::Pow(base, k) => pow_order(base.eval(r)?, *k),
            Expr::Exp(x) => {
                let x = x.eval(r)?;
                if x > EXP_OVERFLOW {
                    f64::INFINITY
                } else {
                    x.exp()
                }
            }
            Expr::Add(a, b) => a.eval(r)? + b.eval(r)?,
            Expr::Sub(a, b) => a.eval(r)? - b.eval(r)?,
            Expr::Mul(a, b) => a.eval(r)? * b.eval(r)?,
            Expr::Div(a, b) => a.eval(r)? / b.eval(r)?,
            Expr::Neg(a) => -a.eval(r)?,
        })
    }

    /// Every series node in the tree, in traversal order.
    pub fn series_nodes(&self) -> Vec<SeriesNode> {
        let mut out = Vec::new();
        self.collect_series(&mut out);
        out
    }

    fn collect_series(&self, out: &mut Vec<SeriesNode>) {
        match self {
            Expr::Series(node) => out.push(*node),
            Expr::Const(_) | Expr::R | Expr::LiteralTail(_) => {}
            Expr::Pow(a, _) | Expr::Exp(a) | Expr::Neg(a) => a.collect_series(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_series(out);
                b.collect_series(out);
            }
        }
    }

    /// Start indices of every finite literal tail node.
    pub fn literal_tails(&self) -> Vec<u32> {
        match self {
            Expr::LiteralTail(Order::Finite(n)) => vec![*n],
            Expr::LiteralTail(Order::Infinite) | Expr::Const(_) | Expr::R | Expr::Series(_) => {
                Vec::new()
            }
            Expr::Pow(a, _) | Expr::Exp(a) | Expr::Neg(a) => a.literal_tails(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                let mut v = a.literal_tails();
                v.extend(b.literal_tails());
                v
            }
        }
    }

    pub fn contains_literal_tail(&self) -> bool {
        match self {
            Expr::LiteralTail(_) => true,
            Expr::Const(_) | Expr::R | Expr::Series(_) => false,
            Expr::Pow(a, _) | Expr::Exp(a) | Expr::Neg(a) => a.contains_literal_tail(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.contains_literal_tail() || b.contains_literal_tail()
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }
}

struct Wrapped<'a>(&'a Expr, u8);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.precedence() < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::R => f.write_str("r"),
            Expr::Series(node) => {
                let x = match node.arg {
                    SeriesArg::R => "r",
                    SeriesArg::RSquared => "r^2",
                };
                write!(f, "S{}[{}]({x})", node.power, node.start)
            }
            Expr::LiteralTail(n) => write!(f, "r^{n}(1-{n}r+r)/(1-r)^2"),
            Expr::Pow(a, k) => write!(f, "{}^{k}", Wrapped(a, 5)),
            Expr::Exp(a) => write!(f, "exp({a})"),
            Expr::Add(a, b) => write!(f, "{} + {}", Wrapped(a, p), Wrapped(b, p)),
            Expr::Sub(a, b) => write!(f, "{} - {}", Wrapped(a, p), Wrapped(b, p + 1)),
            Expr::Mul(a, b) => write!(f, "{}*{}", Wrapped(a, p), Wrapped(b, p)),
            Expr::Div(a, b) => write!(f, "{}/{}", Wrapped(a, p), Wrapped(b, p + 1)),
            Expr::Neg(a) => write!(f, "-{}", Wrapped(a, p)),
        }
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl $trait for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }

        impl $trait<f64> for Expr {
            type Output = Expr;
            fn $method(self, rhs: f64) -> Expr {
                Expr::$variant(Box::new(self), Box::new(Expr::Const(rhs)))
            }
        }

        impl $trait<Expr> for f64 {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(Expr::Const(self)), Box::new(rhs))
            }
        }
    };
}

binary_op!(Add, add, Add);
binary_op!(Sub, sub, Sub);
binary_op!(Mul, mul, Mul);
binary_op!(Div, div, Div);

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_series_agree() {
        let printed = r() / pow(1.0 - r(), 2);
        let series = sum(1, 1, SeriesArg::R);
        for &x in &[0.0, 0.1, 0.5, 0.9] {
            let a = printed.eval(x).unwrap();
            let b = series.eval(x).unwrap();
            assert!((a - b).abs() <= 1e-15 * a.max(1.0));
        }
    }

    #[test]
    fn infinite_orders_vanish() {
        let e = pow(r(), Order::Infinite) + sum(1, Order::Infinite, SeriesArg::R);
        assert_eq!(e.eval(0.99).unwrap(), 0.0);
        assert_eq!(literal_tail(Order::Infinite).eval(0.5).unwrap(), 0.0);
    }

    #[test]
    fn literal_tail_matches_brute_force_only_at_one() {
        let x = 0.5;
        let one = literal_tail(1).eval(x).unwrap();
        assert!((one - series::closed_sum(1, 1, x).unwrap()).abs() < 1e-15);
        let two = literal_tail(2).eval(x).unwrap();
        assert!((two - 0.5).abs() < 1e-15);
        assert!((series::closed_sum(1, 2, x).unwrap() - 1.5).abs() < 1e-15);
    }

    #[test]
    fn exp_overflow_is_infinite() {
        let e = r() * exp(sum(1, 1, SeriesArg::R));
        assert_eq!(e.eval(0.99).unwrap(), f64::INFINITY);
    }

    #[test]
    fn collects_series_nodes() {
        let e = sum(0, 1, SeriesArg::R) + pow(sum(3, 1, SeriesArg::RSquared), 2);
        let nodes = e.series_nodes();
        assert_eq!(nodes.len(), 2);
        assert_eq!(nodes[1].arg, SeriesArg::RSquared);
    }

    #[test]
    fn display_is_readable() {
        let e = 2.0 * pow(r(), 3) - (r() + 1.0) / (1.0 - r());
        assert_eq!(e.to_string(), "2*r^3 - (r + 1)/(1 - r)");
    }
}

//! Closed-form zero forcing numbers and classical upper bounds.
//!
//! Everything except the girth-five estimate is exact rational arithmetic,
//! so tight cases (complete graphs, `K_{Δ,Δ}`, cycles) compare as equal
//! rather than within a float tolerance.

use std::fmt;

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct DomainError(pub String);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaFamily {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

pub fn z_formula(family: FormulaFamily) -> Result<usize, DomainError> {
    match family {
        FormulaFamily::Path(n) if n >= 1 => Ok(1),
        FormulaFamily::Cycle(n) if n >= 3 => Ok(2),
        FormulaFamily::Complete(n) if n >= 1 => Ok(n.max(2) - 1),
        FormulaFamily::CompleteBipartite(a, b) if a >= 1 && b >= 1 => Ok((a + b).saturating_sub(2).max(1)),
        other => Err(DomainError(format!("{other:?} is outside the formula's domain"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundFormula {
    Amos,
    GentnerRautenbach,
    ConjectureThird,
    GirthFive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundNumber {
    Exact(Rational),
    /// Involves a logarithm; for reporting only.
    Approximate(f64),
}

impl BoundNumber {
    pub fn to_f64(self) -> f64 {
        match self {
            BoundNumber::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            BoundNumber::Approximate(x) => x,
        }
    }
}

impl fmt::Display for BoundNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundNumber::Exact(r) => write!(f, "{r}"),
            BoundNumber::Approximate(x) => write!(f, "~{x:.6}"),
        }
    }
}

impl Serialize for BoundNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundValue {
    pub formula: BoundFormula,
    pub value: BoundNumber,
}

impl BoundValue {
    pub fn exact(&self) -> Option<Rational> {
        match self.value {
            BoundNumber::Exact(r) => Some(r),
            BoundNumber::Approximate(_) => None,
        }
    }

    pub fn is_approximate(&self) -> bool {
        matches!(self.value, BoundNumber::Approximate(_))
    }

    /// Whether `z ≤ bound`, decided exactly; `None` for approximate bounds.
    pub fn admits(&self, z: usize) -> Option<bool> {
        self.exact().map(|b| int(z) <= b)
    }
}

fn int(x: usize) -> Rational {
    Rational::from_integer(x as i64)
}

/// Upper bound of Amos, Caro, Davila and Pepper for connected graphs with
/// maximum degree `Δ ≥ 2`: `Z ≤ ((Δ−2)·n + 2)/(Δ−1)`. Equality holds for
/// `K_{Δ+1}`, `K_{Δ,Δ}` and cycles.
pub fn bound_amos(n: usize, delta: usize) -> Result<BoundValue, DomainError> {
    if delta < 2 {
        return Err(DomainError(format!("maximum degree {delta} < 2")));
    }
    if n == 0 {
        return Err(DomainError("order must be positive".into()));
    }
    let d = delta as i64;
    let value = Rational::new(d - 2, d - 1) * int(n) + Rational::new(2, d - 1);
    Ok(BoundValue { formula: BoundFormula::Amos, value: BoundNumber::Exact(value) })
}

/// Gentner–Rautenbach bound `Z ≤ (Δ−2)/(Δ−1)·n` for connected graphs with
/// `Δ ≥ 3`. Five exceptional graphs (among them `K_{Δ+1}`, `K_{Δ,Δ}` and
/// `K_{Δ−1,Δ}`) violate it; they are not detected here, and callers must
/// exclude them.
pub fn bound_gr(n: usize, delta: usize) -> Result<BoundValue, DomainError> {
    if delta < 3 {
        return Err(DomainError(format!("maximum degree {delta} < 3")));
    }
    let d = delta as i64;
    let value = Rational::new(d - 2, d - 1) * int(n);
    Ok(BoundValue { formula: BoundFormula::GentnerRautenbach, value: BoundNumber::Exact(value) })
}

/// The refuted subcubic bound `n/3 + 2`.
pub fn bound_conjecture_third(n: usize) -> BoundValue {
    BoundValue {
        formula: BoundFormula::ConjectureThird,
        value: BoundNumber::Exact(Rational::new(n as i64, 3) + int(2)),
    }
}

/// `n/2 − n/(24·log₂ n + 6) + 2`, the bound for subcubic graphs of girth
/// at least five. Floating point, report only.
pub fn bound_girth5(n: usize) -> Result<BoundValue, DomainError> {
    if n < 2 {
        return Err(DomainError(format!("order {n} < 2")));
    }
    let x = n as f64;
    let value = x / 2.0 - x / (24.0 * x.log2() + 6.0) + 2.0;
    Ok(BoundValue { formula: BoundFormula::GirthFive, value: BoundNumber::Approximate(value) })
}

//! Zero forcing density compared with the thresholds of interest.

use std::cmp::Ordering;

use serde::{Serialize, Serializer};

use crate::solver::Rational;

/// A zero forcing number, or an interval when a search ran out of budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZValue {
    Exact(usize),
    Interval { lower: usize, upper: usize },
}

impl ZValue {
    pub fn bounds(self) -> (usize, usize) {
        match self {
            ZValue::Exact(z) => (z, z),
            ZValue::Interval { lower, upper } => (lower, upper),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Below,
    Equal,
    Above,
    Undetermined,
}

fn relation(lower: Rational, upper: Rational, threshold: Rational) -> Relation {
    match (lower.cmp(&threshold), upper.cmp(&threshold)) {
        (Ordering::Greater, _) => Relation::Above,
        (_, Ordering::Less) => Relation::Below,
        (Ordering::Equal, Ordering::Equal) => Relation::Equal,
        _ => Relation::Undetermined,
    }
}

fn as_string<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdComparison {
    pub name: &'static str,
    #[serde(serialize_with = "as_string")]
    pub threshold: Rational,
    pub relation: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioReport {
    pub order: usize,
    pub z: ZValue,
    #[serde(serialize_with = "as_string")]
    pub ratio_lower: Rational,
    #[serde(serialize_with = "as_string")]
    pub ratio_upper: Rational,
    /// `n/3 + 2`, the refuted subcubic bound on `Z` itself.
    #[serde(serialize_with = "as_string")]
    pub conjecture_bound: Rational,
    /// `Some(true)` when `Z > n/3 + 2` is certain, `None` when the
    /// interval straddles it.
    pub exceeds_conjecture: Option<bool>,
    /// `Z/n` against `1/3 + 2/n`, `5/12`, `4/9` and `1/2`.
    pub comparisons: Vec<ThresholdComparison>,
}

/// Exact comparison of `Z/n` with the density thresholds.
///
/// # Panics
/// If `order` is zero.
pub fn ratio_report(order: usize, z: ZValue) -> RatioReport {
    assert!(order > 0, "ratio of an empty graph");
    let n = order as i64;
    let (lo, hi) = z.bounds();
    let ratio_lower = Rational::new(lo as i64, n);
    let ratio_upper = Rational::new(hi as i64, n);
    let conjecture_bound = Rational::new(n, 3) + Rational::from_integer(2);
    let exceeds_conjecture = match relation(ratio_lower, ratio_upper, conjecture_bound / n) {
        Relation::Above => Some(true),
        Relation::Below | Relation::Equal => Some(false),
        Relation::Undetermined if Rational::from_integer(lo as i64) > conjecture_bound => Some(true),
        Relation::Undetermined if Rational::from_integer(hi as i64) <= conjecture_bound => Some(false),
        Relation::Undetermined => None,
    };
    let thresholds = [
        ("one_third_plus_two_over_n", Rational::new(1, 3) + Rational::new(2, n)),
        ("five_twelfths", Rational::new(5, 12)),
        ("four_ninths", Rational::new(4, 9)),
        ("one_half", Rational::new(1, 2)),
    ];
    let comparisons = thresholds
        .into_iter()
        .map(|(name, threshold)| ThresholdComparison {
            name,
            threshold,
            relation: relation(ratio_lower, ratio_upper, threshold),
        })
        .collect();
    RatioReport { order, z, ratio_lower, ratio_upper, conjecture_bound, exceeds_conjecture, comparisons }
}

//! Exhaustive check of the intersection lemma on `Ĝ_n`.
//!
//! For every zero forcing set `P` of `Ĝ_n` with `|P| ≤ t_n + 2`:
//!
//! 1. `|V(G_n) ∩ P| ≥ t_n`;
//! 2. whenever equality holds, `r_n ∉ P` and `r_n` stays white when the
//!    forcing process runs inside `G_n` alone from `V(G_n) ∩ P`.
//!
//! Only levels 1 and 2 fit in a word-sized mask; larger levels are
//! reported as infeasible.

use rayon::prelude::*;
use serde::Serialize;

use super::{build_g, build_ghat, t, FamilyError};
use crate::solver::kernel::{Kernel, MaskKernel};
use crate::solver::{Budget, Meter};

const MAX_REPORTED: usize = 16;
const TICK: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Lemma1Violation {
    /// `|V(G_n) ∩ P| < t_n`.
    SmallIntersection { set: Vec<usize>, intersection: usize },
    /// Equality case with `r_n ∈ P`.
    RootInSet { set: Vec<usize> },
    /// Equality case where `r_n` turns black inside `G_n`.
    RootForcedWithin { set: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    pub level: u32,
    pub t: u64,
    pub max_size: usize,
    pub sets_examined: u64,
    pub zero_forcing_sets: u64,
    pub min_intersection: Option<usize>,
    pub equality_cases: u64,
    pub part_i_holds: bool,
    pub part_ii_holds: bool,
    /// At most the first few violations found, in enumeration order.
    pub violations: Vec<Lemma1Violation>,
}

#[derive(Default)]
struct Tally {
    examined: u64,
    forcing: u64,
    min_intersection: Option<usize>,
    equality: u64,
    part_i: bool,
    part_ii: bool,
    violations: Vec<Lemma1Violation>,
}

impl Tally {
    fn fresh() -> Self {
        Tally { part_i: true, part_ii: true, ..Tally::default() }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.examined += other.examined;
        self.forcing += other.forcing;
        self.min_intersection = match (self.min_intersection, other.min_intersection) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.equality += other.equality;
        self.part_i &= other.part_i;
        self.part_ii &= other.part_ii;
        let room = MAX_REPORTED.saturating_sub(self.violations.len());
        self.violations.extend(other.violations.into_iter().take(room));
        self
    }
}

struct Checker {
    whole: MaskKernel,
    inner: MaskKernel,
    inner_mask: u64,
    root: usize,
    t: usize,
}

impl Checker {
    fn visit(&self, s: u64, tally: &mut Tally) {
        tally.examined += 1;
        let mut closed = s;
        self.whole.close(&mut closed);
        if !self.whole.is_full(&closed) {
            return;
        }
        tally.forcing += 1;
        let inside = s & self.inner_mask;
        let meet = inside.count_ones() as usize;
        tally.min_intersection = Some(tally.min_intersection.map_or(meet, |m| m.min(meet)));
        let members = || (0..64).filter(|&v| s >> v & 1 == 1).collect::<Vec<usize>>();
        if meet < self.t {
            tally.part_i = false;
            if tally.violations.len() < MAX_REPORTED {
                tally.violations.push(Lemma1Violation::SmallIntersection { set: members(), intersection: meet });
            }
        } else if meet == self.t {
            tally.equality += 1;
            let violation = if s >> self.root & 1 == 1 {
                Some(Lemma1Violation::RootInSet { set: members() })
            } else {
                // G_n is induced on the leading indices, so masks carry over
                let mut within = inside;
                self.inner.close(&mut within);
                (within >> self.root & 1 == 1).then(|| Lemma1Violation::RootForcedWithin { set: members() })
            };
            if let Some(v) = violation {
                tally.part_ii = false;
                if tally.violations.len() < MAX_REPORTED {
                    tally.violations.push(v);
                }
            }
        }
    }
}

/// Enumerates every zero forcing set of `Ĝ_n` up to size `t_n + 2` and
/// checks both parts of the lemma. Feasible for `n ≤ 2`.
pub fn lemma1_check_exhaustive(n: u32, budget: &Budget) -> Result<Lemma1Report, FamilyError> {
    if n == 0 {
        return Err(FamilyError::Domain("level must be at least 1".into()));
    }
    if n > 2 {
        let order = 6 * 4u128.pow(n - 1);
        return Err(FamilyError::Timeout(format!(
            "level {n}: subsets of up to {} of {order} vertices cannot be enumerated",
            t(n) + 2
        )));
    }
    let ghat = build_ghat(n)?;
    let g = build_g(n)?;
    let order = ghat.order();
    let checker = Checker {
        whole: MaskKernel::new(&ghat.graph).expect("at most 64 vertices"),
        inner: MaskKernel::new(&g.graph).expect("at most 64 vertices"),
        inner_mask: (1u64 << g.order()) - 1,
        root: ghat.landmarks[&format!("r{n}")],
        t: t(n) as usize,
    };
    let max_size = (t(n) as usize + 2).min(order);
    let meter = Meter::new(budget);

    let tally = budget.run(|| {
        let mut total = Tally::fresh();
        checker.visit(0, &mut total);
        for k in 1..=max_size {
            // split on the smallest member
            let parts: Vec<Option<Tally>> = (0..=order - k)
                .into_par_iter()
                .map(|first| {
                    let mut tally = Tally::fresh();
                    let rest_bits = order - first - 1;
                    let mut pending = 0u64;
                    for rest in subsets_of_size(rest_bits, k - 1) {
                        checker.visit(1 << first | rest << (first + 1), &mut tally);
                        pending += 1;
                        if pending == TICK {
                            if !meter.tick(pending, pending) {
                                return None;
                            }
                            pending = 0;
                        }
                    }
                    meter.tick(pending, pending).then_some(tally)
                })
                .collect();
            for part in parts {
                total = total.merge(part?);
            }
        }
        Some(total)
    });
    let tally = tally.ok_or_else(|| FamilyError::Timeout(format!("level {n}: budget exhausted during enumeration")))?;

    Ok(Lemma1Report {
        level: n,
        t: t(n),
        max_size,
        sets_examined: tally.examined,
        zero_forcing_sets: tally.forcing,
        min_intersection: tally.min_intersection,
        equality_cases: tally.equality,
        part_i_holds: tally.part_i,
        part_ii_holds: tally.part_ii,
        violations: tally.violations,
    })
}

/// All `k`-bit masks below `1 << bits`, in increasing numeric order.
fn subsets_of_size(bits: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << bits;
    let mut next = if k > bits { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            // Gosper's hack
            let c = current & current.wrapping_neg();
            let r = current + c;
            let candidate = (((r ^ current) >> 2) / c) | r;
            (candidate < limit).then_some(candidate)
        };
        Some(current)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn gosper_counts() {
        for bits in 0..10 {
            for k in 0..=bits + 1 {
                let all: Vec<u64> = subsets_of_size(bits, k).collect();
                assert_eq!(all.len() as u64, if k > bits { 0 } else { binomial(bits as u64, k as u64) });
                assert!(all.iter().all(|m| m.count_ones() as usize == k));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn level_one_holds() {
        let r = lemma1_check_exhaustive(1, &Budget::unlimited()).unwrap();
        assert!(r.part_i_holds && r.part_ii_holds, "{r:?}");
        assert_eq!(r.max_size, 4);
        assert_eq!(r.sets_examined, (0..=4).map(|k| binomial(6, k)).sum::<u64>());
        assert_eq!(r.min_intersection, Some(2));
        assert!(r.equality_cases > 0);
    }

    #[test]
    fn large_levels_are_refused() {
        assert!(matches!(lemma1_check_exhaustive(3, &Budget::unlimited()), Err(FamilyError::Timeout(_))));
        assert!(matches!(lemma1_check_exhaustive(0, &Budget::unlimited()), Err(FamilyError::Domain(_))));
    }
}

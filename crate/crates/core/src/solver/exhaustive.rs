//! Subset enumeration by ascending size.
//!
//! Work is split across threads by the first two members of each
//! combination; the prefixes are consumed in lexicographic order, so the
//! reported witness is the lexicographically least forcing set of the
//! winning size no matter how many threads run.

use rayon::prelude::*;

use super::kernel::{Kernel, MaskKernel, WideKernel};
use super::{Budget, Certificate, Meter, SolverResult, Timeout};
use crate::graph::{Graph, VertexSet};

const TICK: u64 = 1024;

enum Scan {
    Found(Vec<usize>),
    Exhausted,
    Aborted,
}

/// Smallest zero forcing set by exhaustive search. `hint = (lower, upper)`
/// lets the caller skip sizes below a bound it has already proven.
pub fn z_exhaustive(g: &Graph, hint: Option<(usize, usize)>, budget: &Budget) -> Result<SolverResult, Timeout> {
    match MaskKernel::new(g) {
        Some(k) => budget.run(|| exhaustive_with(&k, hint, budget)),
        None => budget.run(|| exhaustive_with(&WideKernel::new(g), hint, budget)),
    }
}

fn exhaustive_with<K: Kernel>(kernel: &K, hint: Option<(usize, usize)>, budget: &Budget) -> Result<SolverResult, Timeout> {
    let n = kernel.order();
    let meter = Meter::new(budget);
    let (lower, upper) = hint.map_or((0, n), |(l, u)| (l.min(n), u.min(n)));
    let start = if n == 0 { 0 } else { lower.max(1) };
    for k in start..=n {
        match scan_size(kernel, k, &meter, true) {
            Scan::Found(members) => {
                let witness = VertexSet::from_indices(n, members).expect("members in range");
                return Ok(SolverResult {
                    z: k,
                    witness,
                    certificate: Certificate::ExhaustedBelow { z: k, from: if start <= 1 { 0 } else { start } },
                    stats: meter.stats(0),
                });
            }
            Scan::Exhausted => {}
            Scan::Aborted => {
                return Err(Timeout {
                    lower: k,
                    upper,
                    witness: (upper == n).then(|| VertexSet::full(n)),
                    stats: meter.stats(0),
                })
            }
        }
    }
    unreachable!("the full vertex set always forces")
}

/// True iff no vertex set of size at most `k` forces `g`.
///
/// Supersets of forcing sets force, so only the `C(n, k)` sets of size
/// exactly `k` are tested.
pub fn verify_no_smaller(g: &Graph, k: usize, budget: &Budget) -> Result<bool, Timeout> {
    let n = g.order();
    if k >= n {
        return Ok(false);
    }
    let outcome = match MaskKernel::new(g) {
        Some(kern) => budget.run(|| {
            let meter = Meter::new(budget);
            (scan_size(&kern, k, &meter, false), meter.stats(0))
        }),
        None => budget.run(|| {
            let kern = WideKernel::new(g);
            let meter = Meter::new(budget);
            (scan_size(&kern, k, &meter, false), meter.stats(0))
        }),
    };
    match outcome {
        (Scan::Found(_), _) => Ok(false),
        (Scan::Exhausted, _) => Ok(true),
        (Scan::Aborted, stats) => Err(Timeout { lower: 1, upper: n, witness: Some(VertexSet::full(n)), stats }),
    }
}

/// Looks for a forcing set of size exactly `k`. With `least`, the hit
/// returned is the lexicographically least one.
fn scan_size<K: Kernel>(kernel: &K, k: usize, meter: &Meter, least: bool) -> Scan {
    let n = kernel.order();
    if k > n {
        return Scan::Exhausted;
    }
    if k == 0 {
        let mut s = kernel.empty();
        kernel.close(&mut s);
        return if kernel.is_full(&s) { Scan::Found(vec![]) } else { Scan::Exhausted };
    }
    let prefix_len = k.min(2);
    let prefixes: Vec<Vec<usize>> = Combinations::new(n - (k - prefix_len), prefix_len).collect();
    let search = |prefix: &Vec<usize>| -> Option<Option<Vec<usize>>> {
        match complete_prefix(kernel, prefix, k - prefix_len, meter) {
            Scan::Found(m) => Some(Some(m)),
            Scan::Exhausted => None,
            Scan::Aborted => Some(None),
        }
    };
    let hit = if least {
        prefixes.par_iter().find_map_first(search)
    } else {
        prefixes.par_iter().find_map_any(search)
    };
    match hit {
        Some(Some(members)) => Scan::Found(members),
        _ if meter.tripped() => Scan::Aborted,
        _ => Scan::Exhausted,
    }
}

fn complete_prefix<K: Kernel>(kernel: &K, prefix: &[usize], rest: usize, meter: &Meter) -> Scan {
    let n = kernel.order();
    let base = kernel.from_indices(prefix);
    let offset = prefix.last().map_or(0, |&v| v + 1);
    let mut pending = 0u64;
    for combo in Combinations::new(n - offset, rest) {
        let mut s = base.clone();
        for &c in &combo {
            kernel.insert(&mut s, c + offset);
        }
        kernel.close(&mut s);
        if kernel.is_full(&s) {
            meter.tick(pending + 1, pending + 1);
            let mut members = prefix.to_vec();
            members.extend(combo.iter().map(|c| c + offset));
            return Scan::Found(members);
        }
        pending += 1;
        if pending == TICK {
            if !meter.tick(pending, pending) {
                return Scan::Aborted;
            }
            pending = 0;
        }
    }
    if !meter.tick(pending, pending) {
        return Scan::Aborted;
    }
    Scan::Exhausted
}

/// `k`-subsets of `0..n` in lexicographic order.
pub(crate) struct Combinations {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations { n, current: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < self.n - k + i {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_lex_order() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
        assert_eq!(Combinations::new(10, 4).count(), 210);
    }

    #[test]
    fn small_values() {
        let b = Budget::unlimited();
        let p5 = z_exhaustive(&Graph::path(5), None, &b).unwrap();
        assert_eq!(p5.z, 1);
        assert_eq!(p5.witness.to_vec(), vec![0]);
        assert_eq!(p5.certificate, Certificate::ExhaustedBelow { z: 1, from: 0 });
        assert_eq!(z_exhaustive(&Graph::cycle(6), None, &b).unwrap().z, 2);
        assert_eq!(z_exhaustive(&Graph::complete(4), None, &b).unwrap().z, 3);
        assert_eq!(z_exhaustive(&Graph::empty(0), None, &b).unwrap().z, 0);
        assert_eq!(z_exhaustive(&Graph::empty(3), None, &b).unwrap().z, 3);
    }

    #[test]
    fn witness_is_lex_least_across_threads() {
        let g = Graph::cycle(7);
        let serial = z_exhaustive(&g, None, &Budget::unlimited()).unwrap();
        let parallel = z_exhaustive(&g, None, &Budget::unlimited().with_threads(4)).unwrap();
        assert_eq!(serial.witness.to_vec(), vec![0, 1]);
        assert_eq!(serial.witness, parallel.witness);
    }

    #[test]
    fn no_smaller() {
        let b = Budget::unlimited();
        assert!(verify_no_smaller(&Graph::path(5), 0, &b).unwrap());
        assert!(!verify_no_smaller(&Graph::path(5), 1, &b).unwrap());
        assert!(verify_no_smaller(&Graph::complete(5), 3, &b).unwrap());
        assert!(!verify_no_smaller(&Graph::complete(5), 9, &b).unwrap());
    }

    #[test]
    fn node_limit_yields_interval() {
        let g = Graph::complete(14);
        let err = z_exhaustive(&g, None, &Budget::unlimited().with_node_limit(2000)).unwrap_err();
        assert!(err.lower <= 13 && err.upper == 14);
        assert_eq!(err.witness.unwrap().len(), 14);
    }
}

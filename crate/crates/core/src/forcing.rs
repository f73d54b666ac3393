//! The zero forcing colour-change process.
//!
//! A black vertex whose only white neighbour is `u` forces `u` black. The
//! engine applies every eligible force of a round simultaneously; when
//! several black vertices could force the same `u`, the lowest-index one is
//! recorded. The final black set does not depend on these choices.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// The black set at one moment of the process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorState {
    pub black: VertexSet,
}

impl ColorState {
    pub fn new(black: VertexSet) -> Self {
        ColorState { black }
    }

    pub fn is_all_black(&self) -> bool {
        self.black.is_full()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ForceEvent {
    pub round: usize,
    pub forcer: usize,
    pub forced: usize,
}

/// One recorded schedule of forces realising a closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcingChronicle {
    pub initial: VertexSet,
    pub events: Vec<ForceEvent>,
}

impl ForcingChronicle {
    /// Number of rounds in which at least one force happened.
    pub fn rounds(&self) -> usize {
        self.events.last().map_or(0, |e| e.round)
    }

    pub fn has_forcer(&self, v: usize) -> bool {
        self.events.iter().any(|e| e.forcer == v)
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Rounds needed to colour the whole graph, or `Stalled` when the set is
/// not a zero forcing set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Propagation {
    Rounds(usize),
    Stalled,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("event {index}: forcer {forcer} is not black")]
    ForcerWhite { index: usize, forcer: usize },
    #[error("event {index}: vertex {forced} is already black")]
    AlreadyBlack { index: usize, forced: usize },
    #[error("event {index}: {forced} is not the only white neighbour of {forcer}")]
    NotOnlyWhiteNeighbor { index: usize, forcer: usize, forced: usize },
    #[error("event {index}: rounds decrease")]
    RoundOrder { index: usize },
}

/// Restrictions on who may take part in the process.
#[derive(Debug, Clone, Copy, Default)]
struct Scope<'a> {
    /// Only vertices of this set exist; edges leaving it are ignored.
    region: Option<&'a VertexSet>,
    /// These vertices never force.
    passive: Option<&'a VertexSet>,
}

impl Scope<'_> {
    #[inline]
    fn exists(&self, v: usize) -> bool {
        self.region.is_none_or(|r| r.contains(v))
    }

    #[inline]
    fn may_force(&self, v: usize) -> bool {
        self.passive.is_none_or(|p| !p.contains(v))
    }

    /// The unique white neighbour of `v`, if there is exactly one.
    #[inline]
    fn sole_white_neighbor(&self, g: &Graph, black: &VertexSet, v: usize) -> Option<usize> {
        let mut found = None;
        for &u in g.neighbors(v) {
            if !black.contains(u) && self.exists(u) {
                if found.is_some() {
                    return None;
                }
                found = Some(u);
            }
        }
        found
    }

    /// Forces eligible this round among `candidates` (ascending), with the
    /// lowest forcer winning each target.
    fn round(&self, g: &Graph, black: &VertexSet, candidates: &[usize], claimed: &mut VertexSet) -> Vec<Force> {
        let mut forces = Vec::new();
        for &v in candidates {
            if !self.may_force(v) {
                continue;
            }
            if let Some(u) = self.sole_white_neighbor(g, black, v) {
                if claimed.insert(u) {
                    forces.push(Force { forcer: v, forced: u });
                }
            }
        }
        for f in &forces {
            claimed.remove(f.forced);
        }
        forces
    }

    fn run(&self, g: &Graph, initial: &VertexSet) -> (VertexSet, Vec<ForceEvent>) {
        let n = g.order();
        let mut black = initial.clone();
        let mut claimed = VertexSet::new(n);
        let mut events = Vec::new();
        let mut candidates: Vec<usize> = black.iter().filter(|&v| self.exists(v)).collect();
        let mut queued = vec![false; n];
        let mut round = 0;
        loop {
            let forces = self.round(g, &black, &candidates, &mut claimed);
            if forces.is_empty() {
                break;
            }
            round += 1;
            for f in &forces {
                black.insert(f.forced);
            }
            candidates.clear();
            for f in &forces {
                events.push(ForceEvent { round, forcer: f.forcer, forced: f.forced });
                let u = f.forced;
                for w in std::iter::once(u).chain(g.neighbors(u).iter().copied()) {
                    if !queued[w] && black.contains(w) && self.exists(w) {
                        queued[w] = true;
                        candidates.push(w);
                    }
                }
            }
            candidates.sort_unstable();
            for &w in &candidates {
                queued[w] = false;
            }
        }
        debug_assert!(round <= n);
        (black, events)
    }
}

/// Applies one simultaneous round of the forcing rule to every black vertex.
pub fn force_round(g: &Graph, state: &ColorState) -> (ColorState, Vec<Force>) {
    let candidates: Vec<usize> = state.black.iter().collect();
    let mut claimed = VertexSet::new(g.order());
    let forces = Scope::default().round(g, &state.black, &candidates, &mut claimed);
    let mut black = state.black.clone();
    for f in &forces {
        black.insert(f.forced);
    }
    (ColorState { black }, forces)
}

/// Runs rounds until nothing changes.
pub fn closure(g: &Graph, initial: &VertexSet) -> (ColorState, ForcingChronicle) {
    chronicled(Scope::default(), g, initial)
}

/// Like [`closure`], but vertices in `passive` never act as forcers.
pub fn closure_with_passive(g: &Graph, initial: &VertexSet, passive: &VertexSet) -> (ColorState, ForcingChronicle) {
    chronicled(Scope { region: None, passive: Some(passive) }, g, initial)
}

/// Closure of `s` inside the induced subgraph `g[region]`, reported in the
/// indices of `g`. A vertex of the region is "forced within the region" by
/// `s` exactly when it belongs to the result.
pub fn closure_within(g: &Graph, region: &VertexSet, s: &VertexSet) -> ColorState {
    debug_assert!(s.is_subset(region));
    let (black, _) = Scope { region: Some(region), passive: None }.run(g, s);
    ColorState { black }
}

fn chronicled(scope: Scope<'_>, g: &Graph, initial: &VertexSet) -> (ColorState, ForcingChronicle) {
    let (black, events) = scope.run(g, initial);
    (
        ColorState { black },
        ForcingChronicle { initial: initial.clone(), events },
    )
}

pub fn is_zero_forcing_set(g: &Graph, s: &VertexSet) -> bool {
    closure(g, s).0.is_all_black()
}

pub fn propagation_time(g: &Graph, s: &VertexSet) -> Propagation {
    let (state, chronicle) = closure(g, s);
    if state.is_all_black() {
        Propagation::Rounds(chronicle.rounds())
    } else {
        Propagation::Stalled
    }
}

/// Replays a chronicle one event at a time, checking the forcing rule at
/// every step, and returns the final black set.
pub fn replay(g: &Graph, chronicle: &ForcingChronicle) -> Result<VertexSet, ReplayError> {
    let mut black = chronicle.initial.clone();
    let mut last_round = 0;
    for (index, e) in chronicle.events.iter().enumerate() {
        if e.round < last_round {
            return Err(ReplayError::RoundOrder { index });
        }
        last_round = e.round;
        if !black.contains(e.forcer) {
            return Err(ReplayError::ForcerWhite { index, forcer: e.forcer });
        }
        if black.contains(e.forced) {
            return Err(ReplayError::AlreadyBlack { index, forced: e.forced });
        }
        if Scope::default().sole_white_neighbor(g, &black, e.forcer) != Some(e.forced) {
            return Err(ReplayError::NotOnlyWhiteNeighbor { index, forcer: e.forcer, forced: e.forced });
        }
        black.insert(e.forced);
    }
    Ok(black)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn path_endpoint_forces_neighbor() {
        let g = Graph::path(3);
        let (next, forces) = force_round(&g, &ColorState::new(set(3, &[0])));
        assert_eq!(next.black, set(3, &[0, 1]));
        assert_eq!(forces, vec![Force { forcer: 0, forced: 1 }]);
    }

    #[test]
    fn c4_single_vertex_stalls() {
        let g = Graph::cycle(4);
        let state = ColorState::new(set(4, &[0]));
        let (next, forces) = force_round(&g, &state);
        assert_eq!(next, state);
        assert!(forces.is_empty());
    }

    #[test]
    fn lowest_forcer_wins_tie() {
        // 0 - 2 - 1 : both endpoints can force the middle
        let g = Graph::from_edge_list(3, &[(0, 2), (1, 2)]).unwrap();
        let (_, forces) = force_round(&g, &ColorState::new(set(3, &[0, 1])));
        assert_eq!(forces, vec![Force { forcer: 0, forced: 2 }]);
    }

    #[test]
    fn path_closure_takes_n_minus_one_rounds() {
        let g = Graph::path(5);
        let (state, chronicle) = closure(&g, &set(5, &[0]));
        assert!(state.is_all_black());
        assert_eq!(chronicle.rounds(), 4);
        assert_eq!(propagation_time(&g, &set(5, &[0])), Propagation::Rounds(4));
    }

    #[test]
    fn cycle_cases() {
        let g = Graph::cycle(6);
        let (state, chronicle) = closure(&g, &set(6, &[0]));
        assert_eq!(state.black, set(6, &[0]));
        assert!(chronicle.events.is_empty());
        assert!(is_zero_forcing_set(&g, &set(6, &[2, 3])));
        assert_eq!(propagation_time(&g, &set(6, &[0])), Propagation::Stalled);
    }

    #[test]
    fn complete_graph_one_round() {
        assert_eq!(propagation_time(&Graph::complete(4), &set(4, &[0, 1, 2])), Propagation::Rounds(1));
    }

    #[test]
    fn empty_initial_set() {
        assert!(!is_zero_forcing_set(&Graph::path(2), &VertexSet::new(2)));
        assert!(is_zero_forcing_set(&Graph::empty(0), &VertexSet::new(0)));
        assert!(is_zero_forcing_set(&Graph::empty(1), &set(1, &[0])));
    }

    #[test]
    fn passive_vertex_never_forces() {
        let g = Graph::path(3);
        let (state, chronicle) = closure_with_passive(&g, &set(3, &[0]), &set(3, &[0]));
        assert_eq!(state.black, set(3, &[0]));
        assert!(chronicle.events.is_empty());
    }

    #[test]
    fn region_hides_outside_vertices() {
        // path 0-1-2-3, region {0,1,2}: 1 sees only 2 as white inside
        let g = Graph::path(4);
        let region = set(4, &[0, 1, 2]);
        let inside = closure_within(&g, &region, &set(4, &[0]));
        assert_eq!(inside.black, region);
        let whole = closure_within(&g, &VertexSet::full(4), &set(4, &[1]));
        assert_eq!(whole.black, closure(&g, &set(4, &[1])).0.black);
    }

    #[test]
    fn replay_rejects_bad_event() {
        let g = Graph::path(3);
        let bad = ForcingChronicle {
            initial: set(3, &[1]),
            events: vec![ForceEvent { round: 1, forcer: 1, forced: 2 }],
        };
        assert!(matches!(replay(&g, &bad), Err(ReplayError::NotOnlyWhiteNeighbor { .. })));
    }

    #[test]
    fn chronicle_json_shape() {
        let g = Graph::path(3);
        let (_, chronicle) = closure(&g, &set(3, &[0]));
        let json = serde_json::to_string(&chronicle).unwrap();
        assert_eq!(
            json,
            r#"{"initial":[0],"events":[{"round":1,"forcer":0,"forced":1},{"round":2,"forcer":1,"forced":2}]}"#
        );
    }
}

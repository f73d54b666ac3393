//! Zero forcing on simple graphs: the colour-change process, exact zero
//! forcing numbers, classical upper bounds in exact arithmetic, and the
//! binary-tree gadget families whose zero forcing number exceeds `n/3 + 2`.

pub mod families;
pub mod forcing;
pub mod graph;
pub mod solver;
pub mod verify;

pub use forcing::{closure, is_zero_forcing_set, ColorState, ForcingChronicle};
pub use graph::{Graph, GraphError, VertexSet};

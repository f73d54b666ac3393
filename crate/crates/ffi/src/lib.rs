//! C ABI over `zf-core`.
//!
//! Graphs are opaque `ZfGraph` handles owned by the caller and released
//! with `zf_graph_free`. Every fallible call returns a `ZfStatus`; on
//! failure `zf_last_error` describes the most recent error on the calling
//! thread. Vertex sets cross the boundary as arrays of `size_t` indices.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use zf_core::families::{build_g, build_ghat, cycle_gadget_family};
use zf_core::forcing::{closure, is_zero_forcing_set};
use zf_core::graph::graph6::{parse_graph6, write_graph6};
use zf_core::graph::{Graph, VertexSet};
use zf_core::solver::{solve, Budget, SolverKind};

/// Opaque graph handle.
pub struct ZfGraph {
    graph: Graph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    BudgetExhausted = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZfFamily {
    /// Binary tree of depth `2n − 1` with every leaf replaced by the gadget.
    G = 0,
    /// `G` plus a pendant vertex at the root.
    GHat = 1,
    /// Cycle family; the parameter is the cycle length (a multiple of 6).
    CycleGadget = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZfSolver {
    Auto = 0,
    Exhaustive = 1,
    BranchAndBound = 2,
}

/// Outcome of `zf_zero_forcing_number`. When `exact` is false the search
/// ran out of budget and only `lower ≤ Z ≤ upper` is known.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ZfBounds {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: ZfStatus, message: impl Into<String>) -> ZfStatus {
    let text = CString::new(message.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
    status
}

fn guarded(body: impl FnOnce() -> ZfStatus) -> ZfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(ZfStatus::Panic, "internal panic"),
    }
}

/// The message for the last failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn zf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

fn hand_out(graph: Graph, out: *mut *mut ZfGraph) -> ZfStatus {
    // SAFETY: callers check `out` for null before building the graph.
    unsafe { *out = Box::into_raw(Box::new(ZfGraph { graph })) };
    ZfStatus::Ok
}

/// Builds a graph on `n` vertices from `m` edges stored as `2·m`
/// consecutive endpoints.
///
/// # Safety
/// `edges` must point to `2·m` readable values (or be null when `m = 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_from_edges(n: usize, edges: *const usize, m: usize, out: *mut *mut ZfGraph) -> ZfStatus {
    guarded(|| {
        if out.is_null() || (edges.is_null() && m > 0) {
            return fail(ZfStatus::NullPointer, "null pointer argument");
        }
        let flat = if m == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * m) };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        match Graph::from_edge_list(n, &pairs) {
            Ok(g) => hand_out(g, out),
            Err(e) => fail(ZfStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Parses one graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_from_graph6(text: *const c_char, out: *mut *mut ZfGraph) -> ZfStatus {
    guarded(|| {
        if text.is_null() || out.is_null() {
            return fail(ZfStatus::NullPointer, "null pointer argument");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(ZfStatus::ParseError, "graph6 text is not UTF-8");
        };
        match parse_graph6(s) {
            Ok(g) => hand_out(g, out),
            Err(e) => fail(ZfStatus::ParseError, e.to_string()),
        }
    })
}

/// Builds a family graph with its landmark labels.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_family_build(family: ZfFamily, parameter: u32, out: *mut *mut ZfGraph) -> ZfStatus {
    guarded(|| {
        if out.is_null() {
            return fail(ZfStatus::NullPointer, "null pointer argument");
        }
        let built = match family {
            ZfFamily::G => build_g(parameter),
            ZfFamily::GHat => build_ghat(parameter),
            ZfFamily::CycleGadget => cycle_gadget_family(parameter as usize),
        };
        match built {
            Ok(fg) => hand_out(fg.labelled_graph(), out),
            Err(e) => fail(ZfStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `graph` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_free(graph: *mut ZfGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, or 0 for null.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_order(graph: *const ZfGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.order())
}

/// Number of edges, or 0 for null.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_size(graph: *const ZfGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.size())
}

/// Index of the vertex carrying `label`.
///
/// # Safety
/// `graph` must be a live handle, `label` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_vertex_by_label(graph: *const ZfGraph, label: *const c_char, out: *mut usize) -> ZfStatus {
    guarded(|| {
        let (Some(g), false, false) = (graph.as_ref(), label.is_null(), out.is_null()) else {
            return fail(ZfStatus::NullPointer, "null pointer argument");
        };
        let name = CStr::from_ptr(label).to_string_lossy();
        match g.graph.vertex_by_label(&name) {
            Some(v) => {
                *out = v;
                ZfStatus::Ok
            }
            None => fail(ZfStatus::InvalidArgument, format!("no vertex labelled {name:?}")),
        }
    })
}

/// Writes the graph6 encoding plus a terminating NUL into `buf`. With a
/// short buffer, `*needed` still receives the required capacity.
///
/// # Safety
/// `graph` must be a live handle; `buf` must have `capacity` writable
/// bytes (or be null with `capacity = 0`); `needed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_to_graph6(graph: *const ZfGraph, buf: *mut c_char, capacity: usize, needed: *mut usize) -> ZfStatus {
    guarded(|| {
        let (Some(g), false) = (graph.as_ref(), needed.is_null()) else {
            return fail(ZfStatus::NullPointer, "null pointer argument");
        };
        let text = match write_graph6(&g.graph) {
            Ok(t) => t,
            Err(e) => return fail(ZfStatus::InvalidArgument, e.to_string()),
        };
        *needed = text.len() + 1;
        if buf.is_null() || capacity < text.len() + 1 {
            return fail(ZfStatus::BufferTooSmall, format!("graph6 needs {} bytes", text.len() + 1));
        }
        ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
        *buf.add(text.len()) = 0;
        ZfStatus::Ok
    })
}

unsafe fn read_set(g: &Graph, set: *const usize, len: usize) -> Result<VertexSet, ZfStatus> {
    if set.is_null() && len > 0 {
        return Err(fail(ZfStatus::NullPointer, "null vertex array"));
    }
    let members = if len == 0 { &[][..] } else { std::slice::from_raw_parts(set, len) };
    VertexSet::from_indices(g.order(), members.iter().copied()).map_err(|e| fail(ZfStatus::InvalidArgument, e.to_string()))
}

/// Whether the `len` vertices at `set` form a zero forcing set.
///
/// # Safety
/// `graph` must be a live handle, `set` must hold `len` values, `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_is_zero_forcing_set(graph: *const ZfGraph, set: *const usize, len: usize, out: *mut bool) -> ZfStatus {
    guarded(|| {
        let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
            return fail(ZfStatus::NullPointer, "null pointer argument");
        };
        match read_set(&g.graph, set, len) {
            Ok(s) => {
                *out = is_zero_forcing_set(&g.graph, &s);
                ZfStatus::Ok
            }
            Err(status) => status,
        }
    })
}

/// Writes the closure of `set` in ascending order into `buf`. `*out_len`
/// always receives the closure size, so a short buffer can be resized.
///
/// # Safety
/// `graph` must be a live handle, `set` must hold `len` values, `buf`
/// must have `capacity` writable slots, `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_closure(
    graph: *const ZfGraph,
    set: *const usize,
    len: usize,
    buf: *mut usize,
    capacity: usize,
    out_len: *mut usize,
) -> ZfStatus {
    guarded(|| {
        let (Some(g), false) = (graph.as_ref(), out_len.is_null()) else {
            return fail(ZfStatus::NullPointer, "null pointer argument");
        };
        let s = match read_set(&g.graph, set, len) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let black = closure(&g.graph, &s).0.black.to_vec();
        write_indices(&black, buf, capacity, out_len)
    })
}

unsafe fn write_indices(values: &[usize], buf: *mut usize, capacity: usize, out_len: *mut usize) -> ZfStatus {
    *out_len = values.len();
    if values.len() > capacity || (buf.is_null() && !values.is_empty()) {
        return fail(ZfStatus::BufferTooSmall, format!("{} slots needed", values.len()));
    }
    if !values.is_empty() {
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    ZfStatus::Ok
}

/// Zero forcing number. `budget_secs ≤ 0` means no time limit; `threads`
/// of 0 is treated as 1. On `BudgetExhausted`, `*out` holds the proven
/// interval. A witness of size `out->upper` is written to `witness` when
/// one is known and fits in `capacity` slots; `*witness_len` is set to its
/// size, or 0 when none is available.
///
/// # Safety
/// `graph` must be a live handle; `out` and `witness_len` writable;
/// `witness` must have `capacity` writable slots or be null.
#[no_mangle]
pub unsafe extern "C" fn zf_zero_forcing_number(
    graph: *const ZfGraph,
    solver: ZfSolver,
    budget_secs: f64,
    threads: usize,
    out: *mut ZfBounds,
    witness: *mut usize,
    capacity: usize,
    witness_len: *mut usize,
) -> ZfStatus {
    guarded(|| {
        let (Some(g), false, false) = (graph.as_ref(), out.is_null(), witness_len.is_null()) else {
            return fail(ZfStatus::NullPointer, "null pointer argument");
        };
        let mut budget = Budget::unlimited().with_threads(threads.max(1));
        if budget_secs.is_finite() && budget_secs > 0.0 {
            budget.time = Some(Duration::from_secs_f64(budget_secs));
        }
        let kind = match solver {
            ZfSolver::Auto => SolverKind::Auto,
            ZfSolver::Exhaustive => SolverKind::Exhaustive,
            ZfSolver::BranchAndBound => SolverKind::BranchAndBound,
        };
        *witness_len = 0;
        let (bounds, found, status) = match solve(&g.graph, kind, &budget) {
            Ok(r) => (ZfBounds { lower: r.z, upper: r.z, exact: true }, Some(r.witness), ZfStatus::Ok),
            Err(t) => {
                let status = fail(ZfStatus::BudgetExhausted, t.to_string());
                (ZfBounds { lower: t.lower, upper: t.upper, exact: false }, t.witness, status)
            }
        };
        *out = bounds;
        if let Some(w) = found {
            if !witness.is_null() {
                let written = write_indices(&w.to_vec(), witness, capacity, witness_len);
                if written != ZfStatus::Ok {
                    return written;
                }
            } else {
                *witness_len = w.len();
            }
        }
        status
    })
}

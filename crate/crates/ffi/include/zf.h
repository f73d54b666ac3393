#ifndef ZF_H
#define ZF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ZfStatus {
  ZF_STATUS_OK = 0,
  ZF_STATUS_NULL_POINTER = 1,
  ZF_STATUS_INVALID_ARGUMENT = 2,
  ZF_STATUS_PARSE_ERROR = 3,
  ZF_STATUS_BUDGET_EXHAUSTED = 4,
  ZF_STATUS_BUFFER_TOO_SMALL = 5,
  ZF_STATUS_PANIC = 6,
} ZfStatus;

typedef enum ZfFamily {
  /**
   * Binary tree of depth `2n − 1` with every leaf replaced by the gadget.
   */
  ZF_FAMILY_G = 0,
  /**
   * `G` plus a pendant vertex at the root.
   */
  ZF_FAMILY_G_HAT = 1,
  /**
   * Cycle family; the parameter is the cycle length (a multiple of 6).
   */
  ZF_FAMILY_CYCLE_GADGET = 2,
} ZfFamily;

typedef enum ZfSolver {
  ZF_SOLVER_AUTO = 0,
  ZF_SOLVER_EXHAUSTIVE = 1,
  ZF_SOLVER_BRANCH_AND_BOUND = 2,
} ZfSolver;

/**
 * Opaque graph handle.
 */
typedef struct ZfGraph ZfGraph;

/**
 * Outcome of `zf_zero_forcing_number`. When `exact` is false the search
 * ran out of budget and only `lower ≤ Z ≤ upper` is known.
 */
typedef struct ZfBounds {
  size_t lower;
  size_t upper;
  bool exact;
} ZfBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the last failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *zf_last_error(void);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2·m`
 * consecutive endpoints.
 *
 * # Safety
 * `edges` must point to `2·m` readable values (or be null when `m = 0`);
 * `out` must be writable.
 */
enum ZfStatus zf_graph_from_edges(size_t n, const size_t *edges, size_t m, struct ZfGraph **out);

/**
 * Parses one graph6 string.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum ZfStatus zf_graph_from_graph6(const char *text, struct ZfGraph **out);

/**
 * Builds a family graph with its landmark labels.
 *
 * # Safety
 * `out` must be writable.
 */
enum ZfStatus zf_family_build(enum ZfFamily family, uint32_t parameter, struct ZfGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `graph` must come from this library and not be used afterwards.
 */
void zf_graph_free(struct ZfGraph *graph);

/**
 * Number of vertices, or 0 for null.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t zf_graph_order(const struct ZfGraph *graph);

/**
 * Number of edges, or 0 for null.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t zf_graph_size(const struct ZfGraph *graph);

/**
 * Index of the vertex carrying `label`.
 *
 * # Safety
 * `graph` must be a live handle, `label` NUL-terminated, `out` writable.
 */
enum ZfStatus zf_graph_vertex_by_label(const struct ZfGraph *graph, const char *label, size_t *out);

/**
 * Writes the graph6 encoding plus a terminating NUL into `buf`. With a
 * short buffer, `*needed` still receives the required capacity.
 *
 * # Safety
 * `graph` must be a live handle; `buf` must have `capacity` writable
 * bytes (or be null with `capacity = 0`); `needed` must be writable.
 */
enum ZfStatus zf_graph_to_graph6(const struct ZfGraph *graph,
                                 char *buf,
                                 size_t capacity,
                                 size_t *needed);

/**
 * Whether the `len` vertices at `set` form a zero forcing set.
 *
 * # Safety
 * `graph` must be a live handle, `set` must hold `len` values, `out`
 * must be writable.
 */
enum ZfStatus zf_is_zero_forcing_set(const struct ZfGraph *graph,
                                     const size_t *set,
                                     size_t len,
                                     bool *out);

/**
 * Writes the closure of `set` in ascending order into `buf`. `*out_len`
 * always receives the closure size, so a short buffer can be resized.
 *
 * # Safety
 * `graph` must be a live handle, `set` must hold `len` values, `buf`
 * must have `capacity` writable slots, `out_len` must be writable.
 */
enum ZfStatus zf_closure(const struct ZfGraph *graph,
                         const size_t *set,
                         size_t len,
                         size_t *buf,
                         size_t capacity,
                         size_t *out_len);

/**
 * Zero forcing number. `budget_secs ≤ 0` means no time limit; `threads`
 * of 0 is treated as 1. On `BudgetExhausted`, `*out` holds the proven
 * interval. A witness of size `out->upper` is written to `witness` when
 * one is known and fits in `capacity` slots; `*witness_len` is set to its
 * size, or 0 when none is available.
 *
 * # Safety
 * `graph` must be a live handle; `out` and `witness_len` writable;
 * `witness` must have `capacity` writable slots or be null.
 */
enum ZfStatus zf_zero_forcing_number(const struct ZfGraph *graph,
                                     enum ZfSolver solver,
                                     double budget_secs,
                                     size_t threads,
                                     struct ZfBounds *out,
                                     size_t *witness,
                                     size_t capacity,
                                     size_t *witness_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZF_H */

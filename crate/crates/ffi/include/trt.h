#ifndef TRT_H
#define TRT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of an FFI call.
 */
typedef enum TrtStatus {
  TRT_STATUS_OK = 0,
  /**
   * Null pointer, unknown family code, or a parameter out of range.
   */
  TRT_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Malformed graph6 text.
   */
  TRT_STATUS_PARSE = 2,
  /**
   * A graph would exceed 128 vertices.
   */
  TRT_STATUS_ORDER_CAP = 3,
  /**
   * No closed form for this family.
   */
  TRT_STATUS_UNSUPPORTED = 4,
  /**
   * Parameters outside the range a formula covers.
   */
  TRT_STATUS_OUTSIDE_DOMAIN = 5,
  /**
   * A self-check failed or a Rust panic was caught.
   */
  TRT_STATUS_INTERNAL = 6,
} TrtStatus;

typedef enum TrtBoundKind {
  TRT_BOUND_KIND_EXACT = 0,
  TRT_BOUND_KIND_RANGE = 1,
  /**
   * Only a lower bound, or nothing, is known.
   */
  TRT_BOUND_KIND_UNKNOWN = 2,
} TrtBoundKind;

/**
 * Tree family codes accepted wherever a `uint32_t family` is taken.
 */
typedef enum TrtFamily {
  TRT_FAMILY_PATH = 0,
  TRT_FAMILY_STAR = 1,
  TRT_FAMILY_TPRIME = 2,
  TRT_FAMILY_TSTAR = 3,
  TRT_FAMILY_T1 = 4,
  TRT_FAMILY_T2 = 5,
} TrtFamily;

/**
 * Opaque simple graph on at most 128 vertices.
 */
typedef struct TrtGraph TrtGraph;

/**
 * A Ramsey number or the interval known to contain it. A missing end is 0.
 */
typedef struct TrtRamsey {
  enum TrtBoundKind kind;
  uint64_t lower;
  uint64_t upper;
} TrtRamsey;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null after a
 * success. Valid until the next call into this library on the same thread.
 */
const char *trt_last_error_message(void);

/**
 * Parse one graph6 line (a trailing newline is allowed).
 *
 * # Safety
 * `text` must be null or a NUL-terminated string; `out` must be null or
 * writable.
 */
enum TrtStatus trt_graph_from_graph6(const char *text, struct TrtGraph **out);

/**
 * Release a handle. Null is ignored.
 *
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void trt_graph_free(struct TrtGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t trt_graph_order(const struct TrtGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint64_t trt_graph_edge_count(const struct TrtGraph *g);

/**
 * Encode as graph6, without a newline. Free the result with
 * `trt_string_free`.
 *
 * # Safety
 * `g` must be null or a live handle; `out` must be null or writable.
 */
enum TrtStatus trt_graph_to_graph6(const struct TrtGraph *g, char **out);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void trt_string_free(char *s);

/**
 * Build the tree of `family` on `n` vertices.
 *
 * # Safety
 * `out` must be null or writable.
 */
enum TrtStatus trt_tree_make(uint32_t family, size_t n, struct TrtGraph **out);

/**
 * Whether `host` has a subgraph isomorphic to the tree `tree`.
 *
 * # Safety
 * Both handles must be null or live; `out` must be null or writable.
 */
enum TrtStatus trt_contains_tree(const struct TrtGraph *host,
                                 const struct TrtGraph *tree,
                                 bool *out);

/**
 * Maximum edge count of a graph on `p` vertices with no copy of the tree.
 *
 * # Safety
 * `out` must be null or writable.
 */
enum TrtStatus trt_ex_value(uint32_t family, size_t n, uint64_t p, uint64_t *out);

/**
 * The two-colour Ramsey number of a pair of trees, or the best known
 * interval.
 *
 * # Safety
 * `out` must be null or writable.
 */
enum TrtStatus trt_ramsey_value(uint32_t left_family,
                                size_t m,
                                uint32_t right_family,
                                size_t n,
                                struct TrtRamsey *out);

/**
 * A verified tree-free graph on `p` vertices with the maximum edge count.
 *
 * # Safety
 * `out` must be null or writable.
 */
enum TrtStatus trt_extremal_witness(uint32_t family, size_t n, uint64_t p, struct TrtGraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRT_H */

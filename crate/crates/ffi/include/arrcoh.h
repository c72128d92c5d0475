#ifndef ARRCOH_H
#define ARRCOH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum ArrcohStatus {
  ARRCOH_STATUS_OK = 0,
  /**
   * A precondition of the operation does not hold.
   */
  ARRCOH_STATUS_DOMAIN = 1,
  /**
   * Input could not be parsed or is inconsistent.
   */
  ARRCOH_STATUS_MALFORMED = 2,
  ARRCOH_STATUS_NULL_POINTER = 3,
  /**
   * Internal consistency failure or a caught panic.
   */
  ARRCOH_STATUS_INTERNAL = 4,
} ArrcohStatus;

/**
 * Values accepted for `space` arguments.
 */
typedef enum ArrcohSpace {
  ARRCOH_SPACE_DIAGONAL = 0,
  ARRCOH_SPACE_COORDINATE = 1,
} ArrcohSpace;

/**
 * Values accepted for `ambient` arguments.
 */
typedef enum ArrcohAmbient {
  ARRCOH_AMBIENT_REAL = 0,
  ARRCOH_AMBIENT_COMPLEX = 1,
} ArrcohAmbient;

/**
 * An immutable simplicial complex.
 */
typedef struct ArrcohComplex ArrcohComplex;

/**
 * An immutable graded abelian group `H^*`.
 */
typedef struct ArrcohGroup ArrcohGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a complex from JSON (`{"m": .., "facets": [..]}` or
 * `{"m": .., "missing_faces": [..]}`).
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum ArrcohStatus arrcoh_complex_from_json(const char *json, struct ArrcohComplex **out);

/**
 * Releases a complex. Null is ignored.
 *
 * # Safety
 * `k` must come from [`arrcoh_complex_from_json`] and not be used again.
 */
void arrcoh_complex_free(struct ArrcohComplex *k);

/**
 * Number of vertices `m`.
 *
 * # Safety
 * `k` must be a live handle; `out` must be writable.
 */
enum ArrcohStatus arrcoh_complex_vertex_count(const struct ArrcohComplex *k, size_t *out);

/**
 * Whether every two missing faces share a vertex.
 *
 * # Safety
 * `k` must be a live handle; `out` must be writable.
 */
enum ArrcohStatus arrcoh_complex_common_vertex(const struct ArrcohComplex *k, bool *out);

/**
 * The canonical `sha256:<hex>` hash of the complex. Free with
 * [`arrcoh_string_free`].
 *
 * # Safety
 * `k` must be a live handle; `out` must be writable.
 */
enum ArrcohStatus arrcoh_complex_hash(const struct ArrcohComplex *k, char **out);

/**
 * Cohomology of the diagonal or coordinate complement, all degrees up to
 * the real ambient dimension.
 *
 * # Safety
 * `k` must be a live handle; `out` must be writable.
 */
enum ArrcohStatus arrcoh_cohomology(const struct ArrcohComplex *k,
                                    int32_t space,
                                    int32_t ambient_kind,
                                    struct ArrcohGroup **out);

/**
 * Releases a group. Null is ignored.
 *
 * # Safety
 * `g` must come from [`arrcoh_cohomology`] and not be used again.
 */
void arrcoh_group_free(struct ArrcohGroup *g);

/**
 * Highest nonzero degree, or `-1` for the zero group.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum ArrcohStatus arrcoh_group_max_degree(const struct ArrcohGroup *g, int64_t *out);

/**
 * Free rank in `degree`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum ArrcohStatus arrcoh_group_rank(const struct ArrcohGroup *g, int64_t degree, size_t *out);

/**
 * Number of torsion coefficients in `degree`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum ArrcohStatus arrcoh_group_torsion_len(const struct ArrcohGroup *g,
                                           int64_t degree,
                                           size_t *out);

/**
 * Torsion coefficient `index` in `degree`, in increasing divisibility order.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum ArrcohStatus arrcoh_group_torsion_at(const struct ArrcohGroup *g,
                                          int64_t degree,
                                          size_t index,
                                          uint64_t *out);

/**
 * Cohomology as a JSON report with `space`, `ambient` and `cohomology`
 * fields in the command-line tool's envelope. Free with [`arrcoh_string_free`].
 *
 * # Safety
 * `k` must be a live handle; `out` must be writable.
 */
enum ArrcohStatus arrcoh_cohomology_json(const struct ArrcohComplex *k,
                                         int32_t space,
                                         int32_t ambient_kind,
                                         char **out);

/**
 * The wedge decomposition report as JSON.
 *
 * # Safety
 * `k` must be a live handle; `out` must be writable.
 */
enum ArrcohStatus arrcoh_bbcg_json(const struct ArrcohComplex *k, char **out);

/**
 * The suspension-relation report as JSON. Fails with `Domain` unless the
 * missing faces pairwise intersect.
 *
 * # Safety
 * `k` must be a live handle; `out` must be writable.
 */
enum ArrcohStatus arrcoh_check_suspension_json(const struct ArrcohComplex *k, char **out);

/**
 * The cone-extension report as JSON.
 *
 * # Safety
 * `k` must be a live handle; `out` must be writable.
 */
enum ArrcohStatus arrcoh_check_cone_json(const struct ArrcohComplex *k, char **out);

/**
 * The `k`-equal report as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum ArrcohStatus arrcoh_kequal_json(size_t m, size_t k, int32_t ambient_kind, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used again.
 */
void arrcoh_string_free(char *s);

/**
 * Message of the last failed call on this thread, or an empty string. The
 * pointer stays valid until the next call into the library on this thread.
 */
const char *arrcoh_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ARRCOH_H */

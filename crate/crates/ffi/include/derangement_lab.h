/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef DERANGEMENT_LAB_H
#define DERANGEMENT_LAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DlStatus {
  DL_STATUS_OK = 0,
  DL_STATUS_NULL_POINTER = 1,
  DL_STATUS_INVALID_ARGUMENT = 2,
  DL_STATUS_CAP_EXCEEDED = 3,
  DL_STATUS_PARSE = 4,
  DL_STATUS_NOT_TRANSITIVE = 5,
  DL_STATUS_INTERNAL = 6,
} DlStatus;

/**
 * Opaque group handle.
 */
typedef struct DlGroup DlGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty after a
 * success. Valid until the next call into the library on the same thread.
 */
const char *dl_last_error_message(void);

/**
 * `G_q(A)` acting on the lines of the affine plane over GF(q).
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum DlStatus dl_group_construct_gq(uint64_t q, struct DlGroup **out);

/**
 * The degree `4 ell` group; `ell` must be odd and at least 3.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum DlStatus dl_group_construct_fourell(uint32_t ell, struct DlGroup **out);

/**
 * The order 12 group of degree 6.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum DlStatus dl_group_construct_example6(struct DlGroup **out);

/**
 * Cyclic group of order `n` acting regularly.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum DlStatus dl_group_construct_cyclic(uint32_t n, struct DlGroup **out);

/**
 * Group from the text of a JSON group file.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum DlStatus dl_group_from_json(const char *json, struct DlGroup **out);

/**
 * Group generated by `count` permutations of degree `degree`, given as
 * consecutive 1-based image lists in `images` (`count * degree` values).
 *
 * # Safety
 * `images` must point to `count * degree` readable values; `out` must be
 * writable.
 */
enum DlStatus dl_group_from_generators(size_t degree,
                                       const uint32_t *images,
                                       size_t count,
                                       struct DlGroup **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void dl_group_free(struct DlGroup *g);

/**
 * Group order, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint64_t dl_group_order(const struct DlGroup *g);

/**
 * Degree of the action, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint64_t dl_group_degree(const struct DlGroup *g);

/**
 * Full analysis report as JSON. Free the string with `dl_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum DlStatus dl_group_analyze_json(const struct DlGroup *g, char **out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void dl_string_free(char *s);

/**
 * Intersection density as a reduced fraction.
 *
 * # Safety
 * `g` must be a live handle; `num` and `den` writable.
 */
enum DlStatus dl_group_intersection_density(const struct DlGroup *g, uint64_t *num, uint64_t *den);

/**
 * Whether the derangement graph is complete multipartite; when it is,
 * the part count and size are written (zero otherwise).
 *
 * # Safety
 * `g` must be a live handle; the out-pointers writable.
 */
enum DlStatus dl_group_is_multipartite(const struct DlGroup *g,
                                       bool *is_multipartite,
                                       uint64_t *parts,
                                       uint64_t *part_size);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DERANGEMENT_LAB_H */

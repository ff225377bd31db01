#ifndef CDINDEX_H
#define CDINDEX_H

/* Generated by cbindgen from the cdindex-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a C API call.
 */
typedef enum {
  /**
   * The call succeeded.
   */
  CDX_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  CDX_STATUS_NULL_ARGUMENT = 1,
  /**
   * A text argument was not valid UTF-8.
   */
  CDX_STATUS_INVALID_UTF8 = 2,
  /**
   * A document failed to parse or validate.
   */
  CDX_STATUS_PARSE_ERROR = 3,
  /**
   * The computation itself reported an error.
   */
  CDX_STATUS_COMPUTE_ERROR = 4,
  /**
   * The ab-index exists but has no expression in c and d.
   */
  CDX_STATUS_NOT_CD_EXPRESSIBLE = 5,
} CdxStatus;

/**
 * Opaque handle to a quasi-graded poset.
 */
typedef struct CdxPoset CdxPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the error text of the most recent failing call on this thread,
 * or an empty string after a success. The pointer stays valid until the
 * next call into this library on the same thread; it is never null and
 * must not be freed.
 */
const char *cdx_last_error_message(void);

/**
 * Parses a poset JSON document into a new handle stored in `*out`.
 *
 * The document format is the same one the command-line tool reads:
 * `elements` with ids and ranks, `covers` or `relations`, optional
 * `bottom`/`top`, and `zeta` overrides with `"p/q"` values.
 *
 * # Safety
 * `json` must point to a NUL-terminated byte string and `out` to a
 * writable pointer slot; both are only borrowed for the duration of the
 * call.
 */
CdxStatus cdx_poset_parse(const char *json, CdxPoset **out);

/**
 * Releases a poset handle. A null `poset` is a no-op.
 *
 * # Safety
 * `poset` must be null or a handle obtained from this library that has not
 * been freed already.
 */
void cdx_poset_free(CdxPoset *poset);

/**
 * Stores the number of elements of the poset in `*out`.
 *
 * # Safety
 * `poset` must be a live handle from this library and `out` a writable
 * slot.
 */
CdxStatus cdx_poset_element_count(const CdxPoset *poset, size_t *out);

/**
 * Stores the rank distance from the bottom to the top element in `*out`.
 *
 * # Safety
 * `poset` must be a live handle from this library and `out` a writable
 * slot.
 */
CdxStatus cdx_poset_rank_span(const CdxPoset *poset, int64_t *out);

/**
 * Stores `true` in `*out` when every interval of the poset satisfies the
 * Eulerian condition.
 *
 * # Safety
 * `poset` must be a live handle from this library and `out` a writable
 * slot.
 */
CdxStatus cdx_poset_is_eulerian(const CdxPoset *poset, bool *out);

/**
 * Renders the ab-index of the poset into a newly allocated string stored
 * in `*out`.
 *
 * # Safety
 * `poset` must be a live handle from this library and `out` a writable
 * slot; release the string with [`cdx_string_free`].
 */
CdxStatus cdx_poset_ab_index(const CdxPoset *poset, char **out);

/**
 * Renders the cd-index of the poset into a newly allocated string stored
 * in `*out`. Returns `NotCdExpressible` when the ab-index exists but has
 * no expression in c and d.
 *
 * # Safety
 * `poset` must be a live handle from this library and `out` a writable
 * slot; release the string with [`cdx_string_free`].
 */
CdxStatus cdx_poset_cd_index(const CdxPoset *poset, char **out);

/**
 * Solves for the zeta values that make the poset Eulerian and stores the
 * completed poset as a new handle in `*out`.
 *
 * # Safety
 * `poset` must be a live handle from this library and `out` a writable
 * slot; release the new handle with [`cdx_poset_free`].
 */
CdxStatus cdx_poset_complete_eulerian(const CdxPoset *poset, CdxPoset **out);

/**
 * Renders the poset as a canonical JSON document, stored as a newly
 * allocated string in `*out`. The document re-ingests through
 * [`cdx_poset_parse`] to an identical poset.
 *
 * # Safety
 * `poset` must be a live handle from this library and `out` a writable
 * slot; release the string with [`cdx_string_free`].
 */
CdxStatus cdx_poset_to_json(const CdxPoset *poset, char **out);

/**
 * Releases a string returned by this library. A null `text` is a no-op.
 *
 * # Safety
 * `text` must be null or a string obtained from this library that has not
 * been freed already.
 */
void cdx_string_free(char *text);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CDINDEX_H */

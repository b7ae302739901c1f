#ifndef HULLGAP_H
#define HULLGAP_H

/* Generated by cbindgen from hullgap-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum {
  /**
   * Success.
   */
  HG_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  HG_STATUS_NULL_ARGUMENT = 1,
  /**
   * Input text was not valid UTF-8.
   */
  HG_STATUS_INVALID_UTF8 = 2,
  /**
   * Input text did not parse in the expected format.
   */
  HG_STATUS_PARSE_ERROR = 3,
  /**
   * Parsed input violated a domain rule (empty instance, eps <= 0,
   * duplicate values where distinct ones are required).
   */
  HG_STATUS_DOMAIN_ERROR = 4,
} HgStatus;

/**
 * Opaque handle: a closeness-problem instance (values plus positive eps).
 */
typedef struct HgInstance HgInstance;

/**
 * Opaque handle: a planar point multiset.
 */
typedef struct HgPoints HgPoints;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses instance text (`eps <rational>`, then one value per line; `#`
 * comments and blank lines ignored) into a new handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be a valid
 * pointer. On `HG_STATUS_OK` the caller owns the handle and must release
 * it with [`hg_instance_free`].
 */
HgStatus hg_instance_parse(const char *text, HgInstance **out);

/**
 * Builds an instance from an eps token and an array of value tokens.
 *
 * # Safety
 * `eps` must be a valid NUL-terminated string; `values` must point to
 * `values_len` valid NUL-terminated strings; `out` must be valid. On
 * `HG_STATUS_OK` the caller owns the handle.
 */
HgStatus hg_instance_new(const char *eps,
                         const char *const *values,
                         uintptr_t values_len,
                         HgInstance **out);

/**
 * Number of values in the instance; 0 for a NULL handle.
 *
 * # Safety
 * `inst` must be NULL or a live handle from this library.
 */
uintptr_t hg_instance_len(const HgInstance *inst);

/**
 * Releases an instance handle; NULL is a no-op.
 *
 * # Safety
 * `inst` must be NULL or a handle previously returned by this library,
 * not yet freed.
 */
void hg_instance_free(HgInstance *inst);

/**
 * Parses point text (one `x y` pair per line) into a new handle.
 *
 * # Safety
 * As [`hg_instance_parse`]; release with [`hg_points_free`].
 */
HgStatus hg_points_parse(const char *text, HgPoints **out);

/**
 * Number of points; 0 for a NULL handle.
 *
 * # Safety
 * `points` must be NULL or a live handle from this library.
 */
uintptr_t hg_points_len(const HgPoints *points);

/**
 * Releases a points handle; NULL is a no-op.
 *
 * # Safety
 * `points` must be NULL or a handle previously returned by this library,
 * not yet freed.
 */
void hg_points_free(HgPoints *points);

/**
 * Is there a pair with `0 < a_j - a_i < eps`? (Decided via the hull of the
 * doubled point set.)
 *
 * # Safety
 * `inst` must be a live handle; `verdict` must be a valid pointer.
 */
HgStatus hg_decide_strict(const HgInstance *inst, bool *verdict);

/**
 * Is there a pair with `0 <= a_j - a_i < eps`? (Two hull rounds; the
 * second runs on the perturbed instance when the first says no.)
 *
 * # Safety
 * `inst` must be a live handle; `verdict` must be a valid pointer.
 */
HgStatus hg_decide_closeness(const HgInstance *inst, bool *verdict);

/**
 * Is there a pair with `0 < a_j - a_i <= eps`? (Decided via convex
 * position of the doubled point set.)
 *
 * # Safety
 * `inst` must be a live handle; `verdict` must be a valid pointer.
 */
HgStatus hg_decide_weak(const HgInstance *inst, bool *verdict);

/**
 * Does any point lie strictly inside the hull of the multiset?
 *
 * # Safety
 * `points` must be a live handle; `verdict` must be a valid pointer.
 */
HgStatus hg_any_point_inside(const HgPoints *points, bool *verdict);

/**
 * Is every point's location a vertex of the hull?
 *
 * # Safety
 * `points` must be a live handle; `verdict` must be a valid pointer.
 */
HgStatus hg_in_convex_position(const HgPoints *points, bool *verdict);

/**
 * Sorts distinct value tokens by walking the hull of their parabola lift.
 * Writes a newly allocated string of canonical tokens, one per line.
 *
 * # Safety
 * `values` must point to `values_len` valid NUL-terminated strings; `out`
 * must be valid. On `HG_STATUS_OK` release the string with
 * [`hg_string_free`].
 */
HgStatus hg_sort_via_hull(const char *const *values, uintptr_t values_len, char **out);

/**
 * Renders the instance's doubled point set as a standalone SVG document.
 *
 * # Safety
 * `inst` must be a live handle; `out` must be valid. On `HG_STATUS_OK`
 * release the string with [`hg_string_free`].
 */
HgStatus hg_render_svg(const HgInstance *inst, char **out);

/**
 * Releases a string returned by this library; NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a string previously returned by this library, not
 * yet freed.
 */
void hg_string_free(char *s);

/**
 * Static description of a status code; never free the result.
 */
const char *hg_status_message(HgStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HULLGAP_H */

#ifndef CSL_H
#define CSL_H

/* Generated by cbindgen from csl-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum {
  CslStatus_Ok = 0,
  CslStatus_NullPointer = 1,
  CslStatus_InvalidUtf8 = 2,
  CslStatus_InvalidArgument = 3,
  CslStatus_DomainError = 4,
  CslStatus_BudgetExceeded = 5,
  CslStatus_CapExceeded = 6,
  CslStatus_UnknownName = 7,
  CslStatus_InternalError = 8,
} CslStatus;

/**
 * An opaque handle to a catalog group.
 */
typedef struct CslGroup CslGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The library version, as a static string that must not be freed.
 */
const char *csl_version(void);

/**
 * Releases a string allocated by this library.
 *
 * # Safety
 * `s` must be a pointer previously returned through a `char **`
 * out-parameter of this library, or null.
 */
void csl_string_free(char *s);

/**
 * Opens a catalog group by label (for example "alt(5)" or "psl2(7)").
 *
 * # Safety
 * `label` must be a valid NUL-terminated string; `out` must be a valid
 * pointer.
 */
CslStatus csl_group_open(const char *label, CslGroup **out);

/**
 * Releases a group handle.
 *
 * # Safety
 * `g` must be a handle from `csl_group_open`, or null.
 */
void csl_group_close(CslGroup *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be a valid pointer.
 */
CslStatus csl_group_order(const CslGroup *g, uint64_t *out);

/**
 * The class-size spectrum N(G) as JSON.
 *
 * # Safety
 * `g` must be a live handle; `out_json` must be a valid pointer.
 */
CslStatus csl_group_spectrum_json(const CslGroup *g, char **out_json);

/**
 * The element-order set of the group as a JSON array.
 *
 * # Safety
 * `g` must be a live handle; `out_json` must be a valid pointer.
 */
CslStatus csl_group_omega_json(const CslGroup *g, char **out_json);

/**
 * The prime graph of the group in DOT form.
 *
 * # Safety
 * `g` must be a live handle; `out_dot` must be a valid pointer.
 */
CslStatus csl_group_prime_graph_dot(const CslGroup *g, char **out_dot);

/**
 * The greatest primitive divisor k_i(a), as a decimal string.
 *
 * # Safety
 * `out_decimal` must be a valid pointer.
 */
CslStatus csl_greatest_primitive_divisor(int64_t a, uint32_t i, char **out_decimal);

/**
 * The order of the simple group (or of its automorphism group when
 * `aut` is nonzero), as a decimal string.
 *
 * # Safety
 * `family` must be a valid NUL-terminated string; `out_decimal` must be
 * a valid pointer.
 */
CslStatus csl_simple_order(const char *family,
                           uint32_t rank,
                           uint64_t q,
                           int aut,
                           char **out_decimal);

/**
 * Whether the order bound holds: |L| < (|L|_p)^3, or with `aut` nonzero
 * |Aut(L)|^2 < (|L|_p)^7. Writes 1 or 0.
 *
 * # Safety
 * `family` must be a valid NUL-terminated string; `out_holds` must be a
 * valid pointer.
 */
CslStatus csl_bound_check(const char *family, uint32_t rank, uint64_t q, int aut, int *out_holds);

/**
 * Runs a named check. `params_json` is either null or a JSON object of
 * integer overrides, for example {"q_max": 64}. The full report is
 * returned as JSON; a failing check still returns `Ok` here, with the
 * failure recorded in the report's `status` field.
 *
 * # Safety
 * `id` must be a valid NUL-terminated string; `params_json` must be a
 * valid NUL-terminated string or null; `out_report_json` must be a
 * valid pointer.
 */
CslStatus csl_run_check(const char *id, const char *params_json, char **out_report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CSL_H */

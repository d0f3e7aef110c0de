#ifndef SHEAF_STRATA_H
#define SHEAF_STRATA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SsStatus {
  SS_STATUS_OK = 0,
  SS_STATUS_NULL_ARGUMENT,
  SS_STATUS_INVALID_UTF8,
  SS_STATUS_PANIC,
  SS_STATUS_DEGREE_MISMATCH,
  SS_STATUS_TWIST_MISMATCH,
  SS_STATUS_SHAPE_MISMATCH,
  SS_STATUS_INVALID_PRESENTATION,
  SS_STATUS_NOT_SQUARE,
  SS_STATUS_NOT_INJECTIVE,
  SS_STATUS_WRONG_HILBERT_POLYNOMIAL,
  SS_STATUS_NON_LINEAR_HILBERT,
  SS_STATUS_NO_STRATUM_MATCH,
  SS_STATUS_NOT_INVERTIBLE,
  SS_STATUS_PARSE,
  SS_STATUS_PRECONDITION,
  SS_STATUS_RETRIES_EXHAUSTED,
  SS_STATUS_BAD_PRIME,
  SS_STATUS_INTERNAL,
  SS_STATUS_IO,
  SS_STATUS_UNKNOWN_STRATUM,
} SsStatus;

typedef enum SsStratum {
  SS_STRATUM_X0 = 0,
  SS_STRATUM_X1,
  SS_STRATUM_X2,
  SS_STRATUM_X3,
  SS_STRATUM_X3D,
  SS_STRATUM_X4,
  SS_STRATUM_X5,
  SS_STRATUM_X6,
  SS_STRATUM_X7,
} SsStratum;

/**
 * Opaque handle to a presentation.
 */
typedef struct SsPresentation SsPresentation;

/**
 * `(h0(F(-1)), h1(F), h0(F ⊗ Ω¹(1)))`.
 */
typedef struct SsCohomologyTable {
  size_t h0_minus1;
  size_t h1_0;
  size_t h0_omega;
} SsCohomologyTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call into the library.
 */
const char *ss_last_error_message(void);

/**
 * Stable kebab-case name of an [`SsStatus`] value, e.g. `"not-injective"`;
 * null for an unknown value. Library errors use the same names as the
 * command line.
 */
const char *ss_status_name(int32_t status);

/**
 * Display name of a stratum, e.g. `"X3D"`; null for an out-of-range value.
 */
const char *ss_stratum_name(int32_t stratum);

/**
 * Parses a presentation from its JSON form.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SsStatus ss_presentation_from_json(const char *json, struct SsPresentation **out);

/**
 * Serializes a presentation; free the result with [`ss_string_free`].
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum SsStatus ss_presentation_to_json(const struct SsPresentation *p, char **out);

/**
 * # Safety
 * `p` must be null or a handle from this library not yet freed.
 */
void ss_presentation_free(struct SsPresentation *p);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void ss_string_free(char *s);

/**
 * Stratum of the cokernel, read off its cohomology triple.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum SsStatus ss_classify(const struct SsPresentation *p, enum SsStratum *out);

/**
 * Classification with every normal-form check, as a JSON object. `prime`
 * of 0 selects the default.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum SsStatus ss_classify_report_json(const struct SsPresentation *p,
                                      size_t trials,
                                      uint64_t prime,
                                      uint64_t seed,
                                      char **out);

/**
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum SsStatus ss_cohomology_table(const struct SsPresentation *p, struct SsCohomologyTable *out);

/**
 * `h0` and `h1` of the cokernel twisted by `twist`.
 *
 * # Safety
 * `p` must be a live handle; `h0_out` and `h1_out` valid pointers.
 */
enum SsStatus ss_cohomology(const struct SsPresentation *p,
                            int32_t twist,
                            size_t *h0_out,
                            size_t *h1_out);

/**
 * A seeded random presentation of the given stratum (an [`SsStratum`]
 * value). `height` bounds the random coefficients; 0 selects the default.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SsStatus ss_sample(int32_t stratum,
                        uint64_t seed,
                        int64_t height,
                        struct SsPresentation **out);

/**
 * Presentation of the dual sheaf twisted by `twist`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum SsStatus ss_dualize(const struct SsPresentation *p,
                         int32_t twist,
                         struct SsPresentation **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHEAF_STRATA_H */

#ifndef THETAMAP_H
#define THETAMAP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum ThetamapStatus {
  THETAMAP_STATUS_OK = 0,
  THETAMAP_STATUS_NULL_POINTER = 1,
  THETAMAP_STATUS_INVALID_ARGUMENT = 2,
  THETAMAP_STATUS_CERTIFICATION = 3,
  THETAMAP_STATUS_OVERFLOW = 4,
  THETAMAP_STATUS_PANIC = 5,
} ThetamapStatus;

/**
 * Opaque result of the rank-4 degree pipeline.
 */
typedef struct ThetamapDegree ThetamapDegree;

/**
 * Opaque certified Verlinde number.
 */
typedef struct ThetamapVerlinde ThetamapVerlinde;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null; do not free.
 */
const char *thetamap_status_message(enum ThetamapStatus status);

/**
 * Message for the last failure on this thread. Valid until the next call
 * into this library on the same thread; do not free.
 */
const char *thetamap_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void thetamap_string_free(char *s);

/**
 * Canonical mask of the 2-torsion class of an even subset.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum ThetamapStatus thetamap_two_torsion_canonical(uint8_t mask, uint8_t *out);

/**
 * # Safety
 * `out` must be valid for one write.
 */
enum ThetamapStatus thetamap_two_torsion_add(uint8_t a, uint8_t b, uint8_t *out);

/**
 * Weil pairing as 0 or 1.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum ThetamapStatus thetamap_weil_pairing(uint8_t a, uint8_t b, uint8_t *out);

/**
 * Canonical mask of the theta-characteristic of an odd subset.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum ThetamapStatus thetamap_theta_char_canonical(uint8_t mask, uint8_t *out);

/**
 * # Safety
 * `out` must be valid for one write.
 */
enum ThetamapStatus thetamap_theta_char_is_odd(uint8_t mask, bool *out);

/**
 * # Safety
 * `out` must be valid for one write.
 */
enum ThetamapStatus thetamap_twist(uint8_t kappa, uint8_t a, uint8_t *out);

/**
 * Value of the quadratic form of `kappa` at `a`, as 0 or 1.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum ThetamapStatus thetamap_quadratic_form(uint8_t kappa, uint8_t a, uint8_t *out);

/**
 * Writes the six elements of `S(kappa)` in canonical order.
 *
 * # Safety
 * `out` must be valid for six writes.
 */
enum ThetamapStatus thetamap_s_set(uint8_t kappa, uint8_t *out);

/**
 * Writes the two points of `S(kappa) ∩ S(kappa2)` in canonical order.
 *
 * # Safety
 * `out` must be valid for two writes.
 */
enum ThetamapStatus thetamap_pfaffian_intersection(uint8_t kappa, uint8_t kappa2, uint8_t *out);

/**
 * Computes a certified Verlinde number. `precision_bits == 0` escalates
 * the working precision automatically; any other value is used as a fixed
 * precision. `workers == 0` is treated as 1.
 *
 * # Safety
 * `out` must be valid for one write. On success `*out` owns a handle to
 * be released with [`thetamap_verlinde_free`].
 */
enum ThetamapStatus thetamap_verlinde_compute(uint32_t rank,
                                              uint32_t level,
                                              uint32_t genus,
                                              uint32_t precision_bits,
                                              uint32_t workers,
                                              struct ThetamapVerlinde **out);

/**
 * # Safety
 * `handle` must be a live handle; `out` must be valid for one write.
 */
enum ThetamapStatus thetamap_verlinde_value_u64(const struct ThetamapVerlinde *handle,
                                                uint64_t *out);

/**
 * Decimal value as a new string, or null for a null handle.
 *
 * # Safety
 * `handle` must be null or a live handle.
 */
char *thetamap_verlinde_value_string(const struct ThetamapVerlinde *handle);

/**
 * Certified distance to the returned integer; NaN for a null handle.
 *
 * # Safety
 * `handle` must be null or a live handle.
 */
double thetamap_verlinde_error_bound(const struct ThetamapVerlinde *handle);

/**
 * JSON object `{rank, level, genus, value, error_bound}` as a new string.
 *
 * # Safety
 * `handle` must be null or a live handle.
 */
char *thetamap_verlinde_json(const struct ThetamapVerlinde *handle);

/**
 * # Safety
 * `handle` must be null or a handle from [`thetamap_verlinde_compute`]
 * that has not been freed.
 */
void thetamap_verlinde_free(struct ThetamapVerlinde *handle);

/**
 * Interpolation coefficients `alpha_0 .. alpha_dimension` from the values
 * `P(-offset) .. P(dimension - offset)`.
 *
 * # Safety
 * `values` must be readable for `dimension + 1` entries and `out_alpha`
 * writable for `dimension + 1` entries.
 */
enum ThetamapStatus thetamap_hilbert_coefficients(const int64_t *values,
                                                  size_t offset,
                                                  size_t dimension,
                                                  int64_t *out_alpha);

/**
 * Runs the Verlinde / interpolation / base-locus pipeline. Only rank 4 is
 * supported; other ranks return `THETAMAP_STATUS_INVALID_ARGUMENT`.
 *
 * # Safety
 * `out` must be valid for one write. On success `*out` owns a handle to
 * be released with [`thetamap_degree_free`].
 */
enum ThetamapStatus thetamap_degree_compute(uint32_t rank, struct ThetamapDegree **out);

/**
 * # Safety
 * `handle` must be a live handle; `out` must be valid for one write.
 */
enum ThetamapStatus thetamap_degree_value(const struct ThetamapDegree *handle, int64_t *out);

/**
 * Number of interpolation coefficients (`dimension + 1`); 0 for null.
 *
 * # Safety
 * `handle` must be null or a live handle.
 */
size_t thetamap_degree_alpha_len(const struct ThetamapDegree *handle);

/**
 * # Safety
 * `handle` must be a live handle; `out` must be valid for one write.
 */
enum ThetamapStatus thetamap_degree_alpha(const struct ThetamapDegree *handle,
                                          size_t k,
                                          int64_t *out);

/**
 * `P(n)` for `n = 1 ..`, as used by the pipeline.
 *
 * # Safety
 * `handle` must be a live handle; `out` must be valid for one write.
 */
enum ThetamapStatus thetamap_degree_p_value(const struct ThetamapDegree *handle,
                                            uint32_t n,
                                            uint64_t *out);

/**
 * # Safety
 * `handle` must be null or a live handle.
 */
size_t thetamap_degree_base_locus_count(const struct ThetamapDegree *handle);

/**
 * # Safety
 * `handle` must be null or a handle from [`thetamap_degree_compute`] that
 * has not been freed.
 */
void thetamap_degree_free(struct ThetamapDegree *handle);

/**
 * Runs every invariant suite; writes whether all passed.
 *
 * # Safety
 * `passed` must be valid for one write.
 */
enum ThetamapStatus thetamap_verify(bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THETAMAP_H */

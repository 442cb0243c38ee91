#ifndef SEMICONFINED_H
#define SEMICONFINED_H

/* Generated by cbindgen from semiconfined-capi; edit the Rust source, not this file. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function of this ABI.
 */
typedef enum {
  /**
   * The call succeeded and the out-parameters are valid.
   */
  SCO_STATUS_OK = 0,
  /**
   * A parameter violated its documented constraint.
   */
  SCO_STATUS_INVALID_PARAMETER = 1,
  /**
   * A coordinate argument lay outside the model's domain.
   */
  SCO_STATUS_OUT_OF_DOMAIN = 2,
  /**
   * An iterative routine exhausted its budget before converging.
   */
  SCO_STATUS_NO_CONVERGENCE = 3,
  /**
   * A value was representable only in log space.
   */
  SCO_STATUS_OVERFLOW = 4,
  /**
   * A required pointer argument was null.
   */
  SCO_STATUS_NULL_POINTER = 5,
  /**
   * An unexpected internal failure; the out-parameters are untouched.
   */
  SCO_STATUS_INTERNAL = 6,
} ScoStatus;

/**
 * Opaque handle to a constructed model. Parameter validation happens in
 * [`sco_model_new`]; a non-null handle is therefore always valid.
 */
typedef struct ScoModel ScoModel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Constructs a model with mass exponent `m` on `(-a, ∞)`.
 *
 * On success writes a heap-allocated handle through `out_model` and
 * returns `SCO_STATUS_OK`; the caller owns the handle and must release it
 * with [`sco_model_free`]. On failure nothing is written.
 *
 * # Safety
 *
 * `out_model` must be a valid pointer to writable memory (or null, which
 * is reported as `SCO_STATUS_NULL_POINTER`).
 */
ScoStatus sco_model_new(double omega, double a, double alpha, double m, ScoModel **out_model);

/**
 * Releases a handle produced by [`sco_model_new`]. Null is a no-op.
 *
 * # Safety
 *
 * `model` must be null or a handle previously returned by
 * [`sco_model_new`] that has not been freed already.
 */
void sco_model_free(ScoModel *model);

/**
 * Position-dependent mass `M(x)`; `+∞` at and beyond the wall.
 *
 * # Safety
 *
 * `model` must be a live handle from [`sco_model_new`]; `out_value` must
 * be writable or null.
 */
ScoStatus sco_model_mass(const ScoModel *model, double x, double *out_value);

/**
 * Potential `V(x)`; fails with `SCO_STATUS_OUT_OF_DOMAIN` for `x ≤ -a`.
 *
 * # Safety
 *
 * `model` must be a live handle from [`sco_model_new`]; `out_value` must
 * be writable or null.
 */
ScoStatus sco_model_potential(const ScoModel *model, double x, double *out_value);

/**
 * Energy of the `n`-th level, `ω(n + ½)`.
 *
 * # Safety
 *
 * `model` must be a live handle from [`sco_model_new`]; `out_value` must
 * be writable or null.
 */
ScoStatus sco_model_energy(const ScoModel *model, uint32_t n, double *out_value);

/**
 * Normalized eigenfunction `ψ_n(x)`, continuously extended by 0 at and
 * beyond the wall.
 *
 * # Safety
 *
 * `model` must be a live handle from [`sco_model_new`]; `out_value` must
 * be writable or null.
 */
ScoStatus sco_model_wavefunction(const ScoModel *model, uint32_t n, double x, double *out_value);

/**
 * Normalization constant `C_n`; fails with `SCO_STATUS_OVERFLOW` when it
 * is representable only in log space.
 *
 * # Safety
 *
 * `model` must be a live handle from [`sco_model_new`]; `out_value` must
 * be writable or null.
 */
ScoStatus sco_model_normalization(const ScoModel *model, uint32_t n, double *out_value);

/**
 * Closed-form location and value of the potential's minimum. For models
 * whose centrifugal term is not repulsive (possible only for `m < 1`)
 * the infimum sits on the wall: `x_min = -a`, `v_min = -∞`.
 *
 * # Safety
 *
 * `model` must be a live handle from [`sco_model_new`]; the out-pointers
 * must be writable or null.
 */
ScoStatus sco_model_minimum(const ScoModel *model, double *out_x_min, double *out_v_min);

/**
 * Smallest admissible confinement strength for mass exponent `m`:
 * `max(0, (m-1)/(2-m))`.
 *
 * # Safety
 *
 * `out_value` must be writable or null.
 */
ScoStatus sco_semiconfinement_bound(double m, double *out_value);

/**
 * Generalized Laguerre polynomial `L_n^{(α)}(z)`, `α > -1`, `z ≥ 0`.
 *
 * # Safety
 *
 * `out_value` must be writable or null.
 */
ScoStatus sco_laguerre(uint32_t n, double alpha, double z, double *out_value);

/**
 * Natural log of the gamma function for `x > 0`.
 *
 * # Safety
 *
 * `out_value` must be writable or null.
 */
ScoStatus sco_log_gamma(double x, double *out_value);

/**
 * Runs the full verification battery (finite-difference spectrum, Gram
 * matrix, residuals, transformation identity, minimum) with default
 * settings and writes the JSON report through `out_json` as a
 * NUL-terminated string owned by the caller, to be released with
 * [`sco_string_free`]. Requires `α > ½`.
 *
 * The returned status reflects only whether the battery RAN; the
 * verdicts live inside the report (`"passed"` fields).
 *
 * # Safety
 *
 * `model` must be a live handle from [`sco_model_new`]; `out_json` must
 * be writable or null.
 */
ScoStatus sco_model_verify_json(const ScoModel *model, char **out_json);

/**
 * Releases a string returned by [`sco_model_verify_json`]. Null is a
 * no-op.
 *
 * # Safety
 *
 * `s` must be null or a pointer previously returned by this ABI that has
 * not been freed already.
 */
void sco_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SEMICONFINED_H */

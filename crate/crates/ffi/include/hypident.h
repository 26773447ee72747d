#ifndef HYPIDENT_H
#define HYPIDENT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HypidentStatus {
  HYPIDENT_STATUS_OK = 0,
  HYPIDENT_STATUS_NULL_POINTER = 1,
  HYPIDENT_STATUS_POLE = 2,
  HYPIDENT_STATUS_OVERFLOW = 3,
  HYPIDENT_STATUS_DOMAIN = 4,
  HYPIDENT_STATUS_CONVERGENCE = 5,
  HYPIDENT_STATUS_INVALID_ARGUMENT = 6,
  HYPIDENT_STATUS_NOT_EXACTLY_DECIDABLE = 7,
  HYPIDENT_STATUS_UNKNOWN_IDENTITY = 8,
  HYPIDENT_STATUS_INTERNAL = 9,
} HypidentStatus;

typedef enum HypidentMode {
  HYPIDENT_MODE_EXACT = 0,
  HYPIDENT_MODE_NUMERIC = 1,
  HYPIDENT_MODE_BOTH = 2,
} HypidentMode;

/**
 * Opaque handle to an identity registry.
 */
typedef struct HypidentRegistry HypidentRegistry;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Gamma function. Writes `Γ(x)` to `out`.
 *
 * # Safety
 * `out` must be null or point to writable memory for one `double`.
 */
enum HypidentStatus hypident_gamma(double x, double *out);

/**
 * `2F1(a, b; c; z)` for real `z` below the direct-series cap.
 *
 * # Safety
 * `out` must be null or point to writable memory for one `double`.
 */
enum HypidentStatus hypident_hyp2f1(double a, double b, double c, double z, double *out);

/**
 * Writes `mu = Γ(1/2)/Γ(3/4)²` and `eta = Γ(3/4)²/Γ(1/2)³`.
 *
 * # Safety
 * Both pointers must be null or point to writable `double`s.
 */
enum HypidentStatus hypident_constants(double *mu, double *eta);

/**
 * Creates the built-in registry. Free with [`hypident_registry_free`].
 */
struct HypidentRegistry *hypident_registry_new(void);

/**
 * # Safety
 * `reg` must be null or a handle from [`hypident_registry_new`] that has
 * not been freed.
 */
void hypident_registry_free(struct HypidentRegistry *reg);

/**
 * Number of registry entries, 0 for a null handle.
 *
 * # Safety
 * `reg` must be null or a live registry handle.
 */
size_t hypident_registry_len(const struct HypidentRegistry *reg);

/**
 * Id of entry `index` as a newly allocated string.
 *
 * # Safety
 * `reg` must be a live handle; `out` must point to a writable `char *`.
 */
enum HypidentStatus hypident_registry_id(const struct HypidentRegistry *reg,
                                         size_t index,
                                         char **out);

/**
 * Runs the verifiers on one entry (`id`) or on all entries (`id == NULL`)
 * over the default grid and writes the JSON report to `out_json`.
 * `out_agree` receives whether every verdict matches its expectation.
 *
 * # Safety
 * `reg` must be a live handle, `id` null or a NUL-terminated string,
 * `out_json` and `out_agree` writable.
 */
enum HypidentStatus hypident_verify(const struct HypidentRegistry *reg,
                                    const char *id,
                                    enum HypidentMode mode,
                                    uint32_t order,
                                    double tol,
                                    char **out_json,
                                    bool *out_agree);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by this library and
 * not yet freed.
 */
void hypident_string_free(char *s);

/**
 * Message for the most recent failure on this thread; empty if none.
 * Valid until the next failing call on the same thread.
 */
const char *hypident_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPIDENT_H */

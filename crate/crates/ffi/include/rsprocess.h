#ifndef RSPROCESS_H
#define RSPROCESS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RspStatus {
  RSP_STATUS_OK = 0,
  RSP_STATUS_NULL_POINTER = 1,
  RSP_STATUS_INVALID_ARGUMENT = 2,
  RSP_STATUS_OUT_OF_RANGE = 3,
  RSP_STATUS_BUFFER_TOO_SMALL = 4,
  RSP_STATUS_PARSE_ERROR = 5,
  RSP_STATUS_INTERNAL = 6,
} RspStatus;

// Opaque point configuration in `[0, θ]²`.
typedef struct RspConfiguration RspConfiguration;

// Opaque pair of decorated tableaux.
typedef struct RspPair RspPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *rsp_version(void);

// Message for the last failed call on this thread. Valid until the next
// failing call on the same thread.
const char *rsp_last_error(void);

// Builds a configuration from `n` points `(xs[i], ys[i])`.
//
// # Safety
// `xs` and `ys` must point to `n` readable doubles (may be null when `n == 0`);
// `out` must be writable.
enum RspStatus rsp_configuration_new(double theta,
                                     const double *xs,
                                     const double *ys,
                                     size_t n,
                                     struct RspConfiguration **out);

// Rate-one Poisson process on `[0, θ]²` from the `(seed, stream)` generator.
//
// # Safety
// `out` must be writable.
enum RspStatus rsp_sample_poisson_square(double theta,
                                         uint64_t seed,
                                         uint64_t stream,
                                         struct RspConfiguration **out);

// # Safety
// `config` must come from this library and not yet be freed; null is ignored.
void rsp_configuration_free(struct RspConfiguration *config);

// # Safety
// `config` must be a live handle and `out` writable.
enum RspStatus rsp_configuration_len(const struct RspConfiguration *config, size_t *out);

// Copies the points, sorted by x, into `xs` and `ys` (capacity `cap` each).
//
// # Safety
// `config` must be a live handle; `xs` and `ys` must have room for `cap` doubles.
enum RspStatus rsp_configuration_points(const struct RspConfiguration *config,
                                        double *xs,
                                        double *ys,
                                        size_t cap);

// Decorated RS correspondence.
//
// # Safety
// `config` must be a live handle and `out` writable.
enum RspStatus rsp_drs(const struct RspConfiguration *config, struct RspPair **out);

// # Safety
// `pair` must come from this library and not yet be freed; null is ignored.
void rsp_pair_free(struct RspPair *pair);

// Number of boxes of the common shape.
//
// # Safety
// `pair` must be a live handle and `out` writable.
enum RspStatus rsp_pair_size(const struct RspPair *pair, size_t *out);

// Row lengths of `λ(t)`. The row count is stored in `out_len` even when
// `cap` is too small, in which case nothing is copied.
//
// # Safety
// `pair` must be a live handle, `rows` must have room for `cap` values and
// `out_len` must be writable.
enum RspStatus rsp_pair_diagram_at(const struct RspPair *pair,
                                   double t,
                                   uint32_t *rows,
                                   size_t cap,
                                   size_t *out_len);

// Line value `λ_i(t) - i` for `i >= 1`.
//
// # Safety
// `pair` must be a live handle and `out` writable.
enum RspStatus rsp_pair_line_at(const struct RspPair *pair, size_t i, double t, int64_t *out);

// Evaluates a finite-dimensional query given as JSON
// (`{"theta", "pins": [{"time", "diagram"}], "k"?}`). Writes the natural
// log of the probability (`-inf` for zero) and the probability.
//
// # Safety
// `query_json` must be a NUL-terminated string; `out_ln` and `out_p` writable.
enum RspStatus rsp_fdd(const char *query_json, double *out_ln, double *out_p);

// Natural log of the Poissonized Plancherel weight of the diagram `rows`.
//
// # Safety
// `rows` must point to `len` values (may be null when `len == 0`); `out_ln` writable.
enum RspStatus rsp_poissonized_plancherel(const uint32_t *rows,
                                          size_t len,
                                          double theta,
                                          double *out_ln);

// Number of standard tableaux of shape `rows` as a decimal string, released
// with [`rsp_string_free`].
//
// # Safety
// `rows` must point to `len` values (may be null when `len == 0`); `out` writable.
enum RspStatus rsp_dim_standard(const uint32_t *rows, size_t len, char **out);

// # Safety
// `s` must come from this library and not yet be freed; null is ignored.
void rsp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RSPROCESS_H */

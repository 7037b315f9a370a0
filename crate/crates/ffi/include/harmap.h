#ifndef HARMAP_H
#define HARMAP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HarmapBound {
  HARMAP_BOUND_THM2,
  HARMAP_BOUND_COR5,
  HARMAP_BOUND_COR3,
  HARMAP_BOUND_COR4,
  HARMAP_BOUND_CONJECTURE,
} HarmapBound;

typedef enum HarmapLemma {
  HARMAP_LEMMA_G,
  HARMAP_LEMMA_H,
} HarmapLemma;

typedef enum HarmapStatus {
  HARMAP_STATUS_OK = 0,
  HARMAP_STATUS_NULL_POINTER = 1,
  HARMAP_STATUS_DOMAIN = 2,
  HARMAP_STATUS_INADMISSIBLE = 3,
  HARMAP_STATUS_MISSING_PARAM = 4,
  HARMAP_STATUS_NOT_NORMALIZED = 5,
  HARMAP_STATUS_NO_EXTREMAL = 6,
  HARMAP_STATUS_AMPLIFICATION = 7,
  HARMAP_STATUS_PARSE = 8,
  HARMAP_STATUS_QUADRATURE = 9,
  HARMAP_STATUS_INVALID_ARGUMENT = 10,
  HARMAP_STATUS_PANIC = 11,
} HarmapStatus;

typedef enum HarmapTheorem {
  HARMAP_THEOREM_LANDAU,
  HARMAP_THEOREM_THM_A,
  HARMAP_THEOREM_THM_C,
  HARMAP_THEOREM_THM_D,
  HARMAP_THEOREM_THM1,
  HARMAP_THEOREM_COR1,
  HARMAP_THEOREM_THM3,
  HARMAP_THEOREM_COR2,
  HARMAP_THEOREM_THM6,
  HARMAP_THEOREM_THM7,
  HARMAP_THEOREM_THM11,
  HARMAP_THEOREM_THM12,
  HARMAP_THEOREM_THM0,
  HARMAP_THEOREM_THM10,
} HarmapTheorem;

/**
 * Opaque handle to a harmonic map.
 */
typedef struct HarmapMap HarmapMap;

typedef struct HarmapDistortion {
  double fz_abs;
  double fzbar_abs;
  double lambda_big;
  double lambda_small;
  double jacobian;
} HarmapDistortion;

/**
 * Class parameters; NaN marks an unset optional field.
 */
typedef struct HarmapParams {
  double k;
  double kp;
  double lambda_big;
  double lambda_small;
  double m;
} HarmapParams;

/**
 * Univalence radius and schlicht radius (NaN when the result gives none).
 */
typedef struct HarmapRadii {
  double univalence_radius;
  double schlicht_radius;
} HarmapRadii;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *harmap_last_error(void);

/**
 * `f₀` for `|h| < M`. `degree = 0` selects the default truncation.
 *
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum HarmapStatus harmap_extremal_f0(double m, size_t degree, struct HarmapMap **out);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum HarmapStatus harmap_extremal_f1(double lambda_big, size_t degree, struct HarmapMap **out);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum HarmapStatus harmap_extremal_fn(double lambda_big,
                                     size_t n,
                                     size_t degree,
                                     struct HarmapMap **out);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum HarmapStatus harmap_extremal_fn_conjecture(double k,
                                                double lambda_big,
                                                size_t n,
                                                size_t degree,
                                                struct HarmapMap **out);

/**
 * Builds `h + conj(g)` from `len` coefficients per part (index = power of z).
 *
 * # Safety
 * The four coefficient arrays must hold `len` values; `out` must be valid for writes.
 */
enum HarmapStatus harmap_map_from_coefficients(const double *h_re,
                                               const double *h_im,
                                               const double *g_re,
                                               const double *g_im,
                                               size_t len,
                                               struct HarmapMap **out);

/**
 * Parses mapping-spec text.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum HarmapStatus harmap_map_parse(const char *text, struct HarmapMap **out);

/**
 * Renders a map as mapping-spec text; release it with [`harmap_string_free`].
 *
 * # Safety
 * `map` must be a live handle; `out` must be valid for writes.
 */
enum HarmapStatus harmap_map_write(const struct HarmapMap *map, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void harmap_string_free(char *s);

/**
 * # Safety
 * `map` must be NULL or a handle not yet freed.
 */
void harmap_map_free(struct HarmapMap *map);

/**
 * Truncation degree of the map, or 0 for NULL.
 *
 * # Safety
 * `map` must be NULL or a live handle.
 */
size_t harmap_map_degree(const struct HarmapMap *map);

/**
 * Coefficient `n` of `h` (`analytic_part != 0`) or `g`.
 *
 * # Safety
 * `map` must be a live handle; `re` and `im` must be valid for writes.
 */
enum HarmapStatus harmap_map_coefficient(const struct HarmapMap *map,
                                         int32_t analytic_part,
                                         size_t n,
                                         double *re,
                                         double *im);

/**
 * `f(z)` for `|z| < 1`.
 *
 * # Safety
 * `map` must be a live handle; `out_re` and `out_im` must be valid for writes.
 */
enum HarmapStatus harmap_map_eval(const struct HarmapMap *map,
                                  double re,
                                  double im,
                                  double *out_re,
                                  double *out_im);

/**
 * # Safety
 * `map` must be a live handle; `out` must be valid for writes.
 */
enum HarmapStatus harmap_map_distortion(const struct HarmapMap *map,
                                        double re,
                                        double im,
                                        struct HarmapDistortion *out);

/**
 * Univalence bracket on a polar grid with default collision and bisection settings.
 *
 * # Safety
 * `map` must be a live handle; `lo` and `hi` must be valid for writes.
 */
enum HarmapStatus harmap_univalence_bracket(const struct HarmapMap *map,
                                            size_t radial_steps,
                                            size_t angular_steps,
                                            double max_radius,
                                            double *lo,
                                            double *hi);

/**
 * # Safety
 * `params` must be readable and `out` writable.
 */
enum HarmapStatus harmap_radii(enum HarmapTheorem theorem,
                               const struct HarmapParams *params,
                               struct HarmapRadii *out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum HarmapStatus harmap_coefficient_bound(enum HarmapBound variant,
                                           double k,
                                           double kp,
                                           double lambda_big,
                                           size_t n,
                                           double *out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum HarmapStatus harmap_lemma_margin(enum HarmapLemma which, double x, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HARMAP_H */

#ifndef NODAL_HODGE_H
#define NODAL_HODGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum NhStatus {
  NH_STATUS_OK = 0,
  NH_STATUS_DOMAIN = 1,
  NH_STATUS_DIVISION_BY_ZERO = 2,
  NH_STATUS_PARSE = 3,
  NH_STATUS_VALIDATION = 4,
  NH_STATUS_BOUND_VIOLATION = 5,
  NH_STATUS_NOT_ZERO_DIMENSIONAL = 6,
  NH_STATUS_NO_OPERATOR_FOUND = 7,
  NH_STATUS_INVARIANT = 8,
  NH_STATUS_IO = 9,
  NH_STATUS_NULL_POINTER = 10,
  NH_STATUS_INVALID_UTF8 = 11,
  NH_STATUS_PANIC = 12,
  NH_STATUS_OUT_OF_RANGE = 13,
} NhStatus;

/**
 * Local monodromy class.
 */
typedef enum NhUnipotency {
  NH_UNIPOTENCY_MAXIMAL_UNIPOTENT = 0,
  NH_UNIPOTENCY_UNIPOTENT = 1,
  NH_UNIPOTENCY_QUASI_UNIPOTENT = 2,
  NH_UNIPOTENCY_NON_LOCAL_MONODROMY = 3,
} NhUnipotency;

/**
 * An Euler polynomial.
 */
typedef struct NhEuler NhEuler;

/**
 * A Picard-Fuchs operator.
 */
typedef struct NhOperator NhOperator;

/**
 * A pencil `F - t*G`.
 */
typedef struct NhPencil NhPencil;

/**
 * A polynomial with rational coefficients.
 */
typedef struct NhPolynomial NhPolynomial;

/**
 * Primitive middle Hodge numbers.
 */
typedef struct NhHodgeDiamond {
  uint64_t h30;
  uint64_t h21;
  uint64_t h12;
  uint64_t h03;
} NhHodgeDiamond;

/**
 * Weight-graded dimensions of H^3 of a nodal threefold.
 */
typedef struct NhMhs {
  uint64_t gr3_types[4];
  uint64_t h3_resolution;
  uint64_t w2_dim;
  uint64_t h3_total;
  int64_t l_min;
  int64_t l_max;
  int64_t s_min;
  int64_t s_max;
} NhMhs;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success. Owned by the library.
 */
const char *nh_last_error_message(void);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void nh_string_free(char *s);

/**
 * Parse a polynomial over Q in the variables `x0 .. x{nvars-1}`.
 *
 * # Safety
 * `src` must be a nul-terminated string and `out` a valid pointer.
 */
enum NhStatus nh_polynomial_parse(const char *src, size_t nvars, struct NhPolynomial **out);

/**
 * # Safety
 * `p` must come from this library and not have been freed.
 */
void nh_polynomial_free(struct NhPolynomial *p);

/**
 * Canonical text form.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum NhStatus nh_polynomial_to_string(const struct NhPolynomial *p, char **out);

/**
 * Substitute the last variable by minus the sum of the others.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum NhStatus nh_polynomial_restrict(const struct NhPolynomial *p, struct NhPolynomial **out);

/**
 * Degree of the singular scheme modulo `prime` and whether it is reduced.
 * A count of `UINT64_MAX` means the scheme is not zero-dimensional.
 *
 * # Safety
 * `p` must be a live handle; `count` and `reduced` valid pointers.
 */
enum NhStatus nh_polynomial_node_count(const struct NhPolynomial *p,
                                       uint64_t prime,
                                       uint64_t seed,
                                       uint64_t *count,
                                       bool *reduced);

/**
 * Hodge numbers of a smooth degree-`d` threefold hypersurface.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum NhStatus nh_smooth_hodge_numbers(uint32_t d, struct NhHodgeDiamond *out);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
enum NhStatus nh_node_bound(uint32_t d, uint64_t *out);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
enum NhStatus nh_pole_adjoint_threshold(int64_t n, int64_t *out);

/**
 * Evaluate an Euler-polynomial term program.
 *
 * # Safety
 * `src` must be a nul-terminated string and `out` a valid pointer.
 */
enum NhStatus nh_euler_program(const char *src, struct NhEuler **out);

/**
 * Euler polynomial of a threefold with `m` nodes, or of its resolution.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum NhStatus nh_euler_nodal(uint64_t m,
                             uint64_t a,
                             uint64_t b,
                             bool resolution,
                             struct NhEuler **out);

/**
 * Coefficient of `x^p xb^q`.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum NhStatus nh_euler_coeff(const struct NhEuler *e, uint32_t p, uint32_t q, int64_t *out);

/**
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum NhStatus nh_euler_to_string(const struct NhEuler *e, char **out);

/**
 * # Safety
 * `e` must come from this library and not have been freed.
 */
void nh_euler_free(struct NhEuler *e);

/**
 * MHS bookkeeping; `h2x = 0` selects the default assumption.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum NhStatus nh_mhs_dims(uint64_t m, uint64_t a, uint64_t b, uint64_t h2x, struct NhMhs *out);

/**
 * Parse `F - t*G` in the variables `x0 .. x{nvars-1}` and the parameter `t`.
 *
 * # Safety
 * `src` must be a nul-terminated string and `out` a valid pointer.
 */
enum NhStatus nh_pencil_parse(const char *src, size_t nvars, struct NhPencil **out);

/**
 * # Safety
 * `p` must come from this library and not have been freed.
 */
void nh_pencil_free(struct NhPencil *p);

/**
 * Picard-Fuchs operator of the holomorphic form; `max_order = 0` uses the default bound.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum NhStatus nh_picard_fuchs(const struct NhPencil *p,
                              size_t max_order,
                              bool symmetric,
                              uint64_t seed,
                              struct NhOperator **out);

/**
 * # Safety
 * `op` must be a live handle and `out` a valid pointer.
 */
enum NhStatus nh_operator_order(const struct NhOperator *op, size_t *out);

/**
 * Text of the coefficient of `(d/dt)^i`.
 *
 * # Safety
 * `op` must be a live handle and `out` a valid pointer.
 */
enum NhStatus nh_operator_coeff(const struct NhOperator *op, size_t i, char **out);

/**
 * Exponents at `t = infinity` (`at_infinity`) or at the rational point `num/den`.
 * `index` receives the nilpotency index or its bound, 0 when not applicable.
 *
 * # Safety
 * `op` must be a live handle; `class` and `index` valid pointers.
 */
enum NhStatus nh_operator_unipotency(const struct NhOperator *op,
                                     bool at_infinity,
                                     int64_t num,
                                     int64_t den,
                                     enum NhUnipotency *class_,
                                     size_t *index);

/**
 * # Safety
 * `op` must come from this library and not have been freed.
 */
void nh_operator_free(struct NhOperator *op);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NODAL_HODGE_H */

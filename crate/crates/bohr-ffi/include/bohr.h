/* C API for the bohr library. Generated; do not edit. */

#ifndef BOHR_H
#define BOHR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum BohrStatus {
  BohrStatus_Ok = 0,
  BohrStatus_DomainError = 1,
  BohrStatus_InvalidInput = 2,
  BohrStatus_PreconditionViolated = 3,
  BohrStatus_NoRoot = 4,
  BohrStatus_ParseError = 5,
  BohrStatus_NullPointer = 6,
  BohrStatus_InvalidUtf8 = 7,
} BohrStatus;

/**
 * Opaque analytic function handle.
 */
typedef struct BohrFunction BohrFunction;

/**
 * Opaque radius problem handle.
 */
typedef struct BohrProblem BohrProblem;

/**
 * Opaque weight sequence handle.
 */
typedef struct BohrWeights BohrWeights;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent error on this thread, or NULL. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *bohr_last_error(void);

/**
 * Parse a weight spec ("geometric" | "even" | "lacunary:<k>" |
 * "mask:<s>+<d>n[,...]") into a handle.
 */
enum BohrStatus bohr_weights_parse(const char *spec, struct BohrWeights **out);

void bohr_weights_free(struct BohrWeights *w);

/**
 * `phi_n(r)`.
 */
enum BohrStatus bohr_weights_term(const struct BohrWeights *w, uint32_t n, double r, double *out);

/**
 * `Phi_N(r)`, the exact tail sum.
 */
enum BohrStatus bohr_weights_tail(const struct BohrWeights *w,
                                  uint32_t n_start,
                                  double r,
                                  double *out);

/**
 * Parse an analytic function spec ("mobius:a=..", "blaschke:zeros=..",
 * "schur:gammas=.."). The "extremal:" form is a harmonic pair and is
 * rejected here.
 */
enum BohrStatus bohr_function_parse(const char *spec, struct BohrFunction **out);

void bohr_function_free(struct BohrFunction *f);

/**
 * `f(z)` for `z = z_re + i z_im`, using the exact evaluator.
 */
enum BohrStatus bohr_function_eval(const struct BohrFunction *f,
                                   double z_re,
                                   double z_im,
                                   double *out_re,
                                   double *out_im);

/**
 * Build a problem handle. The weight handle is copied; the caller keeps
 * ownership. `limit_m != 0` selects the m -> infinity form (then `m` is
 * ignored).
 */
enum BohrStatus bohr_problem_new(uint32_t m,
                                 double p,
                                 double k,
                                 uint32_t n_start,
                                 const struct BohrWeights *weights,
                                 int limit_m,
                                 struct BohrProblem **out);

void bohr_problem_free(struct BohrProblem *p);

/**
 * `F(x)`, the characteristic function whose first crossing of 1 is the
 * sharp radius.
 */
enum BohrStatus bohr_characteristic(const struct BohrProblem *prob, double x, double *out);

/**
 * Solve the sharp radius. `residual` may be NULL.
 */
enum BohrStatus bohr_solve_radius(const struct BohrProblem *prob, double *radius, double *residual);

/**
 * Grid verification for a function spec (any of the four spec forms).
 * Writes the solved radius, the grid maximum of the left-hand side, and
 * a pass flag (`max LHS <= 1 + 1e-10`).
 */
enum BohrStatus bohr_verify(const struct BohrProblem *prob,
                            const char *f_spec,
                            uintptr_t r_steps,
                            uintptr_t z_steps,
                            double *radius,
                            double *max_lhs,
                            int *passed);

/**
 * Sharpness probe at `r` beyond the solved radius with witness grid
 * step `a_step`. Writes the best extremal witness and whether its LHS
 * exceeds 1.
 */
enum BohrStatus bohr_probe(const struct BohrProblem *prob,
                           double r,
                           double a_step,
                           double *a_witness,
                           double *lhs,
                           int *exceeds);

/**
 * The known-constants regression table as CSV. Free with
 * `bohr_string_free`.
 */
enum BohrStatus bohr_table_csv(char **out);

void bohr_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BOHR_H */

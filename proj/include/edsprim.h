/* edsprim: exact-arithmetic toolkit for elliptic divisibility sequences on
 * y^2 = x^3 + a x - primitive divisors, division polynomials, canonical
 * heights, torsion-separation constants, and the inequality decision engine.
 *
 * C interface to the shared library. Every operation fills *json_out with a
 * deterministic JSON document (sorted keys, 17-significant-digit reals, big
 * integers as decimal strings); free it with edsp_string_free. On failure the
 * return code is nonzero and edsp_ctx_last_error() describes the problem.
 */
#ifndef EDSPRIM_H
#define EDSPRIM_H

#ifdef __cplusplus
extern "C" {
#endif

#ifndef EDSPRIM_API
#define EDSPRIM_API __attribute__((visibility("default")))
#endif

typedef struct edsp_ctx edsp_ctx;

typedef enum {
  EDSP_OK = 0,
  EDSP_EINVAL = 1,       /* malformed argument or parse failure */
  EDSP_ENOTONCURVE = 2,  /* point does not satisfy the curve equation */
  EDSP_ETORSION = 3,     /* operation requires a non-torsion point */
  EDSP_EUNSUPPORTED = 4, /* index or parameter outside the supported range */
  EDSP_EPRECISION = 5,   /* requested certified error is unreachable */
  EDSP_EHYPOTHESIS = 6,  /* criterion hypothesis gate failed */
  EDSP_EINTERNAL = 7     /* invariant violation inside the library */
} edsp_status;

EDSPRIM_API edsp_ctx* edsp_ctx_new(void);
EDSPRIM_API void edsp_ctx_free(edsp_ctx* ctx);

/* Options use the same keys as the config file:
 *   precision (bits), cache (directory), threads, trial-bound. */
EDSPRIM_API edsp_status edsp_ctx_set_option(edsp_ctx* ctx, const char* key,
                                            const char* value);
EDSPRIM_API const char* edsp_ctx_last_error(const edsp_ctx* ctx);

EDSPRIM_API void edsp_string_free(char* s);
EDSPRIM_API const char* edsp_version(void);

/* Sequence term B_n (with A_n, g_n, delta-route bookkeeping) for the point
 * (x, y) on y^2 = x^3 + a x; x and y accept "p" or "p/q" decimal forms. */
EDSPRIM_API edsp_status edsp_eds_term(edsp_ctx* ctx, const char* a, const char* x,
                                      const char* y, long n, char** json_out);

/* Primitive-divisor report for B_n by gcd-stripping against B_1..B_{n-1}. */
EDSPRIM_API edsp_status edsp_primdiv(edsp_ctx* ctx, const char* a, const char* x,
                                     const char* y, long n, char** json_out);

/* Division polynomial p_n at fixed a (graded = 0), or the homogeneous
 * (X, Y) = (x^2, a) form (graded = 1, a ignored). */
EDSPRIM_API edsp_status edsp_divpoly(edsp_ctx* ctx, long n, const char* a,
                                     int graded, char** json_out);

/* Quotient polynomial Psi_n(X, Y). */
EDSPRIM_API edsp_status edsp_psi_quotient(edsp_ctx* ctx, long n, char** json_out);

/* Canonical height with certified error radius. */
EDSPRIM_API edsp_status edsp_height(edsp_ctx* ctx, const char* a, const char* x,
                                    const char* y, double target_error,
                                    char** json_out);

/* Inequality checks: check is one of "dis1", "pari", "2mk", "eq11", "m".
 * For dis1/pari, a = NULL means "every fourth-power-free |a| >= 2".
 * For 2mk/eq11/m, p is taken as the smallest prime factor of n, m = n/p. */
EDSPRIM_API edsp_status edsp_criteria(edsp_ctx* ctx, const char* check, long n,
                                      const char* a, char** json_out);

/* Torsion-separation constant K_n: numeric = 1 uses certified root finding
 * (2 <= n <= 17), numeric = 0 the closed-form lower bound. */
EDSPRIM_API edsp_status edsp_kconst(edsp_ctx* ctx, long n, int numeric,
                                    char** json_out);

/* The bounded exceptional-point search behind the n = 35 case. */
EDSPRIM_API edsp_status edsp_search_exceptional(edsp_ctx* ctx, char** json_out);

/* Box search for Psi_n(X, Y) = +-2^k over coprime |X|, |Y| <= box. */
EDSPRIM_API edsp_status edsp_thue_box(edsp_ctx* ctx, long n, long box,
                                      long exponent_cap, char** json_out);

/* Bundled reproduction of the concrete findings; "all_pass" in the output. */
EDSPRIM_API edsp_status edsp_verify_paper(edsp_ctx* ctx, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* EDSPRIM_H */

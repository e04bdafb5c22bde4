#ifndef FREUD_FREUD_H
#define FREUD_FREUD_H

#include <stddef.h>

#if defined(FREUD_BUILDING_LIBRARY)
#define FREUD_API __attribute__((visibility("default")))
#else
#define FREUD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every call that can fail returns one; the message of the last
   failure on the calling thread is available from freud_last_error. */
typedef enum freud_status {
    FREUD_OK = 0,
    FREUD_ERR_DOMAIN = 1,   /* argument outside the operation's preconditions */
    FREUD_ERR_NUMERIC = 2,  /* root bracketing, quadrature or factorization failure */
    FREUD_ERR_ARGUMENT = 3, /* null pointer or malformed number */
    FREUD_ERR_INTERNAL = 4
} freud_status;

typedef enum freud_cell_kind {
    FREUD_CELL_NUMBER = 0,
    FREUD_CELL_TEXT = 1,
    FREUD_CELL_NULL = 2
} freud_cell_kind;

typedef struct freud_ctx freud_ctx;
typedef struct freud_table freud_table;

FREUD_API const char* freud_version(void);
FREUD_API const char* freud_last_error(void);

/* digits >= 30. */
FREUD_API freud_status freud_ctx_create(unsigned digits, freud_ctx** out);
FREUD_API void freud_ctx_destroy(freud_ctx* ctx);
FREUD_API unsigned freud_ctx_digits(const freud_ctx* ctx);

/* Result tables. Numbers are decimal strings rounded to the context's digit
   budget. Strings stay valid until the table is destroyed. */
FREUD_API size_t freud_table_rows(const freud_table* t);
FREUD_API size_t freud_table_cols(const freud_table* t);
FREUD_API const char* freud_table_column(const freud_table* t, size_t col);
FREUD_API const char* freud_table_cell(const freud_table* t, size_t row, size_t col);
FREUD_API freud_cell_kind freud_table_cell_kind(const freud_table* t, size_t row, size_t col);
/* Appends the rows of src to dst; the column lists must match. */
FREUD_API freud_status freud_table_append(freud_table* dst, const freud_table* src);
FREUD_API void freud_table_destroy(freud_table* t);

/* Real arguments are decimal strings so no precision is lost on the way in.
   Each call writes a new table to *out. */

/* a, a', rho, f(a), ell and the conformal derivatives for beta > 0, mu > 0. */
FREUD_API freud_status freud_equilibrium(const freud_ctx* ctx, const char* beta, const char* mu,
                                         freud_table** out);
/* C2, C1, C0 and the asymptotic log of the half-line Hankel determinant. */
FREUD_API freud_status freud_hankel_asymp(const freud_ctx* ctx, const char* beta, const char* alpha,
                                          const char* mu, unsigned n, freud_table** out);
/* Exact log determinant of the n x n moment matrix. */
FREUD_API freud_status freud_hankel_exact(const freud_ctx* ctx, const char* beta, const char* alpha,
                                          const char* mu, unsigned n, freud_table** out);
/* mu-derivative of the log determinant in both forms next to D2 n^2 + D1 n + D0. */
FREUD_API freud_status freud_diff_identity(const freud_ctx* ctx, const char* beta, const char* alpha,
                                           const char* mu, unsigned n, freud_table** out);
/* Asymptotic vs exact log determinant; status is "ok" or "outside-window". */
FREUD_API freud_status freud_compare_hankel(const freud_ctx* ctx, const char* beta, const char* alpha,
                                            const char* mu, unsigned n, const char* guard_m,
                                            freud_table** out);
/* Asymptotic vs finite-size log gap probability at size 2n. */
FREUD_API freud_status freud_compare_gap(const freud_ctx* ctx, const char* beta, unsigned n,
                                         const char* s, const char* guard_m, freud_table** out);
/* Full-line log determinant of even size from the split and directly. */
FREUD_API freud_status freud_fullline_hankel(const freud_ctx* ctx, const char* beta, const char* lambda,
                                             unsigned nsize, freud_table** out);
/* Finite-size gap probability of (-lambda, lambda) at the scaling for s. */
FREUD_API freud_status freud_finite_gap(const freud_ctx* ctx, const char* beta, unsigned nsize,
                                        const char* s, freud_table** out);
/* Large-gap terms; the constant cell is null for beta < 1. */
FREUD_API freud_status freud_gap_asymp(const freud_ctx* ctx, const char* beta, const char* s,
                                       freud_table** out);
/* log det(I - K_s) for the sine kernel by Nystrom quadrature. */
FREUD_API freud_status freud_sine_det(const freud_ctx* ctx, const char* s, unsigned nodes,
                                      freud_table** out);
/* Asymptotic log(Z_n / n!); the product formula column is filled at beta = 2. */
FREUD_API freud_status freud_zn(const freud_ctx* ctx, const char* beta, unsigned n, freud_table** out);
/* Rescaled kernel against the sine kernel over increasing sizes. */
FREUD_API freud_status freud_kernel_report(const freud_ctx* ctx, const char* beta, const unsigned* nsizes,
                                           size_t count, freud_table** out);
/* Runs every invariant check; *failures receives the number of failed checks. */
FREUD_API freud_status freud_verify(const freud_ctx* ctx, freud_table** out, size_t* failures);

#ifdef __cplusplus
}
#endif

#endif

/* C interface to the cyclic-split library.
 *
 * Every fallible call returns a cyc_status; on failure a description is
 * available from cyc_last_error() on the calling thread until the next call.
 * Objects are opaque handles released with the matching *_free function.
 * Matrices cross the boundary as dim*dim row-major cyc_complex arrays.
 * Internally all arithmetic is extended precision; values are rounded to
 * double only when copied out.
 */
#ifndef CYCLIC_CYCLIC_H
#define CYCLIC_CYCLIC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CYCLIC_BUILDING_LIBRARY)
#    define CYCLIC_API __declspec(dllexport)
#  else
#    define CYCLIC_API __declspec(dllimport)
#  endif
#else
#  define CYCLIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct {
    double re;
    double im;
} cyc_complex;

typedef enum {
    CYC_OK = 0,
    CYC_ERR_SHAPE = 1,
    CYC_ERR_NON_FINITE = 2,
    CYC_ERR_BRANCH = 3,
    CYC_ERR_INVALID_ARGUMENT = 4,
    CYC_ERR_VARIANT = 5,
    CYC_ERR_ALGEBRA_MISMATCH = 6,
    CYC_ERR_BUDGET = 7,
    CYC_ERR_DIVERGENCE = 8,
    CYC_ERR_INDEX = 9,
    CYC_ERR_DEGENERATE = 10,
    CYC_ERR_NULL_ARGUMENT = 11,
    CYC_ERR_INTERNAL = 12
} cyc_status;

typedef enum { CYC_AXIS_X = 0, CYC_AXIS_Y = 1, CYC_AXIS_Z = 2 } cyc_axis;

typedef struct cyc_representation cyc_representation;
typedef struct cyc_sequence cyc_sequence;

typedef struct {
    double omega;  /* carrier angular frequency */
    double Omega;  /* Larmor angular frequency, nonzero */
    double lambda; /* dimensionless drive strength */
    int two_j;     /* 2J, at least 1 */
} cyc_rabi_params;

CYCLIC_API const char* cyc_last_error(void);
CYCLIC_API const char* cyc_status_string(cyc_status status);

/* Algebra */
CYCLIC_API cyc_status cyc_adjoint_rotate(cyc_complex kappa, cyc_axis axis, cyc_complex p,
                                         const cyc_complex v_in[3], cyc_complex v_out[3]);

/* Representations */
CYCLIC_API cyc_status cyc_rep_spin(int two_j, cyc_representation** out);
CYCLIC_API cyc_status cyc_rep_so3(cyc_representation** out);
CYCLIC_API cyc_status cyc_rep_rescale(const cyc_representation* rep, cyc_complex s,
                                      cyc_representation** out);
CYCLIC_API void cyc_rep_free(cyc_representation* rep);
CYCLIC_API size_t cyc_rep_dim(const cyc_representation* rep);
CYCLIC_API cyc_complex cyc_rep_kappa(const cyc_representation* rep);
/* `out` holds dim*dim entries. */
CYCLIC_API cyc_status cyc_rep_generator(const cyc_representation* rep, cyc_axis axis, cyc_complex* out);
CYCLIC_API cyc_status cyc_rep_validate_cyclic(const cyc_representation* rep, double* out);

/* Variants: indices 0..11 are t2r1..t2r4, t3r1..t3r8. */
CYCLIC_API int cyc_variant_count(void);
CYCLIC_API const char* cyc_variant_name(int variant);
CYCLIC_API cyc_status cyc_variant_parse(const char* name, int* out);

/* Factor sequences */
CYCLIC_API cyc_status cyc_split_two(cyc_complex kappa, cyc_complex a, cyc_complex b, cyc_axis conjugating_axis,
                                    cyc_axis inner_axis, cyc_complex* p, cyc_complex* q, cyc_sequence** out);
CYCLIC_API cyc_status cyc_split_three(cyc_complex kappa, cyc_complex a, cyc_complex b, cyc_complex c, int variant,
                                      cyc_complex* p, cyc_complex* q, cyc_complex* r, cyc_sequence** out);
CYCLIC_API cyc_status cyc_sequence_create(cyc_complex kappa, const cyc_axis* axes, const cyc_complex* coefficients,
                                          size_t n, cyc_sequence** out);
CYCLIC_API void cyc_sequence_free(cyc_sequence* seq);
CYCLIC_API size_t cyc_sequence_length(const cyc_sequence* seq);
CYCLIC_API cyc_status cyc_sequence_factor(const cyc_sequence* seq, size_t index, cyc_axis* axis,
                                          cyc_complex* coefficient);
CYCLIC_API cyc_status cyc_evaluate(const cyc_representation* rep, const cyc_sequence* seq, cyc_complex* out);
CYCLIC_API cyc_status cyc_residual(const cyc_representation* rep, cyc_complex a, cyc_complex b, cyc_complex c,
                                   const cyc_sequence* seq, double* out);
/* Residual of the t3r1/t3r2 form that closes with e^{-p2 X}; *differs is 0 for other variants. */
CYCLIC_API cyc_status cyc_printed_form_residual(const cyc_representation* rep, cyc_complex a, cyc_complex b,
                                                cyc_complex c, int variant, int* differs, double* out);

/* Truncated Dynkin series; errors_out[i] belongs to degrees[i]. */
CYCLIC_API cyc_status cyc_bch_truncation_curve(size_t dim, const cyc_complex* x, const cyc_complex* y,
                                               const int* degrees, size_t n, double* errors_out);
CYCLIC_API cyc_status cyc_bch_dynkin_sum(size_t dim, const cyc_complex* x, const cyc_complex* y, int max_degree,
                                         cyc_complex* out);

/* Rabi dynamics; m values are passed as 2m. */
CYCLIC_API cyc_status cyc_rabi_propagator(const cyc_rabi_params* params, double t, cyc_complex* out);
CYCLIC_API cyc_status cyc_rabi_sweep(const cyc_rabi_params* params, const double* t, size_t n, int two_m_from,
                                     int two_m_to, double* probability_out, double* unitarity_defect_out);

#ifdef __cplusplus
}
#endif

#endif

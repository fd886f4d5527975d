#ifndef ELASTO_NP_H
#define ELASTO_NP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ENP_BUILDING)
#    define ENP_API __declspec(dllexport)
#  else
#    define ENP_API __declspec(dllimport)
#  endif
#else
#  define ENP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct {
  double re;
  double im;
} enp_complex;

/* value = mant * exp(log_scale) */
typedef struct {
  enp_complex mant;
  double log_scale;
} enp_scaled;

typedef enum {
  ENP_OK = 0,
  ENP_INVALID_ARGUMENT = 1,
  ENP_ORDER_TOO_LARGE,
  ENP_ORDER_TOO_SMALL,
  ENP_NON_FINITE_INPUT,
  ENP_ZERO_ARGUMENT,
  ENP_INVALID_ORDER,
  ENP_DEGREE_TOO_LARGE,
  ENP_DEGENERATE_MODULI,
  ENP_SIDE_MISMATCH,
  ENP_TOO_CLOSE_TO_SURFACE,
  ENP_DOUBLE_DEGENERATE,
  ENP_SINGULAR_SYSTEM,
  ENP_NO_BRACKET,
  ENP_RESONANCE_NOT_ACHIEVED,
  ENP_TUNING_FAILED,
  ENP_MODE_MISMATCH,
  ENP_SOURCE_INSIDE_SHELL,
  ENP_ON_INTERFACE,
  ENP_NULL_POINTER = 100,
  ENP_BUFFER_TOO_SMALL,
  ENP_OUT_OF_MEMORY,
  ENP_INTERNAL_ERROR
} enp_status;

ENP_API const char* enp_version(void);
ENP_API const char* enp_status_name(enp_status s);
/* Message of the last failing call on this thread; "" when none. */
ENP_API const char* enp_last_error(void);
/* 0 = hardware concurrency. */
ENP_API enp_status enp_set_threads(unsigned n);
ENP_API unsigned enp_get_threads(void);

/* ---- special functions ---- */

ENP_API enp_status enp_sph_bessel_j(int n, enp_complex z, enp_scaled* out);
ENP_API enp_status enp_sph_hankel1(int n, enp_complex z, enp_scaled* out);
ENP_API enp_status enp_wronskian_residual(int n, double t, double* out);

/* ---- Neumann-Poincare spectrum of one sphere ---- */

typedef struct {
  int n;
  enp_complex lambda1; /* T mode */
  enp_complex lambda2; /* I/N pair */
  enp_complex lambda3;
  enp_complex U[2]; /* (I, N) coefficients */
  enp_complex V[2];
  int degenerate;
  double residual; /* max eigen-residual of the I/N block */
} enp_np_result;

ENP_API enp_status enp_np_eigensystem(int n, enp_complex lambda, enp_complex mu, double omega,
                                      double R, enp_np_result* out);

/* ---- validation suites ---- */

typedef struct {
  char name[48];
  double worst;
  double tolerance;
  double seconds;
  size_t checks;
  int passed;
} enp_suite_result;

/* Runs every suite; with out == NULL only *count is set. */
ENP_API enp_status enp_validate(uint64_t seed, enp_suite_result* out, size_t capacity,
                                size_t* count);

/* ---- core-free ball ---- */

typedef struct enp_corefree enp_corefree;

ENP_API enp_status enp_corefree_create(double R, enp_complex lambda, enp_complex mu,
                                       enp_complex lambda_hat, enp_complex mu_hat, double omega,
                                       enp_corefree** out);
ENP_API void enp_corefree_destroy(enp_corefree* c);
ENP_API enp_status enp_corefree_set_mu_hat(enp_corefree* c, enp_complex mu_hat);
ENP_API enp_status enp_corefree_psi_tilde(const enp_corefree* c, int n, enp_complex* out);
ENP_API enp_status enp_corefree_resonance_quantity(const enp_corefree* c, int n0, double* out);
/* Boundary-form energy of a single mode with T coefficient f. */
ENP_API enp_status enp_corefree_mode_energy(const enp_corefree* c, int n, enp_complex f,
                                            double* out);
/* Log-spaced Im mu_hat sweep at the current Re mu_hat. With im == NULL only *count is set. */
ENP_API enp_status enp_corefree_im_sweep(const enp_corefree* c, int n0, double lo, double hi,
                                         int per_decade, double* im, double* quantity,
                                         size_t capacity, size_t* count);
ENP_API enp_status enp_corefree_tune_re_mu(const enp_corefree* c, int n0, double lo, double hi,
                                           double* out);

typedef struct {
  double p;
  double quantity;
  double psi_tilde_abs;
} enp_tune_p1_result;

ENP_API enp_status enp_corefree_tune_p1(const enp_corefree* c, int n0, double M, double lo,
                                        double hi, enp_tune_p1_result* out);

/* ---- core-shell ---- */

typedef struct enp_coreshell enp_coreshell;

ENP_API enp_status enp_coreshell_create(double r_i, double r_e, enp_complex lambda_core,
                                        enp_complex mu_core, enp_complex lambda_hat,
                                        enp_complex mu_hat, enp_complex lambda, enp_complex mu,
                                        double omega, enp_coreshell** out);
ENP_API void enp_coreshell_destroy(enp_coreshell* c);
ENP_API enp_status enp_coreshell_set_mu_hat(enp_coreshell* c, enp_complex mu_hat);
ENP_API enp_status enp_coreshell_mu_hat(const enp_coreshell* c, enp_complex* out);
ENP_API enp_status enp_coreshell_exterior_k(const enp_coreshell* c, enp_complex* out);
ENP_API enp_status enp_coreshell_radii(const enp_coreshell* c, double* rho, double* r_star,
                                       double* bound_radius);
ENP_API enp_status enp_coreshell_d(const enp_coreshell* c, int n, enp_complex* out);
/* sign: +1 or -1 for the missing joining sign. */
ENP_API enp_status enp_coreshell_q2(const enp_coreshell* c, int n, int sign, enp_complex* out);

typedef struct {
  double p2;
  double d_untuned;
  double d_tuned;
  double d_scale;
  double rho_2n0;
  double suppression;
  int target_met;
} enp_tune_p2_result;

/* Minimizes |d_{n0}| over mu_hat = -mu + i rho^{n0} + p2, p2 in [lo, hi]. */
ENP_API enp_status enp_coreshell_tune_p2(const enp_coreshell* c, int n0, double lo, double hi,
                                         enp_tune_p2_result* out);
/* Sets mu_hat = -mu + i rho^{n0} + p2. */
ENP_API enp_status enp_coreshell_apply_p2(enp_coreshell* c, int n0, double p2);

/* ---- source spectra ---- */

typedef struct enp_source enp_source;

ENP_API enp_status enp_source_create(enp_source** out);
/* f_n = (2n+1)!! (k r0)^{-n} at m = 0 for n in [n_min, n_max]; requires r0 > r_e. */
ENP_API enp_status enp_source_point(double r0, enp_complex k, int n_min, int n_max, double r_e,
                                    enp_source** out);
ENP_API void enp_source_destroy(enp_source* s);
ENP_API enp_status enp_source_set(enp_source* s, int n, int m, enp_complex f);
ENP_API enp_status enp_source_size(const enp_source* s, size_t* out);

/* ---- core-shell solutions ---- */

typedef struct enp_solution enp_solution;

typedef struct {
  enp_scaled phi[4];
  enp_complex d;
  double residual;
  double rcond;
  double shadow_deviation[4];
} enp_mode_info;

enum { ENP_REGION_CORE = 0, ENP_REGION_SHELL = 1, ENP_REGION_EXTERIOR = 2 };

typedef struct {
  int region;
  enp_complex scattered[3];
  enp_complex incident[3];
  enp_complex total[3];
} enp_field;

/* Copies cfg and src; the solution stays valid after they are destroyed. */
ENP_API enp_status enp_coreshell_solve(const enp_coreshell* c, const enp_source* s,
                                       double threshold, enp_solution** out);
ENP_API void enp_solution_destroy(enp_solution* s);
ENP_API enp_status enp_solution_energy(const enp_solution* s, double* energy, int* resonant);
ENP_API enp_status enp_solution_mode(const enp_solution* s, int n, int m, enp_mode_info* out);
ENP_API enp_status enp_solution_field(const enp_solution* s, const double x[3], enp_field* out);
/* One-sided evaluation with a forced region, e.g. on an interface. */
ENP_API enp_status enp_solution_field_in(const enp_solution* s, int region, const double x[3],
                                         enp_field* out);
ENP_API enp_status enp_solution_max_scattered(const enp_solution* s, double radius, int points,
                                              double* out);

#ifdef __cplusplus
}
#endif

#endif

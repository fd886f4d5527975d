#pragma once

#include <map>
#include <utility>
#include <vector>

#include "elasto/layer_coeffs.hpp"
#include "elasto/np_spectrum.hpp"
#include "elasto/source.hpp"

namespace elasto {

struct CoreFreeConfig {
  double R = 1.0;
  ElasticMedium exterior;
  ElasticMedium shell;
};

// Exterior must be real and strongly convex; the shell needs Im mu_hat >= 0, Im lambda_hat >= 0.
CoreFreeConfig make_corefree(double R, cplx lambda, cplx mu, cplx lambda_hat, cplx mu_hat,
                             double omega);
CoreFreeConfig with_mu_hat(const CoreFreeConfig& cfg, cplx mu_hat);

enum class Transcription { Corrected, Printed };

struct ModeSystem2 {
  CMat2 A;
  std::array<cplx, 2> rhs;
};

// Corrected: a11 carries 1/mu_hat and the traction row has R (not R^2).
// Printed: the displayed entries, kept for comparison.
ModeSystem2 corefree_system(int n, const CoreFreeConfig& cfg, cplx f,
                            Transcription t = Transcription::Corrected);

struct CoreFreeMode {
  int n = 0;
  Scaled psi1, psi2;
  cplx psi_tilde;
  double residual = 0.0;
  double rcond = 0.0;
};

CoreFreeMode solve_corefree_mode(int n, const CoreFreeConfig& cfg, cplx f);
CoreFreeMode solve_corefree_mode_scaled(int n, const CoreFreeConfig& cfg, const Scaled& f);

// psi_1 = f j_n(k_s R) / psi_tilde. The corrected value equals the printed
// closed form divided by mu * mu_hat.
cplx psi_tilde(int n, const CoreFreeConfig& cfg);
cplx psi_tilde_printed(int n, const CoreFreeConfig& cfg);

double resonance_quantity(int n0, const CoreFreeConfig& cfg);

struct CoreFreeSolution {
  std::map<std::pair<int, int>, CoreFreeMode> modes;
  double energy = 0.0;
};

CoreFreeSolution solve_corefree(const CoreFreeConfig& cfg, const SourceSpectrum& src);

// Im of the boundary form on the inner side of the sphere, summed over modes.
double dissipation_energy(const CoreFreeConfig& cfg, const SourceSpectrum& src,
                          const CoreFreeSolution& sol);
double corefree_mode_energy(int n, const CoreFreeConfig& cfg, const Scaled& psi1);

struct ImSweepPoint {
  double im_mu_hat;
  double quantity;
};

std::vector<ImSweepPoint> im_mu_sweep(int n0, const CoreFreeConfig& cfg, double lo, double hi,
                                      int per_decade = 60);

// Minimizer of |psi_tilde| over Re mu_hat in [lo, hi] at Im mu_hat = 1e-8.
double tune_re_mu(int n0, const CoreFreeConfig& cfg_template, double lo, double hi);

struct TuneP1Result {
  double p = 0.0;
  double quantity = 0.0;
  double psi_tilde_abs = 0.0;
};

// mu_hat = -mu + i/M + p, p minimizing |psi_tilde| over [lo, hi].
// Throws ResonanceNotAchieved when the quantity at p* does not exceed M.
TuneP1Result tune_p1(int n0, const CoreFreeConfig& cfg_template, double M, double lo = -0.5,
                     double hi = 0.5);

}  // namespace elasto

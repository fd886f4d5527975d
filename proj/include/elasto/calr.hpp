#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "elasto/harmonics.hpp"
#include "elasto/layer_coeffs.hpp"
#include "elasto/resonance.hpp"
#include "elasto/source.hpp"

namespace elasto {

struct CoreShellConfig {
  double r_i = 0.8;
  double r_e = 1.0;
  ElasticMedium core;
  ElasticMedium shell;
  ElasticMedium exterior;
  double omega = 1.0;

  double rho() const { return r_i / r_e; }
  double r_star() const;
  double bound_radius() const;
};

// Exterior real and strongly convex; shell and core moduli need Im >= 0.
CoreShellConfig make_coreshell(double r_i, double r_e, cplx lambda_core, cplx mu_core,
                               cplx lambda_hat, cplx mu_hat, cplx lambda, cplx mu, double omega);
CoreShellConfig with_shell_mu(const CoreShellConfig& cfg, cplx mu_hat);

using CMat4 = std::array<std::array<cplx, 4>, 4>;

struct ModeSystem4 {
  CMat4 A{};
  std::array<cplx, 4> rhs{};
};

// Unknowns are the T densities on r_i (core side, shell side), on r_e (shell
// side, exterior side). Corrected: entries re-derived from the transmission
// conditions. Printed: the displayed table.
ModeSystem4 assemble_coreshell(int n, const CoreShellConfig& cfg, cplx f,
                               Transcription t = Transcription::Corrected);

struct CoreShellMode {
  int n = 0;
  std::array<Scaled, 4> phi{};
  cplx d{0.0, 0.0};
  double residual = 0.0;
  double rcond = 0.0;
  // |printed phi_i - phi_i| / |phi_i| from the displayed closed forms
  std::array<double, 4> shadow_deviation{};
};

CoreShellMode solve_coreshell_mode(int n, const CoreShellConfig& cfg, cplx f);
CoreShellMode solve_coreshell_mode_scaled(int n, const CoreShellConfig& cfg, const Scaled& f);

// det(A) (2n+1)^4 mu mu_core mu_hat^2 / (n^2 r_i r_e), O(1) away from resonance.
cplx denominator_d(int n, const CoreShellConfig& cfg);
// The displayed closed form, evaluated literally.
Scaled denominator_d_printed(int n, const CoreShellConfig& cfg);
// Displayed phi-tilde_i / d for f = 1; the undefined h_{n23} is read as h_n(k_hat r_e).
std::array<Scaled, 4> printed_phi(int n, const CoreShellConfig& cfg);

struct EtaGamma {
  cplx eta;
  cplx gamma;
};

EtaGamma eta_gamma(int n, cplx k, double r);

// The missing joining sign before the last group.
enum class JoinSign { Plus, Minus };

// Literal transcription of q_{2,n}; n >= 30.
cplx q2(int n, const CoreShellConfig& cfg, JoinSign sign);

struct TuneP2Result {
  double p2 = 0.0;
  double d_untuned = 0.0;  // |d| at p2 = 0
  double d_tuned = 0.0;
  double d_scale = 0.0;    // median |d| over the coarse grid
  double rho_2n0 = 0.0;
  double suppression = 0.0;
  bool target_met = false;  // d_tuned <= 10 rho^{2 n0} d_scale
};

// mu_hat = -mu + i rho^{n0} + p2, p2 minimizing |d_{n0}| over [lo, hi].
// Requires mu_core == mu and n0 >= 30.
TuneP2Result tune_p2(int n0, const CoreShellConfig& cfg_template, double lo = -0.5,
                     double hi = 0.5, int cells = 2000);
CoreShellConfig tuned_coreshell(int n0, const CoreShellConfig& cfg_template, double p2);

// f_n = (2n+1)!! (k_s r0)^{-n} at m = 0.
SourceSpectrum point_source_spectrum(double r0, cplx k_s, int n_min, int n_max, double r_e);

struct CriticalRadius {
  double r_star;
  double bound_radius;
};

CriticalRadius critical_radius(const CoreShellConfig& cfg);

enum class Classification { NonResonant, Resonant };

struct CoreShellSolution {
  std::map<std::pair<int, int>, CoreShellMode> modes;
  double energy = 0.0;
  Classification classification = Classification::NonResonant;
};

inline constexpr double kDefaultResonanceThreshold = 1e6;

CoreShellSolution solve_coreshell(const CoreShellConfig& cfg, const SourceSpectrum& src,
                                  double threshold = kDefaultResonanceThreshold);

struct EnergyReport {
  double energy = 0.0;
  Classification classification = Classification::NonResonant;
};

// Boundary forms of the shell field on r_e minus r_i, summed over modes.
EnergyReport dissipation_energy_coreshell(const CoreShellConfig& cfg, const SourceSpectrum& src,
                                          const CoreShellSolution& sol,
                                          double threshold = kDefaultResonanceThreshold);
double coreshell_mode_energy(int n, const CoreShellConfig& cfg, const CoreShellMode& mode);

enum class FieldRegion { Core, Shell, Exterior };

struct FieldValue {
  FieldRegion region = FieldRegion::Exterior;
  Vec3 scattered{};  // total minus incident outside, total inside
  Vec3 incident{};   // zero inside r_e
  Vec3 total{};
};

// Throws OnInterface for |x| within 1e-12 relative of r_i or r_e; use the
// one-sided variant there.
FieldValue field_eval(const RVec3& x, const CoreShellConfig& cfg, const CoreShellSolution& sol,
                      const SourceSpectrum& src);
FieldValue field_eval_in(FieldRegion region, const RVec3& x, const CoreShellConfig& cfg,
                         const CoreShellSolution& sol, const SourceSpectrum& src);

// Max |scattered| over a Fibonacci sphere of the given radius (outside r_e).
double max_scattered_on_sphere(double radius, int points, const CoreShellConfig& cfg,
                               const CoreShellSolution& sol, const SourceSpectrum& src);

}  // namespace elasto

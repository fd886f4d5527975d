#pragma once

#include <array>
#include <vector>

#include "elasto/layer_coeffs.hpp"

namespace elasto {

using CMat2 = std::array<std::array<cplx, 2>, 2>;

// Coefficients of a combination alpha I_{n-1}^m + beta N_{n+1}^m.
struct IN_Coeff {
  cplx alpha{0.0, 0.0};
  cplx beta{0.0, 0.0};
};

struct NpMatrix {
  cplx t_block;   // b - 1/2
  CMat2 block;    // [[c1 - 1/2, c2], [d1, d2 - 1/2]], columns = images of I, N
};

enum class NpBranch { Generic, Degenerate };

struct NpEigenSystem {
  int n = 0;
  cplx lambda1, lambda2, lambda3;
  IN_Coeff U, V;        // displayed scaling (c1 - d2 +- sqrt, 2 d1) or (1, 0), (c2, d2 - c1)
  NpBranch branch = NpBranch::Generic;
  TractionCoeffs coeffs;
};

constexpr double kDegenerateTol = 1e-14;

NpMatrix np_matrix(int n, const ElasticMedium& med, double R, int n_max = kDefaultNmax);

NpEigenSystem np_eigensystem(int n, const ElasticMedium& med, double R,
                             double tol_d1n = kDegenerateTol, int n_max = kDefaultNmax);

// Same, from given traction coefficients (used for perturbation tests).
NpEigenSystem np_eigensystem_from(int n, const TractionCoeffs& tc, double tol_d1n = kDegenerateTol);

// ||A v - lambda v|| / (||A|| ||v||) for the 2x2 block; T-part is exact by construction.
double eigen_residual(const CMat2& A, const IN_Coeff& v, cplx lambda);

// Swaps (lambda2, U) with (lambda3, V) when that keeps the pair closer to prev.
void track_branches(const NpEigenSystem& prev, NpEigenSystem& cur);

struct QuasistaticStep {
  double omega;
  NpEigenSystem sys;
  double increment;  // max_i |lambda_i(omega) - lambda_i(previous omega)|, 0 for the first
};

struct QuasistaticProbe {
  std::vector<QuasistaticStep> steps;
  bool increments_shrink = false;  // each increment <= previous * (omega ratio) * slack
  double max_imag_last = 0.0;
};

QuasistaticProbe quasistatic_probe(int n, double lambda, double mu, double R,
                                   const std::vector<double>& omegas);

}  // namespace elasto

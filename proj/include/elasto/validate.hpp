#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace elasto {

struct SuiteResult {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double seconds = 0.0;
  std::size_t checks = 0;
};

// Relative Wronskian residual over n <= n_max and a log grid of t in [t_lo, t_hi].
SuiteResult validate_wronskian(int n_max = 80, double t_lo = 0.5, double t_hi = 100.0);
// Three-term recurrence closure for j_n and h_n along several rays.
SuiteResult validate_recurrence(int n_max = 60);
// Sphere-quadrature identity families for every (n, m) with n <= n_max.
SuiteResult validate_identities(int n_max = 8);
// Analytic single-layer fields against direct kernel quadrature, all three kinds,
// omega in {0.5, 2, 5}, |x| in {R/2, 2R}.
SuiteResult validate_layer_oracle(int n_max = 6);
// Eigen-residuals, then trace and determinant identities, for random media.
std::vector<SuiteResult> validate_np(int n_max = 40, std::uint64_t seed = 0);

std::vector<SuiteResult> validate_all(std::uint64_t seed = 0);

}  // namespace elasto

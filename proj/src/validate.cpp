#include "elasto/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "elasto/harmonics.hpp"
#include "elasto/layer_coeffs.hpp"
#include "elasto/np_spectrum.hpp"
#include "elasto/parallel.hpp"
#include "elasto/specfun.hpp"

namespace elasto {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

SuiteResult finish(std::string name, double worst, double tol, std::size_t checks,
                   const Timer& t) {
  return {std::move(name), worst, tol, worst < tol, t.seconds(), checks};
}

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

}  // namespace

SuiteResult validate_wronskian(int n_max, double t_lo, double t_hi) {
  Timer t;
  const int steps = 60;
  std::vector<double> worst(n_max + 1, 0.0);
  parallel_for(worst.size(), [&](std::size_t n) {
    for (int i = 0; i <= steps; ++i) {
      const double x = t_lo * std::pow(t_hi / t_lo, double(i) / steps);
      worst[n] = std::max(worst[n], wronskian_residual(int(n), x));
    }
  });
  return finish("wronskian", max_of(worst), 1e-10, worst.size() * (steps + 1), t);
}

SuiteResult validate_recurrence(int n_max) {
  Timer t;
  double worst = 0.0;
  std::size_t checks = 0;
  for (double r : {0.5, 2.0, 9.0, 27.0, 50.0})
    for (double ph : {0.0, 0.4, -1.1}) {
      const cplx z = std::polar(r, ph);
      const auto j = sph_bessel_j_all(n_max + 1, z);
      const auto h = sph_hankel1_all(n_max + 1, z);
      for (int n = 1; n <= n_max; ++n)
        for (const auto* f : {&j, &h}) {
          const Scaled lhs = (*f)[n - 1] + (*f)[n + 1];
          const Scaled rhs = (*f)[n] * (double(2 * n + 1) / z);
          const double scale =
              std::max({(*f)[n - 1].log_abs(), (*f)[n + 1].log_abs(), rhs.log_abs()});
          worst = std::max(worst, std::abs((lhs - rhs).value() * std::exp(-scale)));
          ++checks;
        }
    }
  return finish("recurrence closure", worst, 1e-11, checks, t);
}

SuiteResult validate_identities(int n_max) {
  Timer t;
  std::vector<std::pair<int, int>> modes;
  for (int n = 1; n <= n_max; ++n)
    for (int m = -n; m <= n; ++m) modes.emplace_back(n, m);
  std::vector<double> worst(modes.size());
  parallel_for(modes.size(), [&](std::size_t i) {
    const auto [n, m] = modes[i];
    worst[i] = std::max({verify_prop_identities(PropSet::P1, n, m),
                         verify_prop_identities(PropSet::P2, n, m),
                         verify_prop_identities(PropSet::P3, n, m)});
  });
  return finish("surface identities", max_of(worst), 1e-9, 3 * modes.size(), t);
}

SuiteResult validate_layer_oracle(int n_max) {
  Timer t;
  struct Case {
    ModeIndex mode;
    double omega, r;
  };
  std::vector<Case> cases;
  for (double w : {0.5, 2.0, 5.0})
    for (int n = 0; n <= n_max; ++n)
      for (VshKind kind : {VshKind::T, VshKind::I, VshKind::N}) {
        if (kind != VshKind::N && n == 0) continue;
        for (int m : {0, n})
          for (double r : {0.5, 2.0}) cases.push_back({{n, m, kind}, w, r});
      }
  std::vector<double> err(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    const auto med = make_medium(1.0, 1.0, c.omega);
    const double th = 1.1, ph = 0.7;
    const RVec3 x{c.r * std::sin(th) * std::cos(ph), c.r * std::sin(th) * std::sin(ph),
                  c.r * std::cos(th)};
    const Vec3 ref = kernel_quadrature_oracle(c.mode, med, 1.0, x);
    const Vec3 got = single_layer_field(c.mode, med, 1.0, x);
    double num = 0.0, den = 0.0;
    for (int k = 0; k < 3; ++k) {
      num += std::norm(got[k] - ref[k]);
      den += std::norm(ref[k]);
    }
    err[i] = std::sqrt(num / den);
  });
  return finish("layer potential oracle", max_of(err), 1e-7, cases.size(), t);
}

std::vector<SuiteResult> validate_np(int n_max, std::uint64_t seed) {
  Timer t;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.2, 3.0), ui(0.0, 0.5);
  double worst_res = 0.0, worst_id = 0.0;
  std::size_t checks = 0;
  for (int trial = 0; trial < 4; ++trial) {
    const auto med = trial == 0 ? make_medium(1.0, 1.0, 2.0)
                                : make_medium(cplx(u(rng), ui(rng)), cplx(u(rng), ui(rng)),
                                              2.0 * u(rng));
    const double R = trial == 0 ? 1.0 : u(rng);
    for (int n = 1; n <= n_max; ++n) {
      const auto s = np_eigensystem(n, med, R);
      const auto A = np_matrix(n, med, R).block;
      worst_res = std::max({worst_res, eigen_residual(A, s.U, s.lambda2),
                            eigen_residual(A, s.V, s.lambda3)});
      const double sc = std::max(1.0, std::abs(A[0][0]) + std::abs(A[1][1]));
      const cplx det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
      worst_id = std::max({worst_id, std::abs(s.lambda2 + s.lambda3 - (A[0][0] + A[1][1])) / sc,
                           std::abs(s.lambda2 * s.lambda3 - det) / (sc * sc)});
      ++checks;
    }
  }
  const double secs = t.seconds();
  return {{"np eigen-residual", worst_res, 1e-11, worst_res < 1e-11, secs, 2 * checks},
          {"np trace/determinant", worst_id, 1e-12, worst_id < 1e-12, secs, 2 * checks}};
}

std::vector<SuiteResult> validate_all(std::uint64_t seed) {
  std::vector<SuiteResult> out{validate_wronskian(), validate_recurrence(), validate_identities(),
                               validate_layer_oracle()};
  for (auto& r : validate_np(40, seed)) out.push_back(std::move(r));
  return out;
}

}  // namespace elasto

#include <doctest.h>

#include <cmath>
#include <random>

#include "elasto/error.hpp"
#include "elasto/np_spectrum.hpp"

using namespace elasto;

namespace {

cplx det2(const CMat2& A) { return A[0][0] * A[1][1] - A[0][1] * A[1][0]; }

}  // namespace

TEST_CASE("np matrix is the traction block shifted by one half") {
  const auto med = make_medium(1.0, 1.0, 2.0);
  const auto tc = traction_coeffs(3, med, 1.0);
  const auto m = np_matrix(3, med, 1.0);
  CHECK(m.t_block == tc.b - 0.5);
  CHECK(m.block[0][0] == tc.c1 - 0.5);
  CHECK(m.block[0][1] == tc.c2);
  CHECK(m.block[1][0] == tc.d1);
  CHECK(m.block[1][1] == tc.d2 - 0.5);
  CHECK_THROWS_AS(np_matrix(0, med, 1.0), Error);
}

TEST_CASE("eigen-residuals and trace/determinant identities up to n = 40") {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> u(0.2, 3.0), ui(0.0, 0.5);
  double worst_res = 0.0, worst_tr = 0.0, worst_det = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    const auto med = trial == 0 ? make_medium(1.0, 1.0, 2.0)
                                : make_medium(cplx(u(rng), ui(rng)), cplx(u(rng), ui(rng)), u(rng) * 2);
    const double R = trial == 0 ? 1.0 : u(rng);
    for (int n = 1; n <= 40; ++n) {
      const auto s = np_eigensystem(n, med, R);
      const auto A = np_matrix(n, med, R).block;
      worst_res = std::max({worst_res, eigen_residual(A, s.U, s.lambda2),
                            eigen_residual(A, s.V, s.lambda3)});
      const double sc = std::max(1.0, std::abs(A[0][0]) + std::abs(A[1][1]));
      worst_tr = std::max(worst_tr, std::abs(s.lambda2 + s.lambda3 - (A[0][0] + A[1][1])) / sc);
      worst_det = std::max(worst_det, std::abs(s.lambda2 * s.lambda3 - det2(A)) / (sc * sc));
      CHECK(s.lambda1 == s.coeffs.b - 0.5);
    }
  }
  CHECK(worst_res < 1e-11);
  CHECK(worst_tr < 1e-12);
  CHECK(worst_det < 1e-12);
}

TEST_CASE("eigenvectors are rays") {
  const auto med = make_medium(1.0, 1.0, 2.0);
  const auto s = np_eigensystem(3, med, 1.0);
  const auto A = np_matrix(3, med, 1.0).block;
  const IN_Coeff big{s.U.alpha * 1e3, s.U.beta * 1e3};
  CHECK(eigen_residual(A, big, s.lambda2) < 1e-12);
  CHECK(eigen_residual(A, s.V, s.lambda3) < 1e-12);
}

TEST_CASE("degenerate branch and continuity in d1") {
  auto tc = traction_coeffs(3, make_medium(1.0, 1.0, 2.0), 1.0);
  tc.d1 = 0.0;
  const auto deg = np_eigensystem_from(3, tc);
  CHECK(deg.branch == NpBranch::Degenerate);
  CHECK(deg.lambda2 == tc.c1 - 0.5);
  CHECK(deg.lambda3 == tc.d2 - 0.5);
  const CMat2 A{{{tc.c1 - 0.5, tc.c2}, {tc.d1, tc.d2 - 0.5}}};
  CHECK(eigen_residual(A, deg.U, deg.lambda2) < 1e-15);
  CHECK(eigen_residual(A, deg.V, deg.lambda3) < 1e-15);

  tc.d1 = 1e-10;
  auto gen = np_eigensystem_from(3, tc);
  CHECK(gen.branch == NpBranch::Generic);
  track_branches(deg, gen);
  CHECK(std::abs(gen.lambda2 - deg.lambda2) < 1e-8);
  CHECK(std::abs(gen.lambda3 - deg.lambda3) < 1e-8);

  tc.d1 = 1e-20;  // below tolerance: treated as zero
  CHECK(np_eigensystem_from(3, tc).branch == NpBranch::Degenerate);

  tc.d1 = 0.0;
  tc.c2 = 0.0;
  tc.d2 = tc.c1;
  CHECK_THROWS_AS(np_eigensystem_from(3, tc), Error);
}

TEST_CASE("zero discriminant gives a double eigenvalue") {
  TractionCoeffs tc{};
  tc.b = 0.3;
  tc.c1 = 0.7;
  tc.d2 = 0.3;
  tc.d1 = 0.2;
  tc.c2 = -0.2;  // (d2 - c1)^2 + 4 d1 c2 = 0.16 - 0.16
  const auto s = np_eigensystem_from(2, tc);
  CHECK(std::abs(s.lambda2 - s.lambda3) < 1e-7);
}

TEST_CASE("large-n accumulation of the T eigenvalue") {
  // b_n = (n + 2)/(2n + 1) + O(1/n^2)-type corrections, so lambda_1 = b - 1/2 = O(1/n)
  const auto med = make_medium(1.0, 1.0, 2.0);
  double c_fit = 0.0;
  for (int n : {20, 40, 80, 160})
    c_fit = std::max(c_fit, n * std::abs(np_eigensystem(n, med, 1.0).lambda1));
  MESSAGE("fitted C in |lambda_1| < C/n: " << c_fit);
  CHECK(c_fit < 1.0);
  for (int n : {20, 40, 80, 160}) CHECK(std::abs(np_eigensystem(n, med, 1.0).lambda1) < c_fit / n * 1.0001);
  // I/N pair accumulates at +- mu / (2 (lambda + 2 mu))
  const auto s = np_eigensystem(160, med, 1.0);
  CHECK(std::abs(s.lambda2 - 1.0 / 6.0) < 0.01);
  CHECK(std::abs(s.lambda3 + 1.0 / 6.0) < 0.01);
}

TEST_CASE("quasi-static probe") {
  const auto q = quasistatic_probe(2, 1.0, 1.0, 1.0, {1e-2, 1e-3, 1e-4, 1e-5});
  REQUIRE(q.steps.size() == 4);
  CHECK(q.increments_shrink);
  CHECK(q.max_imag_last < 1e-6);
  // Cauchy pattern: increments fall like omega^2
  CHECK(q.steps[3].increment < 0.05 * q.steps[2].increment);
  // static spectrum is scale free
  const auto a = quasistatic_probe(2, 1.0, 1.0, 1.0, {1e-5}).steps[0].sys;
  const auto b = quasistatic_probe(2, 1.0, 1.0, 2.0, {1e-5}).steps[0].sys;
  CHECK(std::abs(a.lambda1 - b.lambda1) < 1e-6);
  CHECK(std::abs(a.lambda2 - b.lambda2) < 1e-6);
  CHECK(std::abs(a.lambda3 - b.lambda3) < 1e-6);
  CHECK_THROWS_AS(quasistatic_probe(2, 1.0, 1.0, 1.0, {1e-3, 1e-2}), Error);
  CHECK_THROWS_AS(quasistatic_probe(2, 1.0, 1.0, 1.0, {0.5}), Error);
}

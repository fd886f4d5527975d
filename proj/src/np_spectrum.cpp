#include "elasto/np_spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "elasto/error.hpp"

namespace elasto {

namespace {

double block_norm(const CMat2& A) {
  double s = 0.0;
  for (const auto& row : A)
    for (cplx v : row) s += std::norm(v);
  return std::sqrt(s);
}

double dist(const NpEigenSystem& a, const NpEigenSystem& b) {
  return std::abs(a.lambda2 - b.lambda2) + std::abs(a.lambda3 - b.lambda3);
}

}  // namespace

NpMatrix np_matrix(int n, const ElasticMedium& med, double R, int n_max) {
  const TractionCoeffs tc = traction_coeffs(n, med, R, n_max);
  NpMatrix m;
  m.t_block = tc.b - 0.5;
  m.block = {{{tc.c1 - 0.5, tc.c2}, {tc.d1, tc.d2 - 0.5}}};
  return m;
}

NpEigenSystem np_eigensystem_from(int n, const TractionCoeffs& tc, double tol_d1n) {
  NpEigenSystem s;
  s.n = n;
  s.coeffs = tc;
  s.lambda1 = tc.b - 0.5;
  const CMat2 A{{{tc.c1 - 0.5, tc.c2}, {tc.d1, tc.d2 - 0.5}}};
  const double scale = std::max(block_norm(A), 1e-300);
  const double tol = tol_d1n * scale;
  if (std::abs(tc.d1) > tol) {
    const cplx root = std::sqrt((tc.d2 - tc.c1) * (tc.d2 - tc.c1) + 4.0 * tc.d1 * tc.c2);
    const cplx tr = tc.c1 + tc.d2 - 1.0;
    s.lambda2 = (tr + root) / 2.0;
    s.lambda3 = (tr - root) / 2.0;
    s.U = {tc.c1 - tc.d2 + root, 2.0 * tc.d1};
    s.V = {tc.c1 - tc.d2 - root, 2.0 * tc.d1};
    s.branch = NpBranch::Generic;
    return s;
  }
  if (std::abs(tc.d2 - tc.c1) <= tol && std::abs(tc.c2) <= tol)
    throw Error(Errc::DoubleDegenerate,
                "d1 = 0, d2 = c1 and c2 = 0: every combination of I and N is an eigenvector");
  s.lambda2 = tc.c1 - 0.5;
  s.lambda3 = tc.d2 - 0.5;
  s.U = {1.0, 0.0};
  s.V = {tc.c2, tc.d2 - tc.c1};
  s.branch = NpBranch::Degenerate;
  return s;
}

NpEigenSystem np_eigensystem(int n, const ElasticMedium& med, double R, double tol_d1n,
                             int n_max) {
  return np_eigensystem_from(n, traction_coeffs(n, med, R, n_max), tol_d1n);
}

double eigen_residual(const CMat2& A, const IN_Coeff& v, cplx lambda) {
  const cplx r0 = A[0][0] * v.alpha + A[0][1] * v.beta - lambda * v.alpha;
  const cplx r1 = A[1][0] * v.alpha + A[1][1] * v.beta - lambda * v.beta;
  const double nv = std::sqrt(std::norm(v.alpha) + std::norm(v.beta));
  const double na = block_norm(A);
  if (nv == 0.0) throw Error(Errc::InvalidArgument, "zero eigenvector");
  return std::sqrt(std::norm(r0) + std::norm(r1)) / (std::max(na, std::abs(lambda)) * nv);
}

void track_branches(const NpEigenSystem& prev, NpEigenSystem& cur) {
  NpEigenSystem swapped = cur;
  std::swap(swapped.lambda2, swapped.lambda3);
  std::swap(swapped.U, swapped.V);
  if (dist(prev, swapped) < dist(prev, cur)) cur = swapped;
}

QuasistaticProbe quasistatic_probe(int n, double lambda, double mu, double R,
                                   const std::vector<double>& omegas) {
  if (omegas.empty()) throw Error(Errc::InvalidArgument, "empty frequency list");
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    if (!(omegas[i] > 0.0 && omegas[i] <= 0.1))
      throw Error(Errc::InvalidArgument, "probe frequencies must lie in (0, 0.1]");
    if (i > 0 && !(omegas[i] < omegas[i - 1]))
      throw Error(Errc::InvalidArgument, "probe frequencies must decrease");
  }
  QuasistaticProbe out;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    QuasistaticStep st{omegas[i], np_eigensystem(n, make_medium(lambda, mu, omegas[i]), R), 0.0};
    if (i > 0) {
      const auto& p = out.steps.back().sys;
      track_branches(p, st.sys);
      st.increment = std::max({std::abs(st.sys.lambda1 - p.lambda1),
                               std::abs(st.sys.lambda2 - p.lambda2),
                               std::abs(st.sys.lambda3 - p.lambda3)});
    }
    out.steps.push_back(st);
  }
  // increments should shrink at least like omega (remainders are O(t))
  out.increments_shrink = true;
  for (std::size_t i = 2; i < out.steps.size(); ++i) {
    const double ratio = out.steps[i - 1].omega / out.steps[i - 2].omega;
    if (out.steps[i].increment > 2.0 * ratio * out.steps[i - 1].increment + 1e-13)
      out.increments_shrink = false;
  }
  const auto& last = out.steps.back().sys;
  out.max_imag_last = std::max({std::abs(last.lambda1.imag()), std::abs(last.lambda2.imag()),
                                std::abs(last.lambda3.imag())});
  return out;
}

}  // namespace elasto

#pragma once
// Finite-difference elasticity helpers: Lame operator residual and traction.

#include <array>
#include <complex>
#include <functional>

namespace oracle {

using cd = std::complex<double>;
using V3 = std::array<cd, 3>;
using P3 = std::array<double, 3>;
using Field = std::function<V3(const P3&)>;
using Jac = std::array<std::array<cd, 3>, 3>;  // J[i][j] = d u_i / d x_j

inline P3 shift(P3 x, int j, double d) {
  x[j] += d;
  return x;
}

inline Jac jacobian(const Field& u, const P3& x, double h) {
  Jac J{};
  for (int j = 0; j < 3; ++j) {
    const V3 a = u(shift(x, j, 2 * h)), b = u(shift(x, j, h)), c = u(shift(x, j, -h)),
             d = u(shift(x, j, -2 * h));
    for (int i = 0; i < 3; ++i) J[i][j] = (-a[i] + 8.0 * b[i] - 8.0 * c[i] + d[i]) / (12.0 * h);
  }
  return J;
}

// lambda (div u) nu + 2 mu sym(grad u) nu
inline V3 traction(const Field& u, const P3& x, const P3& nu, cd lambda, cd mu, double h) {
  const Jac J = jacobian(u, x, h);
  const cd div = J[0][0] + J[1][1] + J[2][2];
  V3 t{};
  for (int i = 0; i < 3; ++i) {
    cd s = lambda * div * nu[i];
    for (int j = 0; j < 3; ++j) s += mu * (J[i][j] + J[j][i]) * nu[j];
    t[i] = s;
  }
  return t;
}

// mu Lap u + (lambda + mu) grad div u + omega^2 u, second-order stencils.
inline V3 lame_residual(const Field& u, const P3& x, cd lambda, cd mu, double omega, double h) {
  const V3 u0 = u(x);
  V3 lap{}, gd{};
  for (int j = 0; j < 3; ++j) {
    const V3 up = u(shift(x, j, h)), um = u(shift(x, j, -h));
    for (int i = 0; i < 3; ++i) lap[i] += (up[i] - 2.0 * u0[i] + um[i]) / (h * h);
  }
  // (grad div u)_i = sum_j d_i d_j u_j
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) {
        const V3 up = u(shift(x, i, h)), um = u(shift(x, i, -h));
        gd[i] += (up[i] - 2.0 * u0[i] + um[i]) / (h * h);
      } else {
        const V3 pp = u(shift(shift(x, i, h), j, h)), pm = u(shift(shift(x, i, h), j, -h)),
                 mp = u(shift(shift(x, i, -h), j, h)), mm = u(shift(shift(x, i, -h), j, -h));
        gd[i] += (pp[j] - pm[j] - mp[j] + mm[j]) / (4.0 * h * h);
      }
    }
  }
  V3 r{};
  for (int i = 0; i < 3; ++i) r[i] = mu * lap[i] + (lambda + mu) * gd[i] + omega * omega * u0[i];
  return r;
}

inline double norm(const V3& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

inline V3 sub(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

}  // namespace oracle

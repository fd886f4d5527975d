#pragma once
// Independent power-series evaluation of spherical Bessel functions in long double.
// Only meant for |z| up to ~5; cancellation grows like exp(|z|^2/4n) beyond.

#include <cmath>
#include <complex>

namespace oracle {

using lcplx = std::complex<long double>;

inline long double odd_dfact(int k) {
  long double r = 1.0L;
  for (int i = k; i > 1; i -= 2) r *= i;
  return r;
}

// j_n(z) = z^n sum_k (-z^2/2)^k / (k! (2n+2k+1)!!), `terms` terms.
inline lcplx sph_j(int n, lcplx z, int terms = 60) {
  lcplx term = std::pow(z, n) / odd_dfact(2 * n + 1);
  lcplx sum = term;
  const lcplx w = -0.5L * z * z;
  for (int k = 1; k < terms; ++k) {
    term *= w / (long double)(k * (2 * n + 2 * k + 1));
    sum += term;
  }
  return sum;
}

// y_n(z) = -(2n-1)!!/z^{n+1} sum_k prod_{l<=k} (-z^2/2)/(l (2l-1-2n)).
inline lcplx sph_y(int n, lcplx z, int terms = 60) {
  lcplx term = 1.0L, sum = 1.0L;
  const lcplx w = -0.5L * z * z;
  for (int k = 1; k < terms; ++k) {
    term *= w / (long double)(k * (2 * k - 1 - 2 * n));
    sum += term;
  }
  return -odd_dfact(2 * n - 1) / std::pow(z, n + 1) * sum;
}

inline lcplx sph_h(int n, lcplx z, int terms = 60) {
  return sph_j(n, z, terms) + lcplx(0.0L, 1.0L) * sph_y(n, z, terms);
}

}  // namespace oracle

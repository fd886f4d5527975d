#pragma once

#include <complex>
#include <vector>

namespace elasto {

using cplx = std::complex<double>;

inline constexpr int kDefaultNmax = 256;

// value = mant * exp(log_scale), |mant| == 1 unless the value is zero.
struct Scaled {
  cplx mant{0.0, 0.0};
  double log_scale = 0.0;

  static Scaled from(cplx v);
  static Scaled from_parts(cplx mant, double log_scale);
  static Scaled real_exp(double log_value) { return {cplx(1.0, 0.0), log_value}; }

  bool is_zero() const { return mant == cplx(0.0, 0.0); }
  cplx value() const;
  double log_abs() const;
};

Scaled operator*(const Scaled& a, const Scaled& b);
Scaled operator*(const Scaled& a, cplx b);
Scaled operator*(cplx a, const Scaled& b);
Scaled operator/(const Scaled& a, const Scaled& b);
Scaled operator+(const Scaled& a, const Scaled& b);
Scaled operator-(const Scaled& a, const Scaled& b);
Scaled operator-(const Scaled& a);

// z^n for integer n, kept scaled.
Scaled scaled_pow(cplx z, int n);

// log of k!! for odd k >= -1.
double log_odd_double_factorial(int k);

enum class Kind { J, H };

Scaled sph_bessel_j(int n, cplx z, int n_max = kDefaultNmax);
Scaled sph_hankel1(int n, cplx z, int n_max = kDefaultNmax);
Scaled sph_fn(Kind kind, int n, cplx z, int n_max = kDefaultNmax);

// Orders 0..n in one pass.
std::vector<Scaled> sph_bessel_j_all(int n, cplx z, int n_max = kDefaultNmax);
std::vector<Scaled> sph_hankel1_all(int n, cplx z, int n_max = kDefaultNmax);

Scaled sph_deriv(Kind kind, int n, cplx z, int n_max = kDefaultNmax);

// z f_n'(z) - f_n(z)
Scaled acute(Kind kind, int n, cplx z, int n_max = kDefaultNmax);

// j_n(t) = t^n/(2n+1)!! (1 + jr),  h_n(t) = (2n-1)!!/(i t^{n+1}) (1 + hr)
cplx grave_remainder(Kind kind, int n, cplx t, int n_max = kDefaultNmax);
// j_n'(t) = n t^{n-1}/(2n+1)!! (1 + jr'),  h_n'(t) = -(n+1)(2n-1)!!/(i t^{n+2}) (1 + hr')
cplx grave_remainder_deriv(Kind kind, int n, cplx t, int n_max = kDefaultNmax);

// n-1 + n jr' - jr, so that acute j_n = t^n/(2n+1)!! * eta
cplx eta_coeff(int n, cplx t);
// n+2 + (n+1) hr' + hr, so that acute h_n = -(2n-1)!!/(i t^{n+1}) * gamma
cplx gamma_coeff(int n, cplx t);

double wronskian_residual(int n, double t);

}  // namespace elasto

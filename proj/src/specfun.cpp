#include "elasto/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "elasto/error.hpp"

namespace elasto {

namespace {

constexpr cplx kI(0.0, 1.0);
constexpr double kSeriesRadius = 1.0;
constexpr double kClosedFormRadius = 0.5;

void check_args(int n, cplx z, int n_max) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(Errc::NonFiniteInput, "non-finite argument");
  if (n < 0) throw Error(Errc::InvalidArgument, "negative order " + std::to_string(n));
  if (n > n_max)
    throw Error(Errc::OrderTooLarge,
                "order " + std::to_string(n) + " exceeds n_max " + std::to_string(n_max));
}

// j_n(z) = z^n sum_k (-z^2/2)^k / (k! (2n+2k+1)!!), unscaled, small |z| only.
cplx j_series(int n, cplx z) {
  cplx term = std::exp(-log_odd_double_factorial(2 * n + 1)) * std::pow(z, n);
  cplx sum = term;
  const cplx w = -0.5 * z * z;
  for (int k = 1; k < 60; ++k) {
    term *= w / double(k * (2 * n + 2 * k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// e^{a} * (e^{iz} e^{-a}, e^{-iz} e^{-a}) with a = |Im z|, so nothing overflows.
struct ExpPair {
  cplx plus, minus;
  double a;
};

ExpPair exp_pair(cplx z) {
  const double x = z.real(), y = z.imag(), a = std::abs(y);
  return {std::exp(cplx(-y - a, x)), std::exp(cplx(y - a, -x)), a};
}

Scaled j0_scaled(cplx z) {
  if (std::abs(z) < kClosedFormRadius) return Scaled::from(j_series(0, z));
  const ExpPair e = exp_pair(z);
  return Scaled::from_parts((e.plus - e.minus) / (2.0 * kI * z), e.a);
}

Scaled j1_scaled(cplx z) {
  if (std::abs(z) < kClosedFormRadius) return Scaled::from(j_series(1, z));
  const ExpPair e = exp_pair(z);
  const cplx s = (e.plus - e.minus) / (2.0 * kI), c = 0.5 * (e.plus + e.minus);
  return Scaled::from_parts(s / (z * z) - c / z, e.a);
}

int miller_start(int n, cplx z) {
  const double az = std::abs(z);
  const double base = std::max<double>(n, az);
  return int(base + 40.0 + 0.5 * az + 2.0 * std::sqrt(base));
}

cplx jr_series(int n, cplx t) {
  cplx term = 1.0, sum = 0.0;
  const cplx w = -0.5 * t * t;
  for (int k = 1; k < 80; ++k) {
    term *= w / double(k * (2 * n + 2 * k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

cplx jrd_series(int n, cplx t) {
  cplx term = 1.0, sum = 0.0;
  const cplx w = -0.5 * t * t;
  for (int k = 1; k < 80; ++k) {
    term *= w / double(k * (2 * n + 2 * k + 1));
    const cplx add = term * (double(n + 2 * k) / n);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// t^{2n+1} / ((2n-1)!! (2n+1)!!)
cplx odd_tail(int n, cplx t) {
  const double lg = log_odd_double_factorial(2 * n - 1) + log_odd_double_factorial(2 * n + 1);
  return (scaled_pow(t, 2 * n + 1) * Scaled::real_exp(-lg)).value();
}

// Series of -t^{n+1} y_n(t)/(2n-1)!! minus its leading 1, weighted per term by wk(k).
template <class W>
cplx y_part_series(int n, cplx t, W wk) {
  cplx term = 1.0, sum = 0.0;
  const cplx w = -0.5 * t * t;
  for (int k = 1; k < 120; ++k) {
    term *= w / double(k * (2 * k - 1 - 2 * n));
    const cplx add = term * wk(k);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum) && k > n) break;
  }
  return sum;
}

cplx hr_series(int n, cplx t) {
  const cplx y = y_part_series(n, t, [](int) { return 1.0; });
  return y + kI * odd_tail(n, t) * (1.0 + jr_series(n, t));
}

cplx hrd_series(int n, cplx t) {
  const cplx y = y_part_series(n, t, [n](int k) { return double(n + 1 - 2 * k) / (n + 1); });
  return y - kI * (double(n) / (n + 1)) * odd_tail(n, t) * (1.0 + jrd_series(n, t));
}

}  // namespace

Scaled Scaled::from(cplx v) {
  const double a = std::abs(v);
  if (a == 0.0) return {};
  return {v / a, std::log(a)};
}

Scaled Scaled::from_parts(cplx mant, double log_scale) {
  Scaled s = from(mant);
  if (!s.is_zero()) s.log_scale += log_scale;
  return s;
}

cplx Scaled::value() const {
  if (is_zero()) return 0.0;
  return mant * std::exp(log_scale);
}

double Scaled::log_abs() const {
  return is_zero() ? -std::numeric_limits<double>::infinity() : log_scale;
}

Scaled operator*(const Scaled& a, const Scaled& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return Scaled::from_parts(a.mant * b.mant, a.log_scale + b.log_scale);
}

Scaled operator*(const Scaled& a, cplx b) { return a * Scaled::from(b); }
Scaled operator*(cplx a, const Scaled& b) { return Scaled::from(a) * b; }

Scaled operator/(const Scaled& a, const Scaled& b) {
  if (b.is_zero()) throw Error(Errc::ZeroArgument, "scaled division by zero");
  if (a.is_zero()) return {};
  return Scaled::from_parts(a.mant / b.mant, a.log_scale - b.log_scale);
}

Scaled operator+(const Scaled& a, const Scaled& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const double s = std::max(a.log_scale, b.log_scale);
  const cplx m = a.mant * std::exp(a.log_scale - s) + b.mant * std::exp(b.log_scale - s);
  return Scaled::from_parts(m, s);
}

Scaled operator-(const Scaled& a) { return {-a.mant, a.log_scale}; }
Scaled operator-(const Scaled& a, const Scaled& b) { return a + (-b); }

Scaled scaled_pow(cplx z, int n) {
  if (n == 0) return Scaled::from(1.0);
  if (z == cplx(0.0, 0.0)) {
    if (n < 0) throw Error(Errc::ZeroArgument, "negative power of zero");
    return {};
  }
  const double la = std::log(std::abs(z)) * n;
  const double ph = std::arg(z) * n;
  return {std::polar(1.0, ph), la};
}

double log_odd_double_factorial(int k) {
  if (k < -1 || k % 2 == 0) throw Error(Errc::InvalidArgument, "odd k >= -1 required");
  if (k == -1) return 0.0;
  const int m = (k - 1) / 2;  // k = 2m+1, k!! = 2^{m+1} Gamma(m+3/2) / sqrt(pi)
  return (m + 1) * std::numbers::ln2 + std::lgamma(m + 1.5) - 0.5 * std::log(std::numbers::pi);
}

std::vector<Scaled> sph_bessel_j_all(int n, cplx z, int n_max) {
  check_args(n, z, n_max);
  std::vector<Scaled> out(n + 1);
  if (z == cplx(0.0, 0.0)) {
    out[0] = Scaled::from(1.0);
    return out;
  }
  out[0] = j0_scaled(z);
  if (n == 0) return out;

  // r[k] = j_k / j_{k-1}, from the minimal-solution continued fraction
  std::vector<cplx> r(n + 1);
  cplx rk = 0.0;
  for (int k = miller_start(n, z); k >= 1; --k) {
    rk = z / (double(2 * k + 1) - z * rk);
    if (k <= n) r[k] = rk;
  }

  const Scaled j1 = j1_scaled(z);
  int k0 = 1;
  Scaled cur = j1;
  if (out[0].log_abs() >= j1.log_abs()) {
    k0 = 0;
    cur = out[0];
  }
  out[1] = k0 == 1 ? j1 : out[0] * r[1];
  cur = out[1];
  for (int k = 2; k <= n; ++k) {
    cur = cur * r[k];
    out[k] = cur;
  }
  return out;
}

std::vector<Scaled> sph_hankel1_all(int n, cplx z, int n_max) {
  check_args(n, z, n_max);
  if (z == cplx(0.0, 0.0)) throw Error(Errc::ZeroArgument, "h_n is singular at z = 0");
  std::vector<Scaled> out(n + 1);
  const cplx e = std::exp(cplx(0.0, z.real()));
  double scale = -z.imag();
  cplx a = -kI * e / z;
  cplx b = -(e / z) * (1.0 + kI / z);
  out[0] = Scaled::from_parts(a, scale);
  if (n == 0) return out;
  out[1] = Scaled::from_parts(b, scale);
  for (int k = 1; k < n; ++k) {
    cplx c = (double(2 * k + 1) / z) * b - a;
    a = b;
    b = c;
    const double mag = std::abs(b);
    if (mag > 1e150 || (mag < 1e-150 && mag > 0.0)) {
      a /= mag;
      b /= mag;
      scale += std::log(mag);
    }
    out[k + 1] = Scaled::from_parts(b, scale);
  }
  return out;
}

Scaled sph_bessel_j(int n, cplx z, int n_max) { return sph_bessel_j_all(n, z, n_max)[n]; }
Scaled sph_hankel1(int n, cplx z, int n_max) { return sph_hankel1_all(n, z, n_max)[n]; }

Scaled sph_fn(Kind kind, int n, cplx z, int n_max) {
  return kind == Kind::J ? sph_bessel_j(n, z, n_max) : sph_hankel1(n, z, n_max);
}

Scaled sph_deriv(Kind kind, int n, cplx z, int n_max) {
  check_args(n, z, n_max);
  if (kind == Kind::J && z == cplx(0.0, 0.0)) return Scaled::from(n == 1 ? 1.0 / 3.0 : 0.0);
  if (kind == Kind::J && n >= 1 && std::abs(z) < kSeriesRadius) {
    const Scaled lead = scaled_pow(z, n - 1) *
                        Scaled::real_exp(std::log(double(n)) - log_odd_double_factorial(2 * n + 1));
    return lead * (1.0 + jrd_series(n, z));
  }
  const auto f = kind == Kind::J ? sph_bessel_j_all(n + 1, z, n_max + 1)
                                 : sph_hankel1_all(n + 1, z, n_max + 1);
  if (n == 0) return -f[1];
  return f[n - 1] - f[n] * (double(n + 1) / z);
}

Scaled acute(Kind kind, int n, cplx z, int n_max) {
  check_args(n, z, n_max);
  if (kind == Kind::J && z == cplx(0.0, 0.0)) return Scaled::from(n == 0 ? -1.0 : 0.0);
  if (kind == Kind::J && n >= 1 && std::abs(z) < kSeriesRadius) {
    const Scaled lead = scaled_pow(z, n) * Scaled::real_exp(-log_odd_double_factorial(2 * n + 1));
    return lead * eta_coeff(n, z);
  }
  const auto f = kind == Kind::J ? sph_bessel_j_all(n + 1, z, n_max + 1)
                                 : sph_hankel1_all(n + 1, z, n_max + 1);
  if (n == 0) return -(f[1] * z) - f[0];
  return f[n - 1] * z - f[n] * double(n + 2);
}

cplx grave_remainder(Kind kind, int n, cplx t, int n_max) {
  check_args(n, t, n_max);
  if (t == cplx(0.0, 0.0)) throw Error(Errc::ZeroArgument, "remainder needs t != 0");
  if (std::abs(t) < kSeriesRadius) return kind == Kind::J ? jr_series(n, t) : hr_series(n, t);
  if (kind == Kind::J) {
    const Scaled v = sph_bessel_j(n, t, n_max) *
                     Scaled::real_exp(log_odd_double_factorial(2 * n + 1)) / scaled_pow(t, n);
    return v.value() - 1.0;
  }
  const Scaled v = sph_hankel1(n, t, n_max) * kI * scaled_pow(t, n + 1) *
                   Scaled::real_exp(-log_odd_double_factorial(2 * n - 1));
  return v.value() - 1.0;
}

cplx grave_remainder_deriv(Kind kind, int n, cplx t, int n_max) {
  check_args(n, t, n_max);
  if (t == cplx(0.0, 0.0)) throw Error(Errc::ZeroArgument, "remainder needs t != 0");
  if (n < 1) throw Error(Errc::InvalidArgument, "remainder needs n >= 1");
  if (std::abs(t) < kSeriesRadius) return kind == Kind::J ? jrd_series(n, t) : hrd_series(n, t);
  if (kind == Kind::J) {
    const Scaled v = sph_deriv(Kind::J, n, t, n_max) *
                     Scaled::real_exp(log_odd_double_factorial(2 * n + 1) - std::log(double(n))) /
                     scaled_pow(t, n - 1);
    return v.value() - 1.0;
  }
  const Scaled v = sph_deriv(Kind::H, n, t, n_max) * (-kI) * scaled_pow(t, n + 2) *
                   Scaled::real_exp(-log_odd_double_factorial(2 * n - 1) - std::log(double(n + 1)));
  return v.value() - 1.0;
}

cplx eta_coeff(int n, cplx t) {
  return double(n - 1) + double(n) * grave_remainder_deriv(Kind::J, n, t) -
         grave_remainder(Kind::J, n, t);
}

cplx gamma_coeff(int n, cplx t) {
  return double(n + 2) + double(n + 1) * grave_remainder_deriv(Kind::H, n, t) +
         grave_remainder(Kind::H, n, t);
}

double wronskian_residual(int n, double t) {
  if (!(t > 0.0)) throw Error(Errc::InvalidArgument, "wronskian residual needs t > 0");
  const cplx z(t, 0.0);
  const Scaled j = sph_bessel_j(n, z), h = sph_hankel1(n, z);
  const Scaled jp = sph_deriv(Kind::J, n, z), hp = sph_deriv(Kind::H, n, z);
  const cplx w = (j * hp - jp * h).value();
  return std::abs(w * (t * t) - kI);
}

}  // namespace elasto

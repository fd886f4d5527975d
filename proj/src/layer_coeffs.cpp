#include "elasto/layer_coeffs.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "elasto/error.hpp"

namespace elasto {

namespace {

constexpr cplx kI(0.0, 1.0);
constexpr double kKernelSeriesCut = 1e-2;
constexpr int kKernelSeriesTerms = 12;

// k^p j_a(k rj) h_b(k rh)
cplx jh_product(cplx k, int p, int a, int b, double rj, double rh, int n_max) {
  const Scaled v = scaled_pow(k, p) * sph_bessel_j(a, k * rj, n_max) * sph_hankel1(b, k * rh, n_max);
  return v.value();
}

Vec3 combine(cplx a, const Vec3& u, cplx b, const Vec3& v) {
  return {a * u[0] + b * v[0], a * u[1] + b * v[1], a * u[2] + b * v[2]};
}

void check_radius(double R) {
  if (!(R > 0.0) || !std::isfinite(R)) throw Error(Errc::InvalidArgument, "radius must be > 0");
}

}  // namespace

ElasticMedium make_medium(cplx lambda, cplx mu, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw Error(Errc::InvalidArgument, "omega must be positive");
  for (cplx v : {lambda, mu})
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(Errc::NonFiniteInput, "non-finite Lame parameter");
  const cplx p_mod = lambda + 2.0 * mu;
  if (mu == cplx(0.0, 0.0) || p_mod == cplx(0.0, 0.0))
    throw Error(Errc::DegenerateModuli, "mu and lambda + 2 mu must be nonzero");
  ElasticMedium m;
  m.lambda = lambda;
  m.mu = mu;
  m.omega = omega;
  m.k_s = omega / std::sqrt(mu);
  m.k_p = omega / std::sqrt(p_mod);
  m.convex_mu = mu.real() > 0.0;
  m.convex_bulk = (3.0 * lambda + 2.0 * mu).real() > 0.0;
  return m;
}

cplx scalar_layer_eigen(int n, cplx k, double R, double x_radius, Side side) {
  check_radius(R);
  const bool ok = (side == Side::On && x_radius == R) || (side == Side::In && x_radius < R &&
                                                          x_radius >= 0.0) ||
                  (side == Side::Out && x_radius > R);
  if (!ok) throw Error(Errc::SideMismatch, "radius inconsistent with side");
  const double rj = side == Side::In ? x_radius : R;
  const double rh = side == Side::Out ? x_radius : R;
  if (rj == 0.0) {
    if (n > 0) return 0.0;
    return (-kI * k * (R * R) * sph_hankel1(0, k * rh)).value();
  }
  return -kI * (R * R) * jh_product(k, 1, n, n, rj, rh, kDefaultNmax);
}

cplx sp_difference(const ElasticMedium& med, int p, int a, int b, double rj, double rh,
                   int n_max) {
  const double rmax = std::max(rj, rh);
  const bool small = std::abs(med.k_s) * rmax < 1.0 && std::abs(med.k_p) * rmax < 1.0;
  if (p + a - b - 1 == 0 && small && rj > 0.0) {
    auto delta = [&](cplx k) {
      const cplx jr = grave_remainder(Kind::J, a, k * rj, n_max);
      const cplx hr = grave_remainder(Kind::H, b, k * rh, n_max);
      return jr + hr + jr * hr;
    };
    const double log_c = log_odd_double_factorial(2 * b - 1) - log_odd_double_factorial(2 * a + 1) +
                         a * std::log(rj) - (b + 1) * std::log(rh);
    return std::exp(log_c) / kI * (delta(med.k_s) - delta(med.k_p));
  }
  return jh_product(med.k_s, p, a, b, rj, rh, n_max) - jh_product(med.k_p, p, a, b, rj, rh, n_max);
}

LayerAction single_layer_action(const ModeIndex& mode, const ElasticMedium& med, double R,
                                double x_radius, Region region, int n_max) {
  check_radius(R);
  check_mode(mode.n, mode.m);
  const int n = mode.n;
  if (n > n_max - 1)
    throw Error(Errc::OrderTooLarge, "mode order " + std::to_string(n) + " too large");
  if ((region == Region::Exterior && x_radius < R) ||
      (region == Region::Interior && (x_radius > R || x_radius <= 0.0)))
    throw Error(Errc::SideMismatch, "radius inconsistent with region");
  const double rj = region == Region::Exterior ? R : x_radius;
  const double rh = region == Region::Exterior ? x_radius : R;
  const double w2 = med.omega * med.omega;
  const cplx ks = med.k_s, kp = med.k_p;
  // Orders are given as in the exterior form j_a(kR) h_b(k|x|); inside, the
  // roles swap to h_a(kR) j_b(k|x|).
  const bool ext = region == Region::Exterior;
  auto prod = [&](cplx k, int p, int a, int b) {
    return ext ? jh_product(k, p, a, b, rj, rh, n_max) : jh_product(k, p, b, a, rj, rh, n_max);
  };
  auto diff = [&](int p, int a, int b) {
    return ext ? sp_difference(med, p, a, b, rj, rh, n_max)
               : sp_difference(med, p, b, a, rj, rh, n_max);
  };

  LayerAction out;
  switch (mode.kind) {
    case VshKind::T:
      if (n < 1) throw Error(Errc::InvalidOrder, "T modes need n >= 1");
      out.w_T = -kI * (R * R) * prod(ks, 1, n, n) / med.mu;
      break;
    case VshKind::I: {
      if (n < 1) throw Error(Errc::InvalidOrder, "I modes need n >= 1");
      const double dn = n, den = 2.0 * n + 1.0;
      out.w_I = -(R * R) * kI *
                ((dn + 1) * prod(ks, 1, n - 1, n - 1) / med.mu +
                 dn * prod(kp, 1, n - 1, n - 1) / (med.lambda + 2.0 * med.mu)) /
                den;
      out.w_N = -dn * (R * R) * kI * diff(3, n - 1, n + 1) /
                (w2 * den);
      break;
    }
    case VshKind::N: {
      const double dn = n, den = 2.0 * n + 1.0;
      if (n >= 1)
        out.w_I = -(dn + 1) * (R * R) * kI * diff(3, n + 1, n - 1) /
                  (w2 * den);
      out.w_N = -(R * R) * kI *
                (dn * prod(ks, 1, n + 1, n + 1) / med.mu +
                 (dn + 1) * prod(kp, 1, n + 1, n + 1) / (med.lambda + 2.0 * med.mu)) /
                den;
      break;
    }
  }
  return out;
}

Vec3 single_layer_field(const ModeIndex& mode, const ElasticMedium& med, double R,
                        const RVec3& x, int n_max) {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (r == 0.0) throw Error(Errc::ZeroArgument, "field evaluation at the origin");
  const SpherePoint p{std::acos(std::clamp(x[2] / r, -1.0, 1.0)), std::atan2(x[1], x[0])};
  const Region region = r >= R ? Region::Exterior : Region::Interior;
  const LayerAction a = single_layer_action(mode, med, R, r, region, n_max);
  if (mode.kind == VshKind::T) {
    const Vec3 t = vsh(mode, p);
    return {a.w_T * t[0], a.w_T * t[1], a.w_T * t[2]};
  }
  const int n = mode.n;
  const Vec3 iv = n >= 1 ? vsh({n, mode.m, VshKind::I}, p) : Vec3{};
  const Vec3 nv = vsh({n, mode.m, VshKind::N}, p);
  return combine(a.w_I, iv, a.w_N, nv);
}

SurfaceCoeffs surface_coeffs(int n, const ElasticMedium& med, double R, int n_max) {
  if (n < 1) throw Error(Errc::InvalidOrder, "surface coefficients need n >= 1");
  const LayerAction t = single_layer_action({n, 0, VshKind::T}, med, R, R, Region::Exterior, n_max);
  const LayerAction i = single_layer_action({n, 0, VshKind::I}, med, R, R, Region::Exterior, n_max);
  const LayerAction v = single_layer_action({n, 0, VshKind::N}, med, R, R, Region::Exterior, n_max);
  return {t.w_T, i.w_I, i.w_N, v.w_I, v.w_N};
}

TractionCoeffs traction_coeffs(int n, const ElasticMedium& med, double R, int n_max) {
  if (n < 1) throw Error(Errc::InvalidOrder, "traction coefficients need n >= 1");
  check_radius(R);
  if (n > n_max - 1)
    throw Error(Errc::OrderTooLarge, "mode order " + std::to_string(n) + " too large");
  const cplx ks = med.k_s, kp = med.k_p;
  const double dn = n, den = 2.0 * n + 1.0;
  auto prod = [&](cplx k, int p, int a, int b) { return jh_product(k, p, a, b, R, R, n_max); };
  auto diff = [&](int p, int a, int b) { return sp_difference(med, p, a, b, R, R, n_max); };
  const cplx ks2 = ks * ks;

  TractionCoeffs t;
  t.b = -kI * ks * R * (sph_bessel_j(n, ks * R, n_max) * acute(Kind::H, n, ks * R, n_max)).value();
  t.b_interior = t.b - 1.0;

  // mu k_p / (lambda + 2 mu) = k_p^3 / k_s^2
  t.c1 = -2.0 * (dn - 1) * R * kI *
             ((dn + 1) * prod(ks, 1, n - 1, n - 1) + dn * prod(kp, 3, n - 1, n - 1) / ks2) / den +
         (R * R) * kI * ((dn + 1) * prod(ks, 2, n - 1, n) + dn * prod(kp, 2, n - 1, n)) / den;

  t.d1 = 2.0 * dn * (dn + 2) * R * kI * diff(3, n - 1, n + 1) / (ks2 * den) +
         dn * (R * R) * kI * (-diff(2, n - 1, n)) / den;

  const cplx c2_first = -2.0 * (dn * dn - 1) * R * kI * diff(3, n + 1, n - 1) / (ks2 * den);
  t.c2 = c2_first - (dn + 1) * (R * R) * kI * (-diff(2, n + 1, n)) / den;
  t.c2_as_printed = c2_first - (dn + 1) * (R * R) * kI * (-diff(2, n - 1, n)) / den;

  t.d2 = 2.0 * (dn + 2) * R * kI *
             (dn * prod(ks, 1, n + 1, n + 1) + (dn + 1) * prod(kp, 3, n + 1, n + 1) / ks2) / den -
         (R * R) * kI * (dn * prod(ks, 2, n + 1, n) + (dn + 1) * prod(kp, 2, n + 1, n)) / den;
  return t;
}

CMat3 kupradze_kernel(const ElasticMedium& med, const RVec3& x) {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (r == 0.0) throw Error(Errc::ZeroArgument, "kernel is singular at the origin");
  const cplx ks = med.k_s, kp = med.k_p;
  const double w2 = med.omega * med.omega;

  // g = (e^{i kp r} - e^{i ks r}) / r ; A = g'/r, B = g''
  cplx A, B;
  if (std::max(std::abs(ks), std::abs(kp)) * r < kKernelSeriesCut) {
    A = 0.0;
    B = 0.0;
    cplx ps = 1.0, pp = 1.0;
    double fact = 1.0;
    for (int m = 1; m <= kKernelSeriesTerms; ++m) {
      ps *= kI * ks;
      pp *= kI * kp;
      fact *= m;
      const cplx c = (pp - ps) / fact;
      if (m >= 2) A += c * double(m - 1) * std::pow(r, m - 3);
      if (m >= 3) B += c * double((m - 1) * (m - 2)) * std::pow(r, m - 3);
    }
  } else {
    auto d1 = [&](cplx k) { return std::exp(kI * k * r) * (kI * k / r - 1.0 / (r * r)); };
    auto d2 = [&](cplx k) {
      return std::exp(kI * k * r) * (-k * k / r - 2.0 * kI * k / (r * r) + 2.0 / (r * r * r));
    };
    A = (d1(kp) - d1(ks)) / r;
    B = d2(kp) - d2(ks);
  }
  const cplx diag = -std::exp(kI * ks * r) / (4.0 * std::numbers::pi * med.mu * r);
  const double pre = 1.0 / (4.0 * std::numbers::pi * w2);
  CMat3 G{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double xx = x[i] * x[j] / (r * r);
      const double dij = i == j ? 1.0 : 0.0;
      G[i][j] = pre * (B * xx + A * (dij - xx)) + (i == j ? diag : 0.0);
    }
  return G;
}

Vec3 kernel_quadrature_oracle(const ModeIndex& mode, const ElasticMedium& med, double R,
                              const RVec3& x, const KernelOracleOptions& opt) {
  check_radius(R);
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (std::abs(r - R) < opt.standoff * R)
    throw Error(Errc::TooCloseToSurface, "evaluation point inside the quadrature standoff band");
  const auto quad = sphere_quadrature(2 * mode.n + opt.extra_degree);
  Vec3 u{};
  for (std::size_t k = 0; k < quad.nodes.size(); ++k) {
    const RVec3 nu = unit_normal(quad.nodes[k]);
    const Vec3 dens = vsh(mode, quad.nodes[k]);
    const RVec3 d{x[0] - R * nu[0], x[1] - R * nu[1], x[2] - R * nu[2]};
    const CMat3 G = kupradze_kernel(med, d);
    const double w = quad.weights[k] * R * R;
    for (int i = 0; i < 3; ++i) u[i] += w * (G[i][0] * dens[0] + G[i][1] * dens[1] + G[i][2] * dens[2]);
  }
  return u;
}

}  // namespace elasto

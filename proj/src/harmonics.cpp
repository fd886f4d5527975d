#include "elasto/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/legendre.hpp>

#include "elasto/error.hpp"

namespace elasto {

namespace {

constexpr cplx kI(0.0, 1.0);
constexpr double kPoleOffset = 1e-3;
constexpr double kFdStep = 2e-4;

Vec3 operator*(cplx s, const RVec3& v) { return {s * v[0], s * v[1], s * v[2]}; }
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(cplx s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }
Vec3 conj3(const Vec3& v) { return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}; }
cplx dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double max_abs(const Vec3& v) { return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])}); }

cplx y_from(const LegendreTable& tab, SpherePoint pt, int n, int m) {
  const int am = std::abs(m);
  const cplx v = tab.p(n, am) * std::polar(1.0, am * pt.phi);
  if (m >= 0) return v;
  return (am % 2 ? -1.0 : 1.0) * std::conj(v);
}

Vec3 grad_from(const LegendreTable& tab, SpherePoint pt, int n, int m) {
  const int am = std::abs(m);
  const double x = std::cos(pt.theta);
  double dth = am < n ? std::sqrt(double(n - am) * (n + am + 1)) * tab.p(n, am + 1) : 0.0;
  double qv = 0.0;
  if (am > 0) {
    qv = tab.q(n, am);
    dth += am * x * qv;
  }
  const cplx e = std::polar(1.0, am * pt.phi);
  Vec3 g = (dth * e) * unit_theta(pt) + (kI * double(am) * qv * e) * unit_phi(pt);
  if (m >= 0) return g;
  return (am % 2 ? -1.0 : 1.0) * conj3(g);
}

// Y and its surface gradient (Cartesian) for every (n, m) with n <= n_top at one node.
struct NodeHarmonics {
  SpherePoint pt;
  LegendreTable tab;
  NodeHarmonics(int n_top, SpherePoint p) : pt(p), tab(n_top, p.theta) {}

  cplx y(int n, int m) const { return y_from(tab, pt, n, m); }
  Vec3 grad(int n, int m) const { return grad_from(tab, pt, n, m); }
};

Vec3 vsh_parts(const ModeIndex& mode, const Vec3& g, cplx y, const RVec3& nu) {
  switch (mode.kind) {
    case VshKind::T:
      // ∇Y ∧ ν
      return {g[1] * nu[2] - g[2] * nu[1], g[2] * nu[0] - g[0] * nu[2],
              g[0] * nu[1] - g[1] * nu[0]};
    case VshKind::I:
      return g + (double(mode.n) * y) * nu;
    case VshKind::N:
      return (double(mode.n + 1) * y) * nu - g;
  }
  return {};
}

Vec3 vsh_from(const NodeHarmonics& h, const ModeIndex& mode) {
  return vsh_parts(mode, h.grad(mode.n, mode.m), h.y(mode.n, mode.m), unit_normal(h.pt));
}

void check_vsh_mode(const ModeIndex& mode) {
  check_mode(mode.n, mode.m);
  if (mode.kind != VshKind::N && mode.n < 1)
    throw Error(Errc::InvalidOrder, "T and I modes need n >= 1");
}

int default_degree(int n) { return 2 * n + 6; }

}  // namespace

RVec3 unit_normal(SpherePoint p) {
  const double s = std::sin(p.theta);
  return {s * std::cos(p.phi), s * std::sin(p.phi), std::cos(p.theta)};
}

RVec3 unit_theta(SpherePoint p) {
  const double c = std::cos(p.theta);
  return {c * std::cos(p.phi), c * std::sin(p.phi), -std::sin(p.theta)};
}

RVec3 unit_phi(SpherePoint p) { return {-std::sin(p.phi), std::cos(p.phi), 0.0}; }

LegendreTable::LegendreTable(int n_top, double theta) : n_top_(n_top) {
  const std::size_t sz = std::size_t(n_top + 1) * (n_top + 2) / 2;
  p_.assign(sz, 0.0);
  q_.assign(sz, 0.0);
  const double x = std::cos(theta), s = std::sin(theta);
  double pmm = 0.5 / std::sqrt(std::numbers::pi);
  double qmm = 0.0;
  for (int m = 0; m <= n_top; ++m) {
    if (m > 0) {
      const double f = -std::sqrt((2.0 * m + 1.0) / (2.0 * m));
      qmm = f * pmm;
      pmm = qmm * s;
    }
    p_[idx(m, m)] = pmm;
    q_[idx(m, m)] = qmm;
    if (m + 1 > n_top) continue;
    const double c1 = std::sqrt(2.0 * m + 3.0) * x;
    p_[idx(m + 1, m)] = c1 * pmm;
    q_[idx(m + 1, m)] = c1 * qmm;
    for (int n = m + 2; n <= n_top; ++n) {
      const double a = std::sqrt((4.0 * n * n - 1.0) / (double(n) * n - double(m) * m));
      const double b = std::sqrt(((n - 1.0) * (n - 1.0) - double(m) * m) /
                                 (4.0 * (n - 1.0) * (n - 1.0) - 1.0));
      p_[idx(n, m)] = a * (x * p_[idx(n - 1, m)] - b * p_[idx(n - 2, m)]);
      q_[idx(n, m)] = a * (x * q_[idx(n - 1, m)] - b * q_[idx(n - 2, m)]);
    }
  }
}

void check_mode(int n, int m) {
  if (n < 0 || std::abs(m) > n)
    throw Error(Errc::InvalidOrder,
                "invalid harmonic index (" + std::to_string(n) + ", " + std::to_string(m) + ")");
}

cplx ylm(int n, int m, SpherePoint p) {
  check_mode(n, m);
  return NodeHarmonics(n, p).y(n, m);
}

Vec3 surf_grad_ylm(int n, int m, SpherePoint p) {
  check_mode(n, m);
  return NodeHarmonics(n, p).grad(n, m);
}

Vec3 vsh(const ModeIndex& mode, SpherePoint p) {
  check_vsh_mode(mode);
  return vsh_from(NodeHarmonics(mode.n, p), mode);
}

VshAtPoint::VshAtPoint(int n_top, SpherePoint p) : pt_(p), tab_(n_top, p.theta) {}

Vec3 VshAtPoint::operator()(const ModeIndex& mode) const {
  check_vsh_mode(mode);
  if (mode.n > tab_.n_top()) throw Error(Errc::InvalidOrder, "degree above the table size");
  return vsh_parts(mode, grad_from(tab_, pt_, mode.n, mode.m), y_from(tab_, pt_, mode.n, mode.m),
                   unit_normal(pt_));
}

double vsh_norm2(const ModeIndex& mode) {
  check_vsh_mode(mode);
  const double n = mode.n;
  switch (mode.kind) {
    case VshKind::T:
      return n * (n + 1);
    case VshKind::I:
      return n * (2 * n + 1);
    case VshKind::N:
      return (n + 1) * (2 * n + 1);
  }
  return 0.0;
}

SphereQuadrature sphere_quadrature(int degree, int n_max) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "negative quadrature degree");
  if (degree > 2 * n_max)
    throw Error(Errc::DegreeTooLarge, "quadrature degree " + std::to_string(degree) +
                                          " exceeds 2*n_max");
  const int L = (degree + 2) / 2;
  const int nphi = degree + 1;
  std::vector<double> xs, ws;
  if (L == 1) {
    xs = {0.0};
    ws = {2.0};
  } else {
    for (double x : boost::math::legendre_p_zeros<double>(L)) {
      const double dp = boost::math::legendre_p_prime(L, x);
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      xs.push_back(x);
      ws.push_back(w);
      if (x != 0.0) {
        xs.push_back(-x);
        ws.push_back(w);
      }
    }
  }
  SphereQuadrature q;
  q.degree = degree;
  const double dphi = 2.0 * std::numbers::pi / nphi;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (int k = 0; k < nphi; ++k) {
      q.nodes.push_back({std::acos(xs[i]), k * dphi});
      q.weights.push_back(ws[i] * dphi);
    }
  return q;
}

CoeffVectors coeff_vectors(int n, int m) {
  if (n < 1) throw Error(Errc::InvalidOrder, "coefficient vectors need n >= 1");
  check_mode(n, m);
  CoeffVectors cv;
  cv.n = n;
  cv.m = m;
  cv.a.assign(2 * n - 1, Vec3{});
  cv.c.assign(2 * n + 3, Vec3{});
  const auto quad = sphere_quadrature(default_degree(n));
  for (std::size_t k = 0; k < quad.nodes.size(); ++k) {
    const NodeHarmonics h(n + 1, quad.nodes[k]);
    const double w = quad.weights[k];
    const Vec3 iv = vsh_from(h, {n, m, VshKind::I});
    const Vec3 nv = vsh_from(h, {n, m, VshKind::N});
    for (int q = -(n - 1); q <= n - 1; ++q)
      cv.a[q + n - 1] = cv.a[q + n - 1] + (w * std::conj(h.y(n - 1, q))) * iv;
    for (int q = -(n + 1); q <= n + 1; ++q)
      cv.c[q + n + 1] = cv.c[q + n + 1] + (w * std::conj(h.y(n + 1, q))) * nv;
  }
  return cv;
}

double verify_prop_identities(PropSet which, int n, int m) {
  if (n < 1) throw Error(Errc::InvalidOrder, "identities need n >= 1");
  check_mode(n, m);
  const CoeffVectors cv = coeff_vectors(n, m);
  const auto quad = sphere_quadrature(2 * n + 8);
  const double dn = n;

  std::vector<int> ps;
  for (int p = std::max(0, n - 3); p <= n + 2; ++p) ps.push_back(p);

  // expected[p] as a multiple of a (p = n-1) or c (p = n+1); zero otherwise.
  auto coef_a = [&](int k) {
    switch (which) {
      case PropSet::P1:
        return k == 0 ? 1.0 / (2 * dn + 1) : (dn + 1) / (2 * dn + 1);
      case PropSet::P2:
        return (dn + 1) * (dn - 1) / (2 * dn + 1);
      case PropSet::P3:
        return -dn * (dn + 1) * (dn - 1) / (2 * dn + 1);
    }
    return 0.0;
  };
  auto coef_c = [&](int k) {
    switch (which) {
      case PropSet::P1:
        return k == 0 ? 1.0 / (2 * dn + 1) : -dn / (2 * dn + 1);
      case PropSet::P2:
        return dn * (dn + 2) / (2 * dn + 1);
      case PropSet::P3:
        return dn * (dn + 1) * (dn + 2) / (2 * dn + 1);
    }
    return 0.0;
  };
  const int n_ident = which == PropSet::P1 ? 2 : 1;

  double worst = 0.0;
  for (int p : ps) {
    for (int q = -p; q <= p; ++q) {
      Vec3 lhs[2] = {};
      for (std::size_t k = 0; k < quad.nodes.size(); ++k) {
        const SpherePoint pt = quad.nodes[k];
        const NodeHarmonics h(std::max(n, p), pt);
        const double w = quad.weights[k];
        const RVec3 nu = unit_normal(pt);
        const Vec3 gy = h.grad(n, m);
        switch (which) {
          case PropSet::P1: {
            const cplx yb = std::conj(h.y(p, q));
            lhs[0] = lhs[0] + (w * yb * h.y(n, m)) * nu;
            lhs[1] = lhs[1] + (w * yb) * gy;
            break;
          }
          case PropSet::P2: {
            lhs[0] = lhs[0] + (w * dot(conj3(h.grad(p, q)), gy)) * nu;
            break;
          }
          case PropSet::P3: {
            // components of ∇_S(e_i·∇_S Ȳ_p^q) by fourth-order centered stencils
            const double hs = std::min(kFdStep, 0.5 * (std::min(pt.theta, std::numbers::pi -
                                                                              pt.theta) -
                                                       kPoleOffset));
            auto g = [&](double th, double ph) {
              return conj3(NodeHarmonics(p, {th, ph}).grad(p, q));
            };
            auto stencil = [&](auto f) {
              return (1.0 / (12.0 * hs)) *
                     ((-1.0) * f(2 * hs) + 8.0 * f(hs) + (-8.0) * f(-hs) + f(-2 * hs));
            };
            const Vec3 dth = stencil([&](double d) { return g(pt.theta + d, pt.phi); });
            const Vec3 dph = stencil([&](double d) { return g(pt.theta, pt.phi + d); });
            const RVec3 et = unit_theta(pt), ep = unit_phi(pt);
            const double s = std::sin(pt.theta);
            Vec3 acc{};
            for (int i = 0; i < 3; ++i) {
              Vec3 grad_i{};
              for (int c = 0; c < 3; ++c) grad_i[c] = dth[i] * et[c] + dph[i] * ep[c] / s;
              acc[i] = dot(grad_i, gy);
            }
            lhs[0] = lhs[0] + cplx(w) * acc;
            break;
          }
        }
      }
      for (int k = 0; k < n_ident; ++k) {
        Vec3 expect{};
        if (p == n - 1) expect = cplx(coef_a(k)) * cv.a_at(q);
        if (p == n + 1) expect = cplx(coef_c(k)) * cv.c_at(q);
        worst = std::max(worst, max_abs(lhs[k] - expect));
      }
    }
  }

  if (which == PropSet::P1) {
    // a_{n,m}^q = (2n+3)/(2n+1) conj(c_{n+1,q}^m)
    const CoeffVectors up = coeff_vectors(n + 1, m);
    for (int q = -n; q <= n; ++q) {
      const CoeffVectors cq = coeff_vectors(n, q);
      const Vec3 rhs = cplx((2 * dn + 3) / (2 * dn + 1)) * conj3(cq.c_at(m));
      worst = std::max(worst, max_abs(up.a_at(q) - rhs));
    }
  }
  return worst;
}

}  // namespace elasto

#pragma once

#include <array>
#include <vector>

#include "elasto/specfun.hpp"

namespace elasto {

using Vec3 = std::array<cplx, 3>;
using RVec3 = std::array<double, 3>;

enum class VshKind { T, I, N };

// Kind is indexed by the degree n of the generating Y_n^m:
// T -> T_n^m, I -> I_{n-1}^m, N -> N_{n+1}^m.
struct ModeIndex {
  int n = 0;
  int m = 0;
  VshKind kind = VshKind::T;
};

struct SpherePoint {
  double theta = 0.0;
  double phi = 0.0;
};

struct SphereQuadrature {
  int degree = 0;
  std::vector<SpherePoint> nodes;
  std::vector<double> weights;
};

RVec3 unit_normal(SpherePoint p);
RVec3 unit_theta(SpherePoint p);
RVec3 unit_phi(SpherePoint p);

// Orthonormal P̄_n^m(cos θ) for 0 <= m <= n <= n_top at a single θ, plus
// Q_n^m = P̄_n^m / sin θ (m >= 1) which stays finite at the poles.
class LegendreTable {
 public:
  LegendreTable(int n_top, double theta);
  double p(int n, int m) const { return p_[idx(n, m)]; }
  double q(int n, int m) const { return q_[idx(n, m)]; }
  int n_top() const { return n_top_; }

 private:
  int idx(int n, int m) const { return n * (n + 1) / 2 + m; }
  int n_top_;
  std::vector<double> p_, q_;
};

void check_mode(int n, int m);

cplx ylm(int n, int m, SpherePoint p);
Vec3 surf_grad_ylm(int n, int m, SpherePoint p);
Vec3 vsh(const ModeIndex& mode, SpherePoint p);
// Shares one Legendre table across all modes with degree <= n_top at a point.
class VshAtPoint {
 public:
  VshAtPoint(int n_top, SpherePoint p);
  Vec3 operator()(const ModeIndex& mode) const;

 private:
  SpherePoint pt_;
  LegendreTable tab_;
};

double vsh_norm2(const ModeIndex& mode);

SphereQuadrature sphere_quadrature(int degree, int n_max = kDefaultNmax);

// a[q + n - 1] is the Y_{n-1}^q coefficient of I_{n-1}^m,
// c[q + n + 1] the Y_{n+1}^q coefficient of N_{n+1}^m.
struct CoeffVectors {
  int n = 0;
  int m = 0;
  std::vector<Vec3> a;
  std::vector<Vec3> c;
  const Vec3& a_at(int q) const { return a[q + n - 1]; }
  const Vec3& c_at(int q) const { return c[q + n + 1]; }
};

CoeffVectors coeff_vectors(int n, int m);

// P1: first-order integral identities and the a/c conjugate relation,
// P2: gradient-dot-gradient times normal, P3: second surface derivatives (finite differences).
enum class PropSet { P1, P2, P3 };
double verify_prop_identities(PropSet which, int n, int m);

}  // namespace elasto

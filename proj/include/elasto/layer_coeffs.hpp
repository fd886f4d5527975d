#pragma once

#include <array>

#include "elasto/harmonics.hpp"
#include "elasto/specfun.hpp"

namespace elasto {

struct ElasticMedium {
  cplx lambda{1.0, 0.0};
  cplx mu{1.0, 0.0};
  double omega = 1.0;
  cplx k_s{1.0, 0.0};
  cplx k_p{1.0, 0.0};
  bool convex_mu = true;      // mu > 0
  bool convex_bulk = true;    // 3 lambda + 2 mu > 0
};

// Principal square-root branch for both wavenumbers.
ElasticMedium make_medium(cplx lambda, cplx mu, double omega);

enum class Side { On, In, Out };
enum class Region { Interior, Exterior };

cplx scalar_layer_eigen(int n, cplx k, double R, double x_radius, Side side);

// S[density] at radius r as a combination of the vector harmonics of the
// density's degree n. T densities only produce w_T; I/N densities produce (w_I, w_N).
struct LayerAction {
  cplx w_T{0.0, 0.0};
  cplx w_I{0.0, 0.0};
  cplx w_N{0.0, 0.0};
};

LayerAction single_layer_action(const ModeIndex& mode, const ElasticMedium& med, double R,
                                double x_radius, Region region, int n_max = kDefaultNmax);

// Field value at a point, picks the region from |x|.
Vec3 single_layer_field(const ModeIndex& mode, const ElasticMedium& med, double R,
                        const RVec3& x, int n_max = kDefaultNmax);

struct SurfaceCoeffs {
  cplx b, c1, d1, c2, d2;
};

struct TractionCoeffs {
  cplx b, c1, d1, c2, d2;
  cplx b_interior;      // b - 1
  cplx c2_as_printed;   // second term uses j_{n-1}; kept for diagnostics only
};

SurfaceCoeffs surface_coeffs(int n, const ElasticMedium& med, double R, int n_max = kDefaultNmax);
TractionCoeffs traction_coeffs(int n, const ElasticMedium& med, double R,
                               int n_max = kDefaultNmax);

// k_s^p j_a(k_s R) h_b(k_s r) - k_p^p j_a(k_p R) h_b(k_p r), with the
// small-argument leading terms cancelled analytically when p + a - b - 1 == 0.
cplx sp_difference(const ElasticMedium& med, int p, int a, int b, double R, double r,
                   int n_max = kDefaultNmax);

using CMat3 = std::array<std::array<cplx, 3>, 3>;

CMat3 kupradze_kernel(const ElasticMedium& med, const RVec3& x);

struct KernelOracleOptions {
  int extra_degree = 64;
  double standoff = 0.2;
};

Vec3 kernel_quadrature_oracle(const ModeIndex& mode, const ElasticMedium& med, double R,
                              const RVec3& x, const KernelOracleOptions& opt = {});

}  // namespace elasto

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "elasto_np.h"

extern "C" int enp_c_header_smoke(void);

namespace {

enp_complex c(double re, double im = 0.0) { return {re, im}; }

double value_abs(const enp_scaled& s) {
  return std::hypot(s.mant.re, s.mant.im) * std::exp(s.log_scale);
}

enp_coreshell* fig3() {
  enp_coreshell* cs = nullptr;
  REQUIRE(enp_coreshell_create(0.8, 1.0, c(1), c(1), c(1, 0.01), c(-1, 1e-5), c(1), c(1), 5.0,
                               &cs) == ENP_OK);
  return cs;
}

}  // namespace

TEST_CASE("the header compiles as C") { CHECK(enp_c_header_smoke() == 0); }

TEST_CASE("status names and the last error") {
  CHECK(std::string(enp_status_name(ENP_OK)) == "Ok");
  CHECK(std::string(enp_status_name(ENP_ON_INTERFACE)) == "OnInterface");
  CHECK(std::string(enp_status_name(ENP_NULL_POINTER)) == "NullPointer");
  CHECK(std::string(enp_status_name(static_cast<enp_status>(77))) == "Unknown");
  CHECK(std::strlen(enp_version()) > 0);

  enp_scaled s{};
  CHECK(enp_sph_bessel_j(-1, c(1.0), &s) == ENP_INVALID_ARGUMENT);
  CHECK(std::strlen(enp_last_error()) > 0);
  CHECK(enp_sph_bessel_j(2, c(1.0), &s) == ENP_OK);
  CHECK(std::string(enp_last_error()).empty());
  CHECK(enp_sph_bessel_j(2, c(1.0), nullptr) == ENP_NULL_POINTER);
}

TEST_CASE("last error is per thread") {
  enp_scaled s{};
  REQUIRE(enp_sph_bessel_j(-1, c(1.0), &s) != ENP_OK);
  std::string other = "unset";
  std::thread([&] { other = enp_last_error(); }).join();
  CHECK(other.empty());
  CHECK(std::strlen(enp_last_error()) > 0);
}

TEST_CASE("special functions through the C boundary") {
  enp_scaled j{}, h{};
  REQUIRE(enp_sph_bessel_j(0, c(1.3), &j) == ENP_OK);
  CHECK(std::abs(value_abs(j) - std::sin(1.3) / 1.3) < 1e-15);
  // |h_0(t)| = 1/t
  REQUIRE(enp_sph_hankel1(0, c(2.0), &h) == ENP_OK);
  CHECK(std::abs(value_abs(h) - 0.5) < 1e-15);
  // far beyond double range, finite in scaled form
  REQUIRE(enp_sph_bessel_j(200, c(0.01), &j) == ENP_OK);
  CHECK(enp_sph_bessel_j(100000, c(1.0), &j) == ENP_ORDER_TOO_LARGE);
  CHECK(j.log_scale < -1000.0);
  double w = 1.0;
  REQUIRE(enp_wronskian_residual(40, 3.0, &w) == ENP_OK);
  CHECK(w < 1e-12);
}

TEST_CASE("N-P eigensystem") {
  enp_np_result r{};
  REQUIRE(enp_np_eigensystem(3, c(2.0), c(1.0), 0.5, 1.0, &r) == ENP_OK);
  CHECK(r.n == 3);
  CHECK(r.residual < 1e-11);
  CHECK(enp_np_eigensystem(0, c(2.0), c(1.0), 0.5, 1.0, &r) != ENP_OK);
}

TEST_CASE("core-free handle") {
  enp_corefree* cf = nullptr;
  REQUIRE(enp_corefree_create(1.0, c(1), c(1), c(1, 0.01), c(-1.87988, 1e-6), 5.0, &cf) == ENP_OK);
  double q = 0.0;
  REQUIRE(enp_corefree_resonance_quantity(cf, 5, &q) == ENP_OK);
  CHECK(q > 0.0);

  std::size_t n = 0;
  REQUIRE(enp_corefree_im_sweep(cf, 5, 1e-6, 1.0, 10, nullptr, nullptr, 0, &n) == ENP_OK);
  CHECK(n == 61);
  std::vector<double> im(n), qq(n);
  CHECK(enp_corefree_im_sweep(cf, 5, 1e-6, 1.0, 10, im.data(), qq.data(), n - 1, &n) != ENP_OK);
  REQUIRE(enp_corefree_im_sweep(cf, 5, 1e-6, 1.0, 10, im.data(), qq.data(), n, &n) == ENP_OK);
  CHECK(im.front() == doctest::Approx(1e-6));
  CHECK(im.back() == doctest::Approx(1.0));

  double re = 0.0;
  REQUIRE(enp_corefree_tune_re_mu(cf, 5, -3.0, -1.0, &re) == ENP_OK);
  CHECK(std::abs(re + 1.87988) < 0.01);

  CHECK(enp_corefree_set_mu_hat(cf, c(-1.0, -0.5)) != ENP_OK);  // Im mu_hat < 0
  REQUIRE(enp_corefree_set_mu_hat(cf, c(-1.3, 0.2)) == ENP_OK);
  double e = -1.0;
  REQUIRE(enp_corefree_mode_energy(cf, 3, c(1.0), &e) == ENP_OK);
  CHECK(e >= 0.0);
  enp_corefree_destroy(cf);
  enp_corefree_destroy(nullptr);
}

TEST_CASE("core-shell handles, tuning and solution lifetime") {
  enp_coreshell* cs = fig3();
  double rho = 0, rs = 0, br = 0;
  REQUIRE(enp_coreshell_radii(cs, &rho, &rs, &br) == ENP_OK);
  CHECK(rho == doctest::Approx(0.8));
  CHECK(rs == doctest::Approx(1.1180339887));
  CHECK(br == doctest::Approx(1.5625));

  enp_tune_p2_result t{};
  REQUIRE(enp_coreshell_tune_p2(cs, 50, -0.5, 0.5, &t) == ENP_OK);
  CHECK(t.d_tuned < t.d_untuned);
  CHECK(t.rho_2n0 == doctest::Approx(2.037e-10).epsilon(1e-3));
  CHECK(enp_coreshell_tune_p2(cs, 10, -0.5, 0.5, &t) == ENP_ORDER_TOO_SMALL);
  REQUIRE(enp_coreshell_apply_p2(cs, 50, t.p2) == ENP_OK);
  enp_complex mh{};
  REQUIRE(enp_coreshell_mu_hat(cs, &mh) == ENP_OK);
  CHECK(mh.re == doctest::Approx(-1.0 + t.p2));

  enp_complex q{};
  CHECK(enp_coreshell_q2(cs, 50, 0, &q) == ENP_INVALID_ARGUMENT);
  CHECK(enp_coreshell_q2(cs, 50, -1, &q) == ENP_OK);

  enp_complex k{};
  REQUIRE(enp_coreshell_exterior_k(cs, &k) == ENP_OK);
  enp_source* inside = nullptr;
  CHECK(enp_source_point(0.9, k, 1, 10, 1.0, &inside) == ENP_SOURCE_INSIDE_SHELL);
  CHECK(inside == nullptr);

  enp_source* src = nullptr;
  REQUIRE(enp_source_point(1.05, k, 1, 90, 1.0, &src) == ENP_OK);
  std::size_t n = 0;
  REQUIRE(enp_source_size(src, &n) == ENP_OK);
  CHECK(n == 90);

  enp_solution* sol = nullptr;
  REQUIRE(enp_coreshell_solve(cs, src, 1e6, &sol) == ENP_OK);
  // the solution owns copies
  enp_source_destroy(src);
  enp_coreshell_destroy(cs);

  double e = 0.0;
  int resonant = 0;
  REQUIRE(enp_solution_energy(sol, &e, &resonant) == ENP_OK);
  CHECK(e > 1e6);
  CHECK(resonant == 1);

  enp_mode_info m{};
  REQUIRE(enp_solution_mode(sol, 50, 0, &m) == ENP_OK);
  CHECK(m.residual < 1e-10);
  CHECK(enp_solution_mode(sol, 50, 3, &m) == ENP_MODE_MISMATCH);

  const double on[3] = {0.0, 0.0, 1.0};
  enp_field f{};
  CHECK(enp_solution_field(sol, on, &f) == ENP_ON_INTERFACE);
  REQUIRE(enp_solution_field_in(sol, ENP_REGION_SHELL, on, &f) == ENP_OK);
  CHECK(f.region == ENP_REGION_SHELL);
  CHECK(enp_solution_field_in(sol, 7, on, &f) == ENP_INVALID_ARGUMENT);

  double umax = 0.0;
  REQUIRE(enp_solution_max_scattered(sol, 1.6, 50, &umax) == ENP_OK);
  CHECK(std::isfinite(umax));
  CHECK(umax > 0.0);
  enp_solution_destroy(sol);
}

TEST_CASE("hand-built sources and threads") {
  enp_source* s = nullptr;
  REQUIRE(enp_source_create(&s) == ENP_OK);
  CHECK(enp_source_set(s, 2, 3, c(1.0)) == ENP_INVALID_ORDER);
  REQUIRE(enp_source_set(s, 2, 1, c(1.0)) == ENP_OK);
  enp_coreshell* cs = fig3();
  REQUIRE(enp_coreshell_set_mu_hat(cs, c(-1.3, 0.2)) == ENP_OK);
  enp_solution* sol = nullptr;
  REQUIRE(enp_coreshell_solve(cs, s, 1e6, &sol) == ENP_OK);
  int resonant = 1;
  REQUIRE(enp_solution_energy(sol, nullptr, &resonant) == ENP_OK);
  CHECK(resonant == 0);
  enp_solution_destroy(sol);
  enp_coreshell_destroy(cs);
  enp_source_destroy(s);

  const unsigned before = enp_get_threads();
  REQUIRE(enp_set_threads(2) == ENP_OK);
  CHECK(enp_get_threads() == 2);
  REQUIRE(enp_set_threads(before) == ENP_OK);
}

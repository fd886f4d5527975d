#include <doctest.h>

#include <cmath>
#include <numbers>

#include "elasto/error.hpp"
#include "elasto/specfun.hpp"
#include "oracles/bessel_series.hpp"
#include "oracles/fd.hpp"

using namespace elasto;

namespace {

constexpr cplx I(0.0, 1.0);

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

cplx to_c(oracle::lcplx v) { return {double(v.real()), double(v.imag())}; }

struct Frozen {
  int n;
  cplx z, j, h, jr, hr, jrd, hrd;
};

// 40-digit reference values (mpmath, via Bessel functions of half-integer order).
const Frozen kFrozen[] = {
    {7, {2, 3}, {0.0044096781066820691, 0.0011213305705671077},
     {-3.4917805686399288, -1.628760886896997},
     {0.094775398366397337, -0.39635194499974219}, {-0.26491301891894784, 0.35040475439880992},
     {0.10514822188344958, -0.52099190718908055}, {-0.18775147897519967, 0.29064939844838254}},
    {3, {0.7, -0.2}, {0.0024468972912154747, -0.0026185502993409563},
     {49.398275816020327, -26.131377218809764},
     {-0.024843076339436069, 0.01523976345992605}, {0.046084627899427373, -0.030318735358129333},
     {-0.041300361249107105, 0.025190665241878954}, {0.022455724677017742, -0.013890829613481446}},
    {40, {5, 1}, {4.9643110208616048e-35, 2.6677546368111225e-33},
     {-9.0005310940989793e+29, 1.5978096803867607e+29},
     {-0.13636936096832052, -0.052267717746218361}, {0.1619817315138448, 0.073935076829443434},
     {-0.14278860673642984, -0.054507975902733181}, {0.15357368517505537, 0.069769339085101386}},
    {120, {30, 0.5}, {-9.1894481045503604e-61, 2.3953001592203128e-60},
     {-5.1647104218148807e+55, 2.0741896460643052e+55},
     {-0.84550051615080396, -0.0096983332939832338}, {5.656192619159365, 0.42518690726449021},
     {-0.85035218995556124, -0.009558409082551951}, {5.4461604914475669, 0.40460576780913032}},
    {5, {0, -3.6467}, {0, -0.10180861367495434}, {0, 2.8504810856733695e-5},
     {0.64100094879846516, 0}, {-0.99992906075249268, 0},
     {0.95626199862109907, 0}, {0.11713383725576196, 0}},
    {10, {1e-5, 0}, {7.2730919455416179e-61, 0}, {7.2730919455416179e-61, -6.5472907500172238e+63},
     {-2.1739130434760873e-12, 0}, {2.6315789473722915e-12, 1.1108551954167645e-124},
     {-2.60869565217087e-12, 0}, {2.153110047849353e-12, -1.0098683594693468e-124}},
};

}  // namespace

TEST_CASE("closed forms at low order") {
  CHECK(std::abs(sph_bessel_j(0, 1.0).value() - 0.8414709848078965) < 1e-15);
  CHECK(sph_bessel_j(3, 0.0).value() == cplx(0.0, 0.0));
  CHECK(sph_bessel_j(0, 0.0).value() == cplx(1.0, 0.0));
  CHECK(std::abs(sph_hankel1(0, 1.0).value() - cplx(0.8414709848078965, -0.5403023058681398)) <
        1e-15);
  CHECK(std::abs(sph_hankel1(0, I).value() - cplx(-std::exp(-1.0), 0.0)) < 1e-15);
  CHECK(std::abs(sph_deriv(Kind::J, 0, std::numbers::pi).value() + 1.0 / std::numbers::pi) < 1e-15);
  CHECK(std::abs(acute(Kind::J, 0, std::numbers::pi).value() + 1.0) < 1e-14);
  CHECK(acute(Kind::J, 1, 0.0).value() == cplx(0.0, 0.0));
}

TEST_CASE("power series oracle") {
  const cplx z(2.0, 3.0);
  const cplx ref = to_c(oracle::sph_j(7, {2.0L, 3.0L}));
  CHECK(rel(sph_bessel_j(7, z).value(), ref) < 1e-12);
  for (int n = 0; n <= 12; ++n) {
    for (cplx w : {cplx(0.3, 0.1), cplx(1.5, -0.7), cplx(3.0, 1.0), cplx(0.8, 2.5)}) {
      const oracle::lcplx lw(w.real(), w.imag());
      CHECK(rel(sph_bessel_j(n, w).value(), to_c(oracle::sph_j(n, lw))) < 1e-12);
      CHECK(rel(sph_hankel1(n, w).value(), to_c(oracle::sph_h(n, lw))) < 1e-12);
    }
  }
}

TEST_CASE("frozen high-precision values") {
  for (const auto& f : kFrozen) {
    CAPTURE(f.n);
    CAPTURE(f.z);
    CHECK(rel(sph_bessel_j(f.n, f.z).value(), f.j) < 1e-12);
    // h_5 at -3.6467i sits next to a zero; upward recurrence loses ~4 digits there
    const double htol = f.n == 5 ? 1e-10 : 1e-12;
    CHECK(rel(sph_hankel1(f.n, f.z).value(), f.h) < htol);
    CHECK(std::abs(grave_remainder(Kind::J, f.n, f.z) - f.jr) < 1e-12 * (1 + std::abs(f.jr)));
    CHECK(std::abs(grave_remainder(Kind::H, f.n, f.z) - f.hr) < 1e-12 * (1 + std::abs(f.hr)));
    CHECK(std::abs(grave_remainder_deriv(Kind::J, f.n, f.z) - f.jrd) <
          1e-12 * (1 + std::abs(f.jrd)));
    CHECK(std::abs(grave_remainder_deriv(Kind::H, f.n, f.z) - f.hrd) <
          1e-12 * (1 + std::abs(f.hrd)));
  }
}

TEST_CASE("remainders are small near the origin and O(1/n)") {
  CHECK(std::abs(grave_remainder(Kind::J, 40, 1.0)) < 2.0 / 40);
  CHECK(std::abs(grave_remainder(Kind::H, 40, 1.0)) < 2.0 / 40);
  CHECK(std::abs(grave_remainder(Kind::J, 10, 0.01)) < 1e-4);
  for (int n = 0; n <= 10; ++n) {
    const double t = 1e-3;
    const Scaled j = sph_bessel_j(n, t);
    const double v = std::abs(
        (j * Scaled::real_exp(log_odd_double_factorial(2 * n + 1)) / scaled_pow(t, n)).value() -
        1.0);
    CHECK(v < 1e-4);
  }
}

TEST_CASE("series and direct remainders agree across the switch radius") {
  for (int n : {1, 2, 5, 17}) {
    for (double ph : {0.0, 0.7, -1.3, 2.9}) {
      const cplx a = std::polar(0.999, ph), b = std::polar(1.001, ph);
      for (Kind k : {Kind::J, Kind::H}) {
        CHECK(std::abs(grave_remainder(k, n, a) - grave_remainder(k, n, b)) < 1e-2);
        CHECK(std::abs(grave_remainder_deriv(k, n, a) - grave_remainder_deriv(k, n, b)) < 1e-2);
      }
    }
  }
}

TEST_CASE("eta and gamma reproduce the acute functions") {
  for (int n : {1, 3, 9}) {
    for (cplx t : {cplx(0.4, 0.1), cplx(2.0, -0.5), cplx(6.0, 0.3)}) {
      const cplx ja = acute(Kind::J, n, t).value();
      const cplx ja2 =
          (scaled_pow(t, n) * Scaled::real_exp(-log_odd_double_factorial(2 * n + 1))).value() *
          eta_coeff(n, t);
      CHECK(rel(ja2, ja) < 1e-11);
      const cplx ha = acute(Kind::H, n, t).value();
      const cplx ha2 = -(Scaled::real_exp(log_odd_double_factorial(2 * n - 1)) /
                         (scaled_pow(t, n + 1) * I))
                            .value() *
                       gamma_coeff(n, t);
      CHECK(rel(ha2, ha) < 1e-11);
    }
  }
}

TEST_CASE("derivatives against finite differences") {
  auto h0 = [](cplx z) { return sph_hankel1(0, z).value(); };
  CHECK(rel(sph_deriv(Kind::H, 0, 1.0).value(), oracle::fd2(h0, 1.0, 1e-6)) < 1e-8);
  auto j4 = [](cplx z) { return sph_bessel_j(4, z).value(); };
  CHECK(rel(sph_deriv(Kind::J, 4, 2.5).value(), oracle::fd4(j4, 2.5, 1e-3)) < 1e-9);
  auto h3 = [](cplx z) { return sph_hankel1(3, z).value(); };
  const cplx z(2.0, 0.5);
  CHECK(rel(sph_deriv(Kind::H, 3, z).value(), oracle::fd4(h3, z, 1e-3)) < 1e-9);
  const cplx direct = z * sph_deriv(Kind::H, 3, z).value() - sph_hankel1(3, z).value();
  CHECK(rel(acute(Kind::H, 3, z).value(), direct) < 1e-12);
  CHECK(std::abs(sph_deriv(Kind::J, 1, 0.0).value() - 1.0 / 3.0) < 1e-16);
}

TEST_CASE("wronskian") {
  CHECK(wronskian_residual(5, 3.0) < 1e-12);
  CHECK(wronskian_residual(0, 1.0) < 1e-14);
  CHECK(wronskian_residual(80, 50.0) < 1e-10);
  const cplx z(4.0, 1.0);
  const cplx w = (sph_bessel_j(5, z) * sph_deriv(Kind::H, 5, z) -
                  sph_deriv(Kind::J, 5, z) * sph_hankel1(5, z))
                     .value();
  CHECK(std::abs(w * z * z - I) < 1e-12);
  double worst = 0.0;
  for (int n = 0; n <= 80; n += 4)
    for (double t = 0.5; t <= 100.0; t *= 1.37) worst = std::max(worst, wronskian_residual(n, t));
  CHECK(worst < 1e-10);
}

TEST_CASE("recurrence closure and conjugation") {
  double worst = 0.0;
  for (double r : {0.5, 2.0, 9.0, 27.0, 50.0}) {
    for (double ph : {0.0, 0.4, -1.1}) {
      const cplx z = std::polar(r, ph);
      if (std::abs(z.imag()) > 30) continue;
      const auto j = sph_bessel_j_all(61, z);
      const auto h = sph_hankel1_all(61, z);
      for (int n = 1; n <= 60; ++n) {
        for (const auto* f : {&j, &h}) {
          const Scaled lhs = (*f)[n - 1] + (*f)[n + 1];
          const Scaled rhs = (*f)[n] * (double(2 * n + 1) / z);
          const double scale = std::max({(*f)[n - 1].log_abs(), (*f)[n + 1].log_abs(),
                                         rhs.log_abs()});
          const double err = std::abs((lhs - rhs).value() * std::exp(-scale));
          worst = std::max(worst, err);
        }
      }
      for (int n : {0, 3, 20}) {
        const cplx a = sph_bessel_j(n, std::conj(z)).value();
        const cplx b = std::conj(sph_bessel_j(n, z).value());
        CHECK(std::abs(a - b) <= 1e-14 * std::abs(b));
      }
    }
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("mantissa normalization and large orders") {
  const Scaled j = sph_bessel_j(100, 5.0);
  CHECK(std::abs(std::abs(j.mant) - 1.0) < 1e-15);
  const Scaled h = sph_hankel1(100, 5.0);
  const cplx prod = (j * h).value();
  CHECK(std::isfinite(prod.real()));
  // j_n h_n -> 1/(i (2n+1) t) for n >> t
  CHECK(rel(prod * I * 201.0 * 5.0, 1.0) < 0.01);
  CHECK(j.log_abs() < -250.0);
}

TEST_CASE("error signalling") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc{};
  };
  CHECK(code_of([] { sph_bessel_j(257, 1.0); }) == Errc::OrderTooLarge);
  CHECK(code_of([] { sph_hankel1(2, 0.0); }) == Errc::ZeroArgument);
  CHECK(code_of([] { sph_bessel_j(2, cplx(NAN, 0)); }) == Errc::NonFiniteInput);
  CHECK(code_of([] { grave_remainder(Kind::J, 3, 0.0); }) == Errc::ZeroArgument);
  CHECK(sph_bessel_j(300, 1.0, 400).log_abs() < 0.0);
}

#include "elasto/calr.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "elasto/error.hpp"
#include "elasto/linalg.hpp"
#include "elasto/parallel.hpp"

namespace elasto {

namespace {

constexpr cplx kI(0.0, 1.0);

void check_n(int n) {
  if (n < 1) throw Error(Errc::InvalidOrder, "T modes need n >= 1");
}

void check_finite(cplx v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(Errc::NonFiniteInput, std::string("non-finite ") + what);
}

Scaled conj(const Scaled& s) { return Scaled::from_parts(std::conj(s.mant), s.log_scale); }

// j, h and their acute forms t f'(t) - f(t) at t = k r.
struct Radial4 {
  Scaled j, h, ja, ha;
};

Radial4 radial4(int n, cplx k, double r) {
  const cplx t = k * r;
  return {sph_bessel_j(n, t), sph_hankel1(n, t), acute(Kind::J, n, t), acute(Kind::H, n, t)};
}

// Subscripts: 0 exterior, 1 core, 2 shell; i/e at r_i/r_e.
struct Table {
  Radial4 e0, i1, i2, e2;
};

Table table(int n, const CoreShellConfig& c) {
  return {radial4(n, c.exterior.k_s, c.r_e), radial4(n, c.core.k_s, c.r_i),
          radial4(n, c.shell.k_s, c.r_i), radial4(n, c.shell.k_s, c.r_e)};
}

double rel_dev(const Scaled& a, const Scaled& b) {
  if (b.is_zero()) return a.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
  const Scaled diff = a - b;
  if (diff.is_zero()) return 0.0;
  return std::exp(std::min(diff.log_abs() - b.log_abs(), 700.0));
}

CMatrix to_matrix(const CMat4& A) {
  CMatrix m(4, std::vector<cplx>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = A[r][c];
  return m;
}

cplx d_normalization(int n, const CoreShellConfig& c) {
  const double s = std::pow(2.0 * n + 1.0, 4) / (double(n) * n * c.r_i * c.r_e);
  return s * c.exterior.mu * c.core.mu * c.shell.mu * c.shell.mu;
}

// d as an analytic function of mu_hat, no admissibility checks.
cplx d_at(int n, const CoreShellConfig& cfg, cplx mu_hat) {
  CoreShellConfig c = cfg;
  c.shell = make_medium(cfg.shell.lambda, mu_hat, cfg.omega);
  return denominator_d(n, c);
}

bool refine_root(int n, const CoreShellConfig& cfg, cplx start, cplx& root) {
  cplx x0 = start, x1 = start + cplx(1e-6, 0.0);
  cplx f0 = d_at(n, cfg, x0), f1 = d_at(n, cfg, x1);
  for (int it = 0; it < 60; ++it) {
    if (f1 == f0) break;
    const cplx x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = d_at(n, cfg, x1);
    if (std::abs(x1 - x0) < 1e-15 * std::max(1.0, std::abs(x1))) {
      root = x1;
      return std::abs(x1 - start) < 0.05;
    }
  }
  return false;
}

struct ShellRadial {
  Scaled disp;   // A(r)
  Scaled trac;   // mu_hat (A' - A/r)
};

ShellRadial shell_radial(int n, const CoreShellConfig& c, const Table& t, const CoreShellMode& m,
                         double r) {
  const cplx kh = c.shell.k_s;
  const Radial4 at = radial4(n, kh, r);
  const Scaled w2 = m.phi[1] * t.i2.j * (c.r_i * c.r_i);
  const Scaled w3 = m.phi[2] * t.e2.h * (c.r_e * c.r_e);
  const cplx pre = -kI * kh;
  return {(w2 * at.h + w3 * at.j) * (pre / c.shell.mu), (w2 * at.ha + w3 * at.ja) * (pre / r)};
}

}  // namespace

double CoreShellConfig::r_star() const { return std::sqrt(r_e * r_e * r_e / r_i); }
double CoreShellConfig::bound_radius() const { return r_e * r_e * r_e / (r_i * r_i); }

CoreShellConfig make_coreshell(double r_i, double r_e, cplx lambda_core, cplx mu_core,
                               cplx lambda_hat, cplx mu_hat, cplx lambda, cplx mu, double omega) {
  if (!(r_i > 0.0) || !(r_e > r_i) || !std::isfinite(r_e))
    throw Error(Errc::InvalidArgument, "radii must satisfy 0 < r_i < r_e");
  CoreShellConfig c;
  c.r_i = r_i;
  c.r_e = r_e;
  c.omega = omega;
  c.exterior = make_medium(lambda, mu, omega);
  if (lambda.imag() != 0.0 || mu.imag() != 0.0 || !c.exterior.convex_mu || !c.exterior.convex_bulk)
    throw Error(Errc::InvalidArgument, "exterior medium must be real and strongly convex");
  if (mu_hat.imag() < 0.0 || lambda_hat.imag() < 0.0 || mu_core.imag() < 0.0 ||
      lambda_core.imag() < 0.0)
    throw Error(Errc::InvalidArgument, "core and shell moduli need nonnegative imaginary parts");
  c.core = make_medium(lambda_core, mu_core, omega);
  c.shell = make_medium(lambda_hat, mu_hat, omega);
  return c;
}

CoreShellConfig with_shell_mu(const CoreShellConfig& cfg, cplx mu_hat) {
  return make_coreshell(cfg.r_i, cfg.r_e, cfg.core.lambda, cfg.core.mu, cfg.shell.lambda, mu_hat,
                        cfg.exterior.lambda, cfg.exterior.mu, cfg.omega);
}

ModeSystem4 assemble_coreshell(int n, const CoreShellConfig& c, cplx f, Transcription tr) {
  check_n(n);
  check_finite(f, "source coefficient");
  const Table t = table(n, c);
  const double ri = c.r_i, re = c.r_e;
  const cplx k = c.exterior.k_s, kc = c.core.k_s, kh = c.shell.k_s;
  const cplx mu = c.exterior.mu, muc = c.core.mu, muh = c.shell.mu;
  auto v = [](const Scaled& a, const Scaled& b) { return (a * b).value(); };
  ModeSystem4 m;
  auto& A = m.A;
  A[0][0] = -kI * kc * ri * ri * v(t.i1.j, t.i1.h) / muc;
  A[1][0] = -kI * kc * ri * v(t.i1.ja, t.i1.h);
  A[2][1] = -kI * kh * ri * ri * v(t.i2.j, t.e2.h) / muh;
  A[2][2] = -kI * kh * re * re * v(t.e2.j, t.e2.h) / muh;
  A[2][3] = kI * k * re * re * v(t.e0.j, t.e0.h) / mu;
  A[3][2] = -kI * kh * re * v(t.e2.ja, t.e2.h);
  A[3][3] = kI * k * re * v(t.e0.j, t.e0.ha);
  if (tr == Transcription::Corrected) {
    A[0][1] = kI * kh * ri * ri * v(t.i2.j, t.i2.h) / muh;
    A[0][2] = kI * kh * re * re * v(t.i2.j, t.e2.h) / muh;
    A[1][1] = kI * kh * ri * v(t.i2.j, t.i2.ha);
    A[1][2] = kI * kh * (re * re / ri) * v(t.i2.ja, t.e2.h);
    A[3][1] = -kI * kh * (ri * ri / re) * v(t.i2.j, t.e2.ha);
  } else {
    A[0][1] = -kI * kh * ri * ri * v(t.i1.j, t.i2.h) / muh;
    A[0][2] = -kI * kh * re * re * v(t.i1.j, t.e2.h) / muh;
    A[1][1] = -kI * kh * ri * v(t.i2.j, t.i2.ha);
    A[1][2] = -kI * kh * re * v(t.i2.ja, t.e2.h);
    A[3][1] = -kI * kh * ri * v(t.i2.j, t.e2.ha);
  }
  m.rhs = {0.0, 0.0, f * t.e0.j.value(), f * mu * t.e0.ja.value() / re};
  return m;
}

cplx denominator_d(int n, const CoreShellConfig& cfg) {
  const auto m = assemble_coreshell(n, cfg, 0.0);
  return determinant(to_matrix(m.A)) * d_normalization(n, cfg);
}

Scaled denominator_d_printed(int n, const CoreShellConfig& c) {
  check_n(n);
  const Table t = table(n, c);
  const double ri = c.r_i, re = c.r_e;
  const cplx k = c.exterior.k_s, kc = c.core.k_s, kh = c.shell.k_s;
  const cplx mu = c.exterior.mu, muc = c.core.mu, muh = c.shell.mu;
  const auto& [j0e, h0e, J0e, H0e] = t.e0;
  const auto& [j1i, h1i, J1i, H1i] = t.i1;
  const auto& [j2i, h2i, J2i, H2i] = t.i2;
  const auto& [j2e, h2e, J2e, H2e] = t.e2;
  const cplx den = mu * muc * muh * muh;
  const Scaled first =
      H0e * (mu * ri) *
      (j1i * (H2i * j2e * re + J2i * h2e * ri) * muh - J1i * (h2e * j2i - h2i * j2e) * (muc * re)) *
      (k * kc * kh * kh * ri * ri * re * re / den);
  const Scaled second =
      h1i * h2e * j0e * j2i * h0e * (muh * re) *
      (J1i * (H2e * j2i * re - J2e * h2i * ri) * muc + j1i * (H2i * J2e - H2e * J2i) * (muh * ri)) *
      (1.0 / den);
  return first * second;
}

std::array<Scaled, 4> printed_phi(int n, const CoreShellConfig& c) {
  check_n(n);
  const Table t = table(n, c);
  const double ri = c.r_i, re = c.r_e;
  const cplx k = c.exterior.k_s, kc = c.core.k_s, kh = c.shell.k_s;
  const cplx mu = c.exterior.mu, muc = c.core.mu, muh = c.shell.mu;
  const auto& [j0e, h0e, J0e, H0e] = t.e0;
  const auto& [j1i, h1i, J1i, H1i] = t.i1;
  const auto& [j2i, h2i, J2i, H2i] = t.i2;
  const auto& [j2e, h2e, J2e, H2e] = t.e2;
  const Scaled w0 = H0e * j0e - J0e * h0e;
  std::array<Scaled, 4> p;
  p[0] = h2e * j0e * j2i * w0 * (H2i * j2i * re - J2i * h2i * ri) *
         (-kI * k * kh * kh * ri * re * re / muh);
  p[1] = h1i * h2e * j0e * w0 * (J2i * j1i * (muh * ri) - J1i * j2i * (muc * re)) *
         (kI * k * kc * kh * ri * re * re / (muc * muh));
  p[2] = h1i * j2i * j0e * w0 * (J1i * h2i * muc - H2i * j1i * muh) *
         (kI * k * kc * kh * ri * ri * ri * re / (muc * muh));
  const cplx den = muc * muh * muh;
  const Scaled first =
      J0e * (mu * ri) *
      (j1i * (H2i * j2e * re - J2i * h2e * ri) * muh + J1i * (h2e * j2i - h2i * j2e) * (muc * re)) *
      (kI * kc * kh * kh * ri * ri / den);
  const Scaled second =
      h1i * h2e * j2i * j0e * (muh * re) *
      (J1i * (J2e * h2i * ri - H2e * j2i * re) * muc + j1i * (H2e * J2i - H2i * J2e) * (muh * ri)) *
      (1.0 / den);
  p[3] = first * second;
  const Scaled d = denominator_d_printed(n, c);
  for (auto& x : p) x = x / d;
  return p;
}

CoreShellMode solve_coreshell_mode_scaled(int n, const CoreShellConfig& cfg, const Scaled& f) {
  // rhs normalized by f j_n(k_s r_e); the scale is restored on the solution
  const auto m = assemble_coreshell(n, cfg, 1.0);
  CoreShellMode out;
  out.n = n;
  out.d = determinant(to_matrix(m.A)) * d_normalization(n, cfg);
  if (f.is_zero()) return out;
  const Scaled fj = f * sph_bessel_j(n, cfg.exterior.k_s * cfg.r_e);
  const DenseSolve s = solve_dense(to_matrix(m.A), {0.0, 0.0, 1.0, m.rhs[3] / m.rhs[2]});
  for (int i = 0; i < 4; ++i) out.phi[i] = fj * s.x[i];
  out.residual = s.residual;
  out.rcond = s.rcond;
  const auto pr = printed_phi(n, cfg);
  for (int i = 0; i < 4; ++i) out.shadow_deviation[i] = rel_dev(pr[i] * f, out.phi[i]);
  return out;
}

CoreShellMode solve_coreshell_mode(int n, const CoreShellConfig& cfg, cplx f) {
  check_finite(f, "source coefficient");
  return solve_coreshell_mode_scaled(n, cfg, Scaled::from(f));
}

EtaGamma eta_gamma(int n, cplx k, double r) {
  check_n(n);
  return {eta_coeff(n, k * r), gamma_coeff(n, k * r)};
}

cplx q2(int n, const CoreShellConfig& c, JoinSign sign) {
  if (n < 30) throw Error(Errc::OrderTooSmall, "q2 is an asymptotic quantity; n >= 30 required");
  const double ri = c.r_i, re = c.r_e;
  const cplx k = c.exterior.k_s, kc = c.core.k_s, kh = c.shell.k_s;
  const cplx mu = c.exterior.mu, muc = c.core.mu, muh = c.shell.mu;
  const double nn = double(n) * n;
  const double r2n = std::pow(c.rho(), 2 * n);
  auto gj = [&](cplx kk, double r) { return 1.0 + grave_remainder(Kind::J, n, kk * r); };
  auto gh = [&](cplx kk, double r) { return 1.0 + grave_remainder(Kind::H, n, kk * r); };
  const cplx eta1i = eta_coeff(n, kc * ri), eta2i = eta_coeff(n, kh * ri),
             eta2e = eta_coeff(n, kh * re);
  const cplx gam0e = gamma_coeff(n, k * re), gam2i = gamma_coeff(n, kh * ri),
             gam2e = gamma_coeff(n, kh * re);
  const cplx j1i = gj(kc, ri), j2i = gj(kh, ri), j2e = gj(kh, re);
  const cplx h0e = gh(k, re), h2i = gh(kh, ri), h2e = gh(kh, re);

  const cplx t1 = (muc + muh) * (mu + muh) * nn * re * re;
  const cplx t2 = (muh * ri - muc * re) * (mu * ri - muh * re) * nn * r2n;
  const cplx t3 = muh * re * h0e *
                  (muc * re * eta1i * (gam2e * r2n * j2i + h2i * eta2e) -
                   muh * j1i * (ri * gam2e * eta2i * r2n - re * gam2i * eta2e));
  const cplx last = muh * j1i * (ri * ri * r2n * h2e * eta2i + re * re * j2e * gam2i);
  const cplx t4 = mu * gam0e *
                  (muc * re * eta1i * (re * h2i * j2e - ri * r2n * h2e * j2i) +
                   (sign == JoinSign::Plus ? last : -last));
  return t1 + t2 - t3 - t4;
}

CoreShellConfig tuned_coreshell(int n0, const CoreShellConfig& cfg_template, double p2) {
  const double mu = cfg_template.exterior.mu.real();
  return with_shell_mu(cfg_template, cplx(-mu + p2, std::pow(cfg_template.rho(), n0)));
}

TuneP2Result tune_p2(int n0, const CoreShellConfig& cfg_template, double lo, double hi,
                     int cells) {
  if (n0 < 30) throw Error(Errc::OrderTooSmall, "tuning needs n0 >= 30");
  if (cfg_template.core.mu != cfg_template.exterior.mu)
    throw Error(Errc::InvalidArgument, "tuning requires mu_core == mu");
  if (!(hi > lo) || cells < 4) throw Error(Errc::InvalidArgument, "bad search interval");
  const double mu = cfg_template.exterior.mu.real();
  const double im = std::pow(cfg_template.rho(), n0);
  auto f = [&](double p) { return std::abs(denominator_d(n0, tuned_coreshell(n0, cfg_template, p))); };

  std::vector<double> v(cells + 1);
  const double step = (hi - lo) / cells;
  parallel_for(v.size(), [&](std::size_t i) { v[i] = f(lo + step * double(i)); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[best]) best = i;
  if (best == 0 || best == v.size() - 1)
    throw Error(Errc::TuningFailed, "no interior minimum of |d| in the search interval");
  std::vector<double> sorted = v;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());

  TuneP2Result r;
  r.d_scale = sorted[sorted.size() / 2];
  r.rho_2n0 = im * im;
  std::uintmax_t iters = 200;
  r.p2 = boost::math::tools::brent_find_minima(f, lo + step * double(best - 1),
                                               lo + step * double(best + 1), 52, iters)
             .first;
  cplx root;
  if (refine_root(n0, cfg_template, cplx(-mu + r.p2, im), root)) {
    const double p_root = root.real() + mu;
    if (p_root > lo && p_root < hi && f(p_root) <= f(r.p2)) r.p2 = p_root;
  }
  r.d_tuned = f(r.p2);
  r.d_untuned = f(0.0);
  r.suppression = r.d_untuned / r.d_tuned;
  r.target_met = r.d_tuned <= 10.0 * r.rho_2n0 * r.d_scale;
  return r;
}

SourceSpectrum point_source_spectrum(double r0, cplx k_s, int n_min, int n_max, double r_e) {
  if (!(r0 > r_e)) throw Error(Errc::SourceInsideShell, "source radius must exceed r_e");
  if (n_min < 1 || n_max < n_min) throw Error(Errc::InvalidOrder, "bad mode range");
  check_finite(k_s, "wavenumber");
  if (k_s == cplx(0.0, 0.0)) throw Error(Errc::ZeroArgument, "zero wavenumber");
  SourceSpectrum s;
  for (int n = n_min; n <= n_max; ++n)
    s.set_scaled(n, 0,
                 Scaled::real_exp(log_odd_double_factorial(2 * n + 1)) /
                     scaled_pow(k_s * r0, n));
  return s;
}

CriticalRadius critical_radius(const CoreShellConfig& cfg) {
  return {cfg.r_star(), cfg.bound_radius()};
}

double coreshell_mode_energy(int n, const CoreShellConfig& c, const CoreShellMode& m) {
  if (m.phi[1].is_zero() && m.phi[2].is_zero()) return 0.0;
  const Table t = table(n, c);
  auto form = [&](double r) {
    const ShellRadial s = shell_radial(n, c, t, m, r);
    if (s.disp.is_zero() || s.trac.is_zero()) return 0.0;
    const Scaled p = s.trac * conj(s.disp);
    return r * r * std::exp(p.log_scale) * p.mant.imag();
  };
  return double(n) * (n + 1) * (form(c.r_e) - form(c.r_i));
}

CoreShellSolution solve_coreshell(const CoreShellConfig& cfg, const SourceSpectrum& src,
                                  double threshold) {
  std::vector<std::pair<std::pair<int, int>, Scaled>> items(src.entries.begin(), src.entries.end());
  std::vector<CoreShellMode> modes(items.size());
  std::vector<double> energy(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    modes[i] = solve_coreshell_mode_scaled(items[i].first.first, cfg, items[i].second);
    energy[i] = coreshell_mode_energy(items[i].first.first, cfg, modes[i]);
  });
  CoreShellSolution sol;
  for (std::size_t i = 0; i < items.size(); ++i) {
    sol.modes[items[i].first] = modes[i];
    sol.energy += energy[i];
  }
  sol.classification =
      sol.energy > threshold ? Classification::Resonant : Classification::NonResonant;
  return sol;
}

EnergyReport dissipation_energy_coreshell(const CoreShellConfig& cfg, const SourceSpectrum& src,
                                          const CoreShellSolution& sol, double threshold) {
  if (src.entries.size() != sol.modes.size())
    throw Error(Errc::ModeMismatch, "solution and source have different modes");
  EnergyReport r;
  for (const auto& [key, f] : src.entries) {
    const auto it = sol.modes.find(key);
    if (it == sol.modes.end() || it->second.n != key.first)
      throw Error(Errc::ModeMismatch, "mode (" + std::to_string(key.first) + ", " +
                                          std::to_string(key.second) + ") missing from solution");
    r.energy += coreshell_mode_energy(key.first, cfg, it->second);
  }
  r.classification = r.energy > threshold ? Classification::Resonant : Classification::NonResonant;
  return r;
}

namespace {

struct ModeAmp {
  ModeIndex mode;
  cplx scattered, incident;
};

// Radial amplitudes of every solved mode at radius r > 0 in the given region.
std::vector<ModeAmp> mode_amplitudes(FieldRegion region, double r, const CoreShellConfig& c,
                                     const CoreShellSolution& sol, const SourceSpectrum& src) {
  const cplx k = c.exterior.k_s, kc = c.core.k_s;
  std::vector<ModeAmp> out;
  out.reserve(sol.modes.size());
  for (const auto& [key, mode] : sol.modes) {
    const int n = key.first;
    const Table t = table(n, c);
    Scaled a_sc, a_inc;
    switch (region) {
      case FieldRegion::Core:
        a_sc = mode.phi[0] * t.i1.h * sph_bessel_j(n, kc * r) *
               (-kI * kc * c.r_i * c.r_i / c.core.mu);
        break;
      case FieldRegion::Shell:
        a_sc = shell_radial(n, c, t, mode, r).disp;
        break;
      case FieldRegion::Exterior: {
        a_sc = mode.phi[3] * t.e0.j * sph_hankel1(n, k * r) *
               (-kI * k * c.r_e * c.r_e / c.exterior.mu);
        const auto f = src.entries.find(key);
        if (f != src.entries.end()) a_inc = f->second * sph_bessel_j(n, k * r);
        break;
      }
    }
    out.push_back({{n, key.second, VshKind::T}, a_sc.value(), a_inc.value()});
  }
  return out;
}

FieldValue sum_modes(FieldRegion region, const std::vector<ModeAmp>& amps, SpherePoint pt) {
  FieldValue out;
  out.region = region;
  int top = 1;
  for (const auto& a : amps) top = std::max(top, a.mode.n);
  const VshAtPoint y(top, pt);
  for (const auto& a : amps) {
    const Vec3 v = y(a.mode);
    for (int i = 0; i < 3; ++i) {
      out.scattered[i] += a.scattered * v[i];
      out.incident[i] += a.incident * v[i];
    }
  }
  for (int i = 0; i < 3; ++i) out.total[i] = out.scattered[i] + out.incident[i];
  return out;
}

SpherePoint direction(const RVec3& x, double r) {
  return {std::acos(std::clamp(x[2] / r, -1.0, 1.0)), std::atan2(x[1], x[0])};
}

}  // namespace

FieldValue field_eval_in(FieldRegion region, const RVec3& x, const CoreShellConfig& c,
                         const CoreShellSolution& sol, const SourceSpectrum& src) {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (!std::isfinite(r)) throw Error(Errc::NonFiniteInput, "non-finite point");
  if (r == 0.0) {  // every T mode vanishes at the origin
    FieldValue out;
    out.region = region;
    return out;
  }
  return sum_modes(region, mode_amplitudes(region, r, c, sol, src), direction(x, r));
}

FieldValue field_eval(const RVec3& x, const CoreShellConfig& c, const CoreShellSolution& sol,
                      const SourceSpectrum& src) {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  for (double ri : {c.r_i, c.r_e})
    if (std::abs(r - ri) <= 1e-12 * ri)
      throw Error(Errc::OnInterface, "point lies on the interface r = " + std::to_string(ri) +
                                         "; evaluate one-sided limits with field_eval_in");
  const FieldRegion region = r < c.r_i   ? FieldRegion::Core
                             : r < c.r_e ? FieldRegion::Shell
                                         : FieldRegion::Exterior;
  return field_eval_in(region, x, c, sol, src);
}

double max_scattered_on_sphere(double radius, int points, const CoreShellConfig& c,
                               const CoreShellSolution& sol, const SourceSpectrum& src) {
  if (!(radius > c.r_e) || points < 1)
    throw Error(Errc::InvalidArgument, "sphere must lie outside r_e and have points");
  const auto amps = mode_amplitudes(FieldRegion::Exterior, radius, c, sol, src);
  std::vector<double> mag(points);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  parallel_for(mag.size(), [&](std::size_t i) {
    const double z = 1.0 - (2.0 * double(i) + 1.0) / points;
    const double ph = std::remainder(golden * double(i), 2.0 * std::numbers::pi);
    const FieldValue v = sum_modes(FieldRegion::Exterior, amps, {std::acos(z), ph});
    double a = 0.0;
    for (const cplx& e : v.scattered) a += std::norm(e);
    mag[i] = std::sqrt(a);
  });
  return *std::max_element(mag.begin(), mag.end());
}

}  // namespace elasto

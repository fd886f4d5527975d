#include "elasto/resonance.hpp"

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <functional>
#include <string>

#include "elasto/error.hpp"
#include "elasto/linalg.hpp"
#include "elasto/parallel.hpp"

namespace elasto {

namespace {

constexpr cplx kI(0.0, 1.0);
constexpr double kTuneImag = 1e-8;

void check_finite(cplx v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(Errc::NonFiniteInput, std::string("non-finite ") + what);
}

void check_n(int n) {
  if (n < 1) throw Error(Errc::InvalidOrder, "T modes need n >= 1");
}

// Same-argument radial products at t = kR.
struct Radial {
  cplx jh;       // j_n h_n
  cplx j_hac;    // j_n h'_n acute
  cplx jac_h;    // j'_n acute h_n
};

Radial radial(int n, cplx k, double R) {
  const cplx t = k * R;
  const Scaled j = sph_bessel_j(n, t), h = sph_hankel1(n, t);
  return {(j * h).value(), (j * acute(Kind::H, n, t)).value(), (acute(Kind::J, n, t) * h).value()};
}

double minimize(const std::function<double(double)>& f, double lo, double hi) {
  std::uintmax_t iters = 200;
  return boost::math::tools::brent_find_minima(f, lo, hi, 52, iters).first;
}

// Coarse scan then Brent on the bracketing cell. Throws NoBracket when the
// coarse minimum sits on an endpoint.
double scan_minimize(const std::function<double(double)>& f, double lo, double hi, int cells) {
  std::vector<double> v(cells + 1);
  const double step = (hi - lo) / cells;
  parallel_for(v.size(), [&](std::size_t i) { v[i] = f(lo + step * double(i)); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[best]) best = i;
  if (best == 0 || best == v.size() - 1)
    throw Error(Errc::NoBracket, "no interior minimum in [" + std::to_string(lo) + ", " +
                                     std::to_string(hi) + "]");
  return minimize(f, lo + step * double(best - 1), lo + step * double(best + 1));
}

// psi_tilde as an analytic function of mu_hat, no admissibility checks (roots
// can sit slightly below the real axis).
cplx psi_tilde_at(int n, const CoreFreeConfig& cfg, cplx mu_hat) {
  CoreFreeConfig c = cfg;
  c.shell = make_medium(cfg.shell.lambda, mu_hat, cfg.shell.omega);
  return psi_tilde(n, c);
}

// Secant iteration for the nearby complex root of psi_tilde in mu_hat.
// Returns false when it does not settle within the iteration budget.
bool refine_root(int n, const CoreFreeConfig& cfg, cplx start, cplx& root) {
  cplx x0 = start, x1 = start + cplx(1e-6, 0.0);
  cplx f0 = psi_tilde_at(n, cfg, x0), f1 = psi_tilde_at(n, cfg, x1);
  for (int it = 0; it < 60; ++it) {
    if (f1 == f0) break;
    const cplx x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = psi_tilde_at(n, cfg, x1);
    if (std::abs(x1 - x0) < 1e-15 * std::max(1.0, std::abs(x1))) {
      root = x1;
      return std::abs(x1 - start) < 0.05;
    }
  }
  return false;
}

}  // namespace

CoreFreeConfig make_corefree(double R, cplx lambda, cplx mu, cplx lambda_hat, cplx mu_hat,
                             double omega) {
  if (!(R > 0.0) || !std::isfinite(R)) throw Error(Errc::InvalidArgument, "R must be > 0");
  CoreFreeConfig c;
  c.R = R;
  c.exterior = make_medium(lambda, mu, omega);
  if (lambda.imag() != 0.0 || mu.imag() != 0.0 || !c.exterior.convex_mu || !c.exterior.convex_bulk)
    throw Error(Errc::InvalidArgument, "exterior medium must be real and strongly convex");
  if (mu_hat.imag() < 0.0 || lambda_hat.imag() < 0.0)
    throw Error(Errc::InvalidArgument, "shell moduli need nonnegative imaginary parts");
  c.shell = make_medium(lambda_hat, mu_hat, omega);
  return c;
}

CoreFreeConfig with_mu_hat(const CoreFreeConfig& cfg, cplx mu_hat) {
  return make_corefree(cfg.R, cfg.exterior.lambda, cfg.exterior.mu, cfg.shell.lambda, mu_hat,
                       cfg.exterior.omega);
}

ModeSystem2 corefree_system(int n, const CoreFreeConfig& cfg, cplx f, Transcription t) {
  check_n(n);
  const double R = cfg.R;
  const cplx k = cfg.exterior.k_s, kh = cfg.shell.k_s;
  const cplx mu = cfg.exterior.mu, muh = cfg.shell.mu;
  const Radial e = radial(n, k, R), s = radial(n, kh, R);
  const cplx jR = sph_bessel_j(n, k * R).value();
  ModeSystem2 m;
  m.rhs = {f * jR, f * mu * acute(Kind::J, n, k * R).value() / R};
  if (t == Transcription::Corrected) {
    m.A[0] = {-kI * kh * R * R * s.jh / muh, kI * k * R * R * e.jh / mu};
    m.A[1] = {-kI * kh * R * s.jac_h, kI * k * R * e.j_hac};
  } else {
    m.A[0] = {-kI * kh * R * R * s.jh / mu, kI * k * R * R * e.jh / mu};
    m.A[1] = {-kI * kh * R * R * s.jac_h, -1.0 + kI * k * R * R * e.jac_h};
  }
  return m;
}

cplx psi_tilde(int n, const CoreFreeConfig& cfg) {
  const auto m = corefree_system(n, cfg, 0.0);
  return m.A[0][1] * m.A[1][0] - m.A[0][0] * m.A[1][1];
}

cplx psi_tilde_printed(int n, const CoreFreeConfig& cfg) {
  check_n(n);
  const double R = cfg.R;
  const cplx k = cfg.exterior.k_s, kh = cfg.shell.k_s;
  const cplx mu = cfg.exterior.mu, muh = cfg.shell.mu;
  const cplx jh = sph_bessel_j(n, kh * R).value(), jph = sph_deriv(Kind::J, n, kh * R).value();
  const Scaled h = sph_hankel1(n, k * R), hp = sph_deriv(Kind::H, n, k * R);
  const Scaled tail = sph_bessel_j(n, k * R) * sph_hankel1(n, kh * R);
  const Scaled bracket = ((mu - muh) * jh + kh * muh * R * jph) * h - (k * mu * R * jh) * hp;
  return (bracket * tail).value() * k * kh * R * R * R;
}

CoreFreeMode solve_corefree_mode_scaled(int n, const CoreFreeConfig& cfg, const Scaled& f) {
  // solve with the rhs normalized by f j_n(k_s R), restore the scale afterwards
  const auto m = corefree_system(n, cfg, 1.0);
  const Scaled fj = f * sph_bessel_j(n, cfg.exterior.k_s * cfg.R);
  CoreFreeMode out;
  out.n = n;
  out.psi_tilde = m.A[0][1] * m.A[1][0] - m.A[0][0] * m.A[1][1];
  if (f.is_zero()) return out;
  const cplx ratio = m.rhs[1] / m.rhs[0];
  const DenseSolve s = solve_dense({{m.A[0][0], m.A[0][1]}, {m.A[1][0], m.A[1][1]}}, {1.0, ratio});
  out.psi1 = fj * s.x[0];
  out.psi2 = fj * s.x[1];
  out.residual = s.residual;
  out.rcond = s.rcond;
  return out;
}

CoreFreeMode solve_corefree_mode(int n, const CoreFreeConfig& cfg, cplx f) {
  check_finite(f, "source coefficient");
  return solve_corefree_mode_scaled(n, cfg, Scaled::from(f));
}

double resonance_quantity(int n0, const CoreFreeConfig& cfg) {
  return cfg.shell.mu.imag() / std::norm(psi_tilde(n0, cfg));
}

double corefree_mode_energy(int n, const CoreFreeConfig& cfg, const Scaled& psi1) {
  if (psi1.is_zero()) return 0.0;
  const double R = cfg.R;
  const cplx kh = cfg.shell.k_s;
  const Radial s = radial(n, kh, R);
  const cplx disp = -kI * kh * R * R * s.jh / cfg.shell.mu;  // u = psi1 disp T on r = R
  const cplx trac = -kI * kh * R * s.jac_h;                   // inner traction factor
  const double form = (trac * std::conj(disp)).imag();
  const double a2 = std::exp(2.0 * psi1.log_abs());
  return double(n) * (n + 1) * R * R * a2 * form;
}

CoreFreeSolution solve_corefree(const CoreFreeConfig& cfg, const SourceSpectrum& src) {
  std::vector<std::pair<std::pair<int, int>, Scaled>> items(src.entries.begin(), src.entries.end());
  std::vector<CoreFreeMode> modes(items.size());
  std::vector<double> energy(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    modes[i] = solve_corefree_mode_scaled(items[i].first.first, cfg, items[i].second);
    energy[i] = corefree_mode_energy(items[i].first.first, cfg, modes[i].psi1);
  });
  CoreFreeSolution sol;
  for (std::size_t i = 0; i < items.size(); ++i) {
    sol.modes[items[i].first] = modes[i];
    sol.energy += energy[i];
  }
  return sol;
}

double dissipation_energy(const CoreFreeConfig& cfg, const SourceSpectrum& src,
                          const CoreFreeSolution& sol) {
  if (src.entries.size() != sol.modes.size())
    throw Error(Errc::ModeMismatch, "solution and source have different modes");
  double e = 0.0;
  for (const auto& [key, f] : src.entries) {
    const auto it = sol.modes.find(key);
    if (it == sol.modes.end() || it->second.n != key.first)
      throw Error(Errc::ModeMismatch, "mode (" + std::to_string(key.first) + ", " +
                                          std::to_string(key.second) + ") missing from solution");
    e += corefree_mode_energy(key.first, cfg, it->second.psi1);
  }
  return e;
}

std::vector<ImSweepPoint> im_mu_sweep(int n0, const CoreFreeConfig& cfg, double lo, double hi,
                                      int per_decade) {
  if (!(lo > 0.0 && hi > lo) || per_decade < 1)
    throw Error(Errc::InvalidArgument, "sweep needs 0 < lo < hi and per_decade >= 1");
  const double decades = std::log10(hi / lo);
  const int count = int(std::lround(decades * per_decade)) + 1;
  std::vector<ImSweepPoint> out(count);
  const double re = cfg.shell.mu.real();
  parallel_for(out.size(), [&](std::size_t i) {
    const double im = count == 1 ? lo : lo * std::pow(hi / lo, double(i) / (count - 1));
    out[i] = {im, resonance_quantity(n0, with_mu_hat(cfg, cplx(re, im)))};
  });
  return out;
}

double tune_re_mu(int n0, const CoreFreeConfig& cfg_template, double lo, double hi) {
  if (!(hi > lo)) throw Error(Errc::InvalidArgument, "empty search interval");
  auto f = [&](double re) {
    return std::abs(psi_tilde(n0, with_mu_hat(cfg_template, cplx(re, kTuneImag))));
  };
  const double coarse = scan_minimize(f, lo, hi, 400);
  cplx root;
  if (refine_root(n0, cfg_template, cplx(coarse, kTuneImag), root) && root.real() > lo &&
      root.real() < hi)
    return root.real();
  return coarse;
}

TuneP1Result tune_p1(int n0, const CoreFreeConfig& cfg_template, double M, double lo, double hi) {
  if (!(M > 0.0)) throw Error(Errc::InvalidArgument, "M must be positive");
  const double mu = cfg_template.exterior.mu.real();
  auto at = [&](double p) { return with_mu_hat(cfg_template, cplx(-mu + p, 1.0 / M)); };
  auto f = [&](double p) { return std::abs(psi_tilde(n0, at(p))); };
  TuneP1Result r;
  r.p = scan_minimize(f, lo, hi, 2000);
  // the resonance is ~1/M wide, below the x-resolution of the line search
  cplx root;
  if (refine_root(n0, cfg_template, cplx(-mu + r.p, 1.0 / M), root)) {
    const double p_root = root.real() + mu;
    if (p_root > lo && p_root < hi && f(p_root) <= f(r.p)) r.p = p_root;
  }
  r.psi_tilde_abs = f(r.p);
  r.quantity = resonance_quantity(n0, at(r.p));
  if (!(r.quantity > M))
    throw Error(Errc::ResonanceNotAchieved,
                "resonance quantity " + std::to_string(r.quantity) + " does not exceed M");
  return r;
}

}  // namespace elasto

// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned here.
// Usage: acceptance [criterion ...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "elasto/calr.hpp"
#include "elasto/layer_coeffs.hpp"
#include "elasto/np_spectrum.hpp"
#include "elasto/resonance.hpp"
#include "elasto/validate.hpp"
#include "oracles/elastic_fd.hpp"

using namespace elasto;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Detail {
 public:
  __attribute__((format(printf, 2, 3))) void add(const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    if (!s_.empty()) s_ += "; ";
    s_ += buf;
  }
  std::string str() const { return s_; }

 private:
  std::string s_;
};

RVec3 point(double r, double th, double ph) {
  return {r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph), r * std::cos(th)};
}

CoreFreeConfig fig12(cplx mu_hat, cplx lambda_hat = {1.0, 0.01}) {
  return make_corefree(1.0, 1.0, 1.0, lambda_hat, mu_hat, 5.0);
}

CoreShellConfig fig3(cplx mu_hat = {-1.0, 1e-5}, cplx lambda_hat = {1.0, 0.01}) {
  return make_coreshell(0.8, 1.0, 1.0, 1.0, lambda_hat, mu_hat, 1.0, 1.0, 5.0);
}

// ---- 1 ----
Outcome c1() {
  const auto w = validate_wronskian(80, 0.5, 100.0);
  const auto r = validate_recurrence(60);
  Detail d;
  d.add("Wronskian worst %.2e (< 1e-10, n<=80, t in [0.5,100])", w.worst);
  d.add("recurrence worst %.2e (< 1e-11)", r.worst);
  return {w.worst < 1e-10 && r.worst < 1e-11, d.str()};
}

// ---- 2 ----
Outcome c2() {
  const auto s = validate_identities(8);
  Detail d;
  d.add("surface identities worst %.2e (< 1e-9, n<=8, all m, %zu checks)", s.worst, s.checks);
  return {s.worst < 1e-9, d.str()};
}

// ---- 3 ----
Outcome c3() {
  const auto s = validate_layer_oracle(6);
  Detail d;
  d.add("analytic vs kernel quadrature worst rel %.2e (< 1e-7, n<=6, T/I/N, omega 0.5/2/5, |x| 0.5R/2R, %zu cases)",
        s.worst, s.checks);
  return {s.worst < 1e-7, d.str()};
}

// ---- 4 ----
// Observed order of the second-order Lame stencil over two h-halvings.
std::pair<double, double> fd_orders(const oracle::Field& u, const RVec3& x, cplx lambda, cplx mu,
                                    double omega, double h) {
  double e[3];
  for (int i = 0; i < 3; ++i)
    e[i] = oracle::norm(oracle::lame_residual(u, x, lambda, mu, omega, h / std::pow(2.0, i)));
  return {std::log2(e[0] / e[1]), std::log2(e[1] / e[2])};
}

Outcome c4() {
  double lo = 1e9, hi = -1e9;
  int cases = 0;
  auto note = [&](std::pair<double, double> p) {
    lo = std::min({lo, p.first, p.second});
    hi = std::max({hi, p.first, p.second});
    ++cases;
  };
  // single-layer fields, interior and exterior
  for (double w : {0.5, 2.0, 5.0}) {
    const auto med = make_medium(1.4, 0.9, w);
    for (VshKind kind : {VshKind::T, VshKind::I, VshKind::N})
      for (double r : {0.6, 1.8}) {
        const ModeIndex mode{3, 1, kind};
        oracle::Field u = [&](const oracle::P3& x) { return single_layer_field(mode, med, 1.0, x); };
        note(fd_orders(u, point(r, 1.0, 0.5), med.lambda, med.mu, w, 4e-2));
      }
  }
  // core-shell transmission fields in each region
  const auto cfg = fig3({-1.3, 0.2});
  SourceSpectrum src;
  src.set(2, 1, 1.0);
  src.set(4, 0, cplx(0.2, 0.1));
  const auto sol = solve_coreshell(cfg, src);
  for (auto [region, r, med] : {std::tuple{FieldRegion::Core, 0.5, cfg.core},
                                {FieldRegion::Shell, 0.9, cfg.shell},
                                {FieldRegion::Exterior, 1.6, cfg.exterior}}) {
    oracle::Field u = [&, region = region](const oracle::P3& x) {
      return field_eval_in(region, x, cfg, sol, src).total;
    };
    note(fd_orders(u, point(r, 1.1, 0.4), med.lambda, med.mu, cfg.omega, 2e-2));
  }
  Detail d;
  d.add("observed orders in [%.3f, %.3f] over %d fields x 2 halvings (need [1.7, 2.3])", lo, hi,
        cases);
  return {lo >= 1.7 && hi <= 2.3, d.str()};
}

// ---- 5 ----
Outcome c5() {
  const auto np = validate_np(40, 0);
  Detail d;
  bool ok = true;
  for (const auto& s : np) {
    d.add("%s %.2e (< %.0e)", s.name.c_str(), s.worst, s.tolerance);
    ok = ok && s.worst < s.tolerance;
  }
  double max_imag = 0.0;
  bool shrink = true;
  for (int n : {1, 2, 5}) {
    const auto q = quasistatic_probe(n, 1.0, 1.0, 1.0, {1e-2, 1e-3, 1e-4, 1e-5});
    shrink = shrink && q.increments_shrink;
    max_imag = std::max(max_imag, q.max_imag_last);
  }
  d.add("quasi-static increments shrink: %s, max |Im lambda| at omega 1e-5: %.2e (< 1e-6)",
        shrink ? "yes" : "no", max_imag);
  return {ok && shrink && max_imag < 1e-6, d.str()};
}

// ---- 6 ----
Outcome c6() {
  const auto sweep = im_mu_sweep(5, fig12({-1.87988, 1e-6}), 1e-6, 1.0, 60);
  std::vector<double> q;
  for (const auto& p : sweep) q.push_back(p.quantity);
  const auto peak = static_cast<std::size_t>(std::max_element(q.begin(), q.end()) - q.begin());
  const bool interior = peak > 0 && peak + 1 < q.size();
  // strict unimodality: nondecreasing up to the peak, nonincreasing after
  std::size_t turn = q.size();
  for (std::size_t i = peak; i + 1 < q.size(); ++i)
    if (q[i + 1] > q[i]) {
      turn = i;
      break;
    }
  bool rising = true;
  for (std::size_t i = 0; i < peak; ++i) rising = rising && q[i + 1] >= q[i];
  const bool unimodal = interior && rising && turn == q.size();
  const double ratio = q[peak] / q.back();
  const double re = tune_re_mu(5, fig12({-1.87988, 1e-6}), -3.0, -1.0);

  Detail d;
  d.add("peak at Im mu_hat = %.3e, peak/end = %.4g (>= 100)", sweep[peak].im_mu_hat, ratio);
  if (unimodal)
    d.add("unimodal over %zu points", q.size());
  else if (turn < q.size())
    d.add("not unimodal: minimum at Im mu_hat = %.3g, then rises x%.3g to Im mu_hat = 1",
          sweep[turn].im_mu_hat, q.back() / q[turn]);
  else
    d.add("not unimodal");
  d.add("tune_re_mu = %.7f (target -1.87988 +- 0.01)", re);
  return {unimodal && ratio >= 100.0 && std::abs(re + 1.87988) <= 0.01, d.str()};
}

// ---- 7 ----
Outcome c7() {
  const auto r = tune_p1(100, fig12({-1.0, 1e-10}), 1e10);
  Detail d;
  d.add("p* = %.10f (target 0.02779005 +- 1e-3)", r.p);
  d.add("resonance quantity %.3e (> 1e10)", r.quantity);
  return {std::abs(r.p - 0.02779005) <= 1e-3 && r.quantity > 1e10, d.str()};
}

// ---- 8 ----
Outcome c8() {
  const auto t = tune_p2(50, fig3());
  const auto cr = critical_radius(fig3());
  const double rho = std::pow(0.8, 100);
  Detail d;
  d.add("rho^2n0 = %.4e (2.037e-10 to 1e-3 rel)", rho);
  d.add("p2* = %.7f, |d| %.3e -> %.3e, suppression %.4g (>= 1e6)", t.p2, t.d_untuned, t.d_tuned,
        t.suppression);
  d.add("r_* = %.6f (1.11803 +- 1e-5), bound_radius = %.6f (1.5625 +- 1e-12)", cr.r_star,
        cr.bound_radius);
  const bool ok = std::abs(rho / 2.037e-10 - 1.0) < 1e-3 && t.suppression >= 1e6 &&
                  std::abs(cr.r_star - 1.11803) <= 1e-5 && std::abs(cr.bound_radius - 1.5625) <= 1e-12;
  return {ok, d.str()};
}

// ---- 9 ----
struct Rung {
  int n0;
  double energy;
  double max_u;
};

Rung calr_rung(int n0, double r0, bool field) {
  const auto base = fig3();
  const auto t = tune_p2(n0, base, -0.5, -1e-3);
  const auto cfg = tuned_coreshell(n0, base, t.p2);
  const auto src = point_source_spectrum(r0, cfg.exterior.k_s, 1, n0 + 40, cfg.r_e);
  const auto sol = solve_coreshell(cfg, src);
  const double u = field ? max_scattered_on_sphere(1.6, 200, cfg, sol, src) : 0.0;
  return {n0, sol.energy, u};
}

Outcome c9() {
  std::vector<Rung> ladder{calr_rung(50, 1.05, true)};
  for (int n0 = 60; n0 <= 160 && ladder.back().energy < 1e4 * ladder.front().energy; n0 += 10)
    ladder.push_back(calr_rung(n0, 1.05, true));
  const double far = calr_rung(50, 1.3, false).energy;

  double umin = 1e300, umax = 0.0;
  for (const auto& r : ladder) {
    umin = std::min(umin, r.max_u);
    umax = std::max(umax, r.max_u);
  }
  const double span = std::log10(ladder.back().energy / ladder.front().energy);
  const double variation = (umax - umin) / umax;

  Detail d;
  d.add("r0 = 1.05: E = %.3e (>= 1e6)", ladder.front().energy);
  d.add("r0 = 1.3: E = %.3e (< 1e3)", far);
  d.add("retuned n0 = %d..%d spans %.2f decades of E (>= 4)", ladder.front().n0, ladder.back().n0,
        span);
  std::ostringstream us;
  for (const auto& r : ladder) us << (us.tellp() ? "," : "") << r.n0 << ":" << r.max_u;
  d.add("max|u_sc| at |x| = 1.6: (max - min)/max = %.1f%% (<= 10%%) [n0:value %s]", 100.0 * variation, us.str().c_str());
  const bool ok = ladder.front().energy >= 1e6 && far < 1e3 && span >= 4.0 && variation <= 0.10;
  return {ok, d.str()};
}

// ---- 10 ----
Outcome c10() {
  const std::vector<cplx> lhs = {cplx(0.5, 0.0), cplx(1.0, 0.01), cplx(3.0, 0.0)};
  bool same = true;
  int compared = 0;
  auto eq = [&](auto a, auto b) {
    same = same && a == b;
    ++compared;
  };

  // core-free
  SourceSpectrum s1;
  s1.set(5, 0, 1.0);
  s1.set(7, 2, cplx(0.0, 2.0));
  const auto cf0 = fig12({-1.88, 0.1}, lhs[0]);
  const auto base1 = solve_corefree(cf0, s1);
  const double q0 = resonance_quantity(5, cf0);
  const double re0 = tune_re_mu(5, fig12({-1.87988, 1e-6}, lhs[0]), -3.0, -1.0);
  // core-shell
  const auto src = point_source_spectrum(1.05, 5.0, 1, 90, 1.0);
  const auto cs0 = fig3({-1.0, 1e-5}, lhs[0]);
  const auto t0 = tune_p2(50, cs0);
  const auto tc0 = tuned_coreshell(50, cs0, t0.p2);
  const auto base2 = solve_coreshell(tc0, src);
  const auto f0 = field_eval(point(1.6, 0.7, 0.2), tc0, base2, src);

  for (std::size_t i = 1; i < lhs.size(); ++i) {
    const auto cf = fig12({-1.88, 0.1}, lhs[i]);
    const auto sol = solve_corefree(cf, s1);
    eq(sol.energy, base1.energy);
    for (const auto& [k, m] : sol.modes) {
      eq(m.psi1.mant, base1.modes.at(k).psi1.mant);
      eq(m.psi1.log_scale, base1.modes.at(k).psi1.log_scale);
      eq(m.psi2.mant, base1.modes.at(k).psi2.mant);
    }
    eq(resonance_quantity(5, cf), q0);
    eq(tune_re_mu(5, fig12({-1.87988, 1e-6}, lhs[i]), -3.0, -1.0), re0);

    const auto cs = fig3({-1.0, 1e-5}, lhs[i]);
    const auto t = tune_p2(50, cs);
    eq(t.p2, t0.p2);
    eq(t.d_tuned, t0.d_tuned);
    const auto tc = tuned_coreshell(50, cs, t.p2);
    eq(denominator_d(50, tc), denominator_d(50, tc0));
    eq(q2(50, tc, JoinSign::Plus), q2(50, tc0, JoinSign::Plus));
    const auto sol2 = solve_coreshell(tc, src);
    eq(sol2.energy, base2.energy);
    for (const auto& [k, m] : sol2.modes)
      for (int j = 0; j < 4; ++j) {
        eq(m.phi[j].mant, base2.modes.at(k).phi[j].mant);
        eq(m.phi[j].log_scale, base2.modes.at(k).phi[j].log_scale);
      }
    const auto f = field_eval(point(1.6, 0.7, 0.2), tc, sol2, src);
    for (int j = 0; j < 3; ++j) eq(f.scattered[j], f0.scattered[j]);
  }
  Detail d;
  d.add("%d outputs compared across lambda_hat in {0.5, 1+0.01i, 3}: %s", compared,
        same ? "bit-identical" : "DIFFER");
  return {same, d.str()};
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0 = no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "special-function suite", 5.0, c1},
      {2, "surface identity suite", 60.0, c2},
      {3, "layer-potential oracle equivalence", 120.0, c3},
      {4, "PDE residual, second-order FD convergence", 0.0, c4},
      {5, "N-P spectrum residuals and quasi-static probe", 0.0, c5},
      {6, "order-5 Im mu_hat sweep and tune_re_mu", 30.0, c6},
      {7, "tune_p1 at n0 = 100, M = 1e10", 30.0, c7},
      {8, "core-shell tune_p2 at n0 = 50, rho^2n0 and radii", 0.0, c8},
      {9, "CALR dichotomy and bounded exterior field", 120.0, c9},
      {10, "lambda_hat independence", 0.0, c10},
  };
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!pick.empty() && !pick.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s == 0.0 || s < c.limit_s;
    const bool pass = o.passed && in_time;
    failed += !pass;
    char timing[64];
    if (c.limit_s > 0.0)
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", s, c.limit_s);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", s);
    std::printf("criterion %2d %s  %s | %s | %s\n", c.id, pass ? "PASS" : "FAIL", c.title,
                o.detail.c_str(), timing);
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}

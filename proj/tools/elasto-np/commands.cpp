#include "commands.hpp"

#include <algorithm>
#include <cmath>

namespace cli {

namespace {

using C = std::complex<double>;

void expect_le(RunOutput& out, const std::string& name, double value, double bound) {
  out.assertions.push_back({name, value, bound, "<=", value <= bound});
}

void expect_ge(RunOutput& out, const std::string& name, double value, double bound) {
  out.assertions.push_back({name, value, bound, ">=", value >= bound});
}

void expect_gt(RunOutput& out, const std::string& name, double value, double bound) {
  out.assertions.push_back({name, value, bound, ">", value > bound});
}

nlohmann::ordered_json cjson(C z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// ---- np-spectrum ----

RunOutput np_spectrum(const Resolved& cfg) {
  RunOutput out;
  const C lambda = cfg.cplx("medium", "lambda"), mu = cfg.cplx("medium", "mu");
  const double omega = cfg.real("medium", "omega"), R = cfg.real("geometry", "R");
  const int n_min = cfg.integer("sweep", "n_min"), n_max = cfg.integer("sweep", "n_max");
  if (n_min < 1 || n_max < n_min) throw ConfigError("[sweep] needs 1 <= n_min <= n_max");

  out.table.header = {"n",         "re_lambda1", "im_lambda1", "re_lambda2", "im_lambda2",
                      "re_lambda3", "im_lambda3", "degenerate", "eigen_residual"};
  double worst = 0.0;
  int degenerate = 0;
  for (int n = n_min; n <= n_max; ++n) {
    enp_np_result r{};
    check(enp_np_eigensystem(n, to_enp(lambda), to_enp(mu), omega, R, &r));
    worst = std::max(worst, r.residual);
    degenerate += r.degenerate;
    out.table.add({num(n), num(r.lambda1.re), num(r.lambda1.im), num(r.lambda2.re),
                   num(r.lambda2.im), num(r.lambda3.re), num(r.lambda3.im), num(r.degenerate),
                   num(r.residual)});
  }
  out.results["orders"] = n_max - n_min + 1;
  out.results["degenerate_orders"] = degenerate;
  out.results["max_eigen_residual"] = worst;
  expect_le(out, "max eigen-residual", worst, cfg.real("tolerance", "eigen_residual"));
  return out;
}

// ---- resonance-sweep ----

Handle<enp_corefree> make_corefree(const Resolved& cfg, C mu_hat) {
  enp_corefree* p = nullptr;
  check(enp_corefree_create(cfg.real("geometry", "R"), to_enp(cfg.cplx("medium", "lambda")),
                            to_enp(cfg.cplx("medium", "mu")),
                            to_enp(cfg.cplx("inclusion", "lambda_hat")), to_enp(mu_hat),
                            cfg.real("medium", "omega"), &p));
  return Handle<enp_corefree>(p);
}

RunOutput sweep_im(const Resolved& cfg) {
  RunOutput out;
  const int n0 = cfg.integer("sweep", "n0");
  C mu_hat = cfg.cplx("inclusion", "mu_hat");
  auto cf = make_corefree(cfg, mu_hat);

  if (cfg.boolean("sweep", "tune_re") || cfg.has("expect", "re_mu_hat")) {
    double re = 0.0;
    check(enp_corefree_tune_re_mu(cf.get(), n0, cfg.real("sweep", "re_lo"),
                                  cfg.real("sweep", "re_hi"), &re));
    out.results["tuned_re_mu_hat"] = re;
    if (cfg.boolean("sweep", "tune_re")) {
      mu_hat = {re, mu_hat.imag()};
      check(enp_corefree_set_mu_hat(cf.get(), to_enp(mu_hat)));
    }
    if (cfg.has("expect", "re_mu_hat"))
      expect_le(out, "|tuned Re mu_hat - expected|",
                std::abs(re - cfg.real("expect", "re_mu_hat")), cfg.real("expect", "re_mu_tol"));
  }
  out.results["re_mu_hat"] = mu_hat.real();

  const double lo = cfg.real("sweep", "im_lo"), hi = cfg.real("sweep", "im_hi");
  const int per_decade = cfg.integer("sweep", "per_decade");
  std::size_t count = 0;
  check(enp_corefree_im_sweep(cf.get(), n0, lo, hi, per_decade, nullptr, nullptr, 0, &count));
  std::vector<double> im(count), q(count);
  check(enp_corefree_im_sweep(cf.get(), n0, lo, hi, per_decade, im.data(), q.data(), count,
                              &count));

  out.table.header = {"im_mu_hat", "resonance_quantity", "log10_quantity"};
  for (std::size_t i = 0; i < count; ++i)
    out.table.add({num(im[i]), num(q[i]), num(std::log10(q[i]))});
  if (count == 0) throw RunError("empty sweep");

  const auto peak = static_cast<std::size_t>(std::max_element(q.begin(), q.end()) - q.begin());
  bool unimodal = peak > 0 && peak + 1 < count;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const bool rising = i < peak;
    if (rising ? q[i + 1] < q[i] : q[i + 1] > q[i]) unimodal = false;
  }
  const double ratio = q[peak] / q.back();
  out.results["peak_im_mu_hat"] = im[peak];
  out.results["peak_quantity"] = q[peak];
  out.results["quantity_at_im_hi"] = q.back();
  out.results["peak_ratio"] = ratio;
  out.results["unimodal_interior_peak"] = unimodal;
  if (cfg.has("expect", "peak_ratio")) {
    out.assertions.push_back({"unimodal with interior peak", unimodal ? 1.0 : 0.0, 1.0, "==",
                              unimodal});
    expect_ge(out, "peak / value at im_hi", ratio, cfg.real("expect", "peak_ratio"));
  }
  return out;
}

RunOutput sweep_p1(const Resolved& cfg) {
  RunOutput out;
  const int n0 = cfg.integer("sweep", "n0");
  const double M = cfg.real("sweep", "M");
  const double lo = cfg.real("sweep", "p_lo"), hi = cfg.real("sweep", "p_hi");
  const int points = cfg.integer("sweep", "points");
  if (points < 2 || !(lo < hi)) throw ConfigError("[sweep] needs points >= 2 and p_lo < p_hi");
  if (!(M > 0.0)) throw ConfigError("[sweep] M must be positive");
  const C mu = cfg.cplx("medium", "mu");
  auto cf = make_corefree(cfg, cfg.cplx("inclusion", "mu_hat"));

  out.table.header = {"p1", "resonance_quantity", "log10_quantity", "abs_psi_tilde"};
  for (int i = 0; i < points; ++i) {
    const double p = lo + (hi - lo) * i / (points - 1);
    check(enp_corefree_set_mu_hat(cf.get(), to_enp(-mu + C(p, 1.0 / M))));
    double q = 0.0;
    enp_complex psi{};
    check(enp_corefree_resonance_quantity(cf.get(), n0, &q));
    check(enp_corefree_psi_tilde(cf.get(), n0, &psi));
    out.table.add({num(p), num(q), num(std::log10(q)), num(std::abs(from_enp(psi)))});
  }

  enp_tune_p1_result r{};
  const enp_status s = enp_corefree_tune_p1(cf.get(), n0, M, lo, hi, &r);
  if (s == ENP_RESONANCE_NOT_ACHIEVED) {
    out.results["tune_error"] = enp_last_error();
    out.assertions.push_back({"tune_p1 reaches M", 0.0, M, ">", false});
    return out;
  }
  check(s);
  out.results["p_star"] = r.p;
  out.results["resonance_quantity"] = r.quantity;
  out.results["abs_psi_tilde"] = r.psi_tilde_abs;
  expect_gt(out, "resonance quantity at p*", r.quantity, M);
  if (cfg.has("expect", "p_star"))
    expect_le(out, "|p* - expected|", std::abs(r.p - cfg.real("expect", "p_star")),
              cfg.real("expect", "p_tol"));
  return out;
}

// ---- core-shell ----

Handle<enp_coreshell> make_coreshell(const Resolved& cfg) {
  const C mu = cfg.cplx("medium", "mu");
  enp_coreshell* p = nullptr;
  // mu_hat is replaced by tuning
  check(enp_coreshell_create(cfg.real("geometry", "r_i"), cfg.real("geometry", "r_e"),
                             to_enp(cfg.cplx("inclusion", "lambda_core")),
                             to_enp(cfg.cplx("inclusion", "mu_core")),
                             to_enp(cfg.cplx("inclusion", "lambda_hat")), to_enp(-mu),
                             to_enp(cfg.cplx("medium", "lambda")), to_enp(mu),
                             cfg.real("medium", "omega"), &p));
  return Handle<enp_coreshell>(p);
}

Handle<enp_source> point_source(const enp_coreshell* cs, const Resolved& cfg, double r0, int n0) {
  enp_complex k{};
  check(enp_coreshell_exterior_k(cs, &k));
  enp_source* s = nullptr;
  check(enp_source_point(r0, k, cfg.integer("source", "n_min"),
                         n0 + cfg.integer("source", "n_extra"), cfg.real("geometry", "r_e"), &s));
  return Handle<enp_source>(s);
}

RunOutput calr_design(const Resolved& cfg) {
  RunOutput out;
  const int n0 = cfg.integer("sweep", "n0");
  const double lo = cfg.real("sweep", "p_lo"), hi = cfg.real("sweep", "p_hi");
  const int points = cfg.integer("sweep", "points");
  if (points < 2 || !(lo < hi)) throw ConfigError("[sweep] needs points >= 2 and p_lo < p_hi");
  auto cs = make_coreshell(cfg);

  out.table.header = {"p2", "re_d", "im_d", "abs_d"};
  for (int i = 0; i < points; ++i) {
    const double p = lo + (hi - lo) * i / (points - 1);
    check(enp_coreshell_apply_p2(cs.get(), n0, p));
    enp_complex d{};
    check(enp_coreshell_d(cs.get(), n0, &d));
    out.table.add({num(p), num(d.re), num(d.im), num(std::abs(from_enp(d)))});
  }

  enp_tune_p2_result t{};
  check(enp_coreshell_tune_p2(cs.get(), n0, lo, hi, &t));
  check(enp_coreshell_apply_p2(cs.get(), n0, t.p2));
  double rho = 0, r_star = 0, bound = 0;
  check(enp_coreshell_radii(cs.get(), &rho, &r_star, &bound));
  enp_complex mu_hat{};
  check(enp_coreshell_mu_hat(cs.get(), &mu_hat));

  out.results["p2_star"] = t.p2;
  out.results["mu_hat"] = cjson(from_enp(mu_hat));
  out.results["abs_d_untuned"] = t.d_untuned;
  out.results["abs_d_tuned"] = t.d_tuned;
  out.results["abs_d_scale"] = t.d_scale;
  out.results["suppression"] = t.suppression;
  out.results["rho_pow_2n0"] = t.rho_2n0;
  out.results["target_met"] = t.target_met != 0;
  out.results["r_star"] = r_star;
  out.results["bound_radius"] = bound;

  if (cfg.has("expect", "min_suppression"))
    expect_ge(out, "|d| suppression", t.suppression, cfg.real("expect", "min_suppression"));
  const double tol = cfg.real("expect", "radius_tol");
  if (cfg.has("expect", "r_star"))
    expect_le(out, "|r_star - expected|", std::abs(r_star - cfg.real("expect", "r_star")), tol);
  if (cfg.has("expect", "bound_radius"))
    expect_le(out, "|bound_radius - expected|",
              std::abs(bound - cfg.real("expect", "bound_radius")), tol);

  auto energies = nlohmann::ordered_json::array();
  for (double r0 : cfg.reals("source", "radii")) {
    auto src = point_source(cs.get(), cfg, r0, n0);
    enp_solution* raw = nullptr;
    check(enp_coreshell_solve(cs.get(), src.get(), cfg.real("source", "threshold"), &raw));
    Handle<enp_solution> sol(raw);
    double e = 0.0;
    int resonant = 0;
    check(enp_solution_energy(sol.get(), &e, &resonant));
    energies.push_back({{"r0", r0}, {"energy", e}, {"resonant", resonant != 0}});
    if (cfg.boolean("expect", "dichotomy")) {
      const bool want = r0 < r_star;
      out.assertions.push_back({"r0=" + num(r0) + (want ? " resonant" : " non-resonant"), e,
                                cfg.real("source", "threshold"), want ? ">=" : "<",
                                (resonant != 0) == want});
    }
  }
  out.results["sources"] = energies;
  return out;
}

RunOutput field_grid(const Resolved& cfg) {
  RunOutput out;
  const int n0 = cfg.integer("sweep", "n0");
  auto cs = make_coreshell(cfg);
  double p2 = 0.0;
  if (cfg.has("sweep", "p2")) {
    p2 = cfg.real("sweep", "p2");
  } else {
    enp_tune_p2_result t{};
    check(enp_coreshell_tune_p2(cs.get(), n0, cfg.real("sweep", "p_lo"), cfg.real("sweep", "p_hi"),
                                &t));
    p2 = t.p2;
  }
  check(enp_coreshell_apply_p2(cs.get(), n0, p2));
  const double r0 = cfg.real("source", "r0");
  auto src = point_source(cs.get(), cfg, r0, n0);
  enp_solution* raw = nullptr;
  check(enp_coreshell_solve(cs.get(), src.get(), 1e6, &raw));
  Handle<enp_solution> sol(raw);

  double e = 0.0;
  int resonant = 0;
  check(enp_solution_energy(sol.get(), &e, &resonant));
  double rho = 0, r_star = 0, bound = 0;
  check(enp_coreshell_radii(cs.get(), &rho, &r_star, &bound));
  const double r_i = cfg.real("geometry", "r_i"), r_e = cfg.real("geometry", "r_e");

  const double extent = cfg.real("grid", "extent");
  const int points = cfg.integer("grid", "points");
  if (points < 2 || !(extent > 0.0)) throw ConfigError("[grid] needs points >= 2 and extent > 0");

  out.table.header = {"x",          "y",          "z",          "region",     "abs_scattered",
                      "re_u_x",     "im_u_x",     "re_u_y",     "im_u_y",     "re_u_z",
                      "im_u_z"};
  static const char* names[] = {"core", "shell", "exterior"};
  for (int iy = 0; iy < points; ++iy) {
    for (int ix = 0; ix < points; ++ix) {
      const double x[3] = {-extent + 2 * extent * ix / (points - 1),
                           -extent + 2 * extent * iy / (points - 1), 0.0};
      const double r = std::hypot(x[0], x[1]);
      const int region = r < r_i ? ENP_REGION_CORE : r < r_e ? ENP_REGION_SHELL : ENP_REGION_EXTERIOR;
      enp_field f{};
      check(enp_solution_field_in(sol.get(), region, x, &f));
      double mag = 0.0;
      for (const auto& c : f.scattered) mag += c.re * c.re + c.im * c.im;
      out.table.add({num(x[0]), num(x[1]), num(x[2]), names[region], num(std::sqrt(mag)),
                     num(f.scattered[0].re), num(f.scattered[0].im), num(f.scattered[1].re),
                     num(f.scattered[1].im), num(f.scattered[2].re), num(f.scattered[2].im)});
    }
  }

  double max_sc = 0.0;
  const double sphere = cfg.real("grid", "sphere_radius");
  check(enp_solution_max_scattered(sol.get(), sphere, cfg.integer("grid", "sphere_points"), &max_sc));

  out.results["p2"] = p2;
  out.results["energy"] = e;
  out.results["resonant"] = resonant != 0;
  out.results["r_star"] = r_star;
  out.results["bound_radius"] = bound;
  out.results["sphere_radius"] = sphere;
  out.results["max_abs_scattered_on_sphere"] = max_sc;
  expect_gt(out, "field finite on sphere", std::isfinite(max_sc) ? 1.0 : 0.0, 0.0);
  return out;
}

// ---- validate ----

RunOutput validate(const Resolved& cfg) {
  RunOutput out;
  std::size_t count = 0;
  const auto seed = cfg.u64("run", "seed");
  check(enp_validate(seed, nullptr, 0, &count));
  std::vector<enp_suite_result> res(count);
  check(enp_validate(seed, res.data(), count, &count));
  out.table.header = {"suite", "worst", "tolerance", "checks", "passed"};
  auto suites = nlohmann::ordered_json::array();
  for (const auto& r : res) {
    out.table.add({r.name, num(r.worst), num(r.tolerance), std::to_string(r.checks),
                   r.passed ? "true" : "false"});
    suites.push_back({{"suite", r.name}, {"worst", r.worst}, {"seconds", r.seconds}});
    expect_le(out, r.name, r.worst, r.tolerance);
  }
  out.results["suites"] = suites;
  return out;
}

}  // namespace

RunOutput run_command(const std::string& command, const Resolved& cfg) {
  if (command == "np-spectrum") return np_spectrum(cfg);
  if (command == "resonance-sweep")
    return cfg.str("sweep", "variable") == "p1" ? sweep_p1(cfg) : sweep_im(cfg);
  if (command == "calr-design") return calr_design(cfg);
  if (command == "field-grid") return field_grid(cfg);
  if (command == "validate") return validate(cfg);
  throw ConfigError("unknown command '" + command + "'");
}

}  // namespace cli

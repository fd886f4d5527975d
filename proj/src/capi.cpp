#include "elasto_np.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "elasto/calr.hpp"
#include "elasto/error.hpp"
#include "elasto/np_spectrum.hpp"
#include "elasto/parallel.hpp"
#include "elasto/resonance.hpp"
#include "elasto/specfun.hpp"
#include "elasto/validate.hpp"

struct enp_corefree {
  elasto::CoreFreeConfig cfg;
};

struct enp_coreshell {
  elasto::CoreShellConfig cfg;
};

struct enp_source {
  elasto::SourceSpectrum spec;
};

struct enp_solution {
  elasto::CoreShellConfig cfg;
  elasto::SourceSpectrum src;
  elasto::CoreShellSolution sol;
};

namespace {

using elasto::cplx;

thread_local std::string g_last_error;

cplx in(enp_complex z) { return {z.re, z.im}; }
enp_complex out_c(cplx z) { return {z.real(), z.imag()}; }
enp_scaled out_s(const elasto::Scaled& s) { return {out_c(s.mant), s.log_scale}; }

enp_status fail(enp_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <class F>
enp_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return ENP_OK;
  } catch (const elasto::Error& e) {
    return fail(static_cast<enp_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ENP_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(ENP_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(ENP_INTERNAL_ERROR, "unknown exception");
  }
}

#define ENP_REQUIRE(p) \
  if (!(p)) return fail(ENP_NULL_POINTER, "null pointer argument: " #p)

enp_field to_field(const elasto::FieldValue& v) {
  enp_field f{};
  f.region = static_cast<int>(v.region);
  for (int i = 0; i < 3; ++i) {
    f.scattered[i] = out_c(v.scattered[i]);
    f.incident[i] = out_c(v.incident[i]);
    f.total[i] = out_c(v.total[i]);
  }
  return f;
}

}  // namespace

extern "C" {

const char* enp_version(void) { return "1.0.0"; }

const char* enp_status_name(enp_status s) {
  switch (s) {
    case ENP_OK:
      return "Ok";
    case ENP_NULL_POINTER:
      return "NullPointer";
    case ENP_BUFFER_TOO_SMALL:
      return "BufferTooSmall";
    case ENP_OUT_OF_MEMORY:
      return "OutOfMemory";
    case ENP_INTERNAL_ERROR:
      return "InternalError";
    default:
      if (s >= ENP_INVALID_ARGUMENT && s <= ENP_ON_INTERFACE)
        return elasto::errc_name(static_cast<elasto::Errc>(static_cast<int>(s)));
      return "Unknown";
  }
}

const char* enp_last_error(void) { return g_last_error.c_str(); }

enp_status enp_set_threads(unsigned n) {
  return guard([&] { elasto::set_thread_count(n); });
}

unsigned enp_get_threads(void) { return elasto::thread_count(); }

enp_status enp_sph_bessel_j(int n, enp_complex z, enp_scaled* out) {
  ENP_REQUIRE(out);
  return guard([&] { *out = out_s(elasto::sph_bessel_j(n, in(z))); });
}

enp_status enp_sph_hankel1(int n, enp_complex z, enp_scaled* out) {
  ENP_REQUIRE(out);
  return guard([&] { *out = out_s(elasto::sph_hankel1(n, in(z))); });
}

enp_status enp_wronskian_residual(int n, double t, double* out) {
  ENP_REQUIRE(out);
  return guard([&] { *out = elasto::wronskian_residual(n, t); });
}

enp_status enp_np_eigensystem(int n, enp_complex lambda, enp_complex mu, double omega, double R,
                              enp_np_result* out) {
  ENP_REQUIRE(out);
  return guard([&] {
    const auto med = elasto::make_medium(in(lambda), in(mu), omega);
    const auto s = elasto::np_eigensystem(n, med, R);
    const auto A = elasto::np_matrix(n, med, R).block;
    enp_np_result r{};
    r.n = n;
    r.lambda1 = out_c(s.lambda1);
    r.lambda2 = out_c(s.lambda2);
    r.lambda3 = out_c(s.lambda3);
    r.U[0] = out_c(s.U.alpha);
    r.U[1] = out_c(s.U.beta);
    r.V[0] = out_c(s.V.alpha);
    r.V[1] = out_c(s.V.beta);
    r.degenerate = s.branch == elasto::NpBranch::Degenerate;
    r.residual = std::max(elasto::eigen_residual(A, s.U, s.lambda2),
                          elasto::eigen_residual(A, s.V, s.lambda3));
    *out = r;
  });
}

enp_status enp_validate(uint64_t seed, enp_suite_result* out, size_t capacity, size_t* count) {
  ENP_REQUIRE(count);
  return guard([&] {
    const auto all = elasto::validate_all(seed);
    *count = all.size();
    if (!out) return;
    if (capacity < all.size()) throw elasto::Error(elasto::Errc::InvalidArgument, "buffer too small");
    for (std::size_t i = 0; i < all.size(); ++i) {
      enp_suite_result r{};
      std::strncpy(r.name, all[i].name.c_str(), sizeof(r.name) - 1);
      r.worst = all[i].worst;
      r.tolerance = all[i].tolerance;
      r.seconds = all[i].seconds;
      r.checks = all[i].checks;
      r.passed = all[i].passed;
      out[i] = r;
    }
  });
}

enp_status enp_corefree_create(double R, enp_complex lambda, enp_complex mu,
                               enp_complex lambda_hat, enp_complex mu_hat, double omega,
                               enp_corefree** out) {
  ENP_REQUIRE(out);
  return guard([&] {
    *out = new enp_corefree{
        elasto::make_corefree(R, in(lambda), in(mu), in(lambda_hat), in(mu_hat), omega)};
  });
}

void enp_corefree_destroy(enp_corefree* c) { delete c; }

enp_status enp_corefree_set_mu_hat(enp_corefree* c, enp_complex mu_hat) {
  ENP_REQUIRE(c);
  return guard([&] { c->cfg = elasto::with_mu_hat(c->cfg, in(mu_hat)); });
}

enp_status enp_corefree_psi_tilde(const enp_corefree* c, int n, enp_complex* out) {
  ENP_REQUIRE(c);
  ENP_REQUIRE(out);
  return guard([&] { *out = out_c(elasto::psi_tilde(n, c->cfg)); });
}

enp_status enp_corefree_resonance_quantity(const enp_corefree* c, int n0, double* out) {
  ENP_REQUIRE(c);
  ENP_REQUIRE(out);
  return guard([&] { *out = elasto::resonance_quantity(n0, c->cfg); });
}

enp_status enp_corefree_mode_energy(const enp_corefree* c, int n, enp_complex f, double* out) {
  ENP_REQUIRE(c);
  ENP_REQUIRE(out);
  return guard([&] {
    const auto m = elasto::solve_corefree_mode(n, c->cfg, in(f));
    *out = elasto::corefree_mode_energy(n, c->cfg, m.psi1);
  });
}

enp_status enp_corefree_im_sweep(const enp_corefree* c, int n0, double lo, double hi,
                                 int per_decade, double* im, double* quantity, size_t capacity,
                                 size_t* count) {
  ENP_REQUIRE(c);
  ENP_REQUIRE(count);
  return guard([&] {
    const auto pts = elasto::im_mu_sweep(n0, c->cfg, lo, hi, per_decade);
    *count = pts.size();
    if (!im) return;
    if (!quantity || capacity < pts.size())
      throw elasto::Error(elasto::Errc::InvalidArgument, "output buffers too small");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      im[i] = pts[i].im_mu_hat;
      quantity[i] = pts[i].quantity;
    }
  });
}

enp_status enp_corefree_tune_re_mu(const enp_corefree* c, int n0, double lo, double hi,
                                   double* out) {
  ENP_REQUIRE(c);
  ENP_REQUIRE(out);
  return guard([&] { *out = elasto::tune_re_mu(n0, c->cfg, lo, hi); });
}

enp_status enp_corefree_tune_p1(const enp_corefree* c, int n0, double M, double lo, double hi,
                                enp_tune_p1_result* out) {
  ENP_REQUIRE(c);
  ENP_REQUIRE(out);
  return guard([&] {
    const auto r = elasto::tune_p1(n0, c->cfg, M, lo, hi);
    *out = {r.p, r.quantity, r.psi_tilde_abs};
  });
}

enp_status enp_coreshell_create(double r_i, double r_e, enp_complex lambda_core,
                                enp_complex mu_core, enp_complex lambda_hat, enp_complex mu_hat,
                                enp_complex lambda, enp_complex mu, double omega,
                                enp_coreshell** out) {
  ENP_REQUIRE(out);
  return guard([&] {
    *out = new enp_coreshell{elasto::make_coreshell(r_i, r_e, in(lambda_core), in(mu_core),
                                                    in(lambda_hat), in(mu_hat), in(lambda),
                                                    in(mu), omega)};
  });
}

void enp_coreshell_destroy(enp_coreshell* c) { delete c; }

enp_status enp_coreshell_set_mu_hat(enp_coreshell* c, enp_complex mu_hat) {
  ENP_REQUIRE(c);
  return guard([&] { c->cfg = elasto::with_shell_mu(c->cfg, in(mu_hat)); });
}

enp_status enp_coreshell_mu_hat(const enp_coreshell* c, enp_complex* out) {
  ENP_REQUIRE(c);
  ENP_REQUIRE(out);
  *out = out_c(c->cfg.shell.mu);
  return ENP_OK;
}

enp_status enp_coreshell_exterior_k(const enp_coreshell* c, enp_complex* out) {
  ENP_REQUIRE(c);
  ENP_REQUIRE(out);
  *out = out_c(c->cfg.exterior.k_s);
  return ENP_OK;
}

enp_status enp_coreshell_radii(const enp_coreshell* c, double* rho, double* r_star,
                               double* bound_radius) {
  ENP_REQUIRE(c);
  const auto cr = elasto::critical_radius(c->cfg);
  if (rho) *rho = c->cfg.rho();
  if (r_star) *r_star = cr.r_star;
  if (bound_radius) *bound_radius = cr.bound_radius;
  return ENP_OK;
}

enp_status enp_coreshell_d(const enp_coreshell* c, int n, enp_complex* out) {
  ENP_REQUIRE(c);
  ENP_REQUIRE(out);
  return guard([&] { *out = out_c(elasto::denominator_d(n, c->cfg)); });
}

enp_status enp_coreshell_q2(const enp_coreshell* c, int n, int sign, enp_complex* out) {
  ENP_REQUIRE(c);
  ENP_REQUIRE(out);
  if (sign != 1 && sign != -1) return fail(ENP_INVALID_ARGUMENT, "sign must be +1 or -1");
  return guard([&] {
    *out = out_c(elasto::q2(n, c->cfg, sign > 0 ? elasto::JoinSign::Plus : elasto::JoinSign::Minus));
  });
}

enp_status enp_coreshell_tune_p2(const enp_coreshell* c, int n0, double lo, double hi,
                                 enp_tune_p2_result* out) {
  ENP_REQUIRE(c);
  ENP_REQUIRE(out);
  return guard([&] {
    const auto r = elasto::tune_p2(n0, c->cfg, lo, hi);
    *out = {r.p2, r.d_untuned, r.d_tuned, r.d_scale, r.rho_2n0, r.suppression, r.target_met};
  });
}

enp_status enp_coreshell_apply_p2(enp_coreshell* c, int n0, double p2) {
  ENP_REQUIRE(c);
  return guard([&] { c->cfg = elasto::tuned_coreshell(n0, c->cfg, p2); });
}

enp_status enp_source_create(enp_source** out) {
  ENP_REQUIRE(out);
  return guard([&] { *out = new enp_source{}; });
}

enp_status enp_source_point(double r0, enp_complex k, int n_min, int n_max, double r_e,
                            enp_source** out) {
  ENP_REQUIRE(out);
  return guard([&] {
    *out = new enp_source{elasto::point_source_spectrum(r0, in(k), n_min, n_max, r_e)};
  });
}

void enp_source_destroy(enp_source* s) { delete s; }

enp_status enp_source_set(enp_source* s, int n, int m, enp_complex f) {
  ENP_REQUIRE(s);
  return guard([&] { s->spec.set(n, m, in(f)); });
}

enp_status enp_source_size(const enp_source* s, size_t* out) {
  ENP_REQUIRE(s);
  ENP_REQUIRE(out);
  *out = s->spec.entries.size();
  return ENP_OK;
}

enp_status enp_coreshell_solve(const enp_coreshell* c, const enp_source* s, double threshold,
                               enp_solution** out) {
  ENP_REQUIRE(c);
  ENP_REQUIRE(s);
  ENP_REQUIRE(out);
  return guard([&] {
    *out = new enp_solution{c->cfg, s->spec, elasto::solve_coreshell(c->cfg, s->spec, threshold)};
  });
}

void enp_solution_destroy(enp_solution* s) { delete s; }

enp_status enp_solution_energy(const enp_solution* s, double* energy, int* resonant) {
  ENP_REQUIRE(s);
  if (energy) *energy = s->sol.energy;
  if (resonant) *resonant = s->sol.classification == elasto::Classification::Resonant;
  return ENP_OK;
}

enp_status enp_solution_mode(const enp_solution* s, int n, int m, enp_mode_info* out) {
  ENP_REQUIRE(s);
  ENP_REQUIRE(out);
  const auto it = s->sol.modes.find({n, m});
  if (it == s->sol.modes.end()) return fail(ENP_MODE_MISMATCH, "mode not in solution");
  const auto& md = it->second;
  enp_mode_info r{};
  for (int i = 0; i < 4; ++i) {
    r.phi[i] = out_s(md.phi[i]);
    r.shadow_deviation[i] = md.shadow_deviation[i];
  }
  r.d = out_c(md.d);
  r.residual = md.residual;
  r.rcond = md.rcond;
  *out = r;
  return ENP_OK;
}

enp_status enp_solution_field(const enp_solution* s, const double x[3], enp_field* out) {
  ENP_REQUIRE(s);
  ENP_REQUIRE(x);
  ENP_REQUIRE(out);
  return guard(
      [&] { *out = to_field(elasto::field_eval({x[0], x[1], x[2]}, s->cfg, s->sol, s->src)); });
}

enp_status enp_solution_field_in(const enp_solution* s, int region, const double x[3],
                                 enp_field* out) {
  ENP_REQUIRE(s);
  ENP_REQUIRE(x);
  ENP_REQUIRE(out);
  if (region < ENP_REGION_CORE || region > ENP_REGION_EXTERIOR)
    return fail(ENP_INVALID_ARGUMENT, "unknown region");
  return guard([&] {
    *out = to_field(elasto::field_eval_in(static_cast<elasto::FieldRegion>(region),
                                          {x[0], x[1], x[2]}, s->cfg, s->sol, s->src));
  });
}

enp_status enp_solution_max_scattered(const enp_solution* s, double radius, int points,
                                      double* out) {
  ENP_REQUIRE(s);
  ENP_REQUIRE(out);
  return guard(
      [&] { *out = elasto::max_scattered_on_sphere(radius, points, s->cfg, s->sol, s->src); });
}

}  // extern "C"

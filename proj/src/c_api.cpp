#include "washburn/washburn.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "washburn/dynamics.hpp"
#include "washburn/errors.hpp"
#include "washburn/integrate.hpp"
#include "washburn/io.hpp"
#include "washburn/lyapunov.hpp"
#include "washburn/params.hpp"
#include "washburn/stability.hpp"
#include "washburn/verify.hpp"
#include "washburn/volterra.hpp"

using namespace washburn;

struct wb_trajectory {
  Trajectory traj;
};

struct wb_picard {
  PicardResult result;
  double omega, beta, alpha, horizon, tol;
  int max_iter;
};

struct wb_regime {
  RegimeRun run;
};

namespace {

thread_local std::string g_last_error;

wb_status fail(wb_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

wb_status from_errc(Errc c) {
  switch (c) {
    case Errc::domain: return WB_E_DOMAIN;
    case Errc::consistency: return WB_E_CONSISTENCY;
    case Errc::singularity: return WB_E_SINGULARITY;
    case Errc::step_underflow: return WB_E_STEP_UNDERFLOW;
    case Errc::horizon: return WB_E_HORIZON;
    case Errc::non_convergence: return WB_E_NON_CONVERGENCE;
    case Errc::inconclusive: return WB_E_INCONCLUSIVE;
    case Errc::io: return WB_E_IO;
  }
  return WB_E_INTERNAL;
}

template <class F>
wb_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return WB_OK;
  } catch (const Error& e) {
    return fail(from_errc(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(WB_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WB_E_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) throw_domain(what, "null pointer");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ModelParams to_model(const wb_model_params* m) {
  require(m, "params");
  return ModelParams::dimensionless(m->omega, m->beta, m->alpha);
}

wb_model_params from_model(const ModelParams& m) {
  wb_model_params out{};
  out.omega = m.omega();
  out.beta = m.beta();
  out.alpha = m.alpha();
  out.omega_star = m.omega_star();
  if (const auto& sc = m.scales()) {
    out.has_scales = 1;
    out.h_e = sc->h_e;
    out.tau = sc->tau;
    out.Oh = sc->Oh;
    out.Bo = sc->Bo;
  }
  return out;
}

IntegrateOptions to_options(const wb_integrate_options* o) {
  IntegrateOptions opt;
  if (!o) return opt;
  opt.epsilon = o->epsilon;
  opt.horizon = o->horizon;
  opt.tolerances = {o->abs_tol, o->rel_tol};
  opt.sample_step = o->sample_step;
  return opt;
}

void write_file(const char* path, const std::string& what, auto&& writer) {
  require(path, "path");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(Errc::io, "cannot open " + std::string(path) + " for writing " + what);
  writer(os);
  os.flush();
  if (!os) throw Error(Errc::io, "write failed: " + std::string(path));
}

}  // namespace

extern "C" {

const char* wb_version(void) { return "1.0.0"; }

const char* wb_status_name(wb_status s) {
  switch (s) {
    case WB_OK: return "ok";
    case WB_E_DOMAIN: return "domain";
    case WB_E_CONSISTENCY: return "consistency";
    case WB_E_SINGULARITY: return "singularity";
    case WB_E_STEP_UNDERFLOW: return "step_underflow";
    case WB_E_HORIZON: return "horizon";
    case WB_E_NON_CONVERGENCE: return "non_convergence";
    case WB_E_INCONCLUSIVE: return "inconclusive";
    case WB_E_IO: return "io";
    case WB_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* wb_last_error(void) { return g_last_error.c_str(); }

void wb_string_free(char* s) { std::free(s); }

// ---- parameters ----

wb_status wb_model_params_dimensionless(double omega, double beta, double alpha, wb_model_params* out) {
  return guard([&] {
    require(out, "out");
    *out = from_model(ModelParams::dimensionless(omega, beta, alpha));
  });
}

wb_status wb_nondimensionalize(const wb_physical_params* p, wb_model_params* out) {
  return guard([&] {
    require(p, "params");
    require(out, "out");
    const PhysicalParams pp{p->rho, p->mu, p->gamma, p->theta, p->g, p->R, p->L, p->h0};
    *out = from_model(nondimensionalize(pp));
  });
}

wb_status wb_parse_physical_params(const char* json_text, wb_physical_params* out) {
  return guard([&] {
    require(json_text, "json");
    require(out, "out");
    const PhysicalParams p = io::parse_physical_params(json_text);
    *out = {p.rho, p.mu, p.gamma, p.theta, p.g, p.R, p.L, p.h0};
  });
}

wb_status wb_model_params_json(const wb_model_params* m, char** json) {
  return guard([&] {
    require(json, "json");
    const ModelParams mp = to_model(m);
    io::JsonObject o;
    o.add("omega", mp.omega()).add("beta", mp.beta()).add("alpha", mp.alpha()).add("omega_star", mp.omega_star());
    if (m->has_scales) o.add("h_e", m->h_e).add("tau", m->tau).add("Oh", m->Oh).add("Bo", m->Bo);
    std::string adv = "[";
    const auto notes = advisories(mp);
    for (std::size_t i = 0; i < notes.size(); ++i) adv += (i ? ", " : "") + io::quote(notes[i]);
    o.add_raw("advisories", adv + "]");
    *json = dup_string(o.str());
  });
}

wb_status wb_critical_omega(double beta, double* out) {
  return guard([&] {
    require(out, "out");
    *out = critical_omega(beta);
  });
}

wb_status wb_u_from_H(double H, double* u) {
  return guard([&] {
    require(u, "out");
    *u = u_from_H(H);
  });
}

wb_status wb_H_from_u(double u, double* H) {
  return guard([&] {
    require(H, "out");
    *H = H_from_u(u);
  });
}

// ---- dynamics ----

wb_status wb_rhs_u(double u, double v, double omega, double beta, double epsilon, double* du, double* dv) {
  return guard([&] {
    require(du, "du");
    require(dv, "dv");
    const State d = rhs_u({u, v}, omega, beta, epsilon);
    *du = d.u;
    *dv = d.v;
  });
}

wb_status wb_rhs_H(double H, double Hdot, double omega, double beta, double* Hddot) {
  return guard([&] {
    require(Hddot, "out");
    *Hddot = rhs_H(H, Hdot, omega, beta);
  });
}

// ---- trajectories ----

void wb_integrate_options_default(wb_integrate_options* opt) {
  if (!opt) return;
  const IntegrateOptions d;
  *opt = {d.epsilon, d.horizon, d.tolerances.abs, d.tolerances.rel, d.sample_step};
}

wb_status wb_integrate(const wb_model_params* m, const wb_integrate_options* opt, wb_trajectory** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    *out = new wb_trajectory{integrate(to_model(m), to_options(opt))};
  });
}

wb_status wb_integrate_from(const wb_model_params* m, double u0, double v0, const wb_integrate_options* opt,
                            wb_trajectory** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    *out = new wb_trajectory{integrate_from(to_model(m), State{u0, v0}, to_options(opt))};
  });
}

void wb_trajectory_free(wb_trajectory* t) { delete t; }

size_t wb_trajectory_size(const wb_trajectory* t) { return t ? t->traj.samples().size() : 0; }

wb_status wb_trajectory_sample(const wb_trajectory* t, size_t i, wb_sample* out) {
  return guard([&] {
    require(t, "trajectory");
    require(out, "out");
    if (i >= t->traj.samples().size()) throw_domain("index", "out of range");
    const Sample& s = t->traj.samples()[i];
    *out = {s.s, s.u, s.v, s.H, s.T, s.E, s.V};
  });
}

wb_status wb_trajectory_at(const wb_trajectory* t, double s, double* u, double* v) {
  return guard([&] {
    require(t, "trajectory");
    require(u, "u");
    require(v, "v");
    if (!(s >= 0.0 && s <= t->traj.horizon())) throw_domain("s", "outside [0, S]");
    const State x = t->traj.at(s);
    *u = x.u;
    *v = x.v;
  });
}

size_t wb_trajectory_crossing_count(const wb_trajectory* t) { return t ? t->traj.crossings().size() : 0; }

wb_status wb_trajectory_write_csv(const wb_trajectory* t, const char* path) {
  return guard([&] {
    require(t, "trajectory");
    write_file(path, "trajectory", [&](std::ostream& os) { io::write_trajectory_csv(os, t->traj); });
  });
}

wb_status wb_trajectory_summary_json(const wb_trajectory* t, char** json) {
  return guard([&] {
    require(t, "trajectory");
    require(json, "json");
    const Trajectory& tr = t->traj;
    const Sample& last = tr.samples().back();
    double umin = INFINITY, umax = -INFINITY;
    for (const Sample& s : tr.samples()) {
      umin = std::min(umin, s.u);
      umax = std::max(umax, s.u);
    }
    io::JsonObject fin;
    fin.add("s", last.s).add("u", last.u).add("v", last.v).add("H", last.H).add("T", last.T).add("E", last.E).add(
        "V", last.V);
    std::vector<io::JsonObject> cs;
    for (const Crossing& c : tr.crossings()) cs.push_back(io::to_json(c));
    io::JsonObject tol;
    tol.add("abs", tr.tolerances().abs).add("rel", tr.tolerances().rel);
    io::JsonObject o;
    o.add("params", io::to_json(tr.params()))
        .add("epsilon", tr.epsilon())
        .add("horizon", tr.horizon())
        .add("sample_step", tr.sample_step())
        .add("tolerances", tol)
        .add("steps", tr.dense().steps())
        .add("samples", tr.samples().size())
        .add("final", fin)
        .add("distance_to_equilibrium", std::hypot(last.u - 0.5, last.v))
        .add("u_min", umin)
        .add("u_max", umax)
        .add("crossings", cs);
    *json = dup_string(o.str());
  });
}

wb_status wb_trajectory_distance(const wb_trajectory* a, const wb_trajectory* b, double* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = sup_distance(a->traj, b->traj);
  });
}

wb_status wb_classify_json(const wb_trajectory* t, char** json) {
  return guard([&] {
    require(t, "trajectory");
    require(json, "json");
    *json = dup_string(io::to_json(classify_approach(t->traj)).str());
  });
}

wb_status wb_audit_json(const wb_trajectory* t, char** json) {
  return guard([&] {
    require(t, "trajectory");
    require(json, "json");
    const double alpha = t->traj.params().alpha();
    const BasinSpec b = basin(alpha);
    io::JsonObject o;
    o.add("basin", io::to_json(b)).add("audit", io::to_json(audit_trajectory(t->traj, b)));
    *json = dup_string(o.str());
  });
}

wb_status wb_settling_horizon(double omega, double beta, double* out) {
  return guard([&] {
    require(out, "out");
    *out = settling_horizon(omega, beta);
  });
}

// ---- stability ----

wb_status wb_linearize(double omega, double beta, wb_stability* out) {
  return guard([&] {
    require(out, "out");
    const StabilityReport r = linearize(omega, beta);
    out->lambda1_re = r.lambda1.real();
    out->lambda1_im = r.lambda1.imag();
    out->lambda2_re = r.lambda2.real();
    out->lambda2_im = r.lambda2.imag();
    out->kind = static_cast<wb_critical_kind>(static_cast<int>(r.kind));
    out->omega_star = r.omega_star;
    out->discriminant = r.discriminant;
  });
}

wb_status wb_linearize_json(double omega, double beta, char** json) {
  return guard([&] {
    require(json, "json");
    *json = dup_string(io::to_json(linearize(omega, beta)).str());
  });
}

wb_status wb_lyapunov(double u, double v, double* E, double* V) {
  return guard([&] {
    require(E, "E");
    require(V, "V");
    const EnergyValues ev = lyapunov(u, v);
    *E = ev.E;
    *V = ev.V;
  });
}

wb_status wb_basin_spec(double alpha, wb_basin* out) {
  return guard([&] {
    require(out, "out");
    const BasinSpec b = basin(alpha);
    *out = {b.alpha, b.C, b.u_min, b.u_max};
  });
}

wb_status wb_basin_json(double alpha, char** json) {
  return guard([&] {
    require(json, "json");
    *json = dup_string(io::to_json(basin(alpha)).str());
  });
}

// ---- Volterra ----

void wb_picard_options_default(wb_picard_options* opt) {
  if (!opt) return;
  const PicardOptions d;
  *opt = {d.horizon, d.step, d.tol, d.max_iter};
}

wb_status wb_picard_solve(double omega, double beta, double alpha, const wb_picard_options* opt,
                          wb_picard** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    PicardOptions po;
    if (opt) po = {opt->horizon, opt->step, opt->tol, opt->max_iter};
    *out = new wb_picard{picard_solve(omega, beta, alpha, po), omega, beta, alpha, po.horizon, po.tol,
                         po.max_iter};
  });
}

void wb_picard_free(wb_picard* p) { delete p; }

size_t wb_picard_size(const wb_picard* p) { return p ? p->result.solution.values.size() : 0; }

wb_status wb_picard_value(const wb_picard* p, size_t i, double* s, double* u) {
  return guard([&] {
    require(p, "picard");
    require(s, "s");
    require(u, "u");
    if (i >= p->result.solution.values.size()) throw_domain("index", "out of range");
    *s = p->result.solution.node(i);
    *u = p->result.solution.values[i];
  });
}

int wb_picard_iterations(const wb_picard* p) { return p ? p->result.iterations : 0; }

wb_status wb_picard_write_csv(const wb_picard* p, const char* path) {
  return guard([&] {
    require(p, "picard");
    write_file(path, "grid", [&](std::ostream& os) { io::write_grid_csv(os, p->result.solution); });
  });
}

wb_status wb_picard_summary_json(const wb_picard* p, char** json) {
  return guard([&] {
    require(p, "picard");
    require(json, "json");
    *json = dup_string(
        io::picard_sidecar(p->result, p->omega, p->beta, p->alpha, p->horizon, p->tol, p->max_iter).str());
  });
}

// ---- regimes ----

void wb_regime_options_default(wb_regime_options* opt) {
  if (!opt) return;
  const RegimeOptions d;
  *opt = {d.alpha, d.horizon, d.sample_step, d.case3_b, d.tolerances.abs, d.tolerances.rel};
}

wb_status wb_regime_case_from_string(const char* name, int* case_id) {
  return guard([&] {
    require(name, "name");
    require(case_id, "out");
    *case_id = static_cast<int>(regime_from_string(name));
  });
}

namespace {
RegimeCase to_case(int id) {
  if (id < 1 || id > 4) throw_domain("case", "must be 1, 2, 3 or 4");
  return static_cast<RegimeCase>(id);
}
}  // namespace

wb_status wb_regime_run(int case_id, double beta, const wb_regime_options* opt, wb_regime** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    RegimeOptions ro;
    if (opt) ro = {opt->alpha, opt->horizon, opt->sample_step, opt->case3_b, {opt->abs_tol, opt->rel_tol}};
    *out = new wb_regime{integrate_regime(to_case(case_id), beta, ro)};
  });
}

void wb_regime_free(wb_regime* r) { delete r; }

size_t wb_regime_size(const wb_regime* r) { return r ? r->run.samples.size() : 0; }

double wb_regime_max_residual(const wb_regime* r) { return r ? r->run.max_abs_residual : NAN; }

wb_status wb_regime_write_csv(const wb_regime* r, const char* path) {
  return guard([&] {
    require(r, "regime");
    write_file(path, "regime", [&](std::ostream& os) { io::write_regime_csv(os, r->run); });
  });
}

wb_status wb_regime_summary_json(const wb_regime* r, char** json) {
  return guard([&] {
    require(r, "regime");
    require(json, "json");
    *json = dup_string(io::regime_summary(r->run).str());
  });
}

wb_status wb_regime_exponents_json(int case_id, char** json) {
  return guard([&] {
    require(json, "json");
    const RegimeCase c = to_case(case_id);
    const RegimeExponents e = regime_exponents(c);
    io::JsonObject o;
    o.add("case", to_string(c)).add("a", e.a).add("b", e.b).add("family", e.family);
    if (e.family) o.add("constraint", "a = 2b").add("a_open", std::vector<double>{e.a_lo, e.a_hi}).add(
        "b_open", std::vector<double>{e.b_lo, e.b_hi});
    *json = dup_string(o.str());
  });
}

// ---- plotting ----

wb_status wb_gnuplot_script(const char* csv_path, const char* title, int xcol, int ycol, const char* xlabel,
                            const char* ylabel, double reference_level, char** script) {
  return guard([&] {
    require(csv_path, "csv_path");
    require(script, "script");
    *script = dup_string(io::gnuplot_script(csv_path, title ? title : "", xcol, ycol, xlabel ? xlabel : "",
                                            ylabel ? ylabel : "", reference_level));
  });
}

// ---- verification ----

wb_status wb_verify_with_oracle(const char* only, int parallel, wb_critical_omega_fn fn, void* user,
                                char** report_json, int* all_passed) {
  return guard([&] {
    require(report_json, "report_json");
    require(all_passed, "all_passed");
    verify::VerifyOptions o;
    o.only = only ? only : "";
    o.parallel = parallel != 0;
    if (fn) o.critical_omega = [fn, user](double beta) { return fn(beta, user); };
    const auto results = verify::run(o);
    if (results.empty()) throw_domain("only", "no suite matches '" + o.only + "'");
    *all_passed = verify::all_passed(results) ? 1 : 0;
    *report_json = dup_string(verify::report(results).str());
  });
}

wb_status wb_verify(const char* only, int parallel, char** report_json, int* all_passed) {
  return wb_verify_with_oracle(only, parallel, nullptr, nullptr, report_json, all_passed);
}

wb_status wb_verify_suite_names(char** names) {
  return guard([&] {
    require(names, "names");
    std::string s;
    for (const auto& suite : verify::suites()) s += suite.name + "\n";
    *names = dup_string(s);
  });
}

}  // extern "C"

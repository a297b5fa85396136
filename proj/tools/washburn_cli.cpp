// washburn: command-line front end over the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "washburn/washburn.h"

namespace {

enum Exit { kOk = 0, kConfig = 2, kNumeric = 3, kVerify = 4 };

struct Failure {
  int exit_code;
  std::string message;
};

int exit_for(wb_status s) {
  switch (s) {
    case WB_E_DOMAIN:
    case WB_E_CONSISTENCY:
    case WB_E_HORIZON:
    case WB_E_IO:
      return kConfig;
    default:
      return kNumeric;
  }
}

void check(wb_status s) {
  if (s != WB_OK) throw Failure{exit_for(s), std::string(wb_status_name(s)) + ": " + wb_last_error()};
}

// Owns a string returned by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { wb_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

using TrajectoryHandle = Handle<wb_trajectory, wb_trajectory_free>;
using PicardHandle = Handle<wb_picard, wb_picard_free>;
using RegimeHandle = Handle<wb_regime, wb_regime_free>;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Failure{kConfig, "io: cannot open " + path + " for writing"};
  os << text;
  os.flush();
  if (!os) throw Failure{kConfig, "io: write failed: " + path};
}

std::string read_text(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Failure{kConfig, "io: cannot read " + path};
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) std::cout << text;
  else write_text(out, text);
}

std::string gnuplot(const std::string& csv, const std::string& title, int x, int y, const std::string& xl,
                    const std::string& yl, double ref) {
  LibString s;
  check(wb_gnuplot_script(csv.c_str(), title.c_str(), x, y, xl.c_str(), yl.c_str(), ref, &s.p));
  return s.str();
}

// Sidecar with every option value (defaults included) and the files written.
void write_meta(const std::string& path, const std::string& command, const nlohmann::ordered_json& options,
                const std::vector<std::string>& outputs) {
  nlohmann::ordered_json meta;
  meta["command"] = command;
  meta["version"] = wb_version();
  meta["options"] = options;
  meta["outputs"] = outputs;
  write_text(path, meta.dump(2) + "\n");
}

// Splices extra members into a JSON object produced by the library.
std::string merge(const std::string& base, const nlohmann::ordered_json& extra) {
  auto doc = nlohmann::ordered_json::parse(base);
  for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
  return doc.dump(2, ' ', false, nlohmann::json::error_handler_t::strict) + "\n";
}

std::string short_num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Approach classification as JSON; an undecided result is reported, not raised.
nlohmann::ordered_json approach_json(const wb_trajectory* t) {
  LibString s;
  const wb_status st = wb_classify_json(t, &s.p);
  if (st == WB_E_INCONCLUSIVE) {
    nlohmann::ordered_json j;
    j["kind"] = "Inconclusive";
    j["reason"] = wb_last_error();
    return j;
  }
  check(st);
  return nlohmann::ordered_json::parse(s.str());
}

struct ModelArgs {
  double omega = NAN, beta = NAN, alpha = 0.0;
  std::string params_file;
};

void add_model_options(CLI::App* cmd, ModelArgs& m, bool allow_file) {
  auto* o = cmd->add_option("--omega", m.omega, "dimensionless omega > 0");
  auto* b = cmd->add_option("--beta", m.beta, "slip parameter in (0, 1]");
  cmd->add_option("--alpha", m.alpha, "initial height h0/h_e in [0, 3/2]")->capture_default_str();
  if (allow_file) {
    auto* f = cmd->add_option("--params", m.params_file, "physical-parameter JSON file (replaces --omega/--beta/--alpha)");
    f->excludes(o)->excludes(b);
  }
}

wb_model_params resolve_model(const ModelArgs& a, nlohmann::ordered_json& options) {
  wb_model_params m{};
  if (!a.params_file.empty()) {
    wb_physical_params p{};
    check(wb_parse_physical_params(read_text(a.params_file).c_str(), &p));
    check(wb_nondimensionalize(&p, &m));
    options["params"] = a.params_file;
  } else {
    if (std::isnan(a.omega) || std::isnan(a.beta))
      throw Failure{kConfig, "config: --omega and --beta are required (or --params)"};
    check(wb_model_params_dimensionless(a.omega, a.beta, a.alpha, &m));
  }
  options["omega"] = m.omega;
  options["beta"] = m.beta;
  options["alpha"] = m.alpha;
  return m;
}

// ---- simulate ----

struct SimulateArgs {
  ModelArgs model;
  double epsilon = 0.0, horizon = 0.0, sample_step = 0.01, abs_tol = 1e-10, rel_tol = 1e-8;
  bool classify = false;
  std::string out = "trajectory";
};

int cmd_simulate(const SimulateArgs& a) {
  nlohmann::ordered_json options;
  const wb_model_params m = resolve_model(a.model, options);
  wb_integrate_options io{a.epsilon, a.horizon, a.abs_tol, a.rel_tol, a.sample_step};
  options["epsilon"] = a.epsilon;
  options["horizon"] = a.horizon;
  options["horizon_used"] = a.horizon > 0 ? a.horizon : 30.0 * std::sqrt(m.omega) / m.beta;
  options["sample_step"] = a.sample_step;
  options["abs_tol"] = a.abs_tol;
  options["rel_tol"] = a.rel_tol;
  options["classify"] = a.classify;
  options["out"] = a.out;

  TrajectoryHandle t;
  check(wb_integrate(&m, &io, &t.p));

  nlohmann::ordered_json extra;
  if (a.epsilon > 0.0) {
    wb_integrate_options io0 = io;
    io0.epsilon = 0.0;
    TrajectoryHandle t0;
    check(wb_integrate(&m, &io0, &t0.p));
    double d = 0.0;
    check(wb_trajectory_distance(t.p, t0.p, &d));
    extra["sup_difference_vs_epsilon0"] = d;
  }
  if (a.classify) {
    LibString lin;
    check(wb_linearize_json(m.omega, m.beta, &lin.p));
    extra["linearization"] = nlohmann::ordered_json::parse(lin.str());
    extra["approach"] = approach_json(t.p);
  }
  LibString summary;
  check(wb_trajectory_summary_json(t.p, &summary.p));

  const std::string csv = a.out + ".csv", js = a.out + ".json", gp = a.out + ".gp";
  check(wb_trajectory_write_csv(t.p, csv.c_str()));
  write_text(js, extra.empty() ? summary.str() : merge(summary.str(), extra));
  write_text(gp, gnuplot(csv, "H(T), omega=" + short_num(m.omega) + ", beta=" + short_num(m.beta), 5, 4,
                         "T", "H", 1.0));
  write_meta(a.out + ".meta.json", "simulate", options, {csv, js, gp});
  std::cout << "wrote " << csv << ", " << js << ", " << gp << "\n";
  return kOk;
}

// ---- picard ----

struct PicardArgs {
  double omega = NAN, beta = NAN, alpha = 0.0, horizon = 10.0, step = 0.0, tol = 1e-10;
  int max_iter = 10000;
  std::string out = "picard";
};

int cmd_picard(const PicardArgs& a) {
  wb_picard_options po{a.horizon, a.step, a.tol, a.max_iter};
  PicardHandle p;
  check(wb_picard_solve(a.omega, a.beta, a.alpha, &po, &p.p));
  LibString summary;
  check(wb_picard_summary_json(p.p, &summary.p));
  const std::string csv = a.out + ".csv", js = a.out + ".json", gp = a.out + ".gp";
  check(wb_picard_write_csv(p.p, csv.c_str()));
  write_text(js, summary.str());
  write_text(gp, gnuplot(csv, "Picard fixed point", 1, 2, "s", "u", 0.5));
  nlohmann::ordered_json options{{"omega", a.omega}, {"beta", a.beta},     {"alpha", a.alpha},
                                 {"horizon", a.horizon}, {"step", a.step}, {"tol", a.tol},
                                 {"max_iter", a.max_iter}, {"out", a.out}};
  write_meta(a.out + ".meta.json", "picard", options, {csv, js, gp});
  std::cout << "converged in " << wb_picard_iterations(p.p) << " iterations; wrote " << csv << ", " << js << "\n";
  return kOk;
}

// ---- classify ----

struct ClassifyArgs {
  ModelArgs model;
  double horizon = 0.0;
  std::string out;
};

int cmd_classify(const ClassifyArgs& a) {
  nlohmann::ordered_json options;
  const wb_model_params m = resolve_model(a.model, options);
  double horizon = a.horizon;
  if (!(horizon > 0.0)) check(wb_settling_horizon(m.omega, m.beta, &horizon));
  wb_integrate_options io;
  wb_integrate_options_default(&io);
  io.horizon = horizon;
  TrajectoryHandle t;
  check(wb_integrate(&m, &io, &t.p));
  LibString lin;
  check(wb_linearize_json(m.omega, m.beta, &lin.p));
  nlohmann::ordered_json doc;
  doc["omega"] = m.omega;
  doc["beta"] = m.beta;
  doc["alpha"] = m.alpha;
  doc["horizon"] = horizon;
  doc["linearization"] = nlohmann::ordered_json::parse(lin.str());
  doc["approach"] = approach_json(t.p);
  emit(doc.dump(2) + "\n", a.out);
  return kOk;
}

// ---- basin ----

int cmd_basin(double alpha, const std::string& out) {
  LibString s;
  check(wb_basin_json(alpha, &s.p));
  emit(s.str(), out);
  return kOk;
}

// ---- regime ----

struct RegimeArgs {
  std::string case_name;
  double beta = 1.0, alpha = 0.0, horizon = 10.0, dt = 0.01, b = 0.25;
  std::string out = "regime";
};

int cmd_regime(const RegimeArgs& a) {
  int id = 0;
  check(wb_regime_case_from_string(a.case_name.c_str(), &id));
  wb_regime_options ro;
  wb_regime_options_default(&ro);
  ro.alpha = a.alpha;
  ro.horizon = a.horizon;
  ro.sample_step = a.dt;
  ro.case3_b = a.b;
  RegimeHandle r;
  check(wb_regime_run(id, a.beta, &ro, &r.p));
  LibString summary;
  check(wb_regime_summary_json(r.p, &summary.p));
  const std::string csv = a.out + ".csv", js = a.out + ".json", gp = a.out + ".gp";
  check(wb_regime_write_csv(r.p, csv.c_str()));
  write_text(js, summary.str());
  write_text(gp, gnuplot(csv, "case " + std::to_string(id) + ", beta=" + short_num(a.beta), 1, 4, "t*", "h*",
                         NAN));
  nlohmann::ordered_json options{{"case", a.case_name}, {"beta", a.beta}, {"alpha", a.alpha},
                                 {"horizon", a.horizon}, {"dt", a.dt},    {"b", a.b},
                                 {"abs_tol", ro.abs_tol}, {"rel_tol", ro.rel_tol}, {"out", a.out}};
  write_meta(a.out + ".meta.json", "regime", options, {csv, js, gp});
  std::cout << "max |residual| = " << wb_regime_max_residual(r.p) << "; wrote " << csv << ", " << js << "\n";
  return kOk;
}

// ---- nondim ----

int cmd_nondim(const std::string& file, const std::string& out) {
  wb_physical_params p{};
  check(wb_parse_physical_params(read_text(file).c_str(), &p));
  wb_model_params m{};
  check(wb_nondimensionalize(&p, &m));
  LibString s;
  check(wb_model_params_json(&m, &s.p));
  emit(s.str(), out);
  return kOk;
}

// ---- verify ----

int cmd_verify(const std::string& only, const std::string& out, bool serial) {
  LibString report;
  int passed = 0;
  check(wb_verify(only.c_str(), serial ? 0 : 1, &report.p, &passed));
  const auto doc = nlohmann::json::parse(report.str());
  for (const auto& s : doc["suites"]) {
    std::printf("%s  %-36s %8.3f s  %s\n", s["passed"].get<bool>() ? "PASS" : "FAIL",
                s["name"].get<std::string>().c_str(), s["seconds"].get<double>(),
                s["detail"].get<std::string>().c_str());
  }
  write_text(out, report.str());
  std::printf("%zu/%zu suites passed; report written to %s\n",
              doc["total"].get<std::size_t>() - doc["failed"].get<std::size_t>(), doc["total"].get<std::size_t>(),
              out.c_str());
  return passed ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capillary rise with wall slip: simulation, analysis and verification"};
  app.set_version_flag("--version", std::string(wb_version()));
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "integrate the u-form model; write CSV, summary JSON and plot script");
  add_model_options(simulate, sim.model, true);
  simulate->add_option("--epsilon", sim.epsilon, "regularization eps >= 0")->capture_default_str();
  simulate->add_option("--horizon", sim.horizon, "horizon S; 0 selects 30 sqrt(omega)/beta")->capture_default_str();
  simulate->add_option("--sample-step", sim.sample_step, "sample spacing in s")->capture_default_str();
  simulate->add_option("--abs-tol", sim.abs_tol, "absolute tolerance")->capture_default_str();
  simulate->add_option("--rel-tol", sim.rel_tol, "relative tolerance")->capture_default_str();
  simulate->add_flag("--classify", sim.classify, "add linearization and approach classification to the summary");
  simulate->add_option("--out", sim.out, "output prefix (.csv, .json, .gp, .meta.json)")->capture_default_str();

  PicardArgs pic;
  auto* picard = app.add_subcommand("picard", "solve the Volterra formulation by Picard iteration");
  picard->add_option("--omega", pic.omega, "dimensionless omega > 0")->required();
  picard->add_option("--beta", pic.beta, "slip parameter > 0")->required();
  picard->add_option("--alpha", pic.alpha, "initial height in [0, 3/2]")->capture_default_str();
  picard->add_option("--horizon", pic.horizon, "horizon S")->capture_default_str();
  picard->add_option("--step", pic.step, "grid step h; 0 selects S/4096")->capture_default_str();
  picard->add_option("--tol", pic.tol, "stop when the sup-norm update is below tol")->capture_default_str();
  picard->add_option("--max-iter", pic.max_iter, "iteration cap")->capture_default_str();
  picard->add_option("--out", pic.out, "output prefix")->capture_default_str();

  ClassifyArgs cls;
  auto* classify = app.add_subcommand("classify", "eigenvalues and monotone/oscillatory approach (JSON)");
  add_model_options(classify, cls.model, true);
  classify->add_option("--horizon", cls.horizon, "horizon; 0 selects 30/|Re lambda_slow|")->capture_default_str();
  classify->add_option("--out", cls.out, "write JSON here instead of stdout");

  double basin_alpha = 0.0;
  std::string basin_out;
  auto* basin = app.add_subcommand("basin", "basin-of-attraction constants for alpha (JSON)");
  basin->add_option("--alpha", basin_alpha, "initial height in [0, 3/2]")->required();
  basin->add_option("--out", basin_out, "write JSON here instead of stdout");

  RegimeArgs reg;
  auto* regime = app.add_subcommand("regime", "integrate a reduced flow regime against its oracle");
  regime->add_option("--case", reg.case_name, "1-4 or negligible_gravity | negligible_inertia | "
                                              "negligible_gravity_inertia | negligible_viscosity")
      ->required();
  regime->add_option("--beta", reg.beta, "slip parameter > 0")->capture_default_str();
  regime->add_option("--alpha", reg.alpha, "initial h*")->capture_default_str();
  regime->add_option("--horizon", reg.horizon, "t* range")->capture_default_str();
  regime->add_option("--dt", reg.dt, "sample spacing in t*")->capture_default_str();
  regime->add_option("--b", reg.b, "case 3 exponent b in (0, 1/2)")->capture_default_str();
  regime->add_option("--out", reg.out, "output prefix")->capture_default_str();

  std::string nondim_file, nondim_out;
  auto* nondim = app.add_subcommand("nondim", "dimensionless groups from a physical-parameter JSON file");
  nondim->add_option("--params", nondim_file, "JSON with rho, mu, gamma, theta_deg, g, R, L, h0")->required();
  nondim->add_option("--out", nondim_out, "write JSON here instead of stdout");

  std::string only, verify_out = "verify_report.json";
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "run invariant suites and acceptance criteria");
  verify->add_option("--only", only, "run suites whose name contains this text");
  verify->add_option("--out", verify_out, "report path")->capture_default_str();
  verify->add_flag("--serial", serial, "run suites one at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (*simulate) return cmd_simulate(sim);
    if (*picard) return cmd_picard(pic);
    if (*classify) return cmd_classify(cls);
    if (*basin) return cmd_basin(basin_alpha, basin_out);
    if (*regime) return cmd_regime(reg);
    if (*nondim) return cmd_nondim(nondim_file, nondim_out);
    if (*verify) return cmd_verify(only, verify_out, serial);
  } catch (const Failure& f) {
    std::cerr << "washburn: " << f.message << "\n";
    return f.exit_code;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "washburn: internal: " << e.what() << "\n";
    return kNumeric;
  }
  return kConfig;
}

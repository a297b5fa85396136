#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "washburn/washburn.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { wb_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

double half_square(double beta, void*) { return beta * beta / 2.0; }

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::string(wb_status_name(WB_OK)) == "ok");
  CHECK(std::string(wb_version()).size() > 0);
  wb_model_params m;
  CHECK(wb_model_params_dimensionless(-1.0, 1.0, 0.0, &m) == WB_E_DOMAIN);
  CHECK(std::string(wb_last_error()).find("omega") != std::string::npos);
  CHECK(wb_model_params_dimensionless(1.0, 1.0, 0.0, &m) == WB_OK);
  CHECK(std::string(wb_last_error()).empty());
  CHECK(wb_model_params_dimensionless(1.0, 1.0, 0.0, nullptr) == WB_E_DOMAIN);
}

TEST_CASE("parameters") {
  wb_model_params m;
  REQUIRE(wb_model_params_dimensionless(0.5, 0.5, 0.2, &m) == WB_OK);
  CHECK(m.omega_star == 0.0625);
  CHECK(m.has_scales == 0);
  double w = 0.0;
  CHECK(wb_critical_omega(1.0, &w) == WB_OK);
  CHECK(w == 0.25);
  double u = 0.0, H = 0.0;
  CHECK(wb_u_from_H(1.0, &u) == WB_OK);
  CHECK(u == 0.5);
  CHECK(wb_H_from_u(0.5, &H) == WB_OK);
  CHECK(H == 1.0);

  wb_physical_params p;
  const char* doc =
      R"({"rho":1000,"mu":0.001,"gamma":0.072,"theta_deg":0,"g":9.81,"R":0.0005,"L":0.1,"h0":0})";
  REQUIRE(wb_parse_physical_params(doc, &p) == WB_OK);
  wb_model_params d;
  REQUIRE(wb_nondimensionalize(&p, &d) == WB_OK);
  CHECK(d.has_scales == 1);
  CHECK(d.omega > 0.0);
  Owned js;
  REQUIRE(wb_model_params_json(&d, &js.p) == WB_OK);
  CHECK(js.str().find("\"advisories\"") != std::string::npos);
  CHECK(wb_parse_physical_params("{}", &p) == WB_E_DOMAIN);
}

TEST_CASE("dynamics") {
  double du = 1.0, dv = 1.0, Hdd = 1.0;
  CHECK(wb_rhs_u(0.5, 0.0, 1.0, 1.0, 0.0, &du, &dv) == WB_OK);
  CHECK(du == 0.0);
  CHECK(dv == 0.0);
  CHECK(wb_rhs_H(0.0, 0.0, 1.0, 1.0, &Hdd) == WB_E_SINGULARITY);
}

TEST_CASE("trajectory handle") {
  wb_model_params m;
  REQUIRE(wb_model_params_dimensionless(1.0, 0.5, 0.0, &m) == WB_OK);
  wb_integrate_options opt;
  wb_integrate_options_default(&opt);
  CHECK(opt.horizon == 0.0);
  CHECK(opt.abs_tol == 1e-10);
  wb_trajectory* t = nullptr;
  REQUIRE(wb_integrate(&m, &opt, &t) == WB_OK);
  REQUIRE(t != nullptr);
  const size_t n = wb_trajectory_size(t);
  CHECK(n > 1000);
  wb_sample first, last;
  CHECK(wb_trajectory_sample(t, 0, &first) == WB_OK);
  CHECK(first.V == doctest::Approx(1.0 / 6.0));
  CHECK(wb_trajectory_sample(t, n - 1, &last) == WB_OK);
  CHECK(wb_trajectory_sample(t, n, &last) == WB_E_DOMAIN);
  double u = 0.0, v = 0.0;
  CHECK(wb_trajectory_at(t, 1.0, &u, &v) == WB_OK);
  CHECK(u > 0.0);
  CHECK(wb_trajectory_crossing_count(t) > 0);

  Owned summary, cls, audit;
  CHECK(wb_trajectory_summary_json(t, &summary.p) == WB_OK);
  CHECK(summary.str().find("crossings") != std::string::npos);
  CHECK(wb_audit_json(t, &audit.p) == WB_OK);
  CHECK(wb_classify_json(t, &cls.p) == WB_OK);
  CHECK(cls.str().find("Oscillatory") != std::string::npos);

  double dist = 1.0;
  CHECK(wb_trajectory_distance(t, t, &dist) == WB_OK);
  CHECK(dist == 0.0);
  CHECK(wb_trajectory_write_csv(t, "/nonexistent/dir/x.csv") == WB_E_IO);
  wb_trajectory_free(t);
  wb_trajectory_free(nullptr);

  opt.horizon = 1e9;
  CHECK(wb_integrate(&m, &opt, &t) == WB_E_HORIZON);
  opt.horizon = 1.0;
  REQUIRE(wb_integrate(&m, &opt, &t) == WB_OK);
  Owned undecided;
  CHECK(wb_classify_json(t, &undecided.p) == WB_E_INCONCLUSIVE);
  wb_trajectory_free(t);
}

TEST_CASE("stability") {
  wb_stability s;
  REQUIRE(wb_linearize(0.25, 1.0, &s) == WB_OK);
  CHECK(s.kind == WB_STABLE_INFLECTED_NODE);
  double E = 0.0, V = 1.0;
  CHECK(wb_lyapunov(0.5, 0.0, &E, &V) == WB_OK);
  CHECK(V == 0.0);
  wb_basin b;
  CHECK(wb_basin_spec(0.0, &b) == WB_OK);
  CHECK(b.C == doctest::Approx(1.0 / 6.0));
  CHECK(wb_basin_spec(2.0, &b) == WB_E_DOMAIN);
  double S = 0.0;
  CHECK(wb_settling_horizon(1.0, 1.0, &S) == WB_OK);
  CHECK(S == doctest::Approx(60.0));
}

TEST_CASE("Picard handle") {
  wb_picard_options opt;
  wb_picard_options_default(&opt);
  opt.horizon = 5.0;
  wb_picard* p = nullptr;
  REQUIRE(wb_picard_solve(1.0, 1.0, 0.0, &opt, &p) == WB_OK);
  CHECK(wb_picard_size(p) == 4097);
  double s = 0.0, u = 0.0;
  CHECK(wb_picard_value(p, 4096, &s, &u) == WB_OK);
  CHECK(s == 5.0);
  CHECK(wb_picard_iterations(p) > 1);
  wb_picard_free(p);
  opt.max_iter = 1;
  CHECK(wb_picard_solve(1.0, 1.0, 0.0, &opt, &p) == WB_E_NON_CONVERGENCE);
}

TEST_CASE("regime handle") {
  int id = 0;
  CHECK(wb_regime_case_from_string("negligible_viscosity", &id) == WB_OK);
  CHECK(id == 4);
  CHECK(wb_regime_case_from_string("7", &id) == WB_E_DOMAIN);
  wb_regime_options opt;
  wb_regime_options_default(&opt);
  wb_regime* r = nullptr;
  REQUIRE(wb_regime_run(1, 0.5, &opt, &r) == WB_OK);
  CHECK(wb_regime_size(r) == 1001);
  CHECK(wb_regime_max_residual(r) < 1e-9);
  wb_regime_free(r);
  Owned ex;
  CHECK(wb_regime_exponents_json(3, &ex.p) == WB_OK);
  CHECK(ex.str().find("family") != std::string::npos);
}

TEST_CASE("verification through the C interface") {
  Owned names;
  REQUIRE(wb_verify_suite_names(&names.p) == WB_OK);
  CHECK(names.str().find("acceptance.11_convergence") != std::string::npos);

  Owned report;
  int ok = 0;
  REQUIRE(wb_verify("basin", 0, &report.p, &ok) == WB_OK);
  CHECK(ok == 1);

  Owned mutated;
  REQUIRE(wb_verify_with_oracle("classification_boundary", 0, half_square, nullptr, &mutated.p, &ok) ==
          WB_OK);
  CHECK(ok == 0);
  Owned none;
  CHECK(wb_verify("no_such_suite", 0, &none.p, &ok) == WB_E_DOMAIN);
}

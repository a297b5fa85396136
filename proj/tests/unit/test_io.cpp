#include <sstream>
#include <string>

#include "support.hpp"
#include "washburn/io.hpp"

using namespace washburn;
using test::code_of;

TEST_SUITE("io") {

TEST_CASE("number formatting") {
  CHECK(io::format_double(0.0) == "0");
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(-2.5) == "-2.5");
  CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("JSON writer") {
  io::JsonObject child;
  child.add("x", 1);
  io::JsonObject o;
  o.add("a", 0.5).add("b", true).add("s", "q\"t").add("v", std::vector<double>{1.0, 2.0}).add("c", child);
  const std::string s = o.str(0);
  CHECK(s.find("\"a\": 0.5") != std::string::npos);
  CHECK(s.find("\"b\": true") != std::string::npos);
  CHECK(s.find("\"s\": \"q\\\"t\"") != std::string::npos);
  CHECK(s.find("\"c\": {\n\"x\": 1\n}") != std::string::npos);
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(io::quote("a\nb") == "\"a\\nb\"");
}

TEST_CASE("physical parameter documents") {
  const std::string ok =
      R"({"rho":1000,"mu":0.001,"gamma":0.072,"theta_deg":0,"g":9.81,"R":0.0005,"L":0.1,"h0":0})";
  const PhysicalParams p = io::parse_physical_params(ok);
  CHECK(p.rho == 1000.0);
  CHECK(p.theta == 0.0);
  CHECK(code_of([] { io::parse_physical_params("{"); }) == Errc::domain);
  CHECK(code_of([] { io::parse_physical_params(R"({"rho":1})"); }) == Errc::domain);
  CHECK(code_of([&] { io::parse_physical_params(ok.substr(0, ok.size() - 1) + R"(,"extra":1})"); }) ==
        Errc::domain);
  CHECK(code_of([] {
          io::parse_physical_params(
              R"({"rho":"x","mu":0.001,"gamma":0.072,"theta_deg":0,"g":9.81,"R":0.0005,"L":0.1,"h0":0})");
        }) == Errc::domain);
}

TEST_CASE("CSV output") {
  const Trajectory t = integrate(ModelParams::dimensionless(1.0, 1.0, 0.0));
  std::ostringstream a, b;
  io::write_trajectory_csv(a, t);
  io::write_trajectory_csv(b, integrate(ModelParams::dimensionless(1.0, 1.0, 0.0)));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("s,u,v,H,T,E,V\n0,0,0,0,0,0,0.16666666666666666\n", 0) == 0);
  CHECK(a.str().find('\r') == std::string::npos);

  std::ostringstream g;
  io::write_grid_csv(g, sample_grid(0.5, 2, [](double s) { return s; }));
  CHECK(g.str() == "s,u\n0,0\n0.5,0.5\n1,1\n");

  std::ostringstream r;
  io::write_regime_csv(r, integrate_regime(RegimeCase::negligible_viscosity, 1.0, {}));
  CHECK(r.str().rfind("t,u,v,h,oracle,residual\n", 0) == 0);
}

TEST_CASE("gnuplot script") {
  const std::string s = io::gnuplot_script("x.csv", "t", 5, 4, "T", "H", 1.0);
  CHECK(s.find("\"x.csv\"") != std::string::npos);
  CHECK(s.find("using 5:4") != std::string::npos);
  CHECK(io::gnuplot_script("x.csv", "t", 1, 2, "s", "u").find("dt 2") == std::string::npos);
}

}

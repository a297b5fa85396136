#include "washburn/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "washburn/errors.hpp"

namespace washburn::io {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 40> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char tmp[8];
          std::snprintf(tmp, sizeof tmp, "\\u%04x", c);
          out += tmp;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

namespace {

// JSON has no NaN/Inf; emit null for them.
std::string json_number(double x) { return std::isfinite(x) ? format_double(x) : "null"; }

}  // namespace

JsonObject& JsonObject::add(std::string_view key, double value) { return add_raw(key, json_number(value)); }
JsonObject& JsonObject::add(std::string_view key, int value) { return add_raw(key, std::to_string(value)); }
JsonObject& JsonObject::add(std::string_view key, std::size_t value) {
  return add_raw(key, std::to_string(value));
}
JsonObject& JsonObject::add(std::string_view key, bool value) { return add_raw(key, value ? "true" : "false"); }
JsonObject& JsonObject::add(std::string_view key, std::string_view value) { return add_raw(key, quote(value)); }

JsonObject& JsonObject::add(std::string_view key, const std::vector<double>& values) {
  std::string raw = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) raw += ", ";
    raw += json_number(values[i]);
  }
  return add_raw(key, raw + "]");
}

JsonObject& JsonObject::add(std::string_view key, const JsonObject& child) {
  entries_.push_back({std::string(key), {}, {child}, Entry::object});
  return *this;
}

JsonObject& JsonObject::add(std::string_view key, const std::vector<JsonObject>& children) {
  entries_.push_back({std::string(key), {}, children, Entry::array});
  return *this;
}

JsonObject& JsonObject::add_raw(std::string_view key, std::string raw) {
  entries_.push_back({std::string(key), std::move(raw), {}, Entry::raw_value});
  return *this;
}

std::string JsonObject::render(int indent, int depth) const {
  if (entries_.empty()) return "{}";
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  std::string out = "{\n";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    out += pad + quote(e.key) + ": ";
    switch (e.kind) {
      case Entry::raw_value: out += e.raw; break;
      case Entry::object: out += e.children.front().render(indent, depth + 1); break;
      case Entry::array:
        if (e.children.empty()) {
          out += "[]";
        } else {
          const std::string item_pad(static_cast<std::size_t>(indent * (depth + 2)), ' ');
          out += "[\n";
          for (std::size_t j = 0; j < e.children.size(); ++j) {
            out += item_pad + e.children[j].render(indent, depth + 2);
            out += j + 1 < e.children.size() ? ",\n" : "\n";
          }
          out += pad + "]";
        }
        break;
    }
    out += i + 1 < entries_.size() ? ",\n" : "\n";
  }
  return out + close_pad + "}";
}

std::string JsonObject::str(int indent) const { return render(indent, 0) + "\n"; }

PhysicalParams parse_physical_params(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw_domain("params", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw_domain("params", "expected a JSON object");
  static const std::set<std::string> keys{"rho", "mu", "gamma", "theta_deg", "g", "R", "L", "h0"};
  for (const auto& [k, v] : doc.items()) {
    if (!keys.count(k)) throw_domain(k, "unexpected key");
    if (!v.is_number()) throw_domain(k, "must be a number");
  }
  for (const auto& k : keys)
    if (!doc.contains(k)) throw_domain(k, "missing key");

  PhysicalParams p;
  p.rho = doc["rho"].get<double>();
  p.mu = doc["mu"].get<double>();
  p.gamma = doc["gamma"].get<double>();
  p.theta = doc["theta_deg"].get<double>() * std::numbers::pi / 180.0;
  p.g = doc["g"].get<double>();
  p.R = doc["R"].get<double>();
  p.L = doc["L"].get<double>();
  p.h0 = doc["h0"].get<double>();
  return p;
}

JsonObject to_json(const ModelParams& m) {
  JsonObject o;
  o.add("omega", m.omega()).add("beta", m.beta()).add("alpha", m.alpha()).add("omega_star", m.omega_star());
  if (const auto& sc = m.scales()) {
    o.add("h_e", sc->h_e).add("tau", sc->tau).add("Oh", sc->Oh).add("Bo", sc->Bo);
  }
  return o;
}

namespace {

JsonObject complex_json(std::complex<double> z) {
  JsonObject o;
  o.add("re", z.real()).add("im", z.imag());
  return o;
}

}  // namespace

JsonObject to_json(const StabilityReport& r) {
  JsonObject o;
  o.add("lambda1", complex_json(r.lambda1))
      .add("lambda2", complex_json(r.lambda2))
      .add("kind", to_string(r.kind))
      .add("omega_star", r.omega_star)
      .add("discriminant", r.discriminant);
  if (r.has_real_eigenvector)
    o.add("eigenvector_slow", std::vector<double>{r.eigenvector_slow[0], r.eigenvector_slow[1]});
  return o;
}

JsonObject to_json(const BasinSpec& b) {
  JsonObject o;
  o.add("alpha", b.alpha)
      .add("C", b.C)
      .add("u_min", b.u_min)
      .add("u_max", b.u_max)
      .add("residual_u_min", basin_residual(b, b.u_min))
      .add("residual_u_max", basin_residual(b, b.u_max));
  return o;
}

JsonObject to_json(const Crossing& c) {
  JsonObject o;
  o.add("s", c.s).add("direction", c.direction);
  return o;
}

JsonObject to_json(const ApproachReport& r) {
  std::vector<JsonObject> cs;
  for (const auto& c : r.crossings) cs.push_back(to_json(c));
  JsonObject o;
  o.add("kind", to_string(r.kind)).add("crossings", cs).add("final_distance", r.final_distance);
  return o;
}

JsonObject to_json(const AuditReport& r) {
  JsonObject o;
  o.add("initial_V_minus_C", r.initial_V_minus_C)
      .add("max_V_minus_C", r.max_V_minus_C)
      .add("max_V_increase", r.max_V_increase)
      .add("final_distance", r.final_distance)
      .add("forward_invariant", r.forward_invariant);
  return o;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "s,u,v,H,T,E,V\n";
  for (const Sample& r : traj.samples()) {
    os << format_double(r.s) << ',' << format_double(r.u) << ',' << format_double(r.v) << ','
       << format_double(r.H) << ',' << format_double(r.T) << ',' << format_double(r.E) << ','
       << format_double(r.V) << '\n';
  }
}

void write_grid_csv(std::ostream& os, const GridFunction& f) {
  os << "s,u\n";
  for (std::size_t i = 0; i < f.values.size(); ++i)
    os << format_double(f.node(i)) << ',' << format_double(f.values[i]) << '\n';
}

void write_regime_csv(std::ostream& os, const RegimeRun& run) {
  os << "t,u,v,h,oracle,residual\n";
  for (const RegimeSample& r : run.samples) {
    os << format_double(r.t) << ',' << format_double(r.u) << ',' << format_double(r.v) << ','
       << format_double(r.h) << ',' << format_double(r.oracle) << ',' << format_double(r.residual)
       << '\n';
  }
}

JsonObject picard_sidecar(const PicardResult& r, double omega, double beta, double alpha,
                          double horizon, double tol, int max_iter) {
  JsonObject o;
  o.add("omega", omega)
      .add("beta", beta)
      .add("alpha", alpha)
      .add("horizon", horizon)
      .add("h", r.solution.step)
      .add("tol", tol)
      .add("max_iter", max_iter)
      .add("iterations", r.iterations)
      .add("final_diff", r.final_diff)
      .add("diffs", r.diffs);
  return o;
}

JsonObject regime_summary(const RegimeRun& run) {
  JsonObject o;
  o.add("case", to_string(run.spec.case_id))
      .add("case_id", static_cast<int>(run.spec.case_id))
      .add("a", run.spec.a)
      .add("b", run.spec.b)
      .add("beta", run.beta)
      .add("alpha", run.options.alpha)
      .add("horizon", run.options.horizon)
      .add("sample_step", run.options.sample_step)
      .add("residual_kind", run.residual_kind)
      .add("max_abs_residual", run.max_abs_residual);
  return o;
}

std::string gnuplot_script(std::string_view csv_path, std::string_view title, int xcol, int ycol,
                           std::string_view xlabel, std::string_view ylabel, double reference_level) {
  std::ostringstream os;
  os << "# gnuplot script; run: gnuplot -p <this file>\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set title " << quote(title) << "\n"
     << "set xlabel " << quote(xlabel) << "\n"
     << "set ylabel " << quote(ylabel) << "\n"
     << "set grid\n"
     << "plot " << quote(csv_path) << " using " << xcol << ':' << ycol << " with lines lw 2";
  if (std::isfinite(reference_level))
    os << ", " << format_double(reference_level) << " with lines dt 2 title 'equilibrium'";
  os << "\n";
  return os.str();
}

}  // namespace washburn::io

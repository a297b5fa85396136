#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "washburn/integrate.hpp"
#include "washburn/params.hpp"
#include "washburn/stability.hpp"
#include "washburn/volterra.hpp"

namespace washburn::io {

/// Shortest-free "%.17g" rendering, always with '.' as decimal separator.
std::string format_double(double x);

/// Ordered JSON object writer; numbers at 17 significant digits.
class JsonObject {
 public:
  JsonObject& add(std::string_view key, double value);
  JsonObject& add(std::string_view key, int value);
  JsonObject& add(std::string_view key, std::size_t value);
  JsonObject& add(std::string_view key, bool value);
  JsonObject& add(std::string_view key, std::string_view value);
  JsonObject& add(std::string_view key, const char* value) { return add(key, std::string_view(value)); }
  JsonObject& add(std::string_view key, const std::vector<double>& values);
  JsonObject& add(std::string_view key, const JsonObject& child);
  JsonObject& add(std::string_view key, const std::vector<JsonObject>& children);
  JsonObject& add_raw(std::string_view key, std::string raw);

  std::string str(int indent = 2) const;

 private:
  std::string render(int indent, int depth) const;
  // value is either a raw JSON token or a nested object/array
  struct Entry {
    std::string key;
    std::string raw;
    std::vector<JsonObject> children;
    enum { raw_value, object, array } kind = raw_value;
  };
  std::vector<Entry> entries_;
};

std::string quote(std::string_view s);

/// Parses the physical-parameter document. Keys must be exactly
/// {"rho","mu","gamma","theta_deg","g","R","L","h0"}; theta_deg is converted to radians.
PhysicalParams parse_physical_params(std::string_view json_text);

JsonObject to_json(const ModelParams& m);
JsonObject to_json(const StabilityReport& r);
JsonObject to_json(const BasinSpec& b);
JsonObject to_json(const ApproachReport& r);
JsonObject to_json(const AuditReport& r);
JsonObject to_json(const Crossing& c);

/// Header `s,u,v,H,T,E,V`, one row per sample, LF endings.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
/// Header `s,u`.
void write_grid_csv(std::ostream& os, const GridFunction& f);
/// Header `t,u,v,h,oracle,residual`.
void write_regime_csv(std::ostream& os, const RegimeRun& run);

JsonObject picard_sidecar(const PicardResult& r, double omega, double beta, double alpha,
                          double horizon, double tol, int max_iter);
JsonObject regime_summary(const RegimeRun& run);

/// Gnuplot script plotting column `ycol` against `xcol` of a CSV file.
std::string gnuplot_script(std::string_view csv_path, std::string_view title, int xcol, int ycol,
                           std::string_view xlabel, std::string_view ylabel,
                           double reference_level = std::numeric_limits<double>::quiet_NaN());

}  // namespace washburn::io

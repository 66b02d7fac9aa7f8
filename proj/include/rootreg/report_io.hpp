#ifndef ROOTREG_REPORT_IO_HPP
#define ROOTREG_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "rootreg/cubic.hpp"
#include "rootreg/regularity.hpp"

namespace rootreg {

using Json = nlohmann::json;

struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// CurveSpec document: degree, interval, smoothness, per-coefficient form
/// descriptors (kind "poly_t" | "trig" | "samples").  Throws SpecError naming
/// the offending field.
CoeffCurve parse_curve_spec(const Json& spec);
CoeffCurve parse_curve_spec_file(const std::string& path);

/// Pipeline configuration, merged as flags > config file > defaults.
struct RunConfig {
  GridConfig grid;
  std::vector<double> ps = {1.2, 1.5};
  std::vector<double> qs = {1.1, 1.2};
  double stability_threshold = 0.02;
  double strata_tol = 1e-9;
  unsigned long seed = 0;
  int refine = 0;  // halves displacement_cap this many times

  GridConfig effective_grid() const {
    GridConfig g = grid;
    for (int i = 0; i < refine; ++i) g.displacement_cap *= 0.5;
    return g;
  }
};

RunConfig parse_run_config(const Json& doc);
void apply_config_file(RunConfig& cfg, const std::string& path);

/// One JSON document per run.  `payload` is the deterministic, hashable part;
/// timestamps and environment notes live in `meta`.
struct ReportDocument {
  Json payload = Json::object();
  Json meta = Json::object();

  Json full() const;
  void write(const std::string& path) const;
};

ReportDocument make_report(const std::string& command, const Json& spec_echo,
                           const RunConfig& cfg);

Json track_stats_json(const RootTrack& track);
Json regularity_json(const RegularityReport& report);
Json chart_audit_json(const ChartAudit& audit);

/// One CSV per root: t, re, im and the per-cell derivative magnitude
/// (row i covers the cell [t_i, t_{i+1}]; the last row carries 0).
void write_track_csv(const RootTrack& track, const std::string& dir,
                     const std::string& basename);

}  // namespace rootreg

#endif

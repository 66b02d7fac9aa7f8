#include "rootreg/report_io.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

namespace rootreg {

namespace {

const Json& require(const Json& j, const char* field, const std::string& where) {
  if (!j.contains(field))
    throw SpecError(where + ": missing field \"" + field + "\"");
  return j.at(field);
}

std::vector<double> real_array(const Json& j, const char* field, const std::string& where) {
  const Json& arr = require(j, field, where);
  if (!arr.is_array()) throw SpecError(where + ": \"" + field + "\" must be an array");
  std::vector<double> out;
  for (const Json& v : arr) {
    if (!v.is_number()) throw SpecError(where + ": \"" + field + "\" must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<double> optional_real_array(const Json& j, const char* field,
                                        const std::string& where, size_t len) {
  if (!j.contains(field)) return std::vector<double>(len, 0.0);
  std::vector<double> out = real_array(j, field, where);
  if (out.size() != len)
    throw SpecError(where + ": \"" + field + "\" length mismatch");
  return out;
}

CVec complex_vector(const std::vector<double>& re, const std::vector<double>& im) {
  CVec out(re.size());
  for (size_t i = 0; i < re.size(); ++i) out(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
  return out;
}

CoeffForm parse_form(const Json& j, const std::string& where) {
  const std::string kind = require(j, "kind", where).get<std::string>();
  if (kind == "poly_t") {
    const std::vector<double> re = real_array(j, "re", where);
    if (re.empty()) throw SpecError(where + ": \"re\" must be nonempty");
    return PolyForm{complex_vector(re, optional_real_array(j, "im", where, re.size()))};
  }
  if (kind == "trig") {
    const std::vector<double> freqs = real_array(j, "freqs", where);
    const size_t m = freqs.size();
    TrigForm f;
    f.freqs = Eigen::Map<const RVec>(freqs.data(), static_cast<Eigen::Index>(m));
    f.cos_amps = complex_vector(optional_real_array(j, "cos_re", where, m),
                                optional_real_array(j, "cos_im", where, m));
    f.sin_amps = complex_vector(optional_real_array(j, "sin_re", where, m),
                                optional_real_array(j, "sin_im", where, m));
    return f;
  }
  if (kind == "samples") {
    const std::vector<double> ts = real_array(j, "t", where);
    const std::vector<double> re = real_array(j, "re", where);
    if (ts.size() != re.size()) throw SpecError(where + ": \"t\"/\"re\" length mismatch");
    SampleForm f;
    f.ts = Eigen::Map<const RVec>(ts.data(), static_cast<Eigen::Index>(ts.size()));
    f.values = complex_vector(re, optional_real_array(j, "im", where, re.size()));
    if (j.contains("order")) f.order = j.at("order").get<int>();
    return f;
  }
  throw SpecError(where + ": unknown kind \"" + kind + "\"");
}

}  // namespace

CoeffCurve parse_curve_spec(const Json& spec) {
  const std::string where = "curve spec";
  const int degree = require(spec, "degree", where).get<int>();
  if (degree < 1) throw SpecError(where + ": \"degree\" must be >= 1");
  const Json& interval = require(spec, "interval", where);
  if (!interval.is_array() || interval.size() != 2)
    throw SpecError(where + ": \"interval\" must be [t0, t1]");

  CoeffCurve curve;
  curve.t0 = interval.at(0).get<double>();
  curve.t1 = interval.at(1).get<double>();
  if (!(curve.t0 < curve.t1)) throw SpecError(where + ": \"interval\" needs t0 < t1");
  if (spec.contains("smoothness")) curve.smoothness = spec.at("smoothness").get<int>();

  const Json& coeffs = require(spec, "coeffs", where);
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != degree)
    throw SpecError(where + ": coeffs length != degree");
  for (size_t j = 0; j < coeffs.size(); ++j)
    curve.coeff_forms.push_back(
        parse_form(coeffs.at(j), where + ", coeffs[" + std::to_string(j) + "]"));
  try {
    curve.validate();
  } catch (const std::invalid_argument& e) {
    throw SpecError(where + ": " + e.what());
  }
  return curve;
}

CoeffCurve parse_curve_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file: " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    throw SpecError(std::string("spec is not valid JSON: ") + e.what());
  }
  return parse_curve_spec(doc);
}

RunConfig parse_run_config(const Json& doc) {
  RunConfig cfg;
  auto get = [&](const char* field, auto& target) {
    if (doc.contains(field)) target = doc.at(field).get<std::decay_t<decltype(target)>>();
  };
  get("initial_points", cfg.grid.initial_points);
  get("displacement_cap", cfg.grid.displacement_cap);
  get("min_step", cfg.grid.min_step);
  get("max_points", cfg.grid.max_points);
  get("collision_factor", cfg.grid.collision_factor);
  get("solver_tol", cfg.grid.solver.tol);
  get("solver_max_iters", cfg.grid.solver.max_iters);
  get("ps", cfg.ps);
  get("qs", cfg.qs);
  get("stability_threshold", cfg.stability_threshold);
  get("strata_tol", cfg.strata_tol);
  get("seed", cfg.seed);
  get("refine", cfg.refine);
  return cfg;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open config file: " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    throw SpecError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig merged = parse_run_config(doc);
  cfg = merged;
}

Json ReportDocument::full() const {
  Json out = payload;
  out["meta"] = meta;
  return out;
}

void ReportDocument::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  out << full().dump(2) << "\n";
}

ReportDocument make_report(const std::string& command, const Json& spec_echo,
                           const RunConfig& cfg) {
  ReportDocument doc;
  doc.payload["tool"] = "rootreg";
  doc.payload["version"] = "0.1.0";
  doc.payload["command"] = command;
  doc.payload["spec"] = spec_echo;
  doc.payload["config"] = {{"initial_points", cfg.grid.initial_points},
                           {"displacement_cap", cfg.effective_grid().displacement_cap},
                           {"min_step", cfg.grid.min_step},
                           {"max_points", cfg.grid.max_points},
                           {"solver_tol", cfg.grid.solver.tol},
                           {"seed", cfg.seed}};
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  doc.meta["unix_time"] =
      std::chrono::duration_cast<std::chrono::seconds>(now).count();
  return doc;
}

Json track_stats_json(const RootTrack& track) {
  return {{"points", track.points()},
          {"degree", track.degree()},
          {"refinement_rounds", track.refinement_rounds},
          {"t0", track.grid.front()},
          {"t1", track.grid.back()},
          {"max_step_displacement", track.max_step_displacement()}};
}

Json regularity_json(const RegularityReport& report) {
  Json roots = Json::array();
  auto entries = [](const std::vector<NormEntry>& list) {
    Json out = Json::array();
    for (const NormEntry& e : list)
      out.push_back({{"exponent", e.exponent},
                     {"value", e.value},
                     {"coarse_value", e.coarse_value},
                     {"verdict", e.stable ? "stable" : "diverging"}});
    return out;
  };
  for (const RootReport& rr : report.roots)
    roots.push_back({{"sup_norm", rr.sup_norm},
                     {"weak_norms", entries(rr.weak_norms)},
                     {"lq_norms", entries(rr.lq_norms)}});
  return {{"fine_points", report.fine_points},
          {"coarse_points", report.coarse_points},
          {"stability_threshold", report.stability_threshold},
          {"roots", roots}};
}

Json chart_audit_json(const ChartAudit& audit) {
  return {{"c_audit", audit.c_audit},
          {"k", audit.k},
          {"p_exponent", audit.p_exponent},
          {"lambda_quasinorm", audit.lambda_quasinorm},
          {"lambda_quasinorm_coarse", audit.lambda_quasinorm_coarse},
          {"est_pointwise", audit.est_pointwise}};
}

void write_track_csv(const RootTrack& track, const std::string& dir,
                     const std::string& basename) {
  std::filesystem::create_directories(dir);
  const int n = track.degree();
  for (int j = 0; j < n; ++j) {
    const std::string path =
        dir + "/" + basename + "_root" + std::to_string(j) + ".csv";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write CSV: " + path);
    out << "t,re,im,abs_dlambda_dt\n";
    out.precision(17);
    for (int i = 0; i < track.points(); ++i) {
      double deriv = 0.0;
      if (i + 1 < track.points())
        deriv = std::abs(track.values[i + 1](j) - track.values[i](j)) /
                (track.grid[i + 1] - track.grid[i]);
      out << track.grid[i] << "," << track.values[i](j).real() << ","
          << track.values[i](j).imag() << "," << deriv << "\n";
    }
  }
}

}  // namespace rootreg

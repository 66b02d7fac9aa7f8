#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "rootreg/acceptance.hpp"
#include "rootreg/report_io.hpp"

namespace {

using namespace rootreg;
namespace fs = std::filesystem;

struct CommonArgs {
  std::string spec_path, config_path, out_path, csv_dir;
  unsigned long seed = 0;
  int refine = 0;
  std::vector<double> ps, qs;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool spec_required = true) {
  auto* spec = cmd->add_option("--spec", args.spec_path, "curve spec (JSON)");
  if (spec_required) spec->required();
  cmd->add_option("--config", args.config_path, "config file (JSON)");
  cmd->add_option("--out", args.out_path, "report output path");
  cmd->add_option("--csv", args.csv_dir, "directory for CSV sidecars");
  cmd->add_option("--seed", args.seed, "PRNG seed");
  cmd->add_option("--refine", args.refine, "extra refinement doublings");
  cmd->add_option("--p", args.ps, "weak-L^p exponents")->delimiter(',');
  cmd->add_option("--q", args.qs, "L^q exponents")->delimiter(',');
}

RunConfig load_config(const CommonArgs& args) {
  RunConfig cfg;
  if (!args.config_path.empty()) apply_config_file(cfg, args.config_path);
  if (!args.ps.empty()) cfg.ps = args.ps;
  if (!args.qs.empty()) cfg.qs = args.qs;
  if (args.seed != 0) cfg.seed = args.seed;
  if (args.refine != 0) cfg.refine = args.refine;
  cfg.grid.solver.phase_seed = static_cast<double>(cfg.seed % 1000) / 1000.0;
  return cfg;
}

Json spec_echo(const std::string& path) {
  std::ifstream in(path);
  Json doc;
  in >> doc;
  return doc;
}

void emit(const ReportDocument& doc, const std::string& out_path) {
  if (out_path.empty())
    std::cout << doc.full().dump(2) << "\n";
  else
    doc.write(out_path);
}

int cmd_track(const CommonArgs& args) {
  const RunConfig cfg = load_config(args);
  const CoeffCurve curve = parse_curve_spec_file(args.spec_path);
  const RootTrack tr = track(curve, cfg.effective_grid());
  ReportDocument doc = make_report("track", spec_echo(args.spec_path), cfg);
  doc.payload["track"] = track_stats_json(tr);
  if (!args.csv_dir.empty()) write_track_csv(tr, args.csv_dir, "track");
  emit(doc, args.out_path);
  return 0;
}

int cmd_regularity(const CommonArgs& args) {
  const RunConfig cfg = load_config(args);
  const CoeffCurve curve = parse_curve_spec_file(args.spec_path);
  const RegularityReport rep =
      report(curve, cfg.effective_grid(), cfg.ps, cfg.qs, cfg.stability_threshold);
  ReportDocument doc = make_report("regularity", spec_echo(args.spec_path), cfg);
  doc.payload["regularity"] = regularity_json(rep);
  if (!args.csv_dir.empty())
    write_track_csv(track(curve, cfg.effective_grid()), args.csv_dir, "regularity");
  emit(doc, args.out_path);
  return 0;
}

int cmd_charts(const CommonArgs& args, int samples) {
  const RunConfig cfg = load_config(args);
  ReportDocument doc = make_report(
      "charts", args.spec_path.empty() ? Json() : spec_echo(args.spec_path), cfg);

  if (!args.spec_path.empty()) {
    const CoeffCurve curve = parse_curve_spec_file(args.spec_path);
    const ChartAudit audit = derivative_bound_audit(curve, 1.0 / 6.0, cfg.effective_grid());
    doc.payload["audit"] = chart_audit_json(audit);
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    int accepted = 0;
    for (int i = 0; i < samples; ++i) {
      const Complex p(u(rng), u(rng)), q(u(rng), u(rng));
      if (p == 0.0 && q == 0.0) continue;
      worst = std::max(worst, chart_consistency(p, q));
      ++accepted;
    }
    doc.payload["sweep"] = {{"samples", accepted}, {"max_deviation", worst}};
  }
  emit(doc, args.out_path);
  return 0;
}

int cmd_strata(const CommonArgs& args) {
  const RunConfig cfg = load_config(args);
  const CoeffCurve curve = parse_curve_spec_file(args.spec_path);
  const int samples = 101;
  Json rows = Json::array();
  for (int i = 0; i < samples; ++i) {
    const double t = curve.t0 + (curve.t1 - curve.t0) * i / (samples - 1);
    const MonicPoly poly = curve.poly_at(t);
    Json row = {{"t", t}, {"stratum", classify_stratum(poly, cfg.strata_tol)}};
    if (poly.degree() >= 2) {
      const SizeProfile prof = size_profile(solve_all(poly, cfg.grid.solver));
      row["size"] = prof.values;
    }
    rows.push_back(row);
  }
  ReportDocument doc = make_report("strata", spec_echo(args.spec_path), cfg);
  doc.payload["strata"] = rows;
  emit(doc, args.out_path);
  return 0;
}

int cmd_family(const CommonArgs& args) {
  const RunConfig cfg = load_config(args);
  std::vector<CoeffCurve> family;
  Json echo;
  if (fs::is_directory(args.spec_path)) {
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(args.spec_path))
      if (entry.path().extension() == ".json") paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) family.push_back(parse_curve_spec_file(p.string()));
    echo = {{"directory", args.spec_path}, {"count", family.size()}};
  } else {
    const Json doc = spec_echo(args.spec_path);
    if (doc.contains("generator")) {
      if (doc.at("generator") != "trig_cubic")
        throw SpecError("family: unknown generator");
      const int count = doc.value("count", 100);
      const unsigned long seed = doc.value("seed", cfg.seed);
      family = trig_cubic_family(count, seed);
      echo = doc;
    } else {
      family.push_back(parse_curve_spec(doc));
      echo = doc;
    }
  }
  if (family.empty()) throw SpecError("family: no curve specs found");

  Json per_curve = Json::array();
  double family_sup = 0.0;
  bool all_stable = true;
  for (size_t i = 0; i < family.size(); ++i) {
    const RegularityReport rep =
        report(family[i], cfg.effective_grid(), cfg.ps, cfg.qs, cfg.stability_threshold);
    Json entry = {{"index", i}, {"regularity", regularity_json(rep)}};
    for (const RootReport& rr : rep.roots)
      for (const NormEntry& e : rr.lq_norms) {
        family_sup = std::max(family_sup, e.value);
        all_stable = all_stable && e.stable;
      }
    per_curve.push_back(entry);
  }
  ReportDocument doc = make_report("family", echo, cfg);
  doc.payload["family"] = {{"curves", per_curve},
                           {"sup_lq", family_sup},
                           {"all_stable", all_stable}};
  emit(doc, args.out_path);
  return 0;
}

int cmd_verify() {
  const std::vector<CriterionResult> results = run_acceptance();
  bool all = true;
  for (const CriterionResult& r : results) {
    std::cout << "criterion " << r.id << " (" << r.name << "): "
              << (r.pass ? "PASS" : "FAIL") << " -- " << r.detail << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"root tracking and regularity certification for curves of monic polynomials"};
  app.require_subcommand(1);

  CommonArgs track_args, reg_args, charts_args, strata_args, family_args;
  int chart_samples = 10000;

  auto* c_track = app.add_subcommand("track", "track roots of a curve");
  add_common(c_track, track_args);
  auto* c_reg = app.add_subcommand("regularity", "weak-L^p / L^q report for a curve");
  add_common(c_reg, reg_args);
  auto* c_charts = app.add_subcommand("charts", "cubic chart audit or random sweep");
  add_common(c_charts, charts_args, false);
  c_charts->add_option("--samples", chart_samples, "sweep sample count");
  auto* c_strata = app.add_subcommand("strata", "stratum classification along a curve");
  add_common(c_strata, strata_args);
  auto* c_family = app.add_subcommand("family", "family uniformity run");
  add_common(c_family, family_args);
  auto* c_verify = app.add_subcommand("verify", "run the acceptance suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_track->parsed()) return cmd_track(track_args);
    if (c_reg->parsed()) return cmd_regularity(reg_args);
    if (c_charts->parsed()) return cmd_charts(charts_args, chart_samples);
    if (c_strata->parsed()) return cmd_strata(strata_args);
    if (c_family->parsed()) return cmd_family(family_args);
    if (c_verify->parsed()) return cmd_verify();
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const TrackError& e) {
    std::cerr << "tracking failure on [" << e.t_lo << ", " << e.t_hi << "]: " << e.what()
              << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

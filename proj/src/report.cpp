#include "regen/report.hpp"

#include <cstdio>

namespace regen {

std::string tool_version() {
#ifdef REGEN_VERSION
  return REGEN_VERSION;
#else
  return "0.1.0-unknown";
#endif
}

nlohmann::json report_envelope(const std::string& subcommand,
                               nlohmann::json config, nlohmann::json results) {
  return nlohmann::json{
      {"schema", "regen-report/1"},
      {"tool", {{"name", "regenset"}, {"version", tool_version()}}},
      {"subcommand", subcommand},
      {"config", std::move(config)},
      {"results", std::move(results)},
  };
}

nlohmann::json gapset_json(const GapSet& z) {
  nlohmann::json gaps = nlohmann::json::array();
  for (const auto& [l, r] : z.gaps) gaps.push_back({l, r});
  return nlohmann::json{
      {"empty", z.empty},
      {"hull", {z.lo, z.hi}},
      {"gaps", std::move(gaps)},
      {"resolution", z.resolution},
  };
}

nlohmann::json dim_estimate_json(const DimEstimate& est) {
  nlohmann::json scales = nlohmann::json::array();
  for (const auto& [eps, count] : est.scales) scales.push_back({eps, count});
  return nlohmann::json{
      {"slope", est.slope},
      {"std_err", est.std_err},
      {"r2", est.r2},
      {"narrow_range", est.narrow_range},
      {"scales", std::move(scales)},
  };
}

nlohmann::json window_profile_json(std::span<const WindowEstimate> windows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& w : windows) {
    nlohmann::json row{{"lo", w.lo}, {"hi", w.hi}, {"occupied", w.occupied}};
    if (w.occupied) row["estimate"] = dim_estimate_json(w.est);
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::json validation_json(std::span<const StableValidationRow> rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"lambda", r.lambda},
                   {"empirical", r.empirical},
                   {"target", r.target},
                   {"z", r.z},
                   {"n", r.n}});
  }
  return out;
}

nlohmann::json local_time_json(const LocalTimeProfile& profile) {
  return nlohmann::json{{"grid", profile.grid}, {"values", profile.values}};
}

nlohmann::json dichotomy_json(const DichotomyReport& report) {
  nlohmann::json rungs = nlohmann::json::array();
  for (const auto& r : report.rungs) {
    rungs.push_back({{"delta", r.delta},
                     {"hits", r.hits},
                     {"trials", r.trials},
                     {"rate", r.rate},
                     {"ci_lo", r.ci.lo},
                     {"ci_hi", r.ci.hi}});
  }
  nlohmann::json out{{"d1", report.d1},
                     {"d2", report.d2},
                     {"rungs", std::move(rungs)},
                     {"extrapolated_rate", report.extrapolated_rate}};
  if (report.dim_intersection) {
    out["dim_intersection"] = dim_estimate_json(*report.dim_intersection);
  }
  return out;
}

nlohmann::json shiga_json(const ShigaWatanabeReport& report) {
  nlohmann::json intervals = nlohmann::json::array();
  for (const auto& c : report.intervals) {
    intervals.push_back({{"lo", c.lo},
                         {"hi", c.hi},
                         {"avoid_composed", c.avoid_composed},
                         {"avoid_direct", c.avoid_direct},
                         {"trials", c.trials},
                         {"p_composed", c.p_composed},
                         {"p_direct", c.p_direct},
                         {"z", c.z}});
  }
  return nlohmann::json{{"d1", report.d1},
                        {"d2", report.d2},
                        {"dt", report.dt},
                        {"theta", report.theta},
                        {"delta", report.delta},
                        {"intervals", std::move(intervals)},
                        {"max_abs_z", report.max_abs_z}};
}

nlohmann::json recovery_json(const UnionRecoveryReport& report) {
  return nlohmann::json{{"d1", report.d1},
                        {"d2", report.d2},
                        {"window_count", report.window_count},
                        {"trials", report.trials},
                        {"classified", report.classified},
                        {"correct", report.correct},
                        {"accuracy", report.accuracy}};
}

nlohmann::json law_json(const DiscreteLaw& law) {
  nlohmann::json probs = nlohmann::json::object();
  for (std::size_t p = 0; p < law.probs.size(); ++p) {
    probs[std::to_string(p)] = law.probs[p];
  }
  return nlohmann::json{
      {"cells", law.n},
      {"smoothing", law.smoothing},
      {"probs", std::move(probs)},
  };
}

std::string csv_number(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::string dichotomy_csv(const DichotomyReport& report) {
  std::string out = "delta,rate,ci_lo,ci_hi\n";
  for (const auto& r : report.rungs) {
    out += csv_number(r.delta) + "," + csv_number(r.rate) + "," +
           csv_number(r.ci.lo) + "," + csv_number(r.ci.hi) + "\n";
  }
  return out;
}

std::string dim_scales_csv(const DimEstimate& est) {
  std::string out = "eps,count\n";
  for (const auto& [eps, count] : est.scales) {
    out += csv_number(eps) + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string validation_csv(std::span<const StableValidationRow> rows) {
  std::string out = "lambda,empirical,target,z,n\n";
  for (const auto& r : rows) {
    out += csv_number(r.lambda) + "," + csv_number(r.empirical) + "," +
           csv_number(r.target) + "," + csv_number(r.z) + "," +
           std::to_string(r.n) + "\n";
  }
  return out;
}

std::string shiga_csv(const ShigaWatanabeReport& report) {
  std::string out = "lo,hi,p_composed,p_direct,z\n";
  for (const auto& c : report.intervals) {
    out += csv_number(c.lo) + "," + csv_number(c.hi) + "," +
           csv_number(c.p_composed) + "," + csv_number(c.p_direct) + "," +
           csv_number(c.z) + "\n";
  }
  return out;
}

}  // namespace regen

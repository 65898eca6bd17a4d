#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance_suite.hpp"
#include "json.hpp"
#include "test_util.hpp"
#include "regen/boxdim.hpp"
#include "regen/gapset.hpp"
#include "regen/localtime.hpp"
#include "regen/products.hpp"
#include "regen/report.hpp"
#include "regen/rng.hpp"
#include "regen/stable.hpp"
#include "regen/toyps.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string format = "json";
  int workers = 1;
};

// Worker count is accepted for interface stability; trials are evaluated
// sequentially and aggregation is order-invariant, so the value never
// changes a report.
int workers_from_env() {
  const char* raw = std::getenv("REGEN_WORKERS");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) {
    throw std::invalid_argument(
        "REGEN_WORKERS must be a positive integer, got: " + std::string(raw));
  }
  return static_cast<int>(value);
}

void add_common(CLI::App* sub, CommonOpts& common) {
  sub->add_option("--seed", common.seed, "Root seed, split per trial")
      ->capture_default_str();
  sub->add_option("--out", common.out, "Output path, - for stdout")
      ->capture_default_str();
  sub->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--workers", common.workers,
                  "Worker count (aggregation is order-invariant)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void emit(const CommonOpts& common, const json& report,
          const std::optional<std::string>& csv) {
  std::string content;
  if (common.format == "csv") {
    if (!csv) {
      throw std::invalid_argument(
          "csv format is not available for this subcommand");
    }
    content = *csv;
  } else {
    content = report.dump(2);
    content.push_back('\n');
  }
  if (common.out == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    std::fflush(stdout);
  } else {
    std::ofstream file(common.out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output path: " + common.out);
    file << content;
    if (!file) throw std::invalid_argument("failed to write: " + common.out);
  }
}

std::vector<std::array<double, 2>> parse_intervals(
    const std::vector<std::string>& specs) {
  std::vector<std::array<double, 2>> intervals;
  for (const auto& spec : specs) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("interval must be lo:hi, got: " + spec);
    }
    try {
      intervals.push_back({std::stod(spec.substr(0, colon)),
                           std::stod(spec.substr(colon + 1))});
    } catch (const std::exception&) {
      throw std::invalid_argument("interval must be lo:hi, got: " + spec);
    }
  }
  return intervals;
}

struct SampleOpts {
  double d = 1.0;
  std::string mode = "pinned";
  double t0 = 0.1;
  double resolution = 1e-4;
  double horizon = 1.0;
  double scale = 1.0;
};

void run_sample(const CommonOpts& common, const SampleOpts& opts) {
  regen::DelaySpec delay = regen::DelaySpec::pinned();
  if (opts.mode == "exponential") delay = regen::DelaySpec::exponential();
  if (opts.mode == "fixed") delay = regen::DelaySpec::fixed(opts.t0);
  const regen::StableParams params =
      regen::StableParams::from_d(opts.d, opts.scale);
  const double step =
      std::pow(opts.resolution / 10.0, params.alpha) / opts.scale;
  regen::RngStream rng(common.seed, 0);
  const auto path =
      regen::sample_path(params, delay, opts.horizon, step, rng);
  const auto z = regen::to_gapset(path, opts.horizon, opts.resolution);

  json config = {{"d", opts.d},
                 {"mode", opts.mode},
                 {"resolution", opts.resolution},
                 {"horizon", opts.horizon},
                 {"scale", opts.scale},
                 {"seed", common.seed}};
  if (opts.mode == "fixed") config["t0"] = opts.t0;
  json results = {{"set", regen::gapset_json(z)},
                  {"records", path.points.size()},
                  {"degenerate", path.degenerate},
                  {"delay", path.delay},
                  {"step", path.step}};
  emit(common, regen::report_envelope("sample", config, results), std::nullopt);
}

struct ValidateOpts {
  double alpha = 0.5;
  std::vector<double> lambdas = {0.5, 1.0, 2.0, 4.0};
  std::size_t n = 100000;
};

void run_validate(const CommonOpts& common, const ValidateOpts& opts) {
  regen::RngStream rng(common.seed, 0);
  const auto rows =
      regen::validate_stable_sampler(opts.alpha, opts.lambdas, opts.n, rng);
  json config = {{"alpha", opts.alpha},
                 {"lambdas", opts.lambdas},
                 {"n", opts.n},
                 {"seed", common.seed}};
  json results = {{"rows", regen::validation_json(rows)}};
  emit(common, regen::report_envelope("validate-stable", config, results),
       regen::validation_csv(rows));
}

struct DimOpts {
  std::string input = "stable";
  double d = 1.0;
  std::size_t samples = 200;
  double delta = 1e-6;
  double eps_max = 1e-1;
  double eps_min = 1e-4;
  int levels = 7;
  int cantor_levels = 7;
};

void run_dim(const CommonOpts& common, const DimOpts& opts) {
  json config = {{"input", opts.input},
                 {"eps_max", opts.eps_max},
                 {"eps_min", opts.eps_min},
                 {"levels", opts.levels}};
  regen::DimEstimate est;
  json results;
  if (opts.input == "cantor") {
    config["cantor_levels"] = opts.cantor_levels;
    est = regen::estimate_dimension(regen::cantor_set(opts.cantor_levels),
                                    opts.eps_max, opts.eps_min, opts.levels);
    results = {{"dimension", regen::dim_estimate_json(est)}};
  } else {
    config["d"] = opts.d;
    config["samples"] = opts.samples;
    config["delta"] = opts.delta;
    config["seed"] = common.seed;
    const regen::StableParams params = regen::StableParams::from_d(opts.d);
    const double step = std::pow(opts.delta / 10.0, params.alpha);
    regen::RngStream root(common.seed, 0);
    std::vector<regen::GapSet> sets;
    sets.reserve(opts.samples);
    for (std::size_t k = 0; k < opts.samples; ++k) {
      regen::RngStream rng = root.split(k);
      const auto path = regen::sample_path(params, regen::DelaySpec::pinned(),
                                           1.0, step, rng);
      const auto z = regen::to_gapset(path, 1.0, opts.delta);
      if (!z.empty) sets.push_back(z);
    }
    est = regen::ensemble_dimension(sets, opts.eps_max, opts.eps_min,
                                    opts.levels);
    results = {{"dimension", regen::dim_estimate_json(est)},
               {"sets_used", sets.size()},
               {"target", 1.0 - opts.d / 2.0}};
  }
  emit(common, regen::report_envelope("dim", config, results),
       regen::dim_scales_csv(est));
}

struct LocalTimeOpts {
  double d = 1.0;
  std::size_t paths = 1000;
  double step = 1e-4;
  std::size_t splits = 100;
  double support_delta = 1e-6;
  std::size_t grid_points = 11;
};

void run_localtime(const CommonOpts& common, const LocalTimeOpts& opts) {
  const regen::StableParams params = regen::StableParams::from_d(opts.d);
  const auto grid = regen::uniform_grid(opts.grid_points, 1.0);
  std::vector<double> mean_values(grid.size(), 0.0);
  regen::RngStream root(common.seed, 0);
  regen::RngStream split_rng(common.seed, 1);
  double max_additivity = 0.0;
  std::size_t support_failures = 0;
  for (std::size_t k = 0; k < opts.paths; ++k) {
    regen::RngStream rng = root.split(k);
    const auto path = regen::sample_path(params, regen::DelaySpec::pinned(),
                                         1.0, opts.step, rng);
    const auto profile = regen::local_time(path, grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      mean_values[j] += profile.values[j];
    }
    if (k < opts.splits) {
      max_additivity = std::max(
          max_additivity, regen::additivity_check(path, split_rng.uniform()));
    }
    if (!regen::support_check(path, opts.support_delta)) ++support_failures;
  }
  for (double& v : mean_values) v /= static_cast<double>(opts.paths);
  regen::LocalTimeProfile mean_profile;
  mean_profile.grid = grid;
  mean_profile.values = mean_values;

  json config = {{"d", opts.d},
                 {"paths", opts.paths},
                 {"step", opts.step},
                 {"splits", opts.splits},
                 {"support_delta", opts.support_delta},
                 {"grid_points", opts.grid_points},
                 {"seed", common.seed}};
  json results = {{"mean_profile", regen::local_time_json(mean_profile)},
                  {"mean_terminal", mean_values.back()},
                  {"max_additivity_residual", max_additivity},
                  {"additivity_bound", opts.step},
                  {"support_failures", support_failures}};
  emit(common, regen::report_envelope("localtime", config, results),
       std::nullopt);
}

struct IntersectOpts {
  double d1 = 0.5;
  double d2 = 0.5;
  std::size_t trials = 2000;
  std::vector<double> deltas = {1e-2, 1e-3, 1e-4};
};

void run_intersect(const CommonOpts& common, const IntersectOpts& opts) {
  const auto report = regen::intersection_experiment(
      opts.d1, opts.d2, opts.trials, opts.deltas, common.seed);
  json config = {{"d1", opts.d1},
                 {"d2", opts.d2},
                 {"trials", opts.trials},
                 {"deltas", opts.deltas},
                 {"seed", common.seed}};
  emit(common,
       regen::report_envelope("intersect", config,
                              regen::dichotomy_json(report)),
       regen::dichotomy_csv(report));
}

struct PartitionOpts {
  double d1 = 1.0;
  double d2 = 1.0;
  double delta = 1e-2;
  int kmax = 24;
  std::uint64_t trial = 0;
  double step_scale = 1.0;
};

void run_partition(const CommonOpts& common, const PartitionOpts& opts) {
  const auto pair = regen::sample_pair(opts.d1, opts.d2, opts.delta,
                                       common.seed, opts.trial,
                                       opts.step_scale);
  const auto profile = regen::partition_limit_profile(pair, opts.kmax);
  const auto limit =
      regen::stabilized_partition_limit(pair.z1, pair.z2);
  const bool hatted = regen::hatted_limit_equivalence(pair, opts.kmax);
  const bool disjoint = regen::set_intersect(pair.z1, pair.z2).empty;

  json config = {{"d1", opts.d1},          {"d2", opts.d2},
                 {"delta", opts.delta},    {"kmax", opts.kmax},
                 {"trial", opts.trial},    {"step_scale", opts.step_scale},
                 {"seed", common.seed}};
  json results = {{"z1", regen::gapset_json(pair.z1)},
                  {"z2", regen::gapset_json(pair.z2)},
                  {"profile", profile},
                  {"stabilized",
                   {{"value", limit.value}, {"depth_used", limit.depth_used}}},
                  {"hatted_equal", hatted},
                  {"intersection_empty", disjoint}};
  emit(common, regen::report_envelope("partition-limit", config, results),
       std::nullopt);
}

struct ShigaOpts {
  double d1 = 0.75;
  double d2 = 0.75;
  std::size_t trials = 2000;
  double dt = 4e-6;
  double delta = 1e-3;
  std::vector<std::string> intervals = {"0.25:1",    "0.15:0.45", "0.3:0.55",
                                        "0.45:0.7",  "0.6:0.85",  "0.35:0.9"};
};

void run_shiga(const CommonOpts& common, const ShigaOpts& opts) {
  const auto intervals = parse_intervals(opts.intervals);
  const regen::ShigaWatanabeConfig sw{opts.dt, opts.delta};
  const auto report = regen::shiga_watanabe_check(
      opts.d1, opts.d2, opts.trials, intervals, common.seed, sw);
  json config = {{"d1", opts.d1},       {"d2", opts.d2},
                 {"trials", opts.trials}, {"dt", opts.dt},
                 {"delta", opts.delta},   {"intervals", opts.intervals},
                 {"seed", common.seed}};
  emit(common,
       regen::report_envelope("shiga-watanabe", config,
                              regen::shiga_json(report)),
       regen::shiga_csv(report));
}

struct RecoverOpts {
  double d1 = 1.5;
  double d2 = 0.5;
  std::size_t trials = 50;
  std::size_t windows = 64;
};

void run_recover(const CommonOpts& common, const RecoverOpts& opts) {
  const auto report = regen::union_recovery(opts.d1, opts.d2, opts.trials,
                                            opts.windows, common.seed);
  json config = {{"d1", opts.d1},
                 {"d2", opts.d2},
                 {"trials", opts.trials},
                 {"windows", opts.windows},
                 {"seed", common.seed}};
  emit(common,
       regen::report_envelope("recover", config, regen::recovery_json(report)),
       std::nullopt);
}

struct ToyOpts {
  int max_cells = 10;
  int instances = 200;
  double law_d = 1.0;
  int law_cells = 4;
  int law_samples = 20000;
  double law_kappa = 0.5;
  bool with_law = false;
};

void run_toy(const CommonOpts& common, const ToyOpts& opts) {
  regen::RngStream rng(common.seed, 0);
  double max_iso = 0.0, max_unit = 0.0, max_assoc = 0.0;
  for (int t = 0; t < opts.instances; ++t) {
    regen::RngStream local = rng.split(t);
    const int n = 2 + t % (opts.max_cells - 1);
    const int m = 1 + t % (n - 1);
    const regen::DiscreteLaw target = regen::testutil::random_law(local, n);
    const regen::ToyVector v = regen::testutil::random_toy_vector(
        local, regen::marginal_front(target, m));
    const regen::ToyVector w = regen::testutil::random_toy_vector(
        local, regen::marginal_back(target, n - m));
    const regen::ToyVector joined = regen::product(v, w, target);
    max_iso =
        std::max(max_iso, std::abs(joined.norm() - v.norm() * w.norm()));
    max_unit = std::max(
        max_unit,
        regen::weighted_distance(
            regen::product(
                regen::unit_vector(regen::marginal_front(target, m)),
                regen::unit_vector(regen::marginal_back(target, n - m)),
                target),
            regen::unit_vector(target)));
    if (n >= 3) {
      const int a = 1 + t % (n - 2);
      const int b = 1 + t % (n - a - 1);
      const int c = n - a - b;
      const regen::ToyVector x = regen::testutil::random_toy_vector(
          local, regen::marginal_front(target, a));
      const regen::ToyVector y = regen::testutil::random_toy_vector(
          local, regen::marginal_range(target, a, b));
      const regen::ToyVector z = regen::testutil::random_toy_vector(
          local, regen::marginal_back(target, c));
      const regen::ToyVector lhs = regen::product(
          x, regen::product(y, z, regen::marginal_back(target, b + c)),
          target);
      const regen::ToyVector rhs = regen::product(
          regen::product(x, y, regen::marginal_front(target, a + b)), z,
          target);
      max_assoc = std::max(max_assoc, regen::weighted_distance(lhs, rhs));
    }
  }

  json config = {{"max_cells", opts.max_cells},
                 {"instances", opts.instances},
                 {"seed", common.seed}};
  json results = {{"instances", opts.instances},
                  {"residuals",
                   {{"isometry", max_iso},
                    {"unit", max_unit},
                    {"associativity", max_assoc}}}};
  if (opts.with_law) {
    config["law_d"] = opts.law_d;
    config["law_cells"] = opts.law_cells;
    config["law_samples"] = opts.law_samples;
    config["law_kappa"] = opts.law_kappa;
    regen::RngStream law_rng(common.seed, 1);
    const regen::DiscreteLaw law = regen::estimate_law(
        opts.law_d, opts.law_cells, opts.law_samples, opts.law_kappa, law_rng);
    results["law"] = regen::law_json(law);
  }
  emit(common, regen::report_envelope("toy", config, results), std::nullopt);
}

}  // namespace

int main(int argc, char** argv) {
  CommonOpts common;
  try {
    common.workers = workers_from_env();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }

  CLI::App app{"regenset: sampling, set algebra, and experiments for "
               "regenerative subsets of [0,1]"};
  app.require_subcommand(1);
  app.set_version_flag("--version", regen::tool_version());
  app.set_config("--config", "", "Read options from a key = value file");

  SampleOpts sample_opts;
  auto* sample = app.add_subcommand(
      "sample", "Sample one coarsened regenerative set");
  add_common(sample, common);
  sample->add_option("--d", sample_opts.d, "Bessel dimension in (0,2)")
      ->required();
  sample->add_option("--mode", sample_opts.mode, "Start-time law")
      ->check(CLI::IsMember({"pinned", "exponential", "fixed"}))
      ->capture_default_str();
  sample->add_option("--t0", sample_opts.t0, "Start time for --mode fixed")
      ->capture_default_str();
  sample->add_option("--resolution", sample_opts.resolution,
                     "Coarsening resolution delta")
      ->capture_default_str();
  sample->add_option("--horizon", sample_opts.horizon, "Time horizon")
      ->capture_default_str();
  sample->add_option("--scale", sample_opts.scale,
                     "Laplace exponent scale")
      ->capture_default_str();

  ValidateOpts validate_opts;
  auto* validate = app.add_subcommand(
      "validate-stable", "Laplace transform check of the stable sampler");
  add_common(validate, common);
  validate->add_option("--alpha", validate_opts.alpha, "Stable index in (0,1)")
      ->required();
  validate->add_option("--lambdas", validate_opts.lambdas,
                       "Laplace evaluation points")
      ->delimiter(',')
      ->capture_default_str();
  validate->add_option("--n", validate_opts.n, "Draws")
      ->capture_default_str();

  DimOpts dim_opts;
  auto* dim = app.add_subcommand("dim", "Box-counting dimension estimate");
  add_common(dim, common);
  dim->add_option("--input", dim_opts.input, "Set source")
      ->check(CLI::IsMember({"stable", "cantor"}))
      ->capture_default_str();
  dim->add_option("--d", dim_opts.d, "Bessel dimension for --input stable")
      ->capture_default_str();
  dim->add_option("--samples", dim_opts.samples, "Ensemble size")
      ->capture_default_str();
  dim->add_option("--delta", dim_opts.delta, "Coarsening resolution")
      ->capture_default_str();
  dim->add_option("--eps-max", dim_opts.eps_max, "Largest box size")
      ->capture_default_str();
  dim->add_option("--eps-min", dim_opts.eps_min, "Smallest box size")
      ->capture_default_str();
  dim->add_option("--levels", dim_opts.levels, "Box sizes in the fit")
      ->capture_default_str();
  dim->add_option("--cantor-levels", dim_opts.cantor_levels,
                  "Construction depth for --input cantor")
      ->capture_default_str();

  LocalTimeOpts localtime_opts;
  auto* localtime = app.add_subcommand(
      "localtime", "Local time profile, additivity, and support checks");
  add_common(localtime, common);
  localtime->add_option("--d", localtime_opts.d, "Bessel dimension")
      ->capture_default_str();
  localtime->add_option("--paths", localtime_opts.paths, "Sampled paths")
      ->capture_default_str();
  localtime->add_option("--step", localtime_opts.step,
                        "Operational-time grid step")
      ->capture_default_str();
  localtime->add_option("--splits", localtime_opts.splits,
                        "Paths given a random additivity split")
      ->capture_default_str();
  localtime
      ->add_option("--support-delta", localtime_opts.support_delta,
                   "Coarsening used by the support check")
      ->capture_default_str();
  localtime
      ->add_option("--grid-points", localtime_opts.grid_points,
                   "Evaluation points of the mean profile")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();

  IntersectOpts intersect_opts;
  auto* intersect = app.add_subcommand(
      "intersect", "Nonempty-intersection rates across a resolution ladder");
  add_common(intersect, common);
  intersect->add_option("--d1", intersect_opts.d1, "First Bessel dimension")
      ->required();
  intersect->add_option("--d2", intersect_opts.d2, "Second Bessel dimension")
      ->required();
  intersect->add_option("--trials", intersect_opts.trials, "Pairs per rung")
      ->capture_default_str();
  intersect
      ->add_option("--deltas", intersect_opts.deltas,
                   "Strictly decreasing resolution ladder")
      ->delimiter(',')
      ->capture_default_str();

  PartitionOpts partition_opts;
  auto* partition = app.add_subcommand(
      "partition-limit", "Dyadic partition limit of one sampled pair");
  add_common(partition, common);
  partition->add_option("--d1", partition_opts.d1, "First Bessel dimension")
      ->capture_default_str();
  partition->add_option("--d2", partition_opts.d2, "Second Bessel dimension")
      ->capture_default_str();
  partition->add_option("--delta", partition_opts.delta,
                        "Coarsening resolution")
      ->capture_default_str();
  partition->add_option("--kmax", partition_opts.kmax, "Profile depth")
      ->check(CLI::Range(0, 24))
      ->capture_default_str();
  partition->add_option("--trial", partition_opts.trial, "Trial index")
      ->capture_default_str();
  partition
      ->add_option("--step-scale", partition_opts.step_scale,
                   "Grid refinement below the coarsening precondition")
      ->capture_default_str();

  ShigaOpts shiga_opts;
  auto* shiga = app.add_subcommand(
      "shiga-watanabe",
      "Composed vs direct zero-set avoidance probabilities");
  add_common(shiga, common);
  shiga->add_option("--d1", shiga_opts.d1, "First component dimension")
      ->capture_default_str();
  shiga->add_option("--d2", shiga_opts.d2, "Second component dimension")
      ->capture_default_str();
  shiga->add_option("--trials", shiga_opts.trials, "Trials per arm")
      ->capture_default_str();
  shiga->add_option("--dt", shiga_opts.dt, "Euler step")
      ->capture_default_str();
  shiga->add_option("--delta", shiga_opts.delta, "Zero-set coarsening")
      ->capture_default_str();
  shiga
      ->add_option("--intervals", shiga_opts.intervals,
                   "Test intervals as lo:hi[,lo:hi...]")
      ->delimiter(',')
      ->capture_default_str();

  RecoverOpts recover_opts;
  auto* recover = app.add_subcommand(
      "recover", "Window classification of a two-component union");
  add_common(recover, common);
  recover->add_option("--d1", recover_opts.d1, "Thin component dimension")
      ->capture_default_str();
  recover->add_option("--d2", recover_opts.d2, "Fat component dimension")
      ->capture_default_str();
  recover->add_option("--trials", recover_opts.trials, "Sampled unions")
      ->capture_default_str();
  recover->add_option("--windows", recover_opts.windows, "Window count")
      ->capture_default_str();

  ToyOpts toy_opts;
  auto* toy = app.add_subcommand(
      "toy", "Finite product system residual sweep");
  add_common(toy, common);
  toy->add_option("--max-cells", toy_opts.max_cells, "Largest cell count")
      ->check(CLI::Range(2, 10))
      ->capture_default_str();
  toy->add_option("--instances", toy_opts.instances, "Random instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* law_d = toy->add_option("--law-d", toy_opts.law_d,
                                "Also estimate the occupancy law at this d");
  toy->add_option("--law-cells", toy_opts.law_cells, "Cells of that law")
      ->check(CLI::Range(1, 10))
      ->capture_default_str();
  toy->add_option("--law-samples", toy_opts.law_samples,
                  "Samples behind the law estimate")
      ->capture_default_str();
  toy->add_option("--law-kappa", toy_opts.law_kappa, "Smoothing mass")
      ->capture_default_str();

  regen::acceptance::SuiteOptions suite_opts;
  auto* acceptance = app.add_subcommand(
      "acceptance", "Run the acceptance suite, exit 2 on failure");
  acceptance->add_flag("--quick", suite_opts.quick,
                       "Reduced trial counts, same criteria");
  acceptance->add_option("--only", suite_opts.only,
                         "Criterion numbers to run")
      ->delimiter(',')
      ->check(CLI::Range(1, 11));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n\n%s", e.what(), app.help().c_str());
    return 1;
  }

  const auto start = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (sample->parsed()) run_sample(common, sample_opts);
    if (validate->parsed()) run_validate(common, validate_opts);
    if (dim->parsed()) run_dim(common, dim_opts);
    if (localtime->parsed()) run_localtime(common, localtime_opts);
    if (intersect->parsed()) run_intersect(common, intersect_opts);
    if (partition->parsed()) run_partition(common, partition_opts);
    if (shiga->parsed()) run_shiga(common, shiga_opts);
    if (recover->parsed()) run_recover(common, recover_opts);
    if (toy->parsed()) {
      toy_opts.with_law = law_d->count() > 0;
      run_toy(common, toy_opts);
    }
    if (acceptance->parsed()) {
      const auto results = regen::acceptance::run_suite(suite_opts, true);
      for (const auto& r : results) {
        std::printf("criterion %2d [%s] %s: %s\n", r.index,
                    r.pass ? "pass" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
      }
      if (!regen::acceptance::all_passed(results)) rc = 2;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::fprintf(stderr, "wall-clock %.2fs\n", seconds);
  return rc;
}

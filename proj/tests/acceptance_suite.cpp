#include "acceptance_suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "regen/boxdim.hpp"
#include "regen/gapset.hpp"
#include "regen/localtime.hpp"
#include "regen/products.hpp"
#include "regen/rng.hpp"
#include "regen/stable.hpp"
#include "regen/toyps.hpp"
#include "test_util.hpp"

namespace regen::acceptance {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvGamma15 = 1.1283791670955126;  // 1 / Gamma(1.5)
constexpr double kCantorDim = 0.6309297535714574;   // log 2 / log 3

template <typename... Args>
std::string fmt(const char* format, Args... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), format, args...);
  return buffer;
}

CriterionResult run_laplace(bool quick) {
  CriterionResult r;
  r.name = "stable sampler Laplace transform";
  const std::array<double, 3> alphas = {0.25, 0.5, 0.75};
  const std::array<double, 4> lambdas = {0.5, 1.0, 2.0, 4.0};
  const std::size_t n = quick ? 100000 : 1000000;
  double max_abs_z = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    RngStream rng(0xAC01, i);
    const auto rows = validate_stable_sampler(alphas[i], lambdas, n, rng);
    for (const auto& row : rows) max_abs_z = std::max(max_abs_z, std::abs(row.z));
  }
  r.pass = max_abs_z < 4.0;
  r.detail = fmt("max |z| = %.2f over 12 (alpha, lambda) cells, n = %zu "
                 "(threshold 4)", max_abs_z, n);
  return r;
}

CriterionResult run_arcsine(bool quick) {
  CriterionResult r;
  r.name = "pinned avoidance arcsine profile";
  const StableParams params = StableParams::from_d(1.0);
  const double step = 1e-3;
  const double delta = 1e-5;
  const std::size_t trials = quick ? 20000 : 100000;
  const std::array<double, 3> svals = {0.0625, 0.25, 0.5};
  std::array<std::size_t, 3> hits = {0, 0, 0};
  RngStream root(780, 3);
  for (std::size_t k = 0; k < trials; ++k) {
    RngStream rng = root.split(k);
    const auto path = sample_path(params, DelaySpec::pinned(), 1.0, step, rng);
    const auto z = to_gapset(path, 1.0, delta);
    for (std::size_t j = 0; j < svals.size(); ++j) {
      if (avoids(z, svals[j], 1.0)) ++hits[j];
    }
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < svals.size(); ++j) {
    const double p = static_cast<double>(hits[j]) / static_cast<double>(trials);
    const double target = 2.0 / kPi * std::asin(std::sqrt(svals[j]));
    worst = std::max(worst, std::abs(p - target));
  }
  r.pass = worst < 0.01;
  r.detail = fmt("max |rate - target| = %.4f over s in {0.0625, 0.25, 0.5}, "
                 "%zu trials (threshold 0.01)", worst, trials);
  return r;
}

CriterionResult run_dimension_formula(bool quick) {
  CriterionResult r;
  r.name = "ensemble box dimension formula";
  const std::size_t samples = quick ? 50 : 200;
  const double delta = 1e-6;
  double worst = 0.0;
  std::string slopes;
  for (const double d : {0.5, 1.0, 1.5}) {
    const StableParams params = StableParams::from_d(d);
    const double step = std::pow(delta / 10.0, params.alpha);
    RngStream root(781, static_cast<std::uint64_t>(10 * d));
    std::vector<GapSet> sets;
    sets.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
      RngStream rng = root.split(k);
      const auto path = sample_path(params, DelaySpec::pinned(), 1.0, step, rng);
      const auto z = to_gapset(path, 1.0, delta);
      if (!z.empty) sets.push_back(z);
    }
    const auto est = ensemble_dimension(sets, 1e-1, 1e-4, 7);
    worst = std::max(worst, std::abs(est.slope - (1.0 - d / 2.0)));
    slopes += fmt("%s d=%.1f: %.4f", slopes.empty() ? "" : ",", d, est.slope);
  }
  r.pass = worst < 0.05;
  r.detail = fmt("slopes%s; max |slope - (1 - d/2)| = %.4f at %zu samples "
                 "(threshold 0.05)", slopes.c_str(), worst, samples);
  return r;
}

CriterionResult run_dichotomy(bool quick) {
  CriterionResult r;
  r.name = "intersection dichotomy ladder";

  const std::array<double, 3> ladder_a = {1e-2, 1e-5, 1e-8};
  const auto rep_a =
      intersection_experiment(1.2, 1.2, quick ? 2000 : 16000, ladder_a, 777);
  bool halves = true;
  for (std::size_t i = 1; i < rep_a.rungs.size(); ++i) {
    if (rep_a.rungs[i].rate > 0.5 * rep_a.rungs[i - 1].rate) halves = false;
  }
  const bool vanish_ok = halves && rep_a.extrapolated_rate < 0.01;

  const std::array<double, 3> ladder_b = {1e-3, 1e-4, 1e-5};
  const auto rep_b =
      intersection_experiment(0.5, 0.5, quick ? 1000 : 2000, ladder_b, 778);
  double min_rate = 1.0, max_rate = 0.0, min_ci_lo = 1.0;
  for (const auto& rung : rep_b.rungs) {
    min_rate = std::min(min_rate, rung.rate);
    max_rate = std::max(max_rate, rung.rate);
    min_ci_lo = std::min(min_ci_lo, rung.ci.lo);
  }
  const bool stable_rate = min_ci_lo > 0.05 && max_rate <= 1.5 * min_rate;
  const double dim = rep_b.dim_intersection ? rep_b.dim_intersection->slope : -1.0;
  const bool dim_ok =
      rep_b.dim_intersection && std::abs(dim - 0.5) < 0.07;

  r.pass = vanish_ok && stable_rate && dim_ok;
  r.detail = fmt("d=1.2 rates %.4f/%.4f/%.4f extrapolated %.5f (halves %s); "
                 "d=0.5 rates %.3f..%.3f dim %.3f (threshold 0.5 +/- 0.07)",
                 rep_a.rungs[0].rate, rep_a.rungs[1].rate, rep_a.rungs[2].rate,
                 rep_a.extrapolated_rate, halves ? "yes" : "NO", min_rate,
                 max_rate, dim);
  return r;
}

CriterionResult run_composition(bool quick) {
  CriterionResult r;
  r.name = "composed vs direct zero-set avoidance";
  const std::array<std::array<double, 2>, 6> intervals = {{{0.25, 1.0},
                                                           {0.15, 0.45},
                                                           {0.30, 0.55},
                                                           {0.45, 0.70},
                                                           {0.60, 0.85},
                                                           {0.35, 0.90}}};
  const std::size_t trials = quick ? 1500 : 10000;
  const ShigaWatanabeConfig config =
      quick ? ShigaWatanabeConfig{1e-5, 1e-3} : ShigaWatanabeConfig{};
  const auto rep =
      shiga_watanabe_check(0.75, 0.75, trials, intervals, 911, config);
  r.pass = rep.max_abs_z < 4.0;
  r.detail = fmt("max |z| = %.2f over 6 intervals, %zu trials per arm, "
                 "dt = %g (threshold 4)", rep.max_abs_z, trials, rep.dt);
  return r;
}

CriterionResult run_partition_identity(bool quick) {
  CriterionResult r;
  r.name = "partition limit equals emptiness";
  const std::size_t pairs = quick ? 2000 : 10000;
  RngStream rng(0xACCE59, 1);
  testutil::SetGenOptions plain;
  testutil::SetGenOptions grid;
  grid.quantize = true;
  std::size_t mismatch = 0, monotone_bad = 0, nonempty = 0;
  for (std::size_t t = 0; t < pairs; ++t) {
    auto& opts = t % 2 == 0 ? grid : plain;
    RngStream ra = rng.split(2 * t);
    RngStream rb = rng.split(2 * t + 1);
    PairSample pair;
    pair.z1 = testutil::random_gapset(ra, opts);
    pair.z2 = testutil::random_gapset(rb, opts);
    const auto profile = partition_limit_profile(pair, 24);
    for (std::size_t k = 1; k < profile.size(); ++k) {
      if (profile[k] < profile[k - 1]) ++monotone_bad;
    }
    const auto limit = stabilized_partition_limit(pair.z1, pair.z2);
    const bool disjoint = set_intersect(pair.z1, pair.z2).empty;
    if (limit.value != (disjoint ? 1 : 0)) ++mismatch;
    if (!disjoint) ++nonempty;
  }
  r.pass = mismatch == 0 && monotone_bad == 0;
  r.detail = fmt("%zu pairs (%zu intersecting): %zu limit mismatches, "
                 "%zu monotonicity violations (both must be 0)", pairs,
                 nonempty, mismatch, monotone_bad);
  return r;
}

CriterionResult run_hatted_limits(bool quick) {
  CriterionResult r;
  r.name = "isolated-point robustness of limits";
  const std::size_t per_population = quick ? 1000 : 5000;
  std::size_t disagreements = 0;
  for (std::size_t t = 0; t < per_population; ++t) {
    const auto heavy = sample_pair(1.5, 1.5, 1e-2, 0xACCE57, t, 3e-4);
    if (!hatted_limit_equivalence(heavy, 24)) ++disagreements;
    const auto mid = sample_pair(1.2, 1.2, 1e-2, 0xACCE58, t, 3e-3);
    if (!hatted_limit_equivalence(mid, 24)) ++disagreements;
  }
  r.pass = disagreements == 0;
  r.detail = fmt("%zu sampled pairs (two populations): %zu hatted/raw "
                 "disagreements (must be 0)", 2 * per_population,
                 disagreements);
  return r;
}

CriterionResult run_toy_system(bool quick) {
  CriterionResult r;
  r.name = "finite product system identities";
  const int instances = quick ? 200 : 1000;
  RngStream rng(0xAC08, 0);
  double max_iso = 0.0, max_unit = 0.0, max_assoc = 0.0;
  for (int t = 0; t < instances; ++t) {
    RngStream local = rng.split(t);
    const int n = 2 + t % 9;
    const int m = 1 + t % (n - 1);
    const DiscreteLaw target = testutil::random_law(local, n);
    const DiscreteLaw left = marginal_front(target, m);
    const DiscreteLaw right = marginal_back(target, n - m);
    const ToyVector v = testutil::random_toy_vector(local, left);
    const ToyVector w = testutil::random_toy_vector(local, right);
    const ToyVector joined = product(v, w, target);
    max_iso = std::max(max_iso,
                       std::abs(joined.norm() - v.norm() * w.norm()));
    max_unit = std::max(
        max_unit,
        weighted_distance(product(unit_vector(left), unit_vector(right), target),
                          unit_vector(target)));
    if (n >= 3) {
      const int a = 1 + t % (n - 2);
      const int b = 1 + t % (n - a - 1);
      const int c = n - a - b;
      const ToyVector x =
          testutil::random_toy_vector(local, marginal_front(target, a));
      const ToyVector y =
          testutil::random_toy_vector(local, marginal_range(target, a, b));
      const ToyVector z =
          testutil::random_toy_vector(local, marginal_back(target, c));
      const ToyVector lhs =
          product(x, product(y, z, marginal_back(target, b + c)), target);
      const ToyVector rhs =
          product(product(x, y, marginal_front(target, a + b)), z, target);
      max_assoc = std::max(max_assoc, weighted_distance(lhs, rhs));
    }
  }

  bool chain_ok = true;
  for (const int n : {1, 2, 4}) {
    RngStream local = rng.split(1000 + n);
    const DiscreteLaw law1 = testutil::random_law(local, n);
    const DiscreteLaw law2 = testutil::random_law(local, n);
    const auto chain = spatial_projection_chain(law1, law2, n);
    const std::size_t all = std::size_t{1} << (2 * n);
    const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
    for (std::size_t idx = 0; idx < all; ++idx) {
      const std::uint32_t p1 = static_cast<std::uint32_t>(idx >> n);
      const std::uint32_t p2 = static_cast<std::uint32_t>(idx) & mask;
      if (chain.front()[idx] != ((p1 == 0 || p2 == 0) ? 1 : 0)) chain_ok = false;
      if (chain.back()[idx] != (((p1 & p2) == 0) ? 1 : 0)) chain_ok = false;
      for (std::size_t k = 1; k < chain.size(); ++k) {
        if (chain[k][idx] < chain[k - 1][idx]) chain_ok = false;
      }
    }
  }

  double max_gram = 0.0;
  for (const int n : {1, 2, 4}) {
    const int law_pairs = quick ? 3 : (n == 4 ? 10 : 20);
    for (int t = 0; t < law_pairs; ++t) {
      RngStream local = rng.split(2000 + 100 * n + t);
      const DiscreteLaw law1 = testutil::random_law(local, n);
      const DiscreteLaw law2 = testutil::random_law(local, n);
      max_gram = std::max(max_gram, gram_projection_check(law1, law2, n));
    }
  }

  r.pass = max_iso < 1e-12 && max_unit < 1e-12 && max_assoc < 1e-12 &&
           chain_ok && max_gram < 1e-8;
  r.detail = fmt("residuals over %d instances: isometry %.1e, unit %.1e, "
                 "associativity %.1e (threshold 1e-12); chain exhaustive "
                 "n in {1,2,4}: %s; gram deviation %.1e (threshold 1e-8)",
                 instances, max_iso, max_unit, max_assoc,
                 chain_ok ? "ok" : "FAIL", max_gram);
  return r;
}

CriterionResult run_local_time(bool quick) {
  CriterionResult r;
  r.name = "local time moments and additivity";
  const StableParams params = StableParams::from_d(1.0);
  const std::size_t paths = quick ? 2000 : 10000;
  const double h = 1e-4;
  const std::vector<double> grid = {1.0};

  RngStream root(0xAC09, 1);
  RngStream splits(0xAC09, 3);
  double sum = 0.0, max_additivity = 0.0;
  std::size_t support_failures = 0;
  for (std::size_t k = 0; k < paths; ++k) {
    RngStream rng = root.split(k);
    const auto path = sample_path(params, DelaySpec::pinned(), 1.0, h, rng);
    sum += local_time(path, grid).values[0];
    if (k < 1000) {
      max_additivity =
          std::max(max_additivity, additivity_check(path, splits.uniform()));
    }
    if (!support_check(path, 1e-6)) ++support_failures;
  }
  const double mean = sum / static_cast<double>(paths);

  RngStream oracle_root(0xAC09, 2);
  double oracle_sum = 0.0;
  for (std::size_t k = 0; k < paths; ++k) {
    RngStream rng = oracle_root.split(k);
    const auto path =
        sample_path(params, DelaySpec::pinned(), 1.0, h / 10.0, rng);
    oracle_sum += local_time(path, grid).values[0];
    if (!support_check(path, 1e-6)) ++support_failures;
  }
  const double oracle_mean = oracle_sum / static_cast<double>(paths);

  const double rel = std::abs(mean / kInvGamma15 - 1.0);
  const double oracle_rel = std::abs(oracle_mean / kInvGamma15 - 1.0);
  r.pass = rel < 0.02 && oracle_rel < 0.02 &&
           max_additivity <= h * (1.0 + 1e-9) && support_failures == 0;
  r.detail = fmt("mean L(1) = %.4f (oracle %.4f, target %.4f, rel err "
                 "%.4f/%.4f, threshold 0.02); max additivity residual %.2e "
                 "(bound %g); %zu support failures", mean, oracle_mean,
                 kInvGamma15, rel, oracle_rel, max_additivity, h,
                 support_failures);
  return r;
}

CriterionResult run_union_recovery(bool quick) {
  CriterionResult r;
  r.name = "union window recovery";
  const auto rep = union_recovery(1.5, 0.5, quick ? 60 : 200,
                                  quick ? 32 : 64, 779);
  const double threshold = quick ? 0.85 : 0.9;
  r.pass = rep.accuracy >= threshold;
  r.detail = fmt("accuracy %.4f over %zu classified windows (threshold %.2f)",
                 rep.accuracy, rep.classified, threshold);
  return r;
}

CriterionResult run_cantor(bool) {
  CriterionResult r;
  r.name = "cantor estimator calibration";
  const auto est = estimate_dimension(cantor_set(7), 0.3, 1e-3, 7);
  r.pass = std::abs(est.slope - kCantorDim) < 0.03;
  r.detail = fmt("slope %.4f vs %.4f (threshold 0.03), r2 %.4f", est.slope,
                 kCantorDim, est.r2);
  return r;
}

}  // namespace

std::vector<CriterionResult> run_suite(const SuiteOptions& options,
                                       bool progress) {
  using Runner = CriterionResult (*)(bool);
  static constexpr std::array<Runner, 11> runners = {
      run_laplace,        run_arcsine,       run_dimension_formula,
      run_dichotomy,      run_composition,   run_partition_identity,
      run_hatted_limits,  run_toy_system,    run_local_time,
      run_union_recovery, run_cantor};

  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < runners.size(); ++i) {
    const int index = static_cast<int>(i) + 1;
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), index) ==
            options.only.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r = runners[i](options.quick);
    r.index = index;
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (progress) {
      std::fprintf(stderr, "[%2d/11] %-38s %s  (%.1fs)\n", index,
                   r.name.c_str(), r.pass ? "pass" : "FAIL", r.seconds);
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

}  // namespace regen::acceptance

#include "regen/products.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "regen/bessel.hpp"

namespace regen {

namespace {

struct CellRange {
  long long lo = 0, hi = 0;
};

// Indices of the closed dyadic cells [i/2^k, (i+1)/2^k] a set meets, as a
// sorted list of disjoint ranges. A component [x, y] meets cell i iff
// i ∈ [ceil(x*2^k - 1), floor(y*2^k)]: scaling by 2^k is exact for
// depth <= 52, where x*2^k stays below 2^53.
std::vector<CellRange> cell_ranges(const GapSet& z, int depth) {
  std::vector<CellRange> out;
  if (z.empty) return out;
  const long long last = (1LL << depth) - 1;
  for (const auto& [x, y] : z.components()) {
    const double sx = std::ldexp(x, depth);
    const double sy = std::ldexp(y, depth);
    long long lo = static_cast<long long>(std::ceil(sx - 1.0));
    long long hi = static_cast<long long>(std::floor(sy));
    lo = std::max(lo, 0LL);
    hi = std::min(hi, last);
    if (hi < lo) continue;
    if (!out.empty() && lo <= out.back().hi + 1 && hi > out.back().hi)
      out.back().hi = hi;
    else if (out.empty() || lo > out.back().hi)
      out.push_back({lo, hi});
  }
  return out;
}

bool ranges_overlap(const std::vector<CellRange>& a, const std::vector<CellRange>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].hi < b[j].lo)
      ++i;
    else if (b[j].hi < a[i].lo)
      ++j;
    else
      return true;
  }
  return false;
}

constexpr int kMaxExactDepth = 52;
constexpr int kMaxProfileDepth = 24;

}  // namespace

int partition_limit(const GapSet& z1, const GapSet& z2, int depth) {
  if (depth < 0 || depth > kMaxExactDepth)
    throw std::invalid_argument("partition_limit: depth must be in [0, 52]");
  return ranges_overlap(cell_ranges(z1, depth), cell_ranges(z2, depth)) ? 0 : 1;
}

int partition_limit(const PairSample& pair, int depth) {
  return partition_limit(pair.z1, pair.z2, depth);
}

std::vector<int> partition_limit_profile(const PairSample& pair, int k_max) {
  if (k_max < 0 || k_max > kMaxProfileDepth)
    throw std::invalid_argument("partition_limit_profile: k_max must be in [0, 24]");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) out.push_back(partition_limit(pair, k));
  return out;
}

StabilizedLimit stabilized_partition_limit(const GapSet& z1, const GapSet& z2) {
  if (z1.empty || z2.empty) return {partition_limit(z1, z2, 0), 0};
  const double c = set_distance(z1, z2);
  if (c == 0.0) {
    constexpr int probe = 20;
    return {partition_limit(z1, z2, probe), probe};
  }
  // Two extra levels past the clearance scale absorb any rounding in log2.
  int k = static_cast<int>(std::floor(std::log2(1.0 / c))) + 2;
  k = std::clamp(k, 0, kMaxExactDepth);
  return {partition_limit(z1, z2, k), k};
}

bool hatted_limit_equivalence(const PairSample& pair, int k_max) {
  if (k_max < 0 || k_max > kMaxProfileDepth)
    throw std::invalid_argument("hatted_limit_equivalence: k_max must be in [0, 24]");
  const auto raw = stabilized_partition_limit(pair.z1, pair.z2);
  const auto hat = stabilized_partition_limit(limit_points(pair.z1), limit_points(pair.z2));
  return raw.value == hat.value;
}

PairSample sample_pair(double d1, double d2, double delta, std::uint64_t seed,
                       std::uint64_t trial, double step_scale) {
  if (!(delta > 0.0) || delta > 1.0)
    throw std::invalid_argument("sample_pair: delta must be in (0, 1]");
  if (!(step_scale > 0.0) || step_scale > 1.0)
    throw std::invalid_argument("sample_pair: step_scale must be in (0, 1]");
  PairSample out;
  out.p1 = StableParams::from_d(d1);
  out.p2 = StableParams::from_d(d2);
  out.delta = delta;
  out.step1 = step_scale * std::pow(delta / 10.0, out.p1.alpha);
  out.step2 = step_scale * std::pow(delta / 10.0, out.p2.alpha);
  out.seed = seed;
  out.trial = trial;
  const RngStream root(seed, 0x70616972ULL);
  const RngStream r = root.split(trial);
  RngStream ra = r.split(1);
  RngStream rb = r.split(2);
  const auto path1 = sample_path(out.p1, DelaySpec::exponential(), 1.0, out.step1, ra);
  const auto path2 = sample_path(out.p2, DelaySpec::exponential(), 1.0, out.step2, rb);
  out.z1 = to_gapset(path1, 1.0, delta);
  out.z2 = to_gapset(path2, 1.0, delta);
  return out;
}

DichotomyReport intersection_experiment(double d1, double d2, std::size_t trials,
                                        std::span<const double> delta_ladder,
                                        std::uint64_t seed) {
  (void)StableParams::from_d(d1);
  (void)StableParams::from_d(d2);
  if (trials < 1000)
    throw std::invalid_argument("intersection_experiment: need at least 1000 trials per rung");
  if (delta_ladder.empty())
    throw std::invalid_argument("intersection_experiment: empty resolution ladder");
  for (std::size_t i = 0; i < delta_ladder.size(); ++i) {
    if (!(delta_ladder[i] > 0.0) || delta_ladder[i] > 1.0)
      throw std::invalid_argument("intersection_experiment: resolutions must be in (0, 1]");
    if (i > 0 && !(delta_ladder[i] < delta_ladder[i - 1]))
      throw std::invalid_argument("intersection_experiment: ladder must be strictly decreasing");
  }

  DichotomyReport rep;
  rep.d1 = d1;
  rep.d2 = d2;
  const bool subcritical = d1 + d2 < 2.0;
  std::vector<GapSet> finest_nonempty;
  for (std::size_t r = 0; r < delta_ladder.size(); ++r) {
    const double delta = delta_ladder[r];
    const bool finest = r + 1 == delta_ladder.size();
    std::size_t hits = 0;
    for (std::size_t k = 0; k < trials; ++k) {
      const auto pair = sample_pair(d1, d2, delta, seed, r * trials + k);
      const auto inter = set_intersect(pair.z1, pair.z2);
      if (!inter.empty) {
        ++hits;
        if (finest && subcritical) finest_nonempty.push_back(inter);
      }
    }
    const double rate = static_cast<double>(hits) / static_cast<double>(trials);
    rep.rungs.push_back({delta, hits, trials, rate, wilson_interval(hits, trials)});
  }

  const std::size_t n = rep.rungs.size();
  if (n == 1) {
    rep.extrapolated_rate = rep.rungs.back().rate;
  } else {
    const double r_prev = rep.rungs[n - 2].rate;
    const double r_last = rep.rungs[n - 1].rate;
    rep.extrapolated_rate = r_prev > 0.0 ? r_last * r_last / r_prev : 0.0;
  }

  if (subcritical && !finest_nonempty.empty()) {
    const double dmin = delta_ladder.back();
    rep.dim_intersection =
        ensemble_dimension(finest_nonempty, 1e-1, std::max(4.0 * dmin, 1e-4), 7);
  }
  return rep;
}

ShigaWatanabeReport shiga_watanabe_check(double d1, double d2, std::size_t trials,
                                         std::span<const std::array<double, 2>> test_intervals,
                                         std::uint64_t seed, const ShigaWatanabeConfig& config) {
  (void)StableParams::from_d(d1);
  (void)StableParams::from_d(d2);
  if (d1 + d2 >= 2.0)
    throw std::invalid_argument(
        "shiga_watanabe_check: d1 + d2 >= 2 leaves an almost surely trivial zero set; "
        "the comparison is vacuous");
  if (trials == 0) throw std::invalid_argument("shiga_watanabe_check: trials must be positive");
  if (test_intervals.empty())
    throw std::invalid_argument("shiga_watanabe_check: no test intervals");
  for (const auto& iv : test_intervals)
    if (!(0.0 <= iv[0] && iv[0] < iv[1] && iv[1] <= 1.0))
      throw std::invalid_argument("shiga_watanabe_check: malformed interval");
  if (!(config.dt > 0.0)) throw std::invalid_argument("shiga_watanabe_check: dt must be positive");

  const double dsum = d1 + d2;
  const double theta = std::sqrt(10.0 * dsum * config.dt);
  ShigaWatanabeReport rep;
  rep.d1 = d1;
  rep.d2 = d2;
  rep.dt = config.dt;
  rep.theta = theta;
  rep.delta = config.delta;

  const std::size_t m = test_intervals.size();
  std::vector<std::size_t> avoid_c(m, 0), avoid_d(m, 0);
  const RngStream root(seed, 0x73776174ULL);
  for (std::size_t k = 0; k < trials; ++k) {
    const RngStream r = root.split(k);
    RngStream ra = r.split(1);
    RngStream rb = r.split(2);
    const auto a = integrate_besq(d1, 0.0, 1.0, config.dt, ra);
    const auto b = integrate_besq(d2, 0.0, 1.0, config.dt, rb);
    const auto z = zero_set(compose_norm(a, b), theta, config.delta);
    for (std::size_t j = 0; j < m; ++j)
      if (avoids(z, test_intervals[j][0], test_intervals[j][1])) ++avoid_c[j];
  }
  for (std::size_t k = 0; k < trials; ++k) {
    RngStream r = root.split(trials + k);
    const auto path = integrate_besq(dsum, 0.0, 1.0, config.dt, r);
    const auto z = zero_set(path, theta, config.delta);
    for (std::size_t j = 0; j < m; ++j)
      if (avoids(z, test_intervals[j][0], test_intervals[j][1])) ++avoid_d[j];
  }

  for (std::size_t j = 0; j < m; ++j) {
    IntervalComparison row;
    row.lo = test_intervals[j][0];
    row.hi = test_intervals[j][1];
    row.avoid_composed = avoid_c[j];
    row.avoid_direct = avoid_d[j];
    row.trials = trials;
    row.p_composed = static_cast<double>(avoid_c[j]) / static_cast<double>(trials);
    row.p_direct = static_cast<double>(avoid_d[j]) / static_cast<double>(trials);
    row.z = two_proportion_z(avoid_c[j], trials, avoid_d[j], trials);
    rep.max_abs_z = std::max(rep.max_abs_z, std::abs(row.z));
    rep.intervals.push_back(row);
  }
  return rep;
}

UnionRecoveryReport union_recovery(double d1, double d2, std::size_t trials,
                                   std::size_t window_count, std::uint64_t seed) {
  (void)StableParams::from_d(d1);
  (void)StableParams::from_d(d2);
  if (!(d1 > d2)) throw std::invalid_argument("union_recovery: requires d1 > d2");
  if (trials == 0) throw std::invalid_argument("union_recovery: trials must be positive");
  if (window_count < 2) throw std::invalid_argument("union_recovery: need at least 2 windows");

  const double delta = 1e-6;
  const double mid = 1.0 - (d1 + d2) / 4.0;
  UnionRecoveryReport rep;
  rep.d1 = d1;
  rep.d2 = d2;
  rep.window_count = window_count;
  rep.trials = trials;
  for (std::size_t k = 0; k < trials; ++k) {
    const auto pair = sample_pair(d1, d2, delta, seed, k);
    const auto u = set_union(pair.z1, pair.z2);
    if (u.empty) continue;
    const auto windows =
        local_dimension_profile(u, static_cast<int>(window_count), 4e-3, 6.25e-5, 7);
    for (const auto& w : windows) {
      if (!w.occupied) continue;
      const bool truth = !restrict(pair.z2, w.lo, w.hi).empty;
      const bool predicted = w.est.slope >= mid;
      ++rep.classified;
      if (predicted == truth) ++rep.correct;
    }
  }
  rep.accuracy = rep.classified == 0
                     ? 0.0
                     : static_cast<double>(rep.correct) / static_cast<double>(rep.classified);
  return rep;
}

}  // namespace regen

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "regen/boxdim.hpp"
#include "regen/gapset.hpp"
#include "regen/stable.hpp"
#include "regen/stats.hpp"

namespace regen {

// Independent pair of sampled sets together with the settings that produced
// them. A pair is a pure function of (d1, d2, delta, step_scale, seed, trial),
// so trials can be evaluated in any order.
struct PairSample {
  GapSet z1, z2;
  StableParams p1, p2;
  double delta = 0.0;
  double step1 = 0.0, step2 = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

// Draws z1, z2 from independent child streams with Exp(1) start delays, each
// coarsened at `delta` over horizon 1. Grid steps are
// step_scale * (delta/10)^alpha_i: step_scale = 1 sits exactly on the
// coarsening precondition, smaller values refine the grid below it.
PairSample sample_pair(double d1, double d2, double delta, std::uint64_t seed,
                       std::uint64_t trial, double step_scale = 1.0);

// 1 iff every closed dyadic cell [i/2^k, (i+1)/2^k] at depth k misses z1 or
// misses z2. Cell endpoints belong to both adjacent cells. Exact for
// 0 <= depth <= 52; beyond that the cells drop below the spacing of doubles
// on [0,1] and the call throws.
int partition_limit(const GapSet& z1, const GapSet& z2, int depth);
int partition_limit(const PairSample& pair, int depth);

// partition_limit at each depth 0..k_max, k_max <= 24. The sequence is
// nondecreasing in the depth: a cell meeting both sets has a parent meeting
// both sets, so refinement can only move the value from 0 to 1.
std::vector<int> partition_limit_profile(const PairSample& pair, int k_max);

// Depth-limit of partition_limit, resolved exactly. A shared point pins one
// cell per depth, so the value stays 0; disjoint nonempty sets stabilize at 1
// once the cell width drops below their distance, so one evaluation past that
// depth settles the sequence. depth_used reports where it was evaluated.
struct StabilizedLimit {
  int value = 0;
  int depth_used = 0;
};
StabilizedLimit stabilized_partition_limit(const GapSet& z1, const GapSet& z2);

// True iff the depth-limits for (z1, z2) and for their isolated-point-free
// versions coincide. k_max is validated against the profile bound; the limits
// themselves are resolved at their own stabilization depths.
bool hatted_limit_equivalence(const PairSample& pair, int k_max);

struct RateRow {
  double delta = 0.0;
  std::size_t hits = 0;
  std::size_t trials = 0;
  double rate = 0.0;
  WilsonInterval ci;
};

struct DichotomyReport {
  double d1 = 0.0, d2 = 0.0;
  std::vector<RateRow> rungs;
  // Geometric continuation of the last two rungs, rate_n^2 / rate_{n-1};
  // equals the final rate when the ladder has a single rung.
  double extrapolated_rate = 0.0;
  // Pooled over the nonempty intersections at the finest rung; present only
  // when d1 + d2 < 2 and at least one intersection was nonempty.
  std::optional<DimEstimate> dim_intersection;
};

// Empirical nonempty-intersection rates of sampled pairs across a strictly
// decreasing resolution ladder. Requires trials >= 1000 per rung.
DichotomyReport intersection_experiment(double d1, double d2, std::size_t trials,
                                        std::span<const double> delta_ladder,
                                        std::uint64_t seed);

struct IntervalComparison {
  double lo = 0.0, hi = 0.0;
  std::size_t avoid_composed = 0;
  std::size_t avoid_direct = 0;
  std::size_t trials = 0;
  double p_composed = 0.0;
  double p_direct = 0.0;
  double z = 0.0;
};

struct ShigaWatanabeConfig {
  double dt = 4e-6;
  double delta = 1e-3;
};

struct ShigaWatanabeReport {
  double d1 = 0.0, d2 = 0.0;
  double dt = 0.0, theta = 0.0, delta = 0.0;
  std::vector<IntervalComparison> intervals;
  double max_abs_z = 0.0;
};

// Window-avoidance comparison between the zero set of the pointwise norm of
// two independent integrated paths at (d1, d2) and the zero set of a directly
// integrated path at d1 + d2, both arms under the same step, threshold, and
// coarsening so their discretization errors cancel. `trials` applies to each
// arm. Throws when d1 + d2 >= 2: both zero sets are then almost surely
// empty beyond the start and the comparison is vacuous.
ShigaWatanabeReport shiga_watanabe_check(double d1, double d2, std::size_t trials,
                                         std::span<const std::array<double, 2>> test_intervals,
                                         std::uint64_t seed,
                                         const ShigaWatanabeConfig& config = {});

struct UnionRecoveryReport {
  double d1 = 0.0, d2 = 0.0;
  std::size_t window_count = 0;
  std::size_t trials = 0;
  std::size_t classified = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
};

// Samples pairs at d1 > d2, splits the union of each pair into equal windows,
// and classifies every occupied window as containing the fatter set (the d2
// component, local slope above the midpoint of the two dimension targets) or
// not. Accuracy is measured against the generating pair.
UnionRecoveryReport union_recovery(double d1, double d2, std::size_t trials,
                                   std::size_t window_count, std::uint64_t seed);

}  // namespace regen

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "regen/gapset.hpp"

namespace regen {

// Box-counting regression result. scales holds the (eps, N(eps)) table the
// slope was fit on, largest eps first.
struct DimEstimate {
  double slope = 0.0;
  double std_err = 0.0;
  double r2 = 1.0;
  // Set when eps_max/eps_min < 8: too little leverage for a trustworthy fit.
  bool narrow_range = false;
  std::vector<std::pair<double, std::size_t>> scales;
};

// Number of half-open cells [k*eps, (k+1)*eps) meeting the set, with the
// final cell stretched to include the point 1. Computed from the component
// list without touching empty runs. Requires eps >= z.resolution.
std::size_t box_count(const GapSet& z, double eps);

// Least-squares slope of log N(eps) against log(1/eps) over `levels`
// geometrically spaced eps from eps_max down to eps_min. The slope is
// clamped to [0,1] after the fit. Requires a nonempty set, levels >= 4, and
// eps_min >= 4*z.resolution.
DimEstimate estimate_dimension(const GapSet& z, double eps_max, double eps_min, int levels);

// Pooled variant: counts are summed across the sets at each eps before the
// fit. Steadier than averaging per-set slopes when individual sets are small.
DimEstimate ensemble_dimension(std::span<const GapSet> sets, double eps_max, double eps_min,
                               int levels);

// Dimension estimate on each of window_count equal windows of [0,1]; windows
// the set misses are left unoccupied.
struct WindowEstimate {
  double lo = 0.0;
  double hi = 0.0;
  bool occupied = false;
  DimEstimate est;
};

std::vector<WindowEstimate> local_dimension_profile(const GapSet& z, int window_count,
                                                    double eps_max, double eps_min, int levels);

// Middle-thirds Cantor set after the given number of construction levels,
// at resolution 0. Deterministic estimator calibration target.
GapSet cantor_set(int levels);

}  // namespace regen

#pragma once

#include <span>
#include <utility>
#include <vector>

namespace regen {

// Closed subset of [0,1] stored as a hull interval minus a sorted list of
// disjoint open gaps. Adjacent gaps may touch (r_i == l_{i+1}); the shared
// endpoint is then an isolated point of the set. Gaps may also touch the hull
// endpoints, which makes the corresponding hull endpoint isolated. A set with
// lo == hi and no gaps is a singleton. `resolution` records the coarsening
// scale the set was built at: structure finer than this is not trustworthy.
struct GapSet {
  bool empty = true;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::pair<double, double>> gaps;
  double resolution = 0.0;

  static GapSet empty_set(double resolution);
  static GapSet interval(double a, double b, double resolution);
  // Closed components, possibly degenerate ([x,x]); overlapping or touching
  // inputs are merged. Throws std::invalid_argument on malformed input.
  static GapSet from_components(std::span<const std::pair<double, double>> comps,
                                double resolution);

  std::vector<std::pair<double, double>> components() const;
  std::size_t component_count() const { return empty ? 0 : gaps.size() + 1; }
  bool valid() const;

  bool operator==(const GapSet&) const = default;
};

// Delta-coarsening of a finite nondecreasing point cloud: hull from first to
// last point, minus the inter-point gaps longer than delta. Points closer
// than delta apart fuse into one component.
GapSet coarsen_points(std::span<const double> sorted_points, double delta);

// Z ∩ [s,t] == ∅. Requires 0 <= s <= t <= 1.
bool avoids(const GapSet& z, double s, double t);

bool contains_point(const GapSet& z, double x);

// Exact Z ∩ [s,t].
GapSet restrict(const GapSet& z, double s, double t);

// Closure of (Z + t) mod 1. An interval pushed exactly onto the right
// endpoint keeps it (closure), while a bare point landing on 1 wraps to 0.
GapSet shift_circular(const GapSet& z, double t);

GapSet set_union(const GapSet& a, const GapSet& b);
GapSet set_intersect(const GapSet& a, const GapSet& b);

// Z with isolated points removed (degenerate components dropped).
GapSet limit_points(const GapSet& z);

double lebesgue(const GapSet& z);

// Length of the shortest gap; +infinity when the set has no gaps.
// Throws on the empty set.
double min_gap(const GapSet& z);

// Distance between the two sets; 0 when they intersect, +infinity when
// either is empty.
double set_distance(const GapSet& a, const GapSet& b);

}  // namespace regen

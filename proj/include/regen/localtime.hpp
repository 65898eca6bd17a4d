#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "regen/gapset.hpp"
#include "regen/stable.hpp"

namespace regen {

// Local time read off the generating path as the inverse of the subordinator
// at grid precision: L(t) = step * #{k : points[k] <= t}.
struct LocalTimeProfile {
  std::vector<double> grid;
  std::vector<double> values;
  const SubordinatorPath* source = nullptr;
};

// n evenly spaced points from 0 to horizon inclusive.
std::vector<double> uniform_grid(std::size_t n, double horizon);

// Evaluates L on an increasing grid within [0, horizon].
LocalTimeProfile local_time(const SubordinatorPath& path, std::span<const double> grid);

// |L(H) - L(s) - L'(H-s)| with H the path horizon and L' recomputed from the
// path restarted at its first record after s, shifted so that record counts
// from s. Zero up to one grid step for any split in (0, H].
double additivity_check(const SubordinatorPath& path, double split);

// True iff the records at or below the horizon are exactly the support of L:
// every record lies in the delta-coarsened set and every component of that
// set contains a record.
bool support_check(const SubordinatorPath& path, double delta);

// Same predicate against an explicit sorted record list and set; lets tests
// feed corrupted records that support_check itself can never produce.
bool support_check_records(std::span<const double> records, const GapSet& z);

}  // namespace regen

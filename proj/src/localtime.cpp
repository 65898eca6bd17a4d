#include "regen/localtime.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace regen {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

std::vector<double> uniform_grid(std::size_t n, double horizon) {
  require(n >= 2, "uniform_grid: need at least 2 points");
  require(std::isfinite(horizon) && horizon > 0.0, "uniform_grid: horizon must be positive");
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = horizon * static_cast<double>(i) / static_cast<double>(n - 1);
  return grid;
}

LocalTimeProfile local_time(const SubordinatorPath& path, std::span<const double> grid) {
  require(!grid.empty(), "local_time: grid must be nonempty");
  require(grid.front() >= 0.0, "local_time: grid must start at or after 0");
  require(grid.back() <= path.horizon, "local_time: grid must stay within the horizon");
  for (std::size_t i = 1; i < grid.size(); ++i)
    require(grid[i - 1] < grid[i], "local_time: grid must be strictly increasing");

  LocalTimeProfile profile;
  profile.grid.assign(grid.begin(), grid.end());
  profile.values.resize(grid.size());
  profile.source = &path;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    while (idx < path.points.size() && path.points[idx] <= grid[i]) ++idx;
    profile.values[i] = path.step * static_cast<double>(idx);
  }
  return profile;
}

double additivity_check(const SubordinatorPath& path, double split) {
  require(std::isfinite(split) && split > 0.0 && split <= path.horizon,
          "additivity_check: split must lie in (0, horizon]");

  const double grid_whole[] = {split, path.horizon};
  const auto whole = split < path.horizon
                         ? local_time(path, grid_whole)
                         : local_time(path, std::span<const double>(grid_whole + 1, 1));
  const double at_split = whole.values.front();
  const double at_end = whole.values.back();

  auto first_after =
      std::upper_bound(path.points.begin(), path.points.end(), split);
  double tail_value = 0.0;
  if (first_after != path.points.end()) {
    SubordinatorPath restarted;
    restarted.params = path.params;
    restarted.step = path.step;
    restarted.horizon = path.horizon - split;
    restarted.delay = *first_after - split;
    restarted.points.reserve(static_cast<std::size_t>(path.points.end() - first_after));
    for (auto it = first_after; it != path.points.end(); ++it)
      restarted.points.push_back(*it - split);
    const double grid_tail[] = {restarted.horizon};
    tail_value = local_time(restarted, grid_tail).values.front();
  }
  return std::abs(at_end - at_split - tail_value);
}

bool support_check_records(std::span<const double> records, const GapSet& z) {
  for (double p : records)
    if (!contains_point(z, p)) return false;
  const auto comps = z.components();
  std::size_t idx = 0;
  for (const auto& [x, y] : comps) {
    while (idx < records.size() && records[idx] < x) ++idx;
    if (idx == records.size() || records[idx] > y) return false;
  }
  return true;
}

bool support_check(const SubordinatorPath& path, double delta) {
  const GapSet z = to_gapset(path, path.horizon, delta);
  auto beyond = std::upper_bound(path.points.begin(), path.points.end(), path.horizon);
  const std::span<const double> records(path.points.data(),
                                        static_cast<std::size_t>(beyond - path.points.begin()));
  return support_check_records(records, z);
}

}  // namespace regen

#include "regen/gapset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace regen {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

bool in_unit(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

// Index of the gap whose left endpoint is the last one strictly below x,
// or -1 if there is none.
std::ptrdiff_t last_gap_left_of(const std::vector<std::pair<double, double>>& gaps, double x) {
  auto it = std::upper_bound(gaps.begin(), gaps.end(), x,
                             [](double v, const std::pair<double, double>& g) { return v <= g.first; });
  return static_cast<std::ptrdiff_t>(it - gaps.begin()) - 1;
}

}  // namespace

GapSet GapSet::empty_set(double resolution) {
  GapSet z;
  z.empty = true;
  z.resolution = resolution;
  return z;
}

GapSet GapSet::interval(double a, double b, double resolution) {
  require(in_unit(a) && in_unit(b) && a <= b, "interval: need 0 <= a <= b <= 1");
  GapSet z;
  z.empty = false;
  z.lo = a;
  z.hi = b;
  z.resolution = resolution;
  return z;
}

GapSet GapSet::from_components(std::span<const std::pair<double, double>> comps,
                               double resolution) {
  std::vector<std::pair<double, double>> sorted;
  sorted.reserve(comps.size());
  for (const auto& [x, y] : comps) {
    require(in_unit(x) && in_unit(y) && x <= y, "from_components: bad component");
    sorted.emplace_back(x, y);
  }
  if (sorted.empty()) return empty_set(resolution);
  std::sort(sorted.begin(), sorted.end());

  // Closed-set union semantics: overlapping or touching components merge.
  std::vector<std::pair<double, double>> merged;
  merged.push_back(sorted.front());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    auto& cur = merged.back();
    if (sorted[i].first <= cur.second) {
      cur.second = std::max(cur.second, sorted[i].second);
    } else {
      merged.push_back(sorted[i]);
    }
  }

  GapSet z;
  z.empty = false;
  z.lo = merged.front().first;
  z.hi = merged.back().second;
  z.resolution = resolution;
  z.gaps.reserve(merged.size() - 1);
  for (std::size_t i = 0; i + 1 < merged.size(); ++i)
    z.gaps.emplace_back(merged[i].second, merged[i + 1].first);
  return z;
}

std::vector<std::pair<double, double>> GapSet::components() const {
  std::vector<std::pair<double, double>> comps;
  if (empty) return comps;
  comps.reserve(gaps.size() + 1);
  double start = lo;
  for (const auto& [l, r] : gaps) {
    comps.emplace_back(start, l);
    start = r;
  }
  comps.emplace_back(start, hi);
  return comps;
}

bool GapSet::valid() const {
  if (empty) return gaps.empty();
  if (!in_unit(lo) || !in_unit(hi) || lo > hi) return false;
  if (!(resolution >= 0.0) || !std::isfinite(resolution)) return false;
  double prev_r = lo;
  for (const auto& [l, r] : gaps) {
    if (!(l < r)) return false;
    if (l < prev_r || r > hi) return false;
    prev_r = r;
  }
  return true;
}

GapSet coarsen_points(std::span<const double> sorted_points, double delta) {
  require(delta > 0.0, "coarsen_points: delta must be positive");
  if (sorted_points.empty()) return GapSet::empty_set(delta);
  GapSet z;
  z.empty = false;
  z.lo = sorted_points.front();
  z.hi = sorted_points.back();
  z.resolution = delta;
  require(in_unit(z.lo) && in_unit(z.hi), "coarsen_points: points outside [0,1]");
  for (std::size_t i = 0; i + 1 < sorted_points.size(); ++i) {
    require(sorted_points[i] <= sorted_points[i + 1], "coarsen_points: points not sorted");
    if (sorted_points[i + 1] - sorted_points[i] > delta)
      z.gaps.emplace_back(sorted_points[i], sorted_points[i + 1]);
  }
  return z;
}

bool avoids(const GapSet& z, double s, double t) {
  require(in_unit(s) && in_unit(t) && s <= t, "avoids: need 0 <= s <= t <= 1");
  if (z.empty) return true;
  if (t < z.lo || s > z.hi) return true;
  const double s2 = std::max(s, z.lo);
  const double t2 = std::min(t, z.hi);
  const auto idx = last_gap_left_of(z.gaps, s2);
  if (idx < 0) return false;
  return z.gaps[static_cast<std::size_t>(idx)].second > t2;
}

bool contains_point(const GapSet& z, double x) {
  if (z.empty || x < z.lo || x > z.hi) return false;
  const auto idx = last_gap_left_of(z.gaps, x);
  if (idx < 0) return true;
  return !(z.gaps[static_cast<std::size_t>(idx)].second > x);
}

GapSet restrict(const GapSet& z, double s, double t) {
  require(in_unit(s) && in_unit(t) && s <= t, "restrict: need 0 <= s <= t <= 1");
  if (z.empty) return GapSet::empty_set(z.resolution);
  double a = std::max(z.lo, s);
  double b = std::min(z.hi, t);
  if (a > b) return GapSet::empty_set(z.resolution);
  // Cut points falling inside a gap move to the gap edge.
  if (auto i = last_gap_left_of(z.gaps, a); i >= 0) {
    const auto& g = z.gaps[static_cast<std::size_t>(i)];
    if (g.second > a) a = g.second;
  }
  if (auto i = last_gap_left_of(z.gaps, b); i >= 0) {
    const auto& g = z.gaps[static_cast<std::size_t>(i)];
    if (g.second > b) b = g.first;
  }
  if (a > b) return GapSet::empty_set(z.resolution);
  GapSet out;
  out.empty = false;
  out.lo = a;
  out.hi = b;
  out.resolution = z.resolution;
  for (const auto& g : z.gaps)
    if (g.first >= a && g.second <= b) out.gaps.push_back(g);
  return out;
}

GapSet shift_circular(const GapSet& z, double t) {
  require(std::isfinite(t), "shift_circular: bad shift");
  if (z.empty) return z;
  double frac = t - std::floor(t);
  if (frac == 0.0) return z;
  std::vector<std::pair<double, double>> comps;
  for (auto [x, y] : z.components()) {
    double xs = x + frac;
    double ys = y + frac;
    if (xs >= 1.0) {
      comps.emplace_back(xs - 1.0, ys - 1.0);
    } else if (ys <= 1.0) {
      comps.emplace_back(xs, ys);
    } else {
      comps.emplace_back(xs, 1.0);
      comps.emplace_back(0.0, ys - 1.0);
    }
  }
  return GapSet::from_components(comps, z.resolution);
}

GapSet set_union(const GapSet& a, const GapSet& b) {
  const double res = std::max(a.resolution, b.resolution);
  if (a.empty && b.empty) return GapSet::empty_set(res);
  auto comps = a.components();
  auto more = b.components();
  comps.insert(comps.end(), more.begin(), more.end());
  return GapSet::from_components(comps, res);
}

GapSet set_intersect(const GapSet& a, const GapSet& b) {
  const double res = std::max(a.resolution, b.resolution);
  if (a.empty || b.empty) return GapSet::empty_set(res);
  const auto ca = a.components();
  const auto cb = b.components();
  std::vector<std::pair<double, double>> out;
  std::size_t i = 0, j = 0;
  while (i < ca.size() && j < cb.size()) {
    const double x = std::max(ca[i].first, cb[j].first);
    const double y = std::min(ca[i].second, cb[j].second);
    if (x <= y) out.emplace_back(x, y);
    if (ca[i].second < cb[j].second)
      ++i;
    else
      ++j;
  }
  return GapSet::from_components(out, res);
}

GapSet limit_points(const GapSet& z) {
  if (z.empty) return z;
  std::vector<std::pair<double, double>> keep;
  for (const auto& c : z.components())
    if (c.first < c.second) keep.push_back(c);
  return GapSet::from_components(keep, z.resolution);
}

double lebesgue(const GapSet& z) {
  if (z.empty) return 0.0;
  double len = z.hi - z.lo;
  for (const auto& [l, r] : z.gaps) len -= r - l;
  return len;
}

double min_gap(const GapSet& z) {
  require(!z.empty, "min_gap: empty set");
  double m = std::numeric_limits<double>::infinity();
  for (const auto& [l, r] : z.gaps) m = std::min(m, r - l);
  return m;
}

double set_distance(const GapSet& a, const GapSet& b) {
  if (a.empty || b.empty) return std::numeric_limits<double>::infinity();
  const auto ca = a.components();
  const auto cb = b.components();
  double best = std::numeric_limits<double>::infinity();
  std::size_t i = 0, j = 0;
  while (i < ca.size() && j < cb.size()) {
    const double x = std::max(ca[i].first, cb[j].first);
    const double y = std::min(ca[i].second, cb[j].second);
    if (x <= y) return 0.0;
    best = std::min(best, x - y);
    if (ca[i].second < cb[j].second)
      ++i;
    else
      ++j;
  }
  return best;
}

}  // namespace regen

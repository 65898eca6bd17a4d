#include "regen/boxdim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace regen {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Linear fit of log N against log(1/eps); fills slope, std_err, r2.
void fit_loglog(DimEstimate& est) {
  const std::size_t n = est.scales.size();
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = -std::log(est.scales[i].first);
    ys[i] = std::log(static_cast<double>(est.scales[i].second));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = my + slope * (xs[i] - mx);
    ss_res += (ys[i] - fit) * (ys[i] - fit);
    ss_tot += (ys[i] - my) * (ys[i] - my);
  }
  est.std_err = n > 2 ? std::sqrt(ss_res / static_cast<double>(n - 2) / sxx) : 0.0;
  est.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  est.slope = std::clamp(slope, 0.0, 1.0);
}

DimEstimate fit_over_scales(double eps_max, double eps_min, int levels,
                            const std::vector<std::size_t>& counts) {
  DimEstimate est;
  est.narrow_range = eps_max / eps_min < 8.0;
  const double ratio = std::pow(eps_min / eps_max, 1.0 / static_cast<double>(levels - 1));
  double eps = eps_max;
  for (int i = 0; i < levels; ++i, eps *= ratio) est.scales.emplace_back(eps, counts[i]);
  fit_loglog(est);
  return est;
}

void check_scale_range(double eps_max, double eps_min, int levels, double resolution) {
  require(std::isfinite(eps_min) && std::isfinite(eps_max) && eps_min > 0.0,
          "estimate_dimension: eps bounds must be positive");
  require(eps_min < eps_max && eps_max <= 1.0,
          "estimate_dimension: need 0 < eps_min < eps_max <= 1");
  require(levels >= 4, "estimate_dimension: need at least 4 levels");
  require(eps_min >= 4.0 * resolution,
          "estimate_dimension: eps_min below 4x the set resolution");
}

}  // namespace

std::size_t box_count(const GapSet& z, double eps) {
  require(std::isfinite(eps) && eps > 0.0, "box_count: eps must be positive");
  require(eps * (1.0 + 1e-12) >= z.resolution, "box_count: eps below the set resolution");
  if (z.empty) return 0;

  // Cells [k*eps, (k+1)*eps) for k < K-1, and [(K-1)*eps, 1] for the last.
  const auto last_cell =
      static_cast<long long>(std::ceil(1.0 / eps - 1e-12)) - 1;
  const auto cell_of = [&](double x) {
    return std::min(static_cast<long long>(std::floor(x / eps)), last_cell);
  };
  std::size_t count = 0;
  long long prev = -1;
  for (const auto& [x, y] : z.components()) {
    const long long lo = std::max(cell_of(x), prev + 1);
    const long long hi = cell_of(y);
    if (hi >= lo) {
      count += static_cast<std::size_t>(hi - lo + 1);
      prev = hi;
    }
  }
  return count;
}

DimEstimate estimate_dimension(const GapSet& z, double eps_max, double eps_min, int levels) {
  require(!z.empty, "estimate_dimension: set is empty");
  check_scale_range(eps_max, eps_min, levels, z.resolution);

  const double ratio = std::pow(eps_min / eps_max, 1.0 / static_cast<double>(levels - 1));
  std::vector<std::size_t> counts;
  double eps = eps_max;
  for (int i = 0; i < levels; ++i, eps *= ratio) counts.push_back(box_count(z, eps));
  return fit_over_scales(eps_max, eps_min, levels, counts);
}

DimEstimate ensemble_dimension(std::span<const GapSet> sets, double eps_max, double eps_min,
                               int levels) {
  require(!sets.empty(), "ensemble_dimension: no sets given");
  double resolution = 0.0;
  for (const auto& z : sets) {
    require(!z.empty, "ensemble_dimension: sets must be nonempty");
    resolution = std::max(resolution, z.resolution);
  }
  check_scale_range(eps_max, eps_min, levels, resolution);

  const double ratio = std::pow(eps_min / eps_max, 1.0 / static_cast<double>(levels - 1));
  std::vector<std::size_t> counts(static_cast<std::size_t>(levels), 0);
  double eps = eps_max;
  for (int i = 0; i < levels; ++i, eps *= ratio)
    for (const auto& z : sets) counts[static_cast<std::size_t>(i)] += box_count(z, eps);
  return fit_over_scales(eps_max, eps_min, levels, counts);
}

std::vector<WindowEstimate> local_dimension_profile(const GapSet& z, int window_count,
                                                    double eps_max, double eps_min, int levels) {
  require(window_count >= 2, "local_dimension_profile: need at least 2 windows");
  std::vector<WindowEstimate> out;
  out.reserve(static_cast<std::size_t>(window_count));
  for (int j = 0; j < window_count; ++j) {
    WindowEstimate w;
    w.lo = static_cast<double>(j) / static_cast<double>(window_count);
    w.hi = static_cast<double>(j + 1) / static_cast<double>(window_count);
    const GapSet piece = restrict(z, w.lo, w.hi);
    if (!piece.empty) {
      w.occupied = true;
      w.est = estimate_dimension(piece, eps_max, eps_min, levels);
    }
    out.push_back(std::move(w));
  }
  return out;
}

GapSet cantor_set(int levels) {
  require(levels >= 0, "cantor_set: levels must be nonnegative");
  std::vector<std::pair<double, double>> comps = {{0.0, 1.0}};
  for (int l = 0; l < levels; ++l) {
    std::vector<std::pair<double, double>> next;
    next.reserve(comps.size() * 2);
    for (const auto& [a, b] : comps) {
      const double w = (b - a) / 3.0;
      next.emplace_back(a, a + w);
      next.emplace_back(b - w, b);
    }
    comps = std::move(next);
  }
  return GapSet::from_components(comps, 0.0);
}

}  // namespace regen

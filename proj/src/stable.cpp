#include "regen/stable.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace regen {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

StableParams StableParams::from_d(double d, double scale) {
  require(std::isfinite(d) && d > 0.0 && d < 2.0, "StableParams: d must lie in (0,2)");
  require(std::isfinite(scale) && scale > 0.0, "StableParams: scale must be positive");
  StableParams p;
  p.d = d;
  p.alpha = 1.0 - d / 2.0;
  p.scale = scale;
  return p;
}

DelaySpec DelaySpec::fixed(double t0) {
  require(std::isfinite(t0) && t0 >= 0.0, "DelaySpec: fixed delay must be >= 0");
  return {DelayKind::Fixed, t0};
}

double sample_positive_stable(double alpha, RngStream& rng) {
  require(alpha > 0.0 && alpha < 1.0, "sample_positive_stable: alpha must lie in (0,1)");
  const double theta = kPi * rng.uniform();
  const double e = rng.exponential();
  const double b = 1.0 - alpha;
  const double log_a = std::log(std::sin(b * theta)) +
                       (alpha / b) * std::log(std::sin(alpha * theta)) -
                       (1.0 / b) * std::log(std::sin(theta));
  double log_s = (b / alpha) * (log_a - std::log(e));
  // Heavy upper tail: cap the exponent so a once-in-an-age draw stays finite.
  log_s = std::min(log_s, 700.0);
  return std::exp(log_s);
}

std::vector<StableValidationRow> validate_stable_sampler(double alpha,
                                                         std::span<const double> lambdas,
                                                         std::size_t n, RngStream& rng) {
  require(n >= 2, "validate_stable_sampler: need n >= 2");
  for (double l : lambdas) require(l > 0.0, "validate_stable_sampler: lambda must be positive");
  std::vector<double> sum(lambdas.size(), 0.0), sumsq(lambdas.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = sample_positive_stable(alpha, rng);
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      const double v = std::exp(-lambdas[j] * s);
      sum[j] += v;
      sumsq[j] += v * v;
    }
  }
  std::vector<StableValidationRow> rows;
  rows.reserve(lambdas.size());
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    StableValidationRow r;
    r.lambda = lambdas[j];
    r.n = n;
    r.empirical = sum[j] / static_cast<double>(n);
    r.target = std::exp(-std::pow(lambdas[j], alpha));
    const double var = std::max(0.0, sumsq[j] / static_cast<double>(n) - r.empirical * r.empirical);
    const double se = std::sqrt(var / static_cast<double>(n));
    r.z = se > 0.0 ? (r.empirical - r.target) / se : 0.0;
    rows.push_back(r);
  }
  return rows;
}

SubordinatorPath sample_path(const StableParams& params, const DelaySpec& delay,
                             double horizon, double step, RngStream& rng) {
  require(std::isfinite(horizon) && horizon > 0.0, "sample_path: horizon must be positive");
  require(std::isfinite(step) && step > 0.0, "sample_path: step must be positive");
  require(params.d > 0.0 && params.d < 2.0, "sample_path: d must lie in (0,2)");
  require(std::abs(params.alpha - (1.0 - params.d / 2.0)) < 1e-12,
          "sample_path: alpha inconsistent with d");

  SubordinatorPath path;
  path.params = params;
  path.step = step;
  path.horizon = horizon;
  switch (delay.kind) {
    case DelayKind::Pinned:
      path.delay = 0.0;
      break;
    case DelayKind::Exponential:
      path.delay = rng.exponential();
      break;
    case DelayKind::Fixed:
      require(delay.t0 >= 0.0, "sample_path: fixed delay must be >= 0");
      path.delay = delay.t0;
      break;
  }

  const double inc_scale = std::pow(params.scale * step, 1.0 / params.alpha);
  double cur = path.delay;
  if (cur <= horizon) {
    // Mean record count is E[L_horizon]/step.
    const double expected = 1.1 * std::pow(horizon, params.alpha) /
                                (params.scale * std::tgamma(1.0 + params.alpha) * step) +
                            16.0;
    path.points.reserve(static_cast<std::size_t>(std::min(expected, 4e6)));
  }
  path.points.push_back(cur);
  while (cur <= horizon) {
    cur += inc_scale * sample_positive_stable(params.alpha, rng);
    path.points.push_back(cur);
  }

  if (delay.kind == DelayKind::Pinned) {
    std::size_t in_window = 0;
    for (double p : path.points)
      if (p <= horizon) ++in_window;
    path.degenerate = in_window < 2;
  }
  return path;
}

GapSet to_gapset(const SubordinatorPath& path, double horizon, double delta) {
  require(std::isfinite(horizon) && horizon > 0.0 && horizon <= 1.0,
          "to_gapset: horizon must lie in (0,1]");
  require(delta > 0.0, "to_gapset: delta must be positive");
  const double spacing = std::pow(path.params.scale * path.step, 1.0 / path.params.alpha);
  require(delta * (1.0 + 1e-9) >= 10.0 * spacing,
          "to_gapset: delta below 10x the record spacing of the grid");

  const auto& pts = path.points;
  if (pts.empty() || pts.front() > horizon) return GapSet::empty_set(delta);
  auto beyond = std::upper_bound(pts.begin(), pts.end(), horizon);
  const auto last_in = static_cast<std::size_t>(beyond - pts.begin()) - 1;

  GapSet z;
  z.empty = false;
  z.lo = pts.front();
  z.hi = pts[last_in];
  z.resolution = delta;
  for (std::size_t i = 0; i < last_in; ++i)
    if (pts[i + 1] - pts[i] > delta) z.gaps.emplace_back(pts[i], pts[i + 1]);
  // Overshoot within delta of the last record: indistinguishable from the
  // set continuing through the horizon at this resolution.
  if (last_in + 1 < pts.size() && pts[last_in + 1] - pts[last_in] <= delta) z.hi = horizon;
  return z;
}

}  // namespace regen

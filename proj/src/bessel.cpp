#include "regen/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace regen {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

BesselPath integrate_besq(double d, double x0, double horizon, double dt, RngStream& rng) {
  require(std::isfinite(d) && d > 0.0 && d < 2.0, "integrate_besq: d must lie in (0,2)");
  require(std::isfinite(x0) && x0 >= 0.0, "integrate_besq: x0 must be nonnegative");
  require(std::isfinite(dt) && dt > 0.0, "integrate_besq: dt must be positive");
  require(std::isfinite(horizon) && dt < horizon, "integrate_besq: need dt < horizon");

  BesselPath path;
  path.d = d;
  path.x0 = x0;
  path.dt = dt;
  path.horizon = horizon;
  const auto steps = static_cast<std::size_t>(horizon / dt + 1e-9);
  path.values.resize(steps + 1);

  double y = x0 * x0;
  path.values[0] = x0;
  const double drift = d * dt;
  const double two_sqrt_dt = 2.0 * std::sqrt(dt);
  for (std::size_t k = 1; k <= steps; ++k) {
    y = std::max(y + drift + two_sqrt_dt * std::sqrt(y) * rng.normal(), 0.0);
    path.values[k] = std::sqrt(y);
  }
  return path;
}

GapSet zero_set(const BesselPath& path, double theta, double delta) {
  require(std::isfinite(theta) && theta > 0.0, "zero_set: threshold must be positive");
  require(theta * theta * (1.0 + 1e-9) >= 10.0 * path.d * path.dt,
          "zero_set: threshold below the per-step diffusion noise");
  require(std::isfinite(delta) && delta * (1.0 + 1e-9) >= 10.0 * path.dt,
          "zero_set: delta below 10x the grid mesh");

  std::vector<double> hits;
  for (std::size_t k = 0; k < path.values.size(); ++k) {
    double t = static_cast<double>(k) * path.dt;
    if (t > 1.0) {
      if (t - 1.0 >= 0.5 * path.dt) break;
      t = 1.0;
    }
    if (path.values[k] <= theta) hits.push_back(t);
  }
  return coarsen_points(hits, delta);
}

BesselPath compose_norm(const BesselPath& a, const BesselPath& b) {
  require(a.dt == b.dt, "compose_norm: paths must share the grid mesh");
  require(a.horizon == b.horizon, "compose_norm: paths must share the horizon");
  require(a.values.size() == b.values.size(), "compose_norm: paths must share the grid");

  BesselPath out;
  out.d = a.d + b.d;
  out.x0 = std::sqrt(a.x0 * a.x0 + b.x0 * b.x0);
  out.dt = a.dt;
  out.horizon = a.horizon;
  out.values.resize(a.values.size());
  for (std::size_t k = 0; k < a.values.size(); ++k)
    out.values[k] = std::sqrt(a.values[k] * a.values[k] + b.values[k] * b.values[k]);
  return out;
}

}  // namespace regen

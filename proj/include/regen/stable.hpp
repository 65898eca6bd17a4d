#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "regen/gapset.hpp"
#include "regen/rng.hpp"

namespace regen {

// Parameters of the regenerative-set sampler. `d` is the Bessel dimension in
// (0,2); the inverse local time of a Bessel(d) process at zero is a stable
// subordinator of index alpha = 1 - d/2, which is what gets simulated. The
// zero set has Hausdorff dimension alpha. `scale` multiplies the Laplace
// exponent: E exp(-lambda M_s) = exp(-s * scale * lambda^alpha).
struct StableParams {
  double d = 1.0;
  double alpha = 0.5;
  double scale = 1.0;

  // Validates d in (0,2); d >= 2 is rejected rather than simulated (the set
  // is almost surely empty there and the subordinator degenerates).
  static StableParams from_d(double d, double scale = 1.0);
};

enum class DelayKind { Pinned, Exponential, Fixed };

// Start-time law of the set: Pinned starts at 0, Exponential draws an Exp(1)
// delay, Fixed starts at a given t0.
struct DelaySpec {
  DelayKind kind = DelayKind::Pinned;
  double t0 = 0.0;

  static DelaySpec pinned() { return {DelayKind::Pinned, 0.0}; }
  static DelaySpec exponential() { return {DelayKind::Exponential, 0.0}; }
  static DelaySpec fixed(double t0);
};

// Subordinator range sampled on an operational-time grid of mesh `step`.
// points[k] = delay + M_{k*step}; generation stops with the first record
// beyond the horizon kept as the overshoot witness.
struct SubordinatorPath {
  StableParams params;
  double delay = 0.0;
  double step = 0.0;
  double horizon = 1.0;
  std::vector<double> points;
  // Set when Pinned sampling produced fewer than 2 records inside the
  // horizon: the grid is too coarse to resolve any structure.
  bool degenerate = false;
};

// One-sided stable draw with E exp(-lambda S) = exp(-lambda^alpha),
// 0 < alpha < 1. Kanter's representation: with theta ~ U(0,pi) and
// E ~ Exp(1),  S = (a(theta)/E)^((1-alpha)/alpha)  where
// a(t) = sin((1-a)t) sin(at)^(a/(1-a)) / sin(t)^(1/(1-a)).
// Evaluated in log space so extreme draws do not overflow intermediates.
double sample_positive_stable(double alpha, RngStream& rng);

struct StableValidationRow {
  double lambda = 0.0;
  double empirical = 0.0;
  double target = 0.0;
  double z = 0.0;
  std::size_t n = 0;
};

// Monte Carlo check of the Laplace transform at the given lambdas; one row
// per lambda with the z-score of (empirical mean - target). The caller
// decides what |z| is acceptable.
std::vector<StableValidationRow> validate_stable_sampler(double alpha,
                                                         std::span<const double> lambdas,
                                                         std::size_t n, RngStream& rng);

SubordinatorPath sample_path(const StableParams& params, const DelaySpec& delay,
                             double horizon, double step, RngStream& rng);

// Delta-coarsened closed set of records within [0, horizon]. Requires
// delta >= 10 * (scale*step)^(1/alpha), i.e. at least an order of magnitude
// above the typical record spacing, so the coarsening does not manufacture
// structure the grid cannot support. If the path overshoots the horizon by
// no more than delta, the set is extended to the horizon: at resolution
// delta the two are indistinguishable.
GapSet to_gapset(const SubordinatorPath& path, double horizon, double delta);

}  // namespace regen

#pragma once

#include <vector>

#include "regen/gapset.hpp"
#include "regen/rng.hpp"

namespace regen {

// Euler path of a Bessel process of parameter d started at x0, stored on a
// uniform grid of mesh dt: values[k] is X at time k*dt. Always nonnegative.
struct BesselPath {
  double d = 1.0;
  double x0 = 0.0;
  double dt = 0.0;
  double horizon = 1.0;
  std::vector<double> values;
};

// Integrates the squared process Y = X^2 (dY = d dt + 2 sqrt(Y) dW, clamped
// at 0) and returns X = sqrt(Y). The squared form sidesteps the 1/X drift
// singularity at the zeros, which is where all the interest lies.
BesselPath integrate_besq(double d, double x0, double horizon, double dt, RngStream& rng);

// Delta-coarsened set of grid times in [0,1] where the path sits at or below
// the threshold. Requires theta^2 >= 10*d*dt, keeping genuine approaches to
// zero above the per-step diffusion noise, and delta >= 10*dt.
GapSet zero_set(const BesselPath& path, double theta, double delta);

// Pointwise Euclidean norm of two paths on the same grid, labeled with the
// summed parameter d1 + d2.
BesselPath compose_norm(const BesselPath& a, const BesselPath& b);

}  // namespace regen

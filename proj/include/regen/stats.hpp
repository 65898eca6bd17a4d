#pragma once

#include <cstddef>

namespace regen {

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

// Wilson score interval for a binomial proportion; z = 1.96 gives the usual
// 95% interval. Requires n >= 1 and hits <= n.
WilsonInterval wilson_interval(std::size_t hits, std::size_t n, double z = 1.96);

// Pooled two-proportion z-score for the difference h1/n1 - h2/n2; zero when
// the pooled variance vanishes (both rates 0 or both 1).
double two_proportion_z(std::size_t h1, std::size_t n1, std::size_t h2, std::size_t n2);

}  // namespace regen

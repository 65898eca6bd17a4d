#include "regen/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace regen {

WilsonInterval wilson_interval(std::size_t hits, std::size_t n, double z) {
  if (n == 0) throw std::invalid_argument("wilson_interval: n must be positive");
  if (hits > n) throw std::invalid_argument("wilson_interval: hits exceed n");
  if (!(z > 0.0)) throw std::invalid_argument("wilson_interval: z must be positive");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(hits) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double two_proportion_z(std::size_t h1, std::size_t n1, std::size_t h2, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("two_proportion_z: empty sample");
  const double p1 = static_cast<double>(h1) / static_cast<double>(n1);
  const double p2 = static_cast<double>(h2) / static_cast<double>(n2);
  const double pool =
      static_cast<double>(h1 + h2) / static_cast<double>(n1 + n2);
  const double var = pool * (1.0 - pool) * (1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2));
  if (var <= 0.0) return 0.0;
  return (p1 - p2) / std::sqrt(var);
}

}  // namespace regen

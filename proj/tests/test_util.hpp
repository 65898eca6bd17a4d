#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "regen/gapset.hpp"
#include "regen/rng.hpp"
#include "regen/toyps.hpp"

namespace regen::testutil {

struct SetGenOptions {
  double p_empty = 0.05;
  double p_point = 0.25;   // chance a component degenerates to a point
  int max_components = 8;
  bool quantize = false;   // snap endpoints to a dyadic grid (exercises ties)
  int quantize_bits = 12;
};

inline double gen_coord(RngStream& rng, const SetGenOptions& o) {
  double x = rng.uniform();
  if (o.quantize) {
    const double scale = static_cast<double>(1 << o.quantize_bits);
    x = std::floor(x * scale) / scale;
  }
  return x;
}

inline GapSet random_gapset(RngStream& rng, const SetGenOptions& o = {}) {
  if (rng.uniform() < o.p_empty) return GapSet::empty_set(0.0);
  const int k = 1 + static_cast<int>(rng.uniform() * o.max_components);
  std::vector<std::pair<double, double>> comps;
  for (int i = 0; i < k; ++i) {
    double a = gen_coord(rng, o);
    double b = rng.uniform() < o.p_point ? a : gen_coord(rng, o);
    if (b < a) std::swap(a, b);
    comps.emplace_back(a, b);
  }
  return GapSet::from_components(comps, 0.0);
}

// Occupancy law with mass bounded away from zero on every pattern.
inline DiscreteLaw random_law(RngStream& rng, int n) {
  std::vector<double> probs(std::size_t{1} << n);
  double sum = 0.0;
  for (double& p : probs) {
    p = rng.exponential() + 0.5;
    sum += p;
  }
  for (double& p : probs) p /= sum;
  return DiscreteLaw::from_probs(n, std::move(probs));
}

inline ToyVector random_toy_vector(RngStream& rng, const DiscreteLaw& law) {
  ToyVector v;
  v.law = law;
  v.coeffs.resize(law.probs.size());
  for (auto& c : v.coeffs) c = {rng.normal(), rng.normal()};
  const double norm = v.norm();
  for (auto& c : v.coeffs) c /= norm;
  return v;
}

// Membership decided directly from the component list, no gap logic involved.
inline bool brute_member(const std::vector<std::pair<double, double>>& comps, double x) {
  for (const auto& [a, b] : comps)
    if (x >= a && x <= b) return true;
  return false;
}

inline bool approx_set_equal(const GapSet& a, const GapSet& b, double tol) {
  if (a.empty != b.empty) return false;
  if (a.empty) return true;
  const auto ca = a.components();
  const auto cb = b.components();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (std::fabs(ca[i].first - cb[i].first) > tol) return false;
    if (std::fabs(ca[i].second - cb[i].second) > tol) return false;
  }
  return true;
}

}  // namespace regen::testutil

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "regen/bessel.hpp"
#include "regen/boxdim.hpp"
#include "regen/stable.hpp"
#include "test_util.hpp"

using namespace regen;

TEST_CASE("box counts match hand values on canonical sets") {
  const auto full = GapSet::interval(0.0, 1.0, 0.0);
  CHECK(box_count(full, 0.0625) == 16);
  CHECK(box_count(full, 1.0) == 1);
  CHECK(box_count(full, 0.3) == 4);

  const auto point = GapSet::interval(0.5, 0.5, 0.0);
  CHECK(box_count(point, 0.1) == 1);
  CHECK(box_count(point, 0.25) == 1);  // sits on a cell boundary: half-open rule
  CHECK(box_count(GapSet::interval(1.0, 1.0, 0.0), 0.25) == 1);

  CHECK(box_count(GapSet::empty_set(0.0), 0.1) == 0);

  // Two components inside one cell are counted once.
  const std::vector<std::pair<double, double>> comps = {{0.1, 0.12}, {0.15, 0.18}};
  CHECK(box_count(GapSet::from_components(comps, 0.0), 0.5) == 1);

  const auto coarse = GapSet::interval(0.0, 1.0, 0.1);
  CHECK(box_count(coarse, 0.1) == 10);
  CHECK_THROWS_AS(box_count(coarse, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(box_count(coarse, 0.0), std::invalid_argument);
}

TEST_CASE("counts are monotone on halving grids and respect subsets") {
  // Monotonicity in eps is a theorem only for nested grids (each cell the
  // union of two children); unaligned grids can wiggle by one cell.
  RngStream rng(0xA1B2C3D4, 300);
  testutil::SetGenOptions opts;
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = testutil::random_gapset(rng, opts);
    const auto b = testutil::random_gapset(rng, opts);
    const auto u = set_union(a, b);
    std::size_t prev = 0;
    bool first = true;
    for (double eps : {0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625}) {
      const auto na = box_count(a, eps);
      const auto nu = box_count(u, eps);
      CHECK(na <= nu);
      if (!first) CHECK(na >= prev);
      prev = na;
      first = false;
    }
  }
}

TEST_CASE("full interval and finite sets regress to the extremes") {
  const auto full = GapSet::interval(0.0, 1.0, 0.0);
  const auto est = estimate_dimension(full, 0.1, 1e-3, 6);
  CHECK(std::abs(est.slope - 1.0) < 0.02);
  CHECK(est.r2 > 0.999);
  CHECK_FALSE(est.narrow_range);
  CHECK(est.scales.size() == 6);
  CHECK(est.scales.front().first == doctest::Approx(0.1));
  CHECK(est.scales.back().first == doctest::Approx(1e-3));

  std::vector<std::pair<double, double>> points;
  for (int j = 0; j < 20; ++j) {
    const double x = 0.02 + 0.05 * static_cast<double>(j) + 0.001 * ((j * 7) % 5);
    points.emplace_back(x, x);
  }
  const auto sparse = GapSet::from_components(points, 0.0);
  const auto flat = estimate_dimension(sparse, 5e-3, 2e-4, 6);
  CHECK(flat.slope < 0.1);

  CHECK_THROWS_AS(estimate_dimension(GapSet::empty_set(0.0), 0.1, 1e-3, 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_dimension(full, 0.1, 1e-3, 3), std::invalid_argument);
  CHECK_THROWS_AS(estimate_dimension(full, 1e-3, 0.1, 6), std::invalid_argument);
  const auto res_set = GapSet::interval(0.0, 1.0, 1e-3);
  CHECK_THROWS_AS(estimate_dimension(res_set, 0.1, 2e-3, 6), std::invalid_argument);

  const auto narrow = estimate_dimension(full, 0.1, 0.05, 4);
  CHECK(narrow.narrow_range);
}

TEST_CASE("sampled pinned sets at d=1 average to dimension one half") {
  const auto params = StableParams::from_d(1.0);
  const double step = std::sqrt(1e-7);  // record spacing 1e-7, resolution 1e-6
  RngStream root(0xA1B2C3D4, 310);
  double sum = 0.0;
  const std::size_t trials = 200;
  for (std::size_t k = 0; k < trials; ++k) {
    RngStream rng = root.split(k);
    const auto path = sample_path(params, DelaySpec::pinned(), 1.0, step, rng);
    const auto z = to_gapset(path, 1.0, 1e-6);
    sum += estimate_dimension(z, 1e-1, 1e-4, 7).slope;
  }
  const double mean = sum / static_cast<double>(trials);
  INFO("ensemble mean slope=", mean);
  CHECK(std::abs(mean - 0.5) < 0.05);
}

TEST_CASE("cantor set calibrates the estimator") {
  const auto cantor = cantor_set(7);
  CHECK(cantor.components().size() == 128);
  CHECK(lebesgue(cantor) == doctest::Approx(std::pow(2.0 / 3.0, 7)).epsilon(1e-12));

  const auto est = estimate_dimension(cantor, 0.3, 1e-3, 7);
  INFO("cantor slope=", est.slope, " r2=", est.r2);
  CHECK(std::abs(est.slope - 0.6309297535714574) < 0.03);
  CHECK(est.r2 > 0.99);
}

TEST_CASE("pooled ensemble counting matches the per-set fit") {
  const auto cantor = cantor_set(7);
  std::vector<GapSet> copies(5, cantor);
  const auto pooled = ensemble_dimension(copies, 0.3, 1e-3, 7);
  const auto single = estimate_dimension(cantor, 0.3, 1e-3, 7);
  CHECK(pooled.slope == doctest::Approx(single.slope).epsilon(1e-12));

  CHECK_THROWS_AS(ensemble_dimension({}, 0.3, 1e-3, 7), std::invalid_argument);
  std::vector<GapSet> with_empty = {cantor, GapSet::empty_set(0.0)};
  CHECK_THROWS_AS(ensemble_dimension(with_empty, 0.3, 1e-3, 7), std::invalid_argument);
}

TEST_CASE("windows report local structure") {
  const auto full = GapSet::interval(0.0, 1.0, 0.0);
  const auto windows = local_dimension_profile(full, 4, 0.04, 2e-3, 5);
  REQUIRE(windows.size() == 4);
  for (const auto& w : windows) {
    CHECK(w.occupied);
    CHECK(std::abs(w.est.slope - 1.0) < 0.05);
  }
  CHECK(windows[0].lo == 0.0);
  CHECK(windows[3].hi == 1.0);
  CHECK(windows[1].lo == doctest::Approx(0.25));

  const auto half = GapSet::interval(0.0, 0.45, 0.0);
  const auto half_windows = local_dimension_profile(half, 4, 0.04, 2e-3, 5);
  CHECK(half_windows[0].occupied);
  CHECK(half_windows[1].occupied);
  CHECK_FALSE(half_windows[2].occupied);
  CHECK_FALSE(half_windows[3].occupied);

  CHECK_THROWS_AS(local_dimension_profile(full, 1, 0.04, 2e-3, 5), std::invalid_argument);
}

TEST_CASE("zero sets of the d=1.5 SDE have dimension one quarter") {
  // Cross-check against the independent integrator.  The detection threshold
  // also catches shallow excursion minima that are not zeros, and that
  // pollution scales like theta^(2-d), so the step must be small enough to
  // keep the fitted slope near the true value.
  const double dt = 1e-6;
  const double theta = std::sqrt(10.0 * 1.5 * dt);
  RngStream root(0xA1B2C3D4, 320);
  double sum = 0.0;
  std::size_t used = 0;
  for (std::size_t k = 0; k < 60; ++k) {
    RngStream rng = root.split(k);
    const auto path = integrate_besq(1.5, 0.0, 1.0, dt, rng);
    const auto z = zero_set(path, theta, 1e-3);
    if (z.empty) continue;
    sum += estimate_dimension(z, 1e-1, 4e-3, 5).slope;
    ++used;
  }
  REQUIRE(used > 50);
  const double mean = sum / static_cast<double>(used);
  INFO("mean slope=", mean, " over ", used, " paths");
  CHECK(std::abs(mean - 0.25) < 0.07);
}

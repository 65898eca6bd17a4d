#include "regen/toyps.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "regen/stable.hpp"

namespace regen {
namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

}  // namespace

DiscreteLaw DiscreteLaw::from_probs(int n, std::vector<double> probs,
                                    double smoothing) {
  require(n >= 1 && n <= 10, "law: cell count must be between 1 and 10");
  const std::size_t size = std::size_t{1} << n;
  require(probs.size() == size, "law: needs one probability per pattern");
  double sum = 0.0;
  for (double p : probs) {
    require(std::isfinite(p) && p > 0.0,
            "law: every pattern needs positive probability");
    sum += p;
  }
  require(std::abs(sum - 1.0) <= 1e-12, "law: probabilities must sum to 1");
  DiscreteLaw law;
  law.n = n;
  law.probs = std::move(probs);
  law.smoothing = smoothing;
  return law;
}

bool DiscreteLaw::valid() const {
  if (n < 1 || n > 10) return false;
  if (probs.size() != (std::size_t{1} << n)) return false;
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p <= 0.0) return false;
    sum += p;
  }
  return std::abs(sum - 1.0) <= 1e-12;
}

double ToyVector::norm() const {
  double sum = 0.0;
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    sum += law.probs[p] * std::norm(coeffs[p]);
  }
  return std::sqrt(sum);
}

std::uint32_t occupancy_pattern(const GapSet& z, int n) {
  require(n >= 1 && n <= 10, "occupancy: cell count must be between 1 and 10");
  std::uint32_t pattern = 0;
  for (int i = 0; i < n; ++i) {
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    if (!restrict(z, lo, hi).empty) pattern |= std::uint32_t{1} << i;
  }
  return pattern;
}

DiscreteLaw estimate_law(double d, int n, int samples, double kappa,
                         RngStream& rng) {
  require(n >= 1 && n <= 10, "estimate_law: cell count must be between 1 and 10");
  require(kappa > 0.0, "estimate_law: smoothing mass must be positive");
  const std::size_t size = std::size_t{1} << n;
  require(samples >= 100 * static_cast<int>(size),
          "estimate_law: needs at least 100 samples per pattern");

  const StableParams params = StableParams::from_d(d);
  // Coarsening scale two orders below the narrowest cell width (1/10), so
  // occupancy decisions are insensitive to the grid.
  const double delta = 2e-3;
  const double step = std::pow(delta / 10.0, params.alpha);

  std::vector<double> counts(size, 0.0);
  for (int s = 0; s < samples; ++s) {
    const SubordinatorPath path =
        sample_path(params, DelaySpec::exponential(), 1.0, step, rng);
    const GapSet z = to_gapset(path, 1.0, delta);
    counts[occupancy_pattern(z, n)] += 1.0;
  }

  std::vector<double> probs(size);
  const double denom =
      static_cast<double>(samples) + kappa * static_cast<double>(size);
  double sum = 0.0;
  for (std::size_t p = 0; p < size; ++p) {
    probs[p] = (counts[p] + kappa) / denom;
    sum += probs[p];
  }
  for (double& p : probs) p /= sum;
  return DiscreteLaw::from_probs(n, std::move(probs), kappa);
}

DiscreteLaw marginal_range(const DiscreteLaw& law, int lo, int len) {
  require(lo >= 0 && len >= 1 && lo + len <= law.n,
          "marginal: cell range out of bounds");
  const std::size_t size = std::size_t{1} << law.n;
  const std::uint32_t sub_mask = (std::uint32_t{1} << len) - 1;
  std::vector<double> probs(std::size_t{1} << len, 0.0);
  for (std::size_t q = 0; q < size; ++q) {
    probs[(q >> lo) & sub_mask] += law.probs[q];
  }
  return DiscreteLaw::from_probs(len, std::move(probs), law.smoothing);
}

DiscreteLaw marginal_front(const DiscreteLaw& law, int len) {
  return marginal_range(law, 0, len);
}

DiscreteLaw marginal_back(const DiscreteLaw& law, int len) {
  return marginal_range(law, law.n - len, len);
}

ToyVector rebase(const ToyVector& v, const DiscreteLaw& law2) {
  require(v.law.n == law2.n, "rebase: cell counts differ");
  ToyVector out;
  out.law = law2;
  out.coeffs.resize(v.coeffs.size());
  for (std::size_t p = 0; p < v.coeffs.size(); ++p) {
    out.coeffs[p] = std::sqrt(v.law.probs[p] / law2.probs[p]) * v.coeffs[p];
  }
  return out;
}

ToyVector product(const ToyVector& v, const ToyVector& w,
                  const DiscreteLaw& target) {
  const int m = v.law.n;
  const int k = w.law.n;
  require(m + k == target.n, "product: part cells must add up to target cells");
  ToyVector out;
  out.law = target;
  out.coeffs.assign(std::size_t{1} << target.n, 0.0);
  for (std::uint32_t p2 = 0; p2 < (std::uint32_t{1} << k); ++p2) {
    for (std::uint32_t p1 = 0; p1 < (std::uint32_t{1} << m); ++p1) {
      const std::size_t idx = (static_cast<std::size_t>(p2) << m) | p1;
      const double factor = std::sqrt(v.law.probs[p1] * w.law.probs[p2] /
                                      target.probs[idx]);
      out.coeffs[idx] = factor * v.coeffs[p1] * w.coeffs[p2];
    }
  }
  return out;
}

ToyVector unit_vector(const DiscreteLaw& law) {
  ToyVector out;
  out.law = law;
  out.coeffs.assign(std::size_t{1} << law.n, 0.0);
  out.coeffs[0] = 1.0 / std::sqrt(law.probs[0]);
  return out;
}

double weighted_distance(const ToyVector& a, const ToyVector& b) {
  require(a.law.n == b.law.n, "distance: cell counts differ");
  double sum = 0.0;
  for (std::size_t p = 0; p < a.coeffs.size(); ++p) {
    sum += a.law.probs[p] * std::norm(a.coeffs[p] - b.coeffs[p]);
  }
  return std::sqrt(sum);
}

std::vector<std::vector<std::uint8_t>> spatial_projection_chain(
    const DiscreteLaw& law1, const DiscreteLaw& law2, int n) {
  require(law1.n == n && law2.n == n, "chain: laws must cover n cells");
  require(power_of_two(n), "chain: cell count must be a power of two");
  const int depths = log2_exact(n) + 1;
  const std::size_t pairs = std::size_t{1} << (2 * n);
  const std::uint32_t pat_mask = (std::uint32_t{1} << n) - 1;

  std::vector<std::vector<std::uint8_t>> chain;
  chain.reserve(depths);
  for (int depth = 0; depth < depths; ++depth) {
    const int blocks = 1 << depth;
    const int width = n >> depth;
    std::vector<std::uint8_t> diag(pairs);
    for (std::size_t idx = 0; idx < pairs; ++idx) {
      const std::uint32_t p1 = static_cast<std::uint32_t>(idx >> n);
      const std::uint32_t p2 = static_cast<std::uint32_t>(idx) & pat_mask;
      std::uint8_t value = 1;
      for (int b = 0; b < blocks; ++b) {
        const std::uint32_t block_mask = ((std::uint32_t{1} << width) - 1)
                                         << (b * width);
        if ((p1 & block_mask) != 0 && (p2 & block_mask) != 0) {
          value = 0;
          break;
        }
      }
      diag[idx] = value;
    }
    chain.push_back(std::move(diag));
  }
  return chain;
}

double chain_expectation(const DiscreteLaw& law1, const DiscreteLaw& law2,
                         const std::vector<std::uint8_t>& diag) {
  require(law1.n == law2.n, "expectation: laws must cover the same cells");
  const int n = law1.n;
  const std::size_t patterns = std::size_t{1} << n;
  require(diag.size() == patterns * patterns,
          "expectation: diagonal size must match the pattern-pair space");
  double sum = 0.0;
  for (std::size_t p1 = 0; p1 < patterns; ++p1) {
    const double w1 = law1.probs[p1];
    for (std::size_t p2 = 0; p2 < patterns; ++p2) {
      if (diag[(p1 << n) | p2]) sum += w1 * law2.probs[p2];
    }
  }
  return sum;
}

namespace {

double weighted_dot(const std::vector<double>& weight,
                    const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += weight[i] * a[i] * b[i];
  return sum;
}

// Modified Gram-Schmidt with a second orthogonalization pass; candidates
// whose remainder drops below the relative threshold are dependent on the
// accepted set and get dropped.
void orthonormal_accept(const std::vector<double>& weight,
                        std::vector<double> candidate,
                        std::vector<std::vector<double>>* basis) {
  const double norm0 = std::sqrt(weighted_dot(weight, candidate, candidate));
  if (!(norm0 > 0.0)) return;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : *basis) {
      const double coef = weighted_dot(weight, q, candidate);
      for (std::size_t i = 0; i < candidate.size(); ++i) {
        candidate[i] -= coef * q[i];
      }
    }
  }
  const double norm1 = std::sqrt(weighted_dot(weight, candidate, candidate));
  if (norm1 <= 1e-8 * norm0) return;
  for (double& x : candidate) x /= norm1;
  basis->push_back(std::move(candidate));
}

}  // namespace

double gram_projection_check(const DiscreteLaw& law1, const DiscreteLaw& law2,
                             int n) {
  require(law1.n == n && law2.n == n, "gram check: laws must cover n cells");
  require(power_of_two(n) && n <= 4,
          "gram check: dense oracle is limited to n in {1, 2, 4}");

  const auto chain = spatial_projection_chain(law1, law2, n);
  const std::size_t dim = std::size_t{1} << (2 * n);
  const std::uint32_t pat_mask = (std::uint32_t{1} << n) - 1;
  std::vector<double> weight(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    weight[idx] = law1.probs[idx >> n] * law2.probs[idx & pat_mask];
  }

  // Fixed stream: the check is a deterministic function of the laws.
  RngStream rng(0x6772616dULL, 0);
  double worst = 0.0;

  for (std::size_t depth = 0; depth < chain.size(); ++depth) {
    const int blocks = 1 << depth;
    const int width = n >> static_cast<int>(depth);
    const std::uint32_t block_pat = std::uint32_t{1} << width;
    const std::size_t block_dim = std::size_t{1} << (2 * width);
    const int gens_per_block = static_cast<int>(2 * block_pat);

    // Per block: dense generators u x g (first pattern empty) and f x u
    // (second pattern empty), with u the unit of the block marginal law.
    std::vector<std::vector<std::vector<double>>> block_gens(blocks);
    for (int b = 0; b < blocks; ++b) {
      const DiscreteLaw m1 = marginal_range(law1, b * width, width);
      const DiscreteLaw m2 = marginal_range(law2, b * width, width);
      const double u1 = 1.0 / std::sqrt(m1.probs[0]);
      const double u2 = 1.0 / std::sqrt(m2.probs[0]);
      block_gens[b].reserve(gens_per_block);
      for (std::uint32_t j = 0; j < block_pat; ++j) {
        std::vector<double> vec(block_dim, 0.0);
        for (std::uint32_t q = 0; q < block_pat; ++q) vec[q] = u1 * rng.normal();
        block_gens[b].push_back(std::move(vec));
      }
      for (std::uint32_t j = 0; j < block_pat; ++j) {
        std::vector<double> vec(block_dim, 0.0);
        for (std::uint32_t p = 0; p < block_pat; ++p) {
          vec[static_cast<std::size_t>(p) << width] = u2 * rng.normal();
        }
        block_gens[b].push_back(std::move(vec));
      }
    }

    // Every combination of one generator per block, assembled as a tensor
    // product over the pair space.
    std::vector<std::vector<double>> basis;
    std::size_t combos = 1;
    for (int b = 0; b < blocks; ++b) combos *= gens_per_block;
    for (std::size_t combo = 0; combo < combos; ++combo) {
      std::vector<double> full(dim);
      std::size_t rest = combo;
      std::vector<const std::vector<double>*> pick(blocks);
      for (int b = 0; b < blocks; ++b) {
        pick[b] = &block_gens[b][rest % gens_per_block];
        rest /= gens_per_block;
      }
      for (std::size_t idx = 0; idx < dim; ++idx) {
        const std::uint32_t p1 = static_cast<std::uint32_t>(idx >> n);
        const std::uint32_t p2 = static_cast<std::uint32_t>(idx) & pat_mask;
        double value = 1.0;
        for (int b = 0; b < blocks; ++b) {
          const std::uint32_t p1b = (p1 >> (b * width)) & (block_pat - 1);
          const std::uint32_t p2b = (p2 >> (b * width)) & (block_pat - 1);
          value *= (*pick[b])[(static_cast<std::size_t>(p1b) << width) | p2b];
          if (value == 0.0) break;
        }
        full[idx] = value;
      }
      orthonormal_accept(weight, std::move(full), &basis);
    }

    // Column c of the projection is sum_q <q, e_c> q with <q, e_c> =
    // weight[c] * q[c]; compare entrywise against the 0/1 diagonal.
    const auto& diag = chain[depth];
    std::vector<double> column(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      std::fill(column.begin(), column.end(), 0.0);
      for (const auto& q : basis) {
        const double coef = weight[c] * q[c];
        if (coef == 0.0) continue;
        for (std::size_t r = 0; r < dim; ++r) column[r] += coef * q[r];
      }
      for (std::size_t r = 0; r < dim; ++r) {
        const double want = (r == c) ? static_cast<double>(diag[c]) : 0.0;
        worst = std::max(worst, std::abs(column[r] - want));
      }
    }
  }
  return worst;
}

}  // namespace regen

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "regen/gapset.hpp"
#include "regen/rng.hpp"

namespace regen {

// Probability law over the 2^n occupancy patterns of n equal cells of [0,1].
// Pattern bit i set means cell [i/n, (i+1)/n] is occupied. Every pattern
// carries strictly positive mass, so any two laws over the same cells are
// mutually absolutely continuous and rebasing between them is well defined.
struct DiscreteLaw {
  int n = 0;
  std::vector<double> probs;
  double smoothing = 0.0;

  // Validates 1 <= n <= 10, one entry per pattern, all entries positive and
  // finite, sum within 1e-12 of 1. The smoothing field records the additive
  // mass per pattern when the law came from counts; 0 means exact input.
  static DiscreteLaw from_probs(int n, std::vector<double> probs,
                                double smoothing = 0.0);
  bool valid() const;
};

// Element of the weighted coefficient space attached to `law`:
// norm^2 = sum_p probs(p) * |coeffs(p)|^2.
struct ToyVector {
  DiscreteLaw law;
  std::vector<std::complex<double>> coeffs;

  double norm() const;
};

// Occupancy bitmask of z over the n equal cells of [0,1]; cells are closed,
// so a point on a cell boundary occupies both neighbours.
std::uint32_t occupancy_pattern(const GapSet& z, int n);

// Empirical occupancy law from independent zero-set draws with Exponential(1)
// delay, coarsened well below the cell width. Each pattern count gets an
// additive kappa so the result has full support:
// probs = (counts + kappa) / (samples + kappa * 2^n).
// Requires samples >= 100 * 2^n and kappa > 0.
DiscreteLaw estimate_law(double d, int n, int samples, double kappa,
                         RngStream& rng);

// Law of the `len` consecutive cells starting at cell `lo`, obtained by
// summing out all other cells.
DiscreteLaw marginal_range(const DiscreteLaw& law, int lo, int len);
DiscreteLaw marginal_front(const DiscreteLaw& law, int len);
DiscreteLaw marginal_back(const DiscreteLaw& law, int len);

// The same vector expressed against law2: coefficients scale by
// sqrt(probs(p) / probs2(p)). Norm is preserved and rebasing back returns
// the original vector.
ToyVector rebase(const ToyVector& v, const DiscreteLaw& law2);

// Concatenation product: v lives on the first v.law.n cells, w on the
// remaining w.law.n, and the result on all target.n = v.law.n + w.law.n.
// With p = (p2 << v.law.n) | p1,
//   coeffs(p) = sqrt(probs_v(p1) * probs_w(p2) / probs_target(p))
//               * v(p1) * w(p2).
// The square-root factor absorbs the mismatch between the product of the
// part laws and the target law, making the map an exact isometry:
// norm(product) = norm(v) * norm(w). The reference laws of v and w are
// meant to be the matching marginals of the target law.
ToyVector product(const ToyVector& v, const ToyVector& w,
                  const DiscreteLaw& target);

// probs(empty)^{-1/2} on the empty pattern, zero elsewhere; norm 1. Products
// of units are units and rebasing a unit yields the unit of the new law.
ToyVector unit_vector(const DiscreteLaw& law);

// sqrt(sum_p probs_a(p) * |a(p) - b(p)|^2), weighted by a's law. Requires
// matching cell counts.
double weighted_distance(const ToyVector& a, const ToyVector& b);

// 0/1 diagonal operators on the pattern-pair space, pair index
// (p1 << n) | p2, one operator per depth 0..log2(n). At depth k the n cells
// split into 2^k equal blocks and the operator multiplies by the product
// over blocks of 1{p1 empty on the block OR p2 empty on the block}. Depth
// log2(n) uses single-cell blocks and equals 1{p1 and p2 share no occupied
// cell}. Emptiness on a block passes to both halves, so the chain is
// pointwise nondecreasing in depth. Requires n a power of two and both laws
// over n cells.
std::vector<std::vector<std::uint8_t>> spatial_projection_chain(
    const DiscreteLaw& law1, const DiscreteLaw& law2, int n);

// Expectation of a 0/1 diagonal under the product law law1 x law2.
double chain_expectation(const DiscreteLaw& law1, const DiscreteLaw& law2,
                         const std::vector<std::uint8_t>& diag);

// Dense cross-check of the chain diagonals. For each depth the span of
// blockwise generators {unit x g} and {f x unit} (g, f dense) is built
// explicitly, orthonormalized in the weighted inner product, and assembled
// into a projection matrix; returns the largest absolute entry deviation
// from the matching chain diagonal over all depths. Requires n <= 4.
double gram_projection_check(const DiscreteLaw& law1, const DiscreteLaw& law2,
                             int n);

}  // namespace regen

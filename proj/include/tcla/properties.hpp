#pragma once

#include <random>
#include <string>
#include <vector>

#include "tcla/reducibility.hpp"
#include "tcla/shapovalov.hpp"

namespace tcla {

/// Outcome of one randomized or exhaustive property check.
struct PropertyResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  long skipped = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void fail(const std::string& witness) {
    if (failures++ == 0) first_failure = witness;
  }
  void absorb(const PropertyResult& o);
};

/// Every nonzero χ ∈ Q₊ with 1 ≤ |P_χ| ≤ max_basis, by height.
std::vector<RootVector> sweep_weights(const TruncatedAlgebra& alg, std::size_t max_basis);

struct SweepReport {
  std::vector<RootVector> weights;
  std::size_t largest_basis = 0;
  /// Zeros of B below the block diagonal.
  PropertyResult triangular{"triangular"};
  /// Fast entries equal the oracle on the diagonal blocks.
  PropertyResult fast_vs_oracle{"fast-vs-oracle"};
  /// Every monomial of det B uses degree-N generators only.
  PropertyResult det_support{"det-support"};
};

/// Oracle lower triangle of B for every sweep weight, checked against the
/// block structure, the fast entries and the determinant support.
SweepReport check_sweep(const TruncatedAlgebra& alg, std::size_t max_basis, int workers = 0);

/// Degree bound, strict drop and leading term of q(x_λ y_μ) on random pairs
/// of the same weight drawn from the given weights.
PropertyResult check_lemma_bounds(const TruncatedAlgebra& alg, const std::vector<RootVector>& weights, int pairs,
                                  std::mt19937_64& rng);

/// Random Λ, some forced onto the reducible locus. For every χ in the window
/// the radical is nonzero iff det F_χ(Λ) = 0 iff a positive root α ≤ χ has
/// Λ(h_α@N) = 0; the verdict's witness, when in the window, has a nonzero
/// radical; an irreducible verdict has no radical anywhere in the window.
PropertyResult check_criterion(const TruncatedAlgebra& alg, const std::vector<RootVector>& window, int samples,
                               std::mt19937_64& rng);

/// A random Λ on all Cartan generators; with probability one half it is moved
/// onto the reducible locus.
Functional random_lambda(const TruncatedAlgebra& alg, std::mt19937_64& rng);

/// affine_criterion against a direct scan over |m| ≤ ⌊|(λ̄|α)/c|⌋ + 1 for the
/// affine sl2 root datum.
PropertyResult check_affine(int samples, std::mt19937_64& rng);

/// Block and Bareiss determinants agree up to the star sign.
PropertyResult check_det_methods(const TruncatedAlgebra& alg, const std::vector<RootVector>& weights,
                                 int workers = 0);

/// validate_algebra, reported as a property.
PropertyResult check_axioms(const LieAlgebra& alg);

struct SelftestOptions {
  std::uint64_t seed = 1;
  /// Built-in algebra names; empty means sl2, sl3, heisenberg, witt, virasoro.
  std::vector<std::string> algebras;
  /// Nilpotency indices; empty means 1 and 2.
  std::vector<int> nilpotencies;
  std::size_t max_basis = 12;
  int samples = 10;
  int workers = 1;
};

struct SelftestReport {
  std::vector<std::string> lines;
  bool ok = true;
  /// First failing witness, if any.
  std::string first_failure;
};

/// Axioms, lemma bounds, triangularity, fast-vs-oracle, determinant methods
/// and criterion-vs-radical on small randomized instances. Deterministic in
/// the options.
SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace tcla

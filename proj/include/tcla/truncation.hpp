#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "tcla/lie_algebra.hpp"

namespace tcla {

/// Basis element x ⊗ t^degree of the truncated algebra.
struct TruncElement {
  BasisElement base;
  int degree = 0;

  friend bool operator==(const TruncElement&, const TruncElement&) = default;
  friend auto operator<=>(const TruncElement&, const TruncElement&) = default;
};

using TruncCombination = LinearCombination<TruncElement>;

/// Positive root vector x_γ ⊗ t^degree, the alphabet of partitions. Ordered
/// by t-degree first, then the base enumeration, then the root-space slot.
struct TruncIndex {
  int degree = 0;
  std::int64_t key = 0;
  int slot = 0;
  RootVector root;

  friend bool operator==(const TruncIndex& a, const TruncIndex& b) {
    return a.degree == b.degree && a.key == b.key && a.slot == b.slot;
  }
  friend std::strong_ordering operator<=>(const TruncIndex& a, const TruncIndex& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    if (auto c = a.key <=> b.key; c != 0) return c;
    return a.slot <=> b.slot;
  }

  TruncElement x() const { return {BasisElement::positive(root, slot), degree}; }
  TruncElement y() const { return {BasisElement::negative(root, slot), degree}; }
};

/// ĝ = g ⊗ k[t]/t^{N+1} over a validated base algebra.
class TruncatedAlgebra {
 public:
  /// Throws Error unless nilpotency >= 1.
  TruncatedAlgebra(AlgebraPtr base, int nilpotency);

  const LieAlgebra& base() const { return *base_; }
  const AlgebraPtr& base_ptr() const { return base_; }
  int nilpotency() const { return n_; }

  /// [a ⊗ t^i, b ⊗ t^j] = [a, b] ⊗ t^{i+j}, zero past degree N.
  TruncCombination bracket(const TruncElement& a, const TruncElement& b) const;
  /// h_α ⊗ t^N.
  CartanPoly pairing(const RootVector& alpha) const;

  TruncIndex index(const RootVector& root, int degree, int slot = 0) const;
  /// Index of a positive root vector element.
  TruncIndex index_of(const TruncElement& e) const;

  std::string index_label(const TruncIndex& g) const;
  std::string element_label(const TruncElement& e) const;
  CartanGen cartan_gen(int h_index, int degree) const;

 private:
  void require_degree(int d) const;

  AlgebraPtr base_;
  int n_;
};

/// (τ, d) ↦ (τ, N - d).
TruncIndex star(const TruncIndex& g, int nilpotency);

}  // namespace tcla

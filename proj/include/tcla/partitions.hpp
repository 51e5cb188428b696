#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tcla/truncation.hpp"

namespace tcla {

/// Finite multiset over the truncated index set, stored sorted. The empty
/// partition indexes the monomial 1.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<TruncIndex> entries);

  const std::vector<TruncIndex>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  RootVector weight(int rank) const;
  /// Total t-degree.
  int t_degree() const;
  /// Entries of the given t-degree.
  Partition degree_slice(int d) const;
  /// Entries whose root is alpha.
  Partition root_slice(const RootVector& alpha) const;
  /// Entries with root alpha and t-degree d.
  Partition cell(const RootVector& alpha, int d) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
  }

 private:
  std::vector<TruncIndex> entries_;
};

Partition star_partition(const Partition& lambda, int nilpotency);

std::string partition_label(const TruncatedAlgebra& alg, const Partition& lambda);

/// Cell of a multiplicity array: a positive root at a t-degree, ordered by
/// t-degree first and then the base enumeration.
struct LCell {
  int degree = 0;
  std::int64_t key = 0;
  RootVector root;

  friend bool operator==(const LCell& a, const LCell& b) { return a.degree == b.degree && a.key == b.key; }
  friend std::strong_ordering operator<=>(const LCell& a, const LCell& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    return a.key <=> b.key;
  }
};

/// Multiplicity array L: (α, d) ↦ |λ^{α,d}|, positive counts only.
class LArray {
 public:
  void add(const LCell& cell, int count = 1);
  const std::map<LCell, int>& counts() const { return counts_; }
  int count(const LCell& cell) const;

  RootVector weight(int rank) const;
  /// Σ_α L_{α,d} α.
  RootVector degree_weight(int d, int rank) const;
  /// Σ_α L_{α,d}.
  int degree_length(int d) const;

  friend bool operator==(const LArray&, const LArray&) = default;

 private:
  std::map<LCell, int> counts_;
};

LArray l_array_of(const Partition& lambda);

/// The block order θ(L) = (Δ(L), |L|, L). Δ(L) compares degree by degree in
/// reversed Q₊, |L| with its degree-0 entry reversed, and L itself
/// lexicographically over the cell enumeration.
std::strong_ordering compare_theta(const LArray& a, const LArray& b, int nilpotency, int rank);

/// compare_theta after checking that both arrays have weight chi.
std::strong_ordering compare_blocks(const LArray& a, const LArray& b, const RootVector& chi,
                                    const TruncatedAlgebra& alg);

/// Every partition of weight chi, in ascending block order and ascending
/// entry order inside a block. Throws WeightError when chi ∉ Q₊.
std::vector<Partition> enumerate_partitions(const TruncatedAlgebra& alg, const RootVector& chi);

struct Block {
  LArray array;
  std::vector<Partition> partitions;
};

/// enumerate_partitions grouped by multiplicity array.
std::vector<Block> blocks_of(const TruncatedAlgebra& alg, const RootVector& chi);

}  // namespace tcla

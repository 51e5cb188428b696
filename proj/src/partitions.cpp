#include "tcla/partitions.hpp"

#include <algorithm>

#include "tcla/error.hpp"

namespace tcla {

Partition::Partition(std::vector<TruncIndex> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

RootVector Partition::weight(int rank) const {
  RootVector w = RootVector::zero(rank);
  for (const auto& g : entries_) w += g.root;
  return w;
}

int Partition::t_degree() const {
  int d = 0;
  for (const auto& g : entries_) d += g.degree;
  return d;
}

Partition Partition::degree_slice(int d) const {
  Partition p;
  for (const auto& g : entries_) {
    if (g.degree == d) p.entries_.push_back(g);
  }
  return p;
}

Partition Partition::root_slice(const RootVector& alpha) const {
  Partition p;
  for (const auto& g : entries_) {
    if (g.root == alpha) p.entries_.push_back(g);
  }
  return p;
}

Partition Partition::cell(const RootVector& alpha, int d) const {
  Partition p;
  for (const auto& g : entries_) {
    if (g.degree == d && g.root == alpha) p.entries_.push_back(g);
  }
  return p;
}

Partition star_partition(const Partition& lambda, int nilpotency) {
  std::vector<TruncIndex> e;
  e.reserve(lambda.size());
  for (const auto& g : lambda.entries()) e.push_back(star(g, nilpotency));
  return Partition(std::move(e));
}

std::string partition_label(const TruncatedAlgebra& alg, const Partition& lambda) {
  std::string s = "{";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i > 0) s += ",";
    s += alg.index_label(lambda.entries()[i]);
  }
  return s + "}";
}

// ------------------------------------------------------------------ LArray

void LArray::add(const LCell& cell, int count) {
  if (count == 0) return;
  int& c = counts_[cell];
  c += count;
  if (c == 0) counts_.erase(cell);
}

int LArray::count(const LCell& cell) const {
  auto it = counts_.find(cell);
  return it == counts_.end() ? 0 : it->second;
}

RootVector LArray::weight(int rank) const {
  RootVector w = RootVector::zero(rank);
  for (const auto& [cell, c] : counts_) w += c * cell.root;
  return w;
}

RootVector LArray::degree_weight(int d, int rank) const {
  RootVector w = RootVector::zero(rank);
  for (const auto& [cell, c] : counts_) {
    if (cell.degree == d) w += c * cell.root;
  }
  return w;
}

int LArray::degree_length(int d) const {
  int n = 0;
  for (const auto& [cell, c] : counts_) {
    if (cell.degree == d) n += c;
  }
  return n;
}

LArray l_array_of(const Partition& lambda) {
  LArray a;
  for (const auto& g : lambda.entries()) a.add(LCell{g.degree, g.key, g.root});
  return a;
}

std::strong_ordering compare_theta(const LArray& a, const LArray& b, int nilpotency, int rank) {
  for (int d = 0; d <= nilpotency; ++d) {
    // Reversed Q₊: the larger weight comes first.
    if (auto c = compare_q_plus(b.degree_weight(d, rank), a.degree_weight(d, rank)); c != 0) return c;
  }
  if (auto c = b.degree_length(0) <=> a.degree_length(0); c != 0) return c;
  for (int d = 1; d <= nilpotency; ++d) {
    if (auto c = a.degree_length(d) <=> b.degree_length(d); c != 0) return c;
  }
  auto i = a.counts().begin();
  auto j = b.counts().begin();
  while (i != a.counts().end() || j != b.counts().end()) {
    // A cell missing from one side has count zero there.
    if (j == b.counts().end() || (i != a.counts().end() && i->first < j->first)) return std::strong_ordering::greater;
    if (i == a.counts().end() || j->first < i->first) return std::strong_ordering::less;
    if (auto c = i->second <=> j->second; c != 0) return c;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_blocks(const LArray& a, const LArray& b, const RootVector& chi,
                                    const TruncatedAlgebra& alg) {
  const int rank = alg.base().rank();
  if (a.weight(rank) != chi || b.weight(rank) != chi) {
    throw WeightError("multiplicity array does not have weight " + alg.base().root_label(chi));
  }
  return compare_theta(a, b, alg.nilpotency(), rank);
}

namespace {

void extend(const std::vector<TruncIndex>& alphabet, std::size_t pos, const RootVector& remaining,
            std::vector<TruncIndex>& current, std::vector<Partition>& out) {
  if (remaining.is_zero()) {
    out.emplace_back(current);
    return;
  }
  if (pos == alphabet.size()) return;
  const TruncIndex& g = alphabet[pos];
  extend(alphabet, pos + 1, remaining, current, out);
  RootVector rest = remaining - g.root;
  std::size_t pushed = 0;
  while (rest.is_nonnegative()) {
    current.push_back(g);
    ++pushed;
    extend(alphabet, pos + 1, rest, current, out);
    rest -= g.root;
  }
  current.resize(current.size() - pushed);
}

}  // namespace

std::vector<Block> blocks_of(const TruncatedAlgebra& alg, const RootVector& chi) {
  const LieAlgebra& base = alg.base();
  std::vector<TruncIndex> alphabet;
  for (const auto& root : base.positive_roots_below(chi)) {
    const int mult = base.root_multiplicity(root);
    for (int d = 0; d <= alg.nilpotency(); ++d) {
      for (int s = 0; s < mult; ++s) alphabet.push_back(alg.index(root, d, s));
    }
  }
  std::sort(alphabet.begin(), alphabet.end());
  std::vector<Partition> all;
  std::vector<TruncIndex> current;
  extend(alphabet, 0, chi, current, all);

  std::vector<Block> blocks;
  for (auto& p : all) {
    LArray a = l_array_of(p);
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.array == a; });
    if (it == blocks.end()) {
      blocks.push_back(Block{std::move(a), {}});
      it = std::prev(blocks.end());
    }
    it->partitions.push_back(std::move(p));
  }
  const int n = alg.nilpotency();
  const int rank = base.rank();
  std::sort(blocks.begin(), blocks.end(),
            [&](const Block& a, const Block& b) { return compare_theta(a.array, b.array, n, rank) < 0; });
  for (auto& b : blocks) std::sort(b.partitions.begin(), b.partitions.end());
  return blocks;
}

std::vector<Partition> enumerate_partitions(const TruncatedAlgebra& alg, const RootVector& chi) {
  std::vector<Partition> out;
  for (auto& b : blocks_of(alg, chi)) {
    for (auto& p : b.partitions) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace tcla

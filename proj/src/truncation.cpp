#include "tcla/truncation.hpp"

#include "tcla/error.hpp"

namespace tcla {

TruncatedAlgebra::TruncatedAlgebra(AlgebraPtr base, int nilpotency) : base_(std::move(base)), n_(nilpotency) {
  if (!base_) throw Error("truncation needs a base algebra");
  if (n_ < 1) throw Error("nilpotency index must be at least 1, got " + std::to_string(n_));
}

void TruncatedAlgebra::require_degree(int d) const {
  if (d < 0 || d > n_) {
    throw Error("t-degree " + std::to_string(d) + " outside [0, " + std::to_string(n_) + "]");
  }
}

TruncCombination TruncatedAlgebra::bracket(const TruncElement& a, const TruncElement& b) const {
  require_degree(a.degree);
  require_degree(b.degree);
  TruncCombination out;
  const int d = a.degree + b.degree;
  if (d > n_) return out;
  const BaseCombination value = base_->bracket(a.base, b.base);
  for (const auto& t : value.terms()) out.add(TruncElement{t.elem, d}, t.coeff);
  return out;
}

CartanPoly TruncatedAlgebra::pairing(const RootVector& alpha) const { return base_->pairing(alpha).h_alpha_at(n_); }

TruncIndex TruncatedAlgebra::index(const RootVector& root, int degree, int slot) const {
  require_degree(degree);
  return TruncIndex{degree, base_->enumeration_key(root), slot, root};
}

TruncIndex TruncatedAlgebra::index_of(const TruncElement& e) const {
  if (e.base.part == Part::Cartan) throw Error("Cartan element has no partition index");
  return index(e.base.root, e.degree, e.base.slot);
}

std::string TruncatedAlgebra::index_label(const TruncIndex& g) const {
  std::string s = "(" + base_->root_label(g.root);
  if (g.slot != 0) s += "#" + std::to_string(g.slot);
  return s + "," + std::to_string(g.degree) + ")";
}

std::string TruncatedAlgebra::element_label(const TruncElement& e) const {
  return base_->element_label(e.base) + "@" + std::to_string(e.degree);
}

CartanGen TruncatedAlgebra::cartan_gen(int h_index, int degree) const {
  require_degree(degree);
  if (h_index < 0 || h_index >= base_->cartan_dim()) throw Error("Cartan index out of range");
  return {static_cast<std::uint16_t>(h_index), static_cast<std::uint16_t>(degree)};
}

TruncIndex star(const TruncIndex& g, int nilpotency) {
  TruncIndex s = g;
  s.degree = nilpotency - g.degree;
  return s;
}

}  // namespace tcla

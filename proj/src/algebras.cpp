#include <map>
#include <regex>

#include "tcla/error.hpp"
#include "tcla/lie_algebra.hpp"

namespace tcla {

namespace {

constexpr int kWindowHeight = 6;

// ------------------------------------------------------------------ sl(n)
//
// Realized by matrix units: x for e_i - e_j (i < j) is E_ij, y is its
// transpose, h_k = E_kk - E_{k+1,k+1}.

class SpecialLinear final : public LieAlgebra {
 public:
  explicit SpecialLinear(int n) : n_(n) {
    for (int k = 1; k < n; ++k) {
      names_.push_back("h_a" + std::to_string(k));
      symbols_.push_back("a" + std::to_string(k));
    }
  }

  AlgebraKind kind() const override { return AlgebraKind::SpecialLinear; }
  std::string name() const override { return "sl" + std::to_string(n_); }
  int rank() const override { return n_ - 1; }
  std::vector<std::string> lattice_symbols() const override { return symbols_; }
  const std::vector<std::string>& cartan_names() const override { return names_; }
  bool is_finite() const override { return true; }

  bool is_positive_root(const RootVector& root) const override { return span(root).has_value(); }
  int root_multiplicity(const RootVector& root) const override {
    require_root(root);
    return 1;
  }
  std::int64_t enumeration_key(const RootVector& root) const override {
    auto [i, j] = require_root(root);
    return static_cast<std::int64_t>(i) * n_ + j;
  }

  std::vector<RootVector> positive_roots_below(const RootVector& chi) const override {
    require_positive_cone(chi);
    std::vector<RootVector> out;
    for (const auto& r : all_roots()) {
      if ((chi - r).is_nonnegative()) out.push_back(r);
    }
    return out;
  }

  std::vector<RootVector> positive_roots() const override { return all_roots(); }

  std::vector<RootVector> validation_roots() const override {
    std::vector<RootVector> out;
    for (const auto& r : all_roots()) {
      if (r.height() <= kWindowHeight) out.push_back(r);
    }
    return out;
  }

  BaseCombination bracket(const BasisElement& a, const BasisElement& b) const override {
    require_valid(a);
    require_valid(b);
    const auto ma = matrix_of(a);
    const auto mb = matrix_of(b);
    std::map<std::pair<int, int>, Rational> c;
    for (const auto& [p, u] : ma) {
      for (const auto& [q, v] : mb) {
        if (p.second == q.first) c[{p.first, q.second}] += u * v;
        if (q.second == p.first) c[{q.first, p.second}] -= u * v;
      }
    }
    return decompose(c);
  }

  PairingData pairing(const RootVector& alpha) const override {
    auto [i, j] = require_root(alpha);
    PairingData p;
    p.alpha = alpha;
    for (int k = i; k < j; ++k) p.h_alpha.add(BasisElement::cartan_element(k), 1);
    p.gram = {{Rational(1)}};
    return p;
  }

 private:
  using Matrix = std::vector<std::pair<std::pair<int, int>, Rational>>;

  // Positive root e_i - e_j as the pair (i, j), when it is one.
  std::optional<std::pair<int, int>> span(const RootVector& root) const {
    if (root.rank() != rank()) return std::nullopt;
    int first = -1, last = -1;
    for (int k = 0; k < rank(); ++k) {
      const int c = root.coords[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      if (c != 1) return std::nullopt;
      if (first < 0) first = k;
      if (last >= 0 && last != k - 1) return std::nullopt;
      last = k;
    }
    if (first < 0) return std::nullopt;
    return std::make_pair(first, last + 1);
  }

  std::pair<int, int> require_root(const RootVector& root) const {
    auto s = span(root);
    if (!s) throw Error("not a positive root of " + name() + ": " + root_label(root));
    return *s;
  }

  RootVector root_of(int i, int j) const {
    RootVector r = RootVector::zero(rank());
    for (int k = i; k < j; ++k) r.coords[static_cast<std::size_t>(k)] = 1;
    return r;
  }

  std::vector<RootVector> all_roots() const {
    std::vector<RootVector> out;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) out.push_back(root_of(i, j));
    }
    return out;
  }

  Matrix matrix_of(const BasisElement& e) const {
    if (e.part == Part::Cartan) return {{{e.cartan, e.cartan}, 1}, {{e.cartan + 1, e.cartan + 1}, -1}};
    auto [i, j] = *span(e.root);
    if (e.part == Part::Positive) return {{{i, j}, 1}};
    return {{{j, i}, 1}};
  }

  BaseCombination decompose(const std::map<std::pair<int, int>, Rational>& m) const {
    BaseCombination out;
    std::vector<Rational> diag(static_cast<std::size_t>(n_), 0);
    for (const auto& [pos, v] : m) {
      auto [r, c] = pos;
      if (r < c) {
        out.add(BasisElement::positive(root_of(r, c)), v);
      } else if (r > c) {
        out.add(BasisElement::negative(root_of(c, r)), v);
      } else {
        diag[static_cast<std::size_t>(r)] = v;
      }
    }
    Rational partial = 0;
    for (int k = 0; k + 1 < n_; ++k) {
      partial += diag[static_cast<std::size_t>(k)];
      out.add(BasisElement::cartan_element(k), partial);
    }
    return out;
  }

  int n_;
  std::vector<std::string> names_;
  std::vector<std::string> symbols_;
};

// ------------------------------------------------ rank-one infinite families

int root_index(const RootVector& r) { return r.coords.size() == 1 ? r.coords.front() : 0; }

class RankOneFamily : public LieAlgebra {
 public:
  explicit RankOneFamily(std::vector<std::string> names) : names_(std::move(names)) {}

  int rank() const override { return 1; }
  std::vector<std::string> lattice_symbols() const override { return {"d"}; }
  const std::vector<std::string>& cartan_names() const override { return names_; }
  bool is_finite() const override { return false; }

  bool is_positive_root(const RootVector& root) const override { return root.rank() == 1 && root_index(root) >= 1; }
  int root_multiplicity(const RootVector& root) const override {
    require_root(root);
    return 1;
  }
  std::int64_t enumeration_key(const RootVector& root) const override {
    require_root(root);
    return root_index(root);
  }
  std::vector<RootVector> positive_roots_below(const RootVector& chi) const override {
    require_positive_cone(chi);
    std::vector<RootVector> out;
    for (int m = 1; m <= root_index(chi); ++m) out.push_back(RootVector({m}));
    return out;
  }
  std::vector<RootVector> positive_roots() const override {
    throw Error(name() + " has infinitely many positive roots");
  }
  std::vector<RootVector> validation_roots() const override {
    std::vector<RootVector> out;
    for (int m = 1; m <= kWindowHeight; ++m) out.push_back(RootVector({m}));
    return out;
  }

 protected:
  void require_root(const RootVector& root) const {
    if (!is_positive_root(root)) throw Error("not a positive root of " + name() + ": " + root_label(root));
  }

  // Mode index of a non-central element: m for x_{m d}, -m for y_{m d}.
  static long mode(const BasisElement& e) {
    if (e.part == Part::Positive) return root_index(e.root);
    if (e.part == Part::Negative) return -root_index(e.root);
    return 0;
  }

  static BasisElement element_of_mode(long m, int zero_cartan) {
    if (m > 0) return BasisElement::positive(RootVector({static_cast<int>(m)}));
    if (m < 0) return BasisElement::negative(RootVector({static_cast<int>(-m)}));
    return BasisElement::cartan_element(zero_cartan);
  }

  std::vector<std::string> names_;
};

// [L_m, L_n] = (m - n) L_{m+n} + δ_{m+n,0} ψ(m) c. The Witt algebra has no c.
class VirasoroFamily final : public RankOneFamily {
 public:
  explicit VirasoroFamily(std::optional<PsiRule> psi)
      : RankOneFamily(psi ? std::vector<std::string>{"L0", "c"} : std::vector<std::string>{"L0"}),
        psi_(std::move(psi)) {}

  AlgebraKind kind() const override { return psi_ ? AlgebraKind::Virasoro : AlgebraKind::Witt; }
  std::string name() const override { return psi_ ? "virasoro" : "witt"; }
  const std::optional<PsiRule>& psi() const { return psi_; }

  BaseCombination bracket(const BasisElement& a, const BasisElement& b) const override {
    require_valid(a);
    require_valid(b);
    BaseCombination out;
    if (is_central(a) || is_central(b)) return out;
    const long m = mode(a);
    const long n = mode(b);
    out.add(element_of_mode(m + n, 0), Rational(m - n));
    if (psi_ && m + n == 0) out.add(BasisElement::cartan_element(1), (*psi_)(m));
    return out;
  }

  PairingData pairing(const RootVector& alpha) const override {
    require_root(alpha);
    const long m = root_index(alpha);
    PairingData p;
    p.alpha = alpha;
    p.h_alpha.add(BasisElement::cartan_element(0), Rational(2 * m));
    if (psi_) p.h_alpha.add(BasisElement::cartan_element(1), (*psi_)(m));
    p.gram = {{Rational(1)}};
    return p;
  }

 private:
  static bool is_central(const BasisElement& e) { return e.part == Part::Cartan && e.cartan == 1; }

  std::optional<PsiRule> psi_;
};

// [a_m, a_n] = m δ_{m+n,0} ħ with ħ central.
class Heisenberg final : public RankOneFamily {
 public:
  Heisenberg() : RankOneFamily({"hbar"}) {}

  AlgebraKind kind() const override { return AlgebraKind::Heisenberg; }
  std::string name() const override { return "heisenberg"; }

  BaseCombination bracket(const BasisElement& a, const BasisElement& b) const override {
    require_valid(a);
    require_valid(b);
    BaseCombination out;
    if (a.part == Part::Cartan || b.part == Part::Cartan) return out;
    const long m = mode(a);
    if (m + mode(b) == 0) out.add(BasisElement::cartan_element(0), Rational(m));
    return out;
  }

  PairingData pairing(const RootVector& alpha) const override {
    require_root(alpha);
    PairingData p;
    p.alpha = alpha;
    p.h_alpha.add(BasisElement::cartan_element(0), Rational(root_index(alpha)));
    p.gram = {{Rational(1)}};
    return p;
  }
};

}  // namespace

AlgebraPtr make_special_linear(int n) {
  if (n < 2) throw Error("sl(n) needs n >= 2");
  return std::make_shared<SpecialLinear>(n);
}

AlgebraPtr make_witt() { return std::make_shared<VirasoroFamily>(std::nullopt); }

AlgebraPtr make_virasoro(PsiRule psi) { return std::make_shared<VirasoroFamily>(std::move(psi)); }

AlgebraPtr make_heisenberg() { return std::make_shared<Heisenberg>(); }

const PsiRule* virasoro_psi(const LieAlgebra& alg) {
  const auto* v = dynamic_cast<const VirasoroFamily*>(&alg);
  if (v == nullptr || !v->psi()) return nullptr;
  return &*v->psi();
}

AlgebraPtr builtin_algebra(const std::string& name, const AlgebraParams& params) {
  AlgebraPtr alg;
  static const std::regex sl_pattern("sl([0-9]+)");
  std::smatch m;
  if (std::regex_match(name, m, sl_pattern)) {
    alg = make_special_linear(std::stoi(m[1].str()));
  } else if (name == "witt") {
    alg = make_witt();
  } else if (name == "virasoro") {
    alg = make_virasoro(params.psi.value_or(PsiRule::standard()));
  } else if (name == "heisenberg") {
    alg = make_heisenberg();
  } else {
    throw Error("unknown algebra '" + name + "'");
  }
  validate_algebra(*alg);
  return alg;
}

}  // namespace tcla

#include "tcla/lie_algebra.hpp"

#include <map>
#include <sstream>

#include "tcla/error.hpp"
#include "tcla/linalg.hpp"

namespace tcla {

// -------------------------------------------------------------- RootVector

bool RootVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool RootVector::is_nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

int RootVector::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  if (coords.size() < o.coords.size()) coords.resize(o.coords.size(), 0);
  for (std::size_t i = 0; i < o.coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  if (coords.size() < o.coords.size()) coords.resize(o.coords.size(), 0);
  for (std::size_t i = 0; i < o.coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

RootVector operator*(int k, RootVector a) {
  for (int& c : a.coords) c *= k;
  return a;
}

std::strong_ordering compare_q_plus(const RootVector& a, const RootVector& b) {
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  return a.coords <=> b.coords;
}

RootVector BasisElement::weight(int rank) const {
  switch (part) {
    case Part::Positive:
      return root;
    case Part::Negative:
      return -1 * root;
    case Part::Cartan:
      break;
  }
  return RootVector::zero(rank);
}

BasisElement omega(const BasisElement& e) {
  switch (e.part) {
    case Part::Positive:
      return BasisElement::negative(e.root, e.slot);
    case Part::Negative:
      return BasisElement::positive(e.root, e.slot);
    case Part::Cartan:
      break;
  }
  return e;
}

namespace {

BaseCombination omega(const BaseCombination& lc) {
  BaseCombination out;
  for (const auto& t : lc.terms()) out.add(tcla::omega(t.elem), t.coeff);
  return out;
}

}  // namespace

CartanPoly PairingData::h_alpha_at(int degree) const {
  CartanPoly p;
  for (const auto& t : h_alpha.terms()) {
    p += CartanPoly::generator({static_cast<std::uint16_t>(t.elem.cartan), static_cast<std::uint16_t>(degree)}) *
         t.coeff;
  }
  return p;
}

// ------------------------------------------------------- LieAlgebra helpers

bool LieAlgebra::in_positive_cone(const RootVector& chi) const {
  return chi.rank() == rank() && chi.is_nonnegative();
}

void LieAlgebra::require_positive_cone(const RootVector& chi) const {
  if (chi.rank() != rank()) {
    throw WeightError("weight has rank " + std::to_string(chi.rank()) + ", algebra " + name() + " has rank " +
                      std::to_string(rank()));
  }
  if (!chi.is_nonnegative()) throw WeightError("weight " + root_label(chi) + " is not in the positive cone");
}

void LieAlgebra::require_valid(const BasisElement& e) const {
  if (e.part == Part::Cartan) {
    if (e.cartan < 0 || e.cartan >= cartan_dim()) {
      throw Error("invalid Cartan index " + std::to_string(e.cartan) + " for " + name());
    }
    return;
  }
  if (e.root.rank() != rank() || !is_positive_root(e.root)) {
    throw Error("not a positive root of " + name() + ": " + root_label(e.root));
  }
  if (e.slot < 0 || e.slot >= root_multiplicity(e.root)) {
    throw Error("root-space slot " + std::to_string(e.slot) + " out of range for " + root_label(e.root));
  }
}

std::string LieAlgebra::root_label(const RootVector& root) const {
  const auto symbols = lattice_symbols();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < root.coords.size(); ++i) {
    int c = root.coords[i];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    if (c != 1) os << c;
    os << (i < symbols.size() ? symbols[i] : "?" + std::to_string(i));
    first = false;
  }
  return first ? "0" : os.str();
}

std::string LieAlgebra::element_label(const BasisElement& e) const {
  if (e.part == Part::Cartan) {
    const auto& names = cartan_names();
    return e.cartan >= 0 && e.cartan < cartan_dim() ? names[static_cast<std::size_t>(e.cartan)]
                                                    : "h?" + std::to_string(e.cartan);
  }
  std::string s = e.part == Part::Positive ? "x[" : "y[";
  s += root_label(e.root);
  if (e.slot != 0) s += "#" + std::to_string(e.slot);
  return s + "]";
}

CartanNamer LieAlgebra::cartan_namer() const {
  std::vector<std::string> names = cartan_names();
  return [names](std::uint16_t i) { return i < names.size() ? names[i] : "h?" + std::to_string(i); };
}

BaseCombination LieAlgebra::bracket(const BaseCombination& a, const BaseCombination& b) const {
  BaseCombination out;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) out.add(bracket(s.elem, t.elem), s.coeff * t.coeff);
  }
  return out;
}

// ------------------------------------------------------------------ PsiRule

PsiRule PsiRule::from_polynomial(std::vector<Rational> coeffs) {
  PsiRule rule;
  rule.fn = [coeffs](long m) {
    Rational v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * m + *it;
    return v;
  };
  rule.polynomial = std::move(coeffs);
  return rule;
}

PsiRule PsiRule::standard() { return from_polynomial({0, Rational(-1, 12), 0, Rational(1, 12)}); }

// --------------------------------------------------------------- validation

std::vector<BasisElement> validation_window(const LieAlgebra& alg) {
  std::vector<BasisElement> window;
  for (const auto& root : alg.validation_roots()) {
    const int mult = alg.root_multiplicity(root);
    for (int s = 0; s < mult; ++s) {
      window.push_back(BasisElement::positive(root, s));
      window.push_back(BasisElement::negative(root, s));
    }
  }
  for (int i = 0; i < alg.cartan_dim(); ++i) window.push_back(BasisElement::cartan_element(i));
  return window;
}

namespace {

std::string combination_label(const LieAlgebra& alg, const BaseCombination& lc) {
  if (lc.is_zero()) return "0";
  std::string s;
  for (const auto& t : lc.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(t.coeff) + "*" + alg.element_label(t.elem);
  }
  return s;
}

[[noreturn]] void fail(const LieAlgebra& alg, const std::string& axiom, const std::vector<BasisElement>& witness,
                       const std::string& detail = {}) {
  std::string msg = alg.name() + ": " + axiom + " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) msg += ", ";
    msg += alg.element_label(witness[i]);
  }
  msg += ")";
  if (!detail.empty()) msg += ": " + detail;
  throw ValidationError(msg);
}

}  // namespace

void validate_algebra(const LieAlgebra& alg) {
  const auto window = validation_window(alg);
  const std::size_t n = window.size();
  const int rank = alg.rank();

  std::vector<std::vector<BaseCombination>> table(n, std::vector<BaseCombination>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = alg.bracket(window[i], window[j]);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = window[i];
    if (omega(omega(a)) != a) fail(alg, "omega involution", {a});
    for (std::size_t j = 0; j < n; ++j) {
      const auto& b = window[j];
      BaseCombination sum = table[i][j];
      sum.add(table[j][i]);
      if (!sum.is_zero()) fail(alg, "antisymmetry", {a, b}, combination_label(alg, sum));
      // Weight grading: every term of [a,b] has weight wt(a) + wt(b).
      const RootVector w = a.weight(rank) + b.weight(rank);
      for (const auto& t : table[i][j].terms()) {
        if (t.elem.weight(rank) != w) fail(alg, "root grading", {a, b}, combination_label(alg, table[i][j]));
      }
      const BaseCombination lhs = omega(table[i][j]);
      const BaseCombination rhs = alg.bracket(omega(b), omega(a));
      if (lhs != rhs) fail(alg, "omega anti-automorphism", {a, b});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const BaseCombination ab_c = alg.bracket(BaseCombination::single(window[i]), table[j][k]);
        BaseCombination sum = ab_c;
        sum.add(alg.bracket(BaseCombination::single(window[j]), table[k][i]));
        sum.add(alg.bracket(BaseCombination::single(window[k]), table[i][j]));
        if (!sum.is_zero()) fail(alg, "Jacobi identity", {window[i], window[j], window[k]}, combination_label(alg, sum));
      }
    }
  }

  // Cartan action: diagonal on root vectors with additive eigenvalues.
  std::map<std::pair<int, RootVector>, Rational> eigen;
  for (int h = 0; h < alg.cartan_dim(); ++h) {
    const auto he = BasisElement::cartan_element(h);
    for (const auto& e : window) {
      if (e.part == Part::Cartan) {
        if (!alg.bracket(he, e).is_zero()) fail(alg, "abelian Cartan", {he, e});
        continue;
      }
      const BaseCombination v = alg.bracket(he, e);
      const Rational c = v.coeff_of(e);
      BaseCombination rest = v;
      rest.add(e, -c);
      if (!rest.is_zero()) fail(alg, "Cartan acts diagonally", {he, e}, combination_label(alg, v));
      const Rational ev = e.part == Part::Positive ? c : -c;
      auto [it, inserted] = eigen.emplace(std::make_pair(h, e.root), ev);
      if (!inserted && it->second != ev) fail(alg, "root weight independent of slot and sign", {he, e});
    }
    for (const auto& [key, ev] : eigen) {
      if (key.first != h) continue;
      for (const auto& [key2, ev2] : eigen) {
        if (key2.first != h) continue;
        auto sum = eigen.find({h, key.second + key2.second});
        if (sum != eigen.end() && sum->second != ev + ev2) {
          fail(alg, "additive root weights", {he, BasisElement::positive(key.second), BasisElement::positive(key2.second)});
        }
      }
    }
  }

  for (const auto& root : alg.validation_roots()) {
    const PairingData p = alg.pairing(root);
    const int mult = alg.root_multiplicity(root);
    const auto x0 = BasisElement::positive(root);
    if (p.h_alpha.is_zero()) fail(alg, "nonzero pairing element", {x0});
    for (const auto& t : p.h_alpha.terms()) {
      if (t.elem.part != Part::Cartan) fail(alg, "pairing element lies in the Cartan subalgebra", {x0});
    }
    if (static_cast<int>(p.gram.size()) != mult) fail(alg, "pairing Gram matrix size", {x0});
    for (int a = 0; a < mult; ++a) {
      if (static_cast<int>(p.gram[static_cast<std::size_t>(a)].size()) != mult) fail(alg, "pairing Gram matrix size", {x0});
      for (int b = 0; b < mult; ++b) {
        const auto xa = BasisElement::positive(root, a);
        const auto xb = BasisElement::positive(root, b);
        BaseCombination expected;
        expected.add(p.h_alpha, p.gram[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        if (alg.bracket(xa, omega(xb)) != expected) fail(alg, "pairing identity", {xa, omega(xb)});
      }
    }
    if (is_zero(determinant(p.gram))) fail(alg, "non-degenerate pairing", {x0});
  }
}

}  // namespace tcla

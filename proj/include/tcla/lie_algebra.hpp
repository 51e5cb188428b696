#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tcla/cartan_poly.hpp"
#include "tcla/rational.hpp"

namespace tcla {

/// Element of the root lattice Q, in coordinates over the lattice generators
/// (simple roots a1, a2, ... for finite types; the single root d for the
/// infinite rank-one families).
struct RootVector {
  std::vector<int> coords;

  RootVector() = default;
  explicit RootVector(std::vector<int> c) : coords(std::move(c)) {}
  static RootVector zero(int rank) { return RootVector(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  /// All coordinates non-negative, i.e. the vector lies in Q₊.
  bool is_nonnegative() const;
  int height() const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(int k, RootVector a);
  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

/// Linearization of the partial order on Q₊: height first, then the
/// coordinates lexicographically.
std::strong_ordering compare_q_plus(const RootVector& a, const RootVector& b);

enum class Part : std::uint8_t { Negative, Cartan, Positive };

/// Basis element of the base algebra g: a root vector x_γ (Positive), its
/// image y_γ = ω(x_γ) (Negative), or a Cartan basis element.
struct BasisElement {
  Part part = Part::Cartan;
  RootVector root;  // empty for Cartan elements
  int slot = 0;     // index inside a multi-dimensional root space
  int cartan = 0;   // Cartan index, only for Part::Cartan

  static BasisElement positive(RootVector root, int slot = 0) { return {Part::Positive, std::move(root), slot, 0}; }
  static BasisElement negative(RootVector root, int slot = 0) { return {Part::Negative, std::move(root), slot, 0}; }
  static BasisElement cartan_element(int index) { return {Part::Cartan, RootVector{}, 0, index}; }

  /// Weight under the root grading: root, -root, or zero.
  RootVector weight(int rank) const;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

/// The anti-involution ω: x_γ <-> y_γ, identity on the Cartan part.
BasisElement omega(const BasisElement& e);

/// Finite linear combination of basis elements with rational coefficients,
/// kept sorted with no zero coefficients.
template <typename Elem>
class LinearCombination {
 public:
  struct Term {
    Elem elem;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LinearCombination() = default;
  static LinearCombination single(Elem e, Rational c = 1) {
    LinearCombination lc;
    lc.add(std::move(e), std::move(c));
    return lc;
  }

  void add(Elem e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Elem& x) { return t.elem < x; });
    if (it != terms_.end() && it->elem == e) {
      it->coeff += c;
      if (sgn(it->coeff) == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term{std::move(e), c});
    }
  }
  void add(const LinearCombination& o, const Rational& scale = 1) {
    for (const auto& t : o.terms_) add(t.elem, t.coeff * scale);
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff_of(const Elem& e) const {
    for (const auto& t : terms_) {
      if (t.elem == e) return t.coeff;
    }
    return 0;
  }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  std::vector<Term> terms_;
};

using BaseCombination = LinearCombination<BasisElement>;

/// Data of the non-degenerate pairing at a positive root α:
/// [x_φ, ω(x_ψ)] = gram[φ][ψ] · h_α for root vectors x_φ, x_ψ of g^α.
struct PairingData {
  RootVector alpha;
  BaseCombination h_alpha;  // Cartan elements only
  std::vector<std::vector<Rational>> gram;

  /// h_α ⊗ t^degree as a degree-one Cartan polynomial.
  CartanPoly h_alpha_at(int degree) const;
};

enum class AlgebraKind { SpecialLinear, FiniteTable, Witt, Virasoro, Heisenberg };

/// Presentation of a Lie algebra with triangular decomposition and
/// non-degenerate pairing. Infinite families are described by closed-form
/// rules; nothing is materialized beyond what a query needs.
class LieAlgebra {
 public:
  virtual ~LieAlgebra() = default;

  virtual AlgebraKind kind() const = 0;
  virtual std::string name() const = 0;
  /// Rank of the root lattice.
  virtual int rank() const = 0;
  /// Printable names of the lattice generators ("a1", "a2" or "d").
  virtual std::vector<std::string> lattice_symbols() const = 0;
  virtual const std::vector<std::string>& cartan_names() const = 0;
  virtual bool is_finite() const = 0;

  virtual bool is_positive_root(const RootVector& root) const = 0;
  /// dim g^α for α ∈ Δ₊.
  virtual int root_multiplicity(const RootVector& root) const = 0;
  /// Position of a positive root in the fixed enumeration of Δ₊.
  virtual std::int64_t enumeration_key(const RootVector& root) const = 0;
  /// Every positive root α with χ - α ∈ Q₊, in enumeration order.
  /// Throws WeightError when χ is not in Q₊.
  virtual std::vector<RootVector> positive_roots_below(const RootVector& chi) const = 0;
  /// Every positive root, in enumeration order. Throws Error for infinite
  /// root systems.
  virtual std::vector<RootVector> positive_roots() const = 0;
  /// Roots whose basis vectors make up the validation window.
  virtual std::vector<RootVector> validation_roots() const = 0;

  virtual BaseCombination bracket(const BasisElement& a, const BasisElement& b) const = 0;
  /// Throws Error when alpha is not a positive root.
  virtual PairingData pairing(const RootVector& alpha) const = 0;

  // Helpers shared by every presentation.
  int cartan_dim() const { return static_cast<int>(cartan_names().size()); }
  bool in_positive_cone(const RootVector& chi) const;
  void require_positive_cone(const RootVector& chi) const;
  void require_valid(const BasisElement& e) const;
  std::string root_label(const RootVector& root) const;
  std::string element_label(const BasisElement& e) const;
  CartanNamer cartan_namer() const;
  /// Bilinear extension of the bracket.
  BaseCombination bracket(const BaseCombination& a, const BaseCombination& b) const;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Central-extension cocycle of the Virasoro algebra: [L_m, L_-m] carries
/// psi(m)·c. A polynomial rule enables exact reducibility decisions.
struct PsiRule {
  std::function<Rational(long)> fn;
  /// Coefficients c0, c1, ... of psi as a polynomial in m, when it is one.
  std::optional<std::vector<Rational>> polynomial;

  Rational operator()(long m) const { return fn(m); }
  static PsiRule from_polynomial(std::vector<Rational> coeffs);
  /// psi(m) = (m^3 - m)/12.
  static PsiRule standard();
};

AlgebraPtr make_special_linear(int n);
AlgebraPtr make_witt();
AlgebraPtr make_virasoro(PsiRule psi = PsiRule::standard());
AlgebraPtr make_heisenberg();

/// The cocycle of a Virasoro algebra; null for every other algebra.
const PsiRule* virasoro_psi(const LieAlgebra& alg);

/// Parses the finite-table JSON presentation (see README) and validates it.
AlgebraPtr load_finite_table(const std::string& json_text);

struct AlgebraParams {
  std::optional<PsiRule> psi;
};

/// Built-in algebra by name: sl2, sl3, sl<n>, witt, virasoro, heisenberg.
/// Every algebra is validated before it is returned.
AlgebraPtr builtin_algebra(const std::string& name, const AlgebraParams& params = {});

/// Checks antisymmetry, the Jacobi identity, ω as an anti-automorphism,
/// weight consistency of the Cartan action and non-degeneracy of the pairing
/// on the validation window. Throws ValidationError naming the violated
/// axiom and a witness.
void validate_algebra(const LieAlgebra& alg);

/// Basis elements of the validation window: root vectors of every validation
/// root (both signs, every slot) and the whole Cartan basis.
std::vector<BasisElement> validation_window(const LieAlgebra& alg);

}  // namespace tcla

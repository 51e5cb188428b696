#pragma once

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "tcla/linalg.hpp"
#include "tcla/partitions.hpp"

namespace tcla {

/// A letter of a word in U(ĝ): a basis element of ĝ with the enumeration
/// key of its root cached for the normal order.
struct Letter {
  TruncElement elem;
  std::int64_t key = 0;

  friend bool operator==(const Letter& a, const Letter& b) { return a.elem == b.elem; }
  friend auto operator<=>(const Letter& a, const Letter& b) { return a.elem <=> b.elem; }
};

/// PBW normal order: y letters first in descending index order, then Cartan
/// letters, then x letters in ascending index order.
std::strong_ordering normal_order(const Letter& a, const Letter& b);

using Word = std::vector<Letter>;

/// Element of U(ĝ) as a combination of words.
class UEAElement {
 public:
  UEAElement() = default;
  static UEAElement word(Word w, Rational c = 1);

  void add(const Word& w, const Rational& c);
  void add(const UEAElement& o, const Rational& scale = 1);
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend UEAElement operator*(const UEAElement& a, const UEAElement& b);
  friend bool operator==(const UEAElement&, const UEAElement&) = default;

 private:
  std::map<Word, Rational> terms_;
};

Letter make_letter(const TruncatedAlgebra& alg, const TruncElement& e);
/// x_λ = x_{λ⁰} ... x_{λ^N}, letters ascending.
Word x_word(const TruncatedAlgebra& alg, const Partition& lambda);
/// y_λ = ω(x_λ), letters descending.
Word y_word(const TruncatedAlgebra& alg, const Partition& lambda);
bool is_normal(const Word& w);

/// Rewrites words to PBW normal form with ab -> ba + [a,b] on out-of-order
/// adjacent pairs. The deterministic strategy always rewrites the leftmost
/// such pair and memoizes normal forms of words.
class Straightener {
 public:
  explicit Straightener(const TruncatedAlgebra& alg) : alg_(alg) {}

  UEAElement straighten(const UEAElement& e);
  /// Same rewriting, with the out-of-order pair picked at random each step.
  UEAElement straighten_random(const UEAElement& e, std::mt19937& rng) const;
  /// Straighten, then keep the words made of Cartan letters only.
  CartanPoly project_q(const UEAElement& e);

 private:
  const UEAElement& normal(const Word& w);
  UEAElement rewrite(const Word& w, std::size_t i) const;

  const TruncatedAlgebra& alg_;
  std::map<Word, UEAElement> memo_;
};

/// The universal Verma module U(ĝ₋) ⊗ U(ĥ), or its specialization at a
/// functional when Coeff is Rational. Vectors are combinations of PBW
/// monomials y_ν with coefficients acting from the right.
template <typename Coeff>
class VermaRealization {
 public:
  using Vector = std::map<Partition, Coeff>;
  using CartanValue = std::function<Coeff(int h_index, int degree)>;

  VermaRealization(const TruncatedAlgebra& alg, CartanValue cartan_value);

  const TruncatedAlgebra& algebra() const { return alg_; }

  /// e · y_ν ⊗ 1, memoized.
  const Vector& act(const TruncElement& e, const Partition& nu);
  Vector apply(const TruncElement& e, const Vector& v);

  /// q(x_λ y_μ) for every λ in rows: x_λ applied to y_μ, sharing the work
  /// of common letter suffixes.
  std::vector<Coeff> form_column(const Partition& mu, const std::vector<Partition>& rows);
  Coeff form_entry(const Partition& lambda, const Partition& mu);

 private:
  const Vector& left_mul_y(const TruncIndex& g, const Partition& nu);
  Vector left_mul_y(const TruncIndex& g, const Vector& v);

  const TruncatedAlgebra& alg_;
  CartanValue cartan_value_;
  std::map<std::pair<TruncIndex, Partition>, Vector> y_memo_;
  std::map<std::pair<TruncElement, Partition>, Vector> act_memo_;
};

extern template class VermaRealization<CartanPoly>;
extern template class VermaRealization<Rational>;

using SymbolicVerma = VermaRealization<CartanPoly>;
using EvaluatedVerma = VermaRealization<Rational>;

SymbolicVerma make_symbolic_verma(const TruncatedAlgebra& alg);
EvaluatedVerma make_evaluated_verma(const TruncatedAlgebra& alg, const Functional& lam);

/// F(y_λ, y_μ) = q(x_λ y_μ). Throws WeightError when the weights differ.
CartanPoly form_entry_oracle(const TruncatedAlgebra& alg, const Partition& lambda, const Partition& mu);

struct VermaActionReport {
  std::vector<Partition> basis;
  /// Matrix of each raising generator from the weight space at chi to the
  /// weight space at chi - Δ(γ), columns indexed by basis.
  std::vector<std::pair<TruncIndex, RationalMatrix>> actions;
  /// Dimension of the maximal submodule in the weight space at chi.
  int radical_dimension = 0;
};

/// Realizes the weight space Λ - χ of M(Λ) and computes the maximal
/// submodule there: v lies in it iff every x_γ v lies in the maximal
/// submodule one level up, starting from zero at the highest weight.
VermaActionReport verma_action_oracle(const TruncatedAlgebra& alg, const Functional& lam, const RootVector& chi);

}  // namespace tcla

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcla/linalg.hpp"
#include "tcla/truncation.hpp"

namespace tcla {

struct ReducibilityVerdict {
  bool reducible = false;
  /// Positive root α with Λ(h_α ⊗ t^N) = 0.
  std::optional<RootVector> witness;
  /// Set when the verdict comes from a bounded search over m ≤ window.
  std::optional<long> window;
};

struct ReducibilityOptions {
  /// Search bound for Virasoro cocycles that are not polynomial.
  long psi_window = 10000;
};

/// Decides reducibility of M(Λ) from Λ on the degree-N Cartan generators.
ReducibilityVerdict is_reducible(const TruncatedAlgebra& alg, const Functional& lam,
                                 const ReducibilityOptions& options = {});

/// A positive root α with χ - α ∈ Q₊ and Λ(h_α ⊗ t^N) = 0, if any, which is
/// exactly when M(Λ) has a primitive vector of weight Λ - χ. Throws
/// WeightError when χ ∉ Q₊.
std::optional<RootVector> primitive_vector_weights(const TruncatedAlgebra& alg, const Functional& lam,
                                                   const RootVector& chi);

/// Positive integer roots of an integer polynomial with coefficients from the
/// constant term up, in increasing order. Throws Error for the zero
/// polynomial.
std::vector<Integer> positive_integer_roots(std::vector<Integer> coeffs);

// ------------------------------------------------------ finite root systems

/// Root system of a finite Cartan type, roots in simple-root coordinates.
class RootSystem {
 public:
  /// "A3", "B2", "C3", "D4", "G2".
  static RootSystem of_type(const std::string& type);
  RootSystem(std::string name, std::vector<std::vector<int>> cartan_matrix);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  /// Positive roots by height, then coordinates in descending order.
  const std::vector<RootVector>& positive_roots() const { return roots_; }
  /// (α_i|α_j), scaled so the shortest simple root has (α|α) = 2.
  const RationalMatrix& gram() const { return gram_; }

  /// (λ̄|α) for λ̄ = Σ c_i α_i.
  Rational pair(const std::vector<Rational>& lambda_bar, const RootVector& alpha) const;
  /// The covector c ↦ (Σ c_i α_i | α).
  std::vector<Rational> covector(const RootVector& alpha) const;

 private:
  std::string name_;
  std::vector<std::vector<int>> cartan_;
  RationalMatrix gram_;
  std::vector<RootVector> roots_;
};

struct FiniteVerdict {
  bool reducible = false;
  std::optional<RootVector> witness;
};

/// Reducible iff (λ̄|α) = 0 for some root α.
FiniteVerdict killing_criterion(const RootSystem& roots, const std::vector<Rational>& lambda_bar);

struct AffineWeightData {
  /// λ̄ in simple-root coordinates of the finite part.
  std::vector<Rational> finite_part;
  /// Λ_N(c).
  Rational c_value;
  /// (α_i|α_j) on the finite simple roots.
  RationalMatrix killing_gram;
};

struct AffineVerdict {
  bool reducible = false;
  /// Finite positive root α and m with (λ̄|α) = m·Λ_N(c); empty when the
  /// verdict comes from Λ_N(c) = 0.
  std::optional<RootVector> root;
  std::optional<Integer> m;
};

/// Reducible iff Λ_N(c) = 0 or (λ̄|α) ∈ Λ_N(c)·ℤ for some finite root α.
/// Throws Error when the Gram matrix is not symmetric and non-singular or
/// does not match the root data.
AffineVerdict affine_criterion(const RootSystem& finite, const AffineWeightData& data);

// ------------------------------------------------------------- hyperplanes

/// normal · x = offset.
struct Hyperplane {
  std::string label;
  std::vector<Rational> normal;
  Rational offset;
};

struct HyperplaneSet {
  /// Names of the coordinates the normals act on.
  std::vector<std::string> coordinates;
  std::vector<Hyperplane> planes;
};

/// Hyperplanes of the reducibility criterion. For a finite root system the
/// coordinates are those of λ̄ in simple roots; for affine types
/// ("affine-A2") the lines (λ̄|α) = m·c for |m| ≤ window at the given value
/// of c; for virasoro the lines ψ(m)·X + 2m·Y = 0, m = 1..window, with
/// X = Λ(c@N) and Y = Λ(L0@N); one plane for heisenberg and witt. Built-in
/// sl(n) uses type A(n-1); other finite tables use the values Λ(h@N) of
/// the Cartan generators as coordinates.
HyperplaneSet hyperplane_data(const std::string& kind, long window, const Rational& c_value = 1);
HyperplaneSet hyperplane_data(const LieAlgebra& alg, long window);

std::string hyperplanes_csv(const HyperplaneSet& set);

// -------------------------------------------------------------- characters

struct CharacterTable {
  /// Largest d with Λ_d ≠ 0, or 0.
  int m = 0;
  /// m = 0: the module is the irreducible base-algebra module of highest
  /// weight Λ_0 and no table is produced.
  bool delegated = false;
  /// dims[n] = dim L(Λ)_{Λ_0 - n·δ} for n = 0..depth.
  std::vector<Integer> dims;
};

/// Graded dimensions of L(Λ) for a one-dimensional Cartan subalgebra. For
/// m > 0, L(Λ) is the Verma module of the index-m truncation, so its
/// character is that of U(g₋) raised to the number of current degrees,
/// m + 1. Throws Error unless dim h = 1.
CharacterTable character(const TruncatedAlgebra& alg, const Functional& lam, int depth);

}  // namespace tcla

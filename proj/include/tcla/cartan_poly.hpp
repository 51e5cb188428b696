#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tcla/rational.hpp"

namespace tcla {

/// Generator h ⊗ t^d of the truncated Cartan subalgebra: a basis element of
/// the base Cartan subalgebra (by index) together with its t-degree.
struct CartanGen {
  std::uint16_t h_index = 0;
  std::uint16_t t_degree = 0;

  auto operator<=>(const CartanGen&) const = default;
};

/// A monomial of S(ĥ): generators with positive exponents, sorted by
/// (h_index, t_degree). The empty monomial is 1.
class Monomial {
 public:
  struct Factor {
    CartanGen gen;
    std::uint32_t exponent = 0;
    auto operator<=>(const Factor&) const = default;
  };
  using Storage = boost::container::small_vector<Factor, 4>;

  Monomial() = default;
  static Monomial generator(CartanGen g, std::uint32_t exponent = 1);

  const Storage& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  /// Sum of t-degrees counted with multiplicity.
  std::uint32_t t_degree() const;
  std::uint32_t exponent_of(CartanGen g) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  Storage factors_;
};

/// Exact polynomial in the Cartan generators: the image of U(ĥ) = S(ĥ).
/// Terms are kept sorted by monomial with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal.
class CartanPoly {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  CartanPoly() = default;
  CartanPoly(const Rational& c);  // NOLINT: constants convert implicitly
  CartanPoly(long c) : CartanPoly(Rational(c)) {}  // NOLINT
  static CartanPoly generator(CartanGen g);
  static CartanPoly monomial(Monomial m, Rational coeff = 1);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static CartanPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Sum of the terms of the given total degree.
  CartanPoly homogeneous_component(int degree) const;
  /// The constant coefficient when the polynomial is constant.
  bool is_constant() const;
  Rational constant_term() const;

  CartanPoly& operator+=(const CartanPoly& o);
  CartanPoly& operator-=(const CartanPoly& o);
  CartanPoly& operator*=(const CartanPoly& o);
  CartanPoly& operator*=(const Rational& c);
  /// this += c * m * o, without building the temporary product.
  void add_scaled(const CartanPoly& o, const Rational& c, const Monomial& m = {});

  friend CartanPoly operator+(CartanPoly a, const CartanPoly& b) { return a += b; }
  friend CartanPoly operator-(CartanPoly a, const CartanPoly& b) { return a -= b; }
  friend CartanPoly operator*(const CartanPoly& a, const CartanPoly& b);
  friend CartanPoly operator*(CartanPoly a, const Rational& c) { return a *= c; }
  friend CartanPoly operator*(const Rational& c, CartanPoly a) { return a *= c; }
  friend CartanPoly operator*(CartanPoly a, long c) { return a *= Rational(c); }
  friend CartanPoly operator*(long c, CartanPoly a) { return a *= Rational(c); }
  CartanPoly operator-() const;
  CartanPoly pow(unsigned e) const;

  friend bool operator==(const CartanPoly&, const CartanPoly&) = default;

  /// Every generator occurring in some monomial.
  std::vector<CartanGen> generators() const;

 private:
  std::vector<Term> terms_;
};

CartanPoly poly_add(const CartanPoly& a, const CartanPoly& b);
CartanPoly poly_mul(const CartanPoly& a, const CartanPoly& b);

/// A point Λ of ĥ*: a rational value for each Cartan generator.
class Functional {
 public:
  Functional() = default;
  void set(CartanGen g, Rational value) { values_[g] = std::move(value); }
  bool has(CartanGen g) const { return values_.count(g) != 0; }
  /// Throws MissingAssignment when g is unassigned.
  const Rational& at(CartanGen g) const;
  const std::map<CartanGen, Rational>& values() const { return values_; }

  friend bool operator==(const Functional&, const Functional&) = default;

 private:
  std::map<CartanGen, Rational> values_;
};

/// Substitutes Λ into p. Throws MissingAssignment if p uses an unassigned
/// generator.
Rational poly_eval(const CartanPoly& p, const Functional& lam);

/// Splits p by the total t-degree of each monomial.
std::map<int, CartanPoly> poly_t_degree_components(const CartanPoly& p);

/// Exact quotient a / b; throws Error when b does not divide a.
CartanPoly poly_divide_exact(const CartanPoly& a, const CartanPoly& b);

/// Maps an h_index to a printable name such as "h_a1" or "L0".
using CartanNamer = std::function<std::string(std::uint16_t)>;

/// Human-readable form, e.g. "4*(h_a1@1)^2 - 3*c@0 + 1".
std::string to_string(const CartanPoly& p, const CartanNamer& name);

}  // namespace tcla

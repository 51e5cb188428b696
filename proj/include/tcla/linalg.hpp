#pragma once

#include <vector>

#include "tcla/cartan_poly.hpp"
#include "tcla/rational.hpp"

namespace tcla {

using RationalMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<CartanPoly>>;

/// Exact determinant by Gaussian elimination. The empty matrix has
/// determinant 1.
Rational determinant(RationalMatrix m);

/// Rank over the rationals.
int matrix_rank(RationalMatrix m);

/// Basis of {v : m v = 0}.
std::vector<std::vector<Rational>> null_space(RationalMatrix m);

/// Fraction-free elimination over the polynomial ring. Each step divides
/// exactly by the previous pivot; the pivot is the nonzero candidate with
/// the fewest terms.
CartanPoly bareiss_determinant(PolyMatrix m);

/// Entrywise evaluation at a functional.
RationalMatrix evaluate(const PolyMatrix& m, const Functional& lam);

}  // namespace tcla

#include "tcla/linalg.hpp"

#include <utility>

namespace tcla {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m[p][c])) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

int matrix_rank(RationalMatrix m) { return static_cast<int>(row_reduce(m).size()); }

std::vector<std::vector<Rational>> null_space(RationalMatrix m) {
  std::vector<std::vector<Rational>> basis;
  if (m.empty()) return basis;
  const std::size_t cols = m.front().size();
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

CartanPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return CartanPoly(1);
  CartanPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Smallest nonzero pivot among the remaining rows and columns.
    std::size_t pr = n, pc = n;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (m[i][j].is_zero()) continue;
        if (pr == n || m[i][j].size() < m[pr][pc].size()) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == n) return CartanPoly();
    if (pr != k) {
      std::swap(m[pr], m[k]);
      sign = -sign;
    }
    if (pc != k) {
      for (auto& row : m) std::swap(row[pc], row[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        CartanPoly v = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) v -= m[i][k] * m[k][j];
        m[i][j] = k == 0 ? std::move(v) : poly_divide_exact(v, prev);
      }
      m[i][k] = CartanPoly();
    }
    prev = m[k][k];
  }
  CartanPoly det = std::move(m[n - 1][n - 1]);
  if (sign < 0) det = -det;
  return det;
}

RationalMatrix evaluate(const PolyMatrix& m, const Functional& lam) {
  RationalMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const auto& p : m[i]) out[i].push_back(poly_eval(p, lam));
  }
  return out;
}

}  // namespace tcla

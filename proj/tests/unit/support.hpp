#pragma once

#include <random>

#include "tcla/cartan_poly.hpp"

namespace test_support {

inline tcla::Rational ratio(long p, long q) {
  tcla::Rational r(p, q);
  r.canonicalize();
  return r;
}

inline tcla::CartanPoly random_poly(std::mt19937& rng, int gens = 3, int terms = 4, int max_exp = 2) {
  std::uniform_int_distribution<int> g(0, gens - 1), e(0, max_exp), c(-5, 5), t(0, 1);
  std::vector<tcla::CartanPoly::Term> out;
  for (int i = 0; i < terms; ++i) {
    tcla::Monomial m;
    for (int k = 0; k < 2; ++k) {
      m = m * tcla::Monomial::generator({static_cast<std::uint16_t>(g(rng)), static_cast<std::uint16_t>(t(rng))},
                                        static_cast<std::uint32_t>(e(rng)));
    }
    out.push_back({m, ratio(c(rng), 1 + std::abs(c(rng)))});
  }
  return tcla::CartanPoly::from_terms(out);
}

inline tcla::Functional random_functional(std::mt19937& rng, int gens = 3, int degrees = 2) {
  std::uniform_int_distribution<int> c(-9, 9);
  tcla::Functional f;
  for (int h = 0; h < gens; ++h) {
    for (int d = 0; d < degrees; ++d) {
      f.set({static_cast<std::uint16_t>(h), static_cast<std::uint16_t>(d)}, ratio(c(rng), 1 + std::abs(c(rng))));
    }
  }
  return f;
}

}  // namespace test_support

#include "tcla/partitions.hpp"

namespace test_support {

struct Entry {
  std::vector<int> root;
  int degree;
  int slot = 0;
};

inline tcla::Partition ptn(const tcla::TruncatedAlgebra& alg, std::vector<Entry> entries) {
  std::vector<tcla::TruncIndex> out;
  for (auto& e : entries) out.push_back(alg.index(tcla::RootVector(e.root), e.degree, e.slot));
  return tcla::Partition(std::move(out));
}

inline tcla::CartanPoly gen(const tcla::TruncatedAlgebra& alg, int h, int d) {
  return tcla::CartanPoly::generator(alg.cartan_gen(h, d));
}

}  // namespace test_support

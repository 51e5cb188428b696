#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tcla/error.hpp"
#include "tcla/shapovalov.hpp"

using namespace tcla;
using test_support::gen;
using test_support::ptn;

namespace {

CartanPoly theta(const TruncatedAlgebra& vir, int m, int d) {
  const Rational psi = (*virasoro_psi(vir.base()))(m);
  return 2 * m * gen(vir, 0, d) + psi * gen(vir, 1, d);
}

bool equal_up_to_sign(const CartanPoly& a, const CartanPoly& b) { return a == b || a == -b; }

}  // namespace

TEST_CASE("symmetrized pairing") {
  TruncatedAlgebra vir(builtin_algebra("virasoro"), 1);
  CHECK(symmetrized_pair(vir, Partition(), Partition()) == CartanPoly(1));
  const auto a = ptn(vir, {{{1}, 0}});
  const auto a_star = ptn(vir, {{{1}, 1}});
  CHECK(symmetrized_pair(vir, a, a_star) == theta(vir, 1, 1));
  const auto pair = ptn(vir, {{{1}, 1}, {{1}, 1}});
  const auto pair_star = ptn(vir, {{{1}, 0}, {{1}, 0}});
  CHECK(symmetrized_pair(vir, pair, pair_star) == 2 * theta(vir, 1, 1).pow(2));
  CHECK_THROWS_AS(symmetrized_pair(vir, a, pair), WeightError);

  TruncatedAlgebra heis(load_finite_table(R"({"name":"h2","cartan":["hbar"],
    "positive_roots":[{"coords":[1],"dim":2}],
    "brackets":[["x[1]","y[1]",[[1,"hbar"]]],["x[1]","y[1]#1",[[1,"hbar"]]],
                ["x[1]#1","y[1]",[[1,"hbar"]]],["x[1]#1","y[1]#1",[[2,"hbar"]]]],
    "pairing":[{"root":[1],"h_alpha":[[1,"hbar"]],"gram":[[1,1],[1,2]]}]})"),
                        2);
  std::mt19937 rng(3);
  const auto parts = enumerate_partitions(heis, RootVector({3}));
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& l = parts[pick(rng)];
    const auto& m = parts[pick(rng)];
    if (l.size() != m.size()) continue;
    CHECK(symmetrized_pair(heis, l, m) == symmetrized_pair(heis, m, l));
  }
  // Single entries in the same cell give gram · h_α@N.
  const auto x0 = ptn(heis, {{{1}, 1, 0}});
  const auto x1 = ptn(heis, {{{1}, 1, 1}});
  CHECK(symmetrized_pair(heis, x1, star_partition(x1, 2)) == 2 * heis.pairing(RootVector({1})));
  CHECK(symmetrized_pair(heis, x0, star_partition(x1, 2)) == heis.pairing(RootVector({1})));
}

TEST_CASE("fast entries") {
  TruncatedAlgebra sl3(builtin_algebra("sl3"), 1);
  FormEngine engine(sl3);
  const auto l = ptn(sl3, {{{1, 0}, 1}, {{0, 1}, 1}});
  const FormEntry e = engine.entry(l, l, FormVariant::B);
  CHECK(e.source == EntrySource::ClosedForm);
  CHECK(e.value == gen(sl3, 0, 1) * gen(sl3, 1, 1));
  CHECK_THROWS_AS(engine.entry(l, ptn(sl3, {{{1, 0}, 0}}), FormVariant::F), WeightError);

  TruncatedAlgebra vir(builtin_algebra("virasoro"), 1);
  FormEngine ve(vir);
  const auto two = ptn(vir, {{{2}, 1}});
  CHECK(ve.entry(two, two, FormVariant::B).value == theta(vir, 2, 1));
  const auto basis = enumerate_partitions(vir, RootVector({2}));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (l_array_of(basis[i]) == l_array_of(basis[j])) continue;
      const FormEntry below = ve.entry(basis[i], basis[j], FormVariant::B);
      CHECK(below.value.is_zero());
      CHECK(below.source == EntrySource::Vanishing);
    }
  }
}

TEST_CASE("assembled matrices agree with the oracle") {
  for (const char* name : {"sl2", "sl3", "heisenberg", "witt", "virasoro"}) {
    for (int n : {1, 2}) {
      TruncatedAlgebra alg(builtin_algebra(name), n);
      const RootVector chi = std::string(name) == "sl3" ? RootVector({1, 1}) : RootVector({2});
      for (auto variant : {FormVariant::F, FormVariant::B}) {
        const FormMatrix m = assemble_matrix(alg, chi, variant, AssemblyMode::Both, 2);
        if (variant == FormVariant::F) {
          for (std::size_t i = 0; i < m.basis.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) CHECK(m.entries[i][j] == m.entries[j][i]);
          }
        }
      }
      const Determinants d = determinant(alg, chi, DetMethod::Both, 2);
      CHECK(!d.det_b.is_zero());
      for (const auto& t : d.det_b.terms()) {
        for (const auto& f : t.monomial.factors()) CHECK(f.gen.t_degree == n);
      }
    }
  }
}

TEST_CASE("worked determinants") {
  TruncatedAlgebra sl3(builtin_algebra("sl3"), 1);
  const CartanPoly h1 = gen(sl3, 0, 1);
  const CartanPoly h2 = gen(sl3, 1, 1);
  const CartanPoly expected = h1.pow(4) * h2.pow(4) * (h1 + h2).pow(2);
  CHECK(equal_up_to_sign(determinant(sl3, RootVector({1, 1}), DetMethod::Both, 1).det_f, expected));

  TruncatedAlgebra vir(builtin_algebra("virasoro"), 1);
  const CartanPoly det_vir = 4 * theta(vir, 1, 1).pow(6) * theta(vir, 2, 1).pow(2);
  CHECK(determinant(vir, RootVector({2}), DetMethod::Both, 1).det_f == det_vir);
  CHECK(determinant(vir, RootVector({0}), DetMethod::Block).det_f == CartanPoly(1));
}

TEST_CASE("block values") {
  TruncatedAlgebra vir(builtin_algebra("virasoro"), 1);
  for (const auto& v : block_values(vir, RootVector({2}))) {
    CHECK(!is_zero(determinant(v.gram)));
    if (v.partitions.size() == 1 && v.partitions.front() == ptn(vir, {{{1}, 1}, {{1}, 1}})) {
      CHECK(v.h_factor == 2 * theta(vir, 1, 1).pow(2));
      CHECK(v.gram == RationalMatrix{{Rational(1)}});
    }
  }
  TruncatedAlgebra heis(builtin_algebra("heisenberg"), 2);
  for (const auto& v : block_values(heis, RootVector({3}))) {
    CartanPoly expected(1);
    for (const auto& [cell, count] : v.array.counts()) {
      expected *= factorial(static_cast<unsigned>(count)) * (cell.root.coords[0] * gen(heis, 0, 2)).pow(static_cast<unsigned>(count));
    }
    CHECK(v.h_factor == expected);
  }
}

TEST_CASE("radical dimension") {
  TruncatedAlgebra heis(builtin_algebra("heisenberg"), 1);
  Functional lam;
  lam.set(heis.cartan_gen(0, 0), 2);
  lam.set(heis.cartan_gen(0, 1), 0);
  CHECK(radical_dimension(heis, RootVector({1}), lam) >= 1);
  lam.set(heis.cartan_gen(0, 1), 5);
  CHECK(radical_dimension(heis, RootVector({3}), lam) == 0);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> small(-2, 2);
  for (const char* name : {"sl2", "sl3", "virasoro"}) {
    TruncatedAlgebra alg(builtin_algebra(name), 1);
    for (int trial = 0; trial < 6; ++trial) {
      Functional f;
      for (int h = 0; h < alg.base().cartan_dim(); ++h) {
        for (int d = 0; d <= 1; ++d) f.set(alg.cartan_gen(h, d), small(rng));
      }
      const RootVector chi = std::string(name) == "sl3" ? RootVector({1, 1}) : RootVector({2});
      CHECK(radical_dimension(alg, chi, f) == verma_action_oracle(alg, f, chi).radical_dimension);
    }
  }
}

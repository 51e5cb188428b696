#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tcla/error.hpp"
#include "tcla/uea.hpp"

using namespace tcla;
using test_support::gen;
using test_support::ptn;

namespace {

CartanPoly theta(const TruncatedAlgebra& vir, int m, int d) {
  const Rational psi = (*virasoro_psi(vir.base()))(m);
  return 2 * m * gen(vir, 0, d) + psi * gen(vir, 1, d);
}

UEAElement product(const TruncatedAlgebra& alg, const Partition& lambda, const Partition& mu) {
  Word w = x_word(alg, lambda);
  const Word y = y_word(alg, mu);
  w.insert(w.end(), y.begin(), y.end());
  return UEAElement::word(w);
}

}  // namespace

TEST_CASE("straightening basics") {
  TruncatedAlgebra sl2(builtin_algebra("sl2"), 1);
  Straightener s(sl2);
  const auto a0 = ptn(sl2, {{{1}, 0}});
  const UEAElement xy = product(sl2, a0, a0);
  UEAElement expected = UEAElement::word([&] {
    Word w = y_word(sl2, a0);
    const Word x = x_word(sl2, a0);
    w.insert(w.end(), x.begin(), x.end());
    return w;
  }());
  expected.add(Word{make_letter(sl2, {BasisElement::cartan_element(0), 0})}, 1);
  CHECK(s.straighten(xy) == expected);

  const UEAElement normal = UEAElement::word(y_word(sl2, a0));
  CHECK(s.straighten(normal) == normal);

  const auto a1 = ptn(sl2, {{{1}, 1}});
  const UEAElement high = product(sl2, a1, a1);
  REQUIRE(s.straighten(high).terms().size() == 1);
  CHECK(is_normal(s.straighten(high).terms().begin()->first));
}

TEST_CASE("projection q") {
  TruncatedAlgebra sl3(builtin_algebra("sl3"), 1);
  Straightener s(sl3);
  CHECK(s.project_q(UEAElement::word({})) == CartanPoly(1));
  const auto top = ptn(sl3, {{{1, 1}, 0}});
  CHECK(s.project_q(product(sl3, top, top)) == gen(sl3, 0, 0) + gen(sl3, 1, 0));
  CHECK(s.project_q(UEAElement::word(y_word(sl3, top))).is_zero());
}

TEST_CASE("virasoro form entries") {
  TruncatedAlgebra vir(builtin_algebra("virasoro"), 1);
  CHECK(form_entry_oracle(vir, Partition(), Partition()) == CartanPoly(1));
  const auto two = ptn(vir, {{{2}, 0}});
  CHECK(form_entry_oracle(vir, two, two) == theta(vir, 2, 0));
  const auto ones = ptn(vir, {{{1}, 0}, {{1}, 0}});
  CHECK(form_entry_oracle(vir, ones, ones) == 2 * theta(vir, 1, 0) * (theta(vir, 1, 0) + 1));
  CHECK_THROWS_AS(form_entry_oracle(vir, two, ptn(vir, {{{1}, 0}})), WeightError);
}

TEST_CASE("verma realization agrees with word straightening") {
  for (const char* name : {"sl2", "sl3", "virasoro", "heisenberg", "witt"}) {
    for (int n : {1, 2}) {
      TruncatedAlgebra alg(builtin_algebra(name), n);
      const RootVector chi = std::string(name) == "sl3" ? RootVector({1, 1}) : RootVector({2});
      const auto parts = enumerate_partitions(alg, chi);
      Straightener s(alg);
      auto verma = make_symbolic_verma(alg);
      for (const auto& mu : parts) {
        const auto column = verma.form_column(mu, parts);
        for (std::size_t i = 0; i < parts.size(); ++i) {
          CHECK(column[i] == s.project_q(product(alg, parts[i], mu)));
        }
      }
    }
  }
}

TEST_CASE("straightening is confluent") {
  std::mt19937 rng(7);
  TruncatedAlgebra alg(builtin_algebra("sl3"), 2);
  Straightener s(alg);
  const auto parts = enumerate_partitions(alg, RootVector({1, 1}));
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    // A shuffled word: x letters and y letters interleaved.
    Word w = x_word(alg, parts[pick(rng)]);
    const Word y = y_word(alg, parts[pick(rng)]);
    w.insert(w.end(), y.begin(), y.end());
    std::shuffle(w.begin(), w.end(), rng);
    const UEAElement e = UEAElement::word(w);
    CHECK(s.straighten(e) == s.straighten_random(e, rng));
  }
}

TEST_CASE("form symmetry and t-grading") {
  TruncatedAlgebra alg(builtin_algebra("virasoro"), 2);
  const auto parts = enumerate_partitions(alg, RootVector({3}));
  auto verma = make_symbolic_verma(alg);
  for (const auto& mu : parts) {
    const auto column = verma.form_column(mu, parts);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      CHECK(column[i] == verma.form_entry(mu, parts[i]));
      const auto split = poly_t_degree_components(column[i]);
      CHECK(split.size() <= 1);
      if (!split.empty()) CHECK(split.begin()->first == parts[i].t_degree() + mu.t_degree());
    }
  }
}

TEST_CASE("maximal submodule by raising operators") {
  TruncatedAlgebra heis(builtin_algebra("heisenberg"), 1);
  Functional lam;
  lam.set(heis.cartan_gen(0, 0), 3);
  lam.set(heis.cartan_gen(0, 1), 0);
  CHECK(verma_action_oracle(heis, lam, RootVector({0})).radical_dimension == 0);
  CHECK(verma_action_oracle(heis, lam, RootVector({0})).basis.size() == 1);
  CHECK(verma_action_oracle(heis, lam, RootVector({1})).radical_dimension >= 1);

  TruncatedAlgebra sl2(builtin_algebra("sl2"), 1);
  Functional mu;
  mu.set(sl2.cartan_gen(0, 0), 5);
  mu.set(sl2.cartan_gen(0, 1), 1);
  const auto report = verma_action_oracle(sl2, mu, RootVector({1}));
  CHECK(report.basis.size() == 2);
  CHECK(report.radical_dimension == 0);
  CHECK(report.actions.size() == 2);
}

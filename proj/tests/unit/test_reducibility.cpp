#include <doctest.h>

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "support.hpp"
#include "tcla/error.hpp"
#include "tcla/partitions.hpp"
#include "tcla/reducibility.hpp"
#include "tcla/shapovalov.hpp"

using namespace tcla;
using test_support::ratio;

namespace {

Functional top_values(const TruncatedAlgebra& alg, const std::vector<Rational>& values) {
  Functional f;
  for (int d = 0; d <= alg.nilpotency(); ++d) {
    for (std::size_t h = 0; h < values.size(); ++h) {
      f.set(alg.cartan_gen(static_cast<int>(h), d), d == alg.nilpotency() ? values[h] : Rational(d + 2));
    }
  }
  return f;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(TCLA_DATA_DIR) + "/golden/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Multisets of (part, colour) with parts summing to n.
long coloured_partitions(int n, int colours, int max_part, int max_colour) {
  if (n == 0) return 1;
  long total = 0;
  for (int part = std::min(n, max_part); part >= 1; --part) {
    for (int c = (part == max_part ? max_colour : colours - 1); c >= 0; --c) {
      total += coloured_partitions(n - part, colours, part, c);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("positive integer roots") {
  // m (m - 3)(m - 5) = m^3 - 8m^2 + 15m
  CHECK(positive_integer_roots({0, 15, -8, 1}) == std::vector<Integer>{3, 5});
  CHECK(positive_integer_roots({4, 0, 1}).empty());
  CHECK(positive_integer_roots({7}).empty());
  // (m - 2^40)(m + 1): the Cauchy bound is too large to scan.
  const Integer big = Integer(1) << 40;
  CHECK(positive_integer_roots({-big, 1 - big, 1}) == std::vector<Integer>{big});
  CHECK_THROWS_AS(positive_integer_roots({0, 0}), Error);
}

TEST_CASE("rank-one verdicts") {
  TruncatedAlgebra vir(builtin_algebra("virasoro"), 1);
  // psi(3) = 2, so 6X + 2Y = 0 first at m = 3 when Y = 12, X = -4.
  auto v = is_reducible(vir, top_values(vir, {Rational(-4), Rational(12)}));
  CHECK(v.reducible);
  CHECK(v.witness == RootVector({3}));
  CHECK_FALSE(v.window);
  CHECK_FALSE(is_reducible(vir, top_values(vir, {Rational(1), Rational(0)})).reducible);
  CHECK(is_reducible(vir, top_values(vir, {Rational(0), Rational(1)})).witness == RootVector({1}));
  CHECK(is_reducible(vir, top_values(vir, {Rational(0), Rational(0)})).reducible);
  CHECK_FALSE(is_reducible(vir, top_values(vir, {Rational(1), Rational(1)})).reducible);
  CHECK_THROWS_AS(is_reducible(vir, Functional()), MissingAssignment);

  PsiRule odd;
  odd.fn = [](long m) { return Rational(m % 7 == 0 ? -2 * m : 1); };
  TruncatedAlgebra custom(make_virasoro(odd), 2);
  ReducibilityOptions opts;
  opts.psi_window = 50;
  v = is_reducible(custom, top_values(custom, {Rational(1), Rational(1)}), opts);
  CHECK(v.reducible);
  CHECK(v.witness == RootVector({7}));
  CHECK(v.window == 50);

  TruncatedAlgebra heis(builtin_algebra("heisenberg"), 2);
  CHECK(is_reducible(heis, top_values(heis, {Rational(0)})).witness == RootVector({1}));
  CHECK_FALSE(is_reducible(heis, top_values(heis, {Rational(5)})).reducible);
  TruncatedAlgebra witt(builtin_algebra("witt"), 1);
  CHECK(is_reducible(witt, top_values(witt, {Rational(0)})).reducible);
  CHECK_FALSE(is_reducible(witt, top_values(witt, {ratio(-1, 3)})).reducible);
}

TEST_CASE("verdicts match the radical") {
  for (const char* name : {"sl2", "heisenberg", "witt", "virasoro"}) {
    TruncatedAlgebra alg(builtin_algebra(name), 1);
    const int gens = alg.base().cartan_dim();
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Rational> top;
      for (int h = 0; h < gens; ++h) top.emplace_back(trial == 0 ? 0 : trial + h);
      const Functional lam = top_values(alg, top);
      const auto v = is_reducible(alg, lam);
      CAPTURE(name);
      CAPTURE(trial);
      if (v.reducible && v.witness && v.witness->height() <= 3) {
        CHECK(radical_dimension(alg, *v.witness, lam) > 0);
      }
      if (!v.reducible) {
        for (int n = 1; n <= 3; ++n) {
          const RootVector chi({n});
          CHECK(radical_dimension(alg, chi, lam) == 0);
        }
      }
    }
  }
}

TEST_CASE("root systems") {
  CHECK(RootSystem::of_type("A3").positive_roots().size() == 6);
  CHECK(RootSystem::of_type("B2").positive_roots().size() == 4);
  CHECK(RootSystem::of_type("C3").positive_roots().size() == 9);
  CHECK(RootSystem::of_type("D4").positive_roots().size() == 12);
  CHECK(RootSystem::of_type("G2").positive_roots().size() == 6);
  const auto b2 = RootSystem::of_type("B2");
  CHECK(b2.gram() == RationalMatrix{{4, -2}, {-2, 2}});
  CHECK(b2.positive_roots().back() == RootVector({1, 2}));
  CHECK(RootSystem::of_type("G2").positive_roots().back() == RootVector({3, 2}));
  CHECK_THROWS_AS(RootSystem::of_type("E9"), Error);
  CHECK_THROWS_AS(RootSystem::of_type("D3"), Error);
  CHECK_THROWS_AS(RootSystem("affine", {{2, -2}, {-2, 2}}), Error);
}

TEST_CASE("finite criterion agrees with the truncated verdict") {
  TruncatedAlgebra sl3(builtin_algebra("sl3"), 2);
  const auto a2 = RootSystem::of_type("A2");
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = c(rng), b = trial % 3 == 0 ? -a : Rational(c(rng));
    // λ̄ in simple roots with (λ̄|α1) = a and (λ̄|α2) = b.
    std::vector<Rational> bar{(2 * a + b) / 3, (a + 2 * b) / 3};
    for (auto& x : bar) x.canonicalize();
    const auto lam = top_values(sl3, {a, b});
    const auto truncated = is_reducible(sl3, lam);
    const auto finite = killing_criterion(a2, bar);
    CHECK(truncated.reducible == finite.reducible);
    CHECK(truncated.witness == finite.witness);
  }
  const auto lam = top_values(sl3, {Rational(0), Rational(1)});
  CHECK(primitive_vector_weights(sl3, lam, RootVector({1, 1})) == RootVector({1, 0}));
  CHECK_FALSE(primitive_vector_weights(sl3, lam, RootVector({0, 2})));
  CHECK_THROWS_AS(primitive_vector_weights(sl3, lam, RootVector({-1, 1})), WeightError);
}

TEST_CASE("affine criterion") {
  const auto a1 = RootSystem::of_type("A1");
  auto v = affine_criterion(a1, {{ratio(3, 2)}, ratio(3, 2), {{2}}});
  CHECK(v.reducible);
  CHECK(v.m == Integer(2));
  CHECK_FALSE(affine_criterion(a1, {{ratio(1, 3)}, Rational(2), {{2}}}).reducible);
  v = affine_criterion(a1, {{ratio(1, 3)}, Rational(0), {{2}}});
  CHECK(v.reducible);
  CHECK_FALSE(v.root);
  // A rescaled form changes the pairing.
  CHECK(affine_criterion(a1, {{ratio(1, 3)}, Rational(2), {{6}}}).m == Integer(1));
  const auto a2 = RootSystem::of_type("A2");
  CHECK_THROWS_AS(affine_criterion(a2, {{1, 1}, Rational(1), {{2, -1}, {-1, 3}}}), Error);
  CHECK_THROWS_AS(affine_criterion(a2, {{1}, Rational(1), {{2, -1}, {-1, 2}}}), Error);
  CHECK_THROWS_AS(affine_criterion(a1, {{1}, Rational(1), {{-2}}}), Error);
}

TEST_CASE("hyperplane goldens") {
  CHECK(hyperplanes_csv(hyperplane_data("A2", 0)) == read_golden("hyperplanes_A2.csv"));
  CHECK(hyperplanes_csv(hyperplane_data("sl3", 0)) == read_golden("hyperplanes_A2.csv"));
  CHECK(hyperplanes_csv(hyperplane_data("B2", 0)) == read_golden("hyperplanes_B2.csv"));
  CHECK(hyperplanes_csv(hyperplane_data("G2", 0)) == read_golden("hyperplanes_G2.csv"));
  CHECK(hyperplanes_csv(hyperplane_data("virasoro", 3)) == read_golden("hyperplanes_virasoro_3.csv"));
  CHECK(hyperplanes_csv(hyperplane_data(*builtin_algebra("virasoro"), 3)) ==
        read_golden("hyperplanes_virasoro_3.csv"));
  CHECK(hyperplane_data("affine-A1", 2, Rational(3)).planes.size() == 5);
  CHECK(hyperplane_data("affine-A1", 2, Rational(3)).planes.front().offset == Rational(-6));
  CHECK_THROWS_AS(hyperplane_data("E9", 1), Error);

  // Every plane of a finite type vanishes exactly on the reducible locus.
  const auto g2 = RootSystem::of_type("G2");
  for (const auto& plane : hyperplane_data("G2", 0).planes) {
    std::vector<Rational> point{plane.normal[1], -plane.normal[0]};
    CHECK(killing_criterion(g2, point).reducible);
  }
}

TEST_CASE("characters") {
  for (int n : {1, 2}) {
    TruncatedAlgebra witt(builtin_algebra("witt"), n);
    Functional lam;
    for (int d = 0; d <= n; ++d) lam.set(witt.cartan_gen(0, d), Rational(d == n ? 3 : 0));
    const auto table = character(witt, lam, 8);
    CHECK(table.m == n);
    for (int k = 0; k <= 8; ++k) {
      CHECK(table.dims[static_cast<std::size_t>(k)] == coloured_partitions(k, n + 1, k, n));
    }
    for (int k = 1; k <= 3; ++k) {
      const RootVector chi({k});
      CHECK(radical_dimension(witt, chi, lam) == 0);
      CHECK(Integer(static_cast<long>(enumerate_partitions(witt, chi).size())) == table.dims[static_cast<std::size_t>(k)]);
    }
  }
  TruncatedAlgebra witt(builtin_algebra("witt"), 2);
  Functional lam;
  for (int d = 0; d <= 2; ++d) lam.set(witt.cartan_gen(0, d), Rational(d == 1 ? 5 : 0));
  const auto table = character(witt, lam, 4);
  CHECK(table.m == 1);
  CHECK(table.dims == std::vector<Integer>{1, 2, 5, 10, 20});
  for (int d = 0; d <= 2; ++d) lam.set(witt.cartan_gen(0, d), Rational(d == 0 ? 5 : 0));
  CHECK(character(witt, lam, 4).delegated);
  TruncatedAlgebra vir(builtin_algebra("virasoro"), 1);
  CHECK_THROWS_AS(character(vir, Functional(), 3), Error);
}

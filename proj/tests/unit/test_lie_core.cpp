#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tcla/error.hpp"
#include "tcla/lie_algebra.hpp"

using namespace tcla;

namespace {

RootVector rv(std::vector<int> c) { return RootVector(std::move(c)); }
BasisElement x(std::vector<int> c, int slot = 0) { return BasisElement::positive(rv(std::move(c)), slot); }
BasisElement y(std::vector<int> c, int slot = 0) { return BasisElement::negative(rv(std::move(c)), slot); }
BasisElement h(int i) { return BasisElement::cartan_element(i); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("root vectors") {
  CHECK(rv({1, 2}).height() == 3);
  CHECK((rv({1, 2}) - rv({1, 0})).is_nonnegative());
  CHECK_FALSE((rv({1, 0}) - rv({0, 1})).is_nonnegative());
  CHECK(compare_q_plus(rv({0, 2}), rv({1, 0})) == std::strong_ordering::greater);
  CHECK(compare_q_plus(rv({1, 0}), rv({0, 1})) == std::strong_ordering::greater);
}

TEST_CASE("sl2 Chevalley relations") {
  auto sl2 = builtin_algebra("sl2");
  CHECK(sl2->bracket(x({1}), y({1})) == BaseCombination::single(h(0)));
  CHECK(sl2->bracket(h(0), x({1})) == BaseCombination::single(x({1}), 2));
  CHECK(sl2->bracket(x({1}), x({1})).is_zero());
  auto p = sl2->pairing(rv({1}));
  CHECK(p.gram == std::vector<std::vector<Rational>>{{1}});
}

TEST_CASE("sl3 structure") {
  auto sl3 = builtin_algebra("sl3");
  CHECK(sl3->bracket(x({1, 0}), x({0, 1})) == BaseCombination::single(x({1, 1})));
  auto p = sl3->pairing(rv({1, 1}));
  BaseCombination expect;
  expect.add(h(0), 1);
  expect.add(h(1), 1);
  CHECK(p.h_alpha == expect);
  CHECK(sl3->positive_roots_below(rv({1, 1})) == std::vector<RootVector>{rv({1, 0}), rv({1, 1}), rv({0, 1})});
  CHECK(sl3->positive_roots_below(rv({0, 0})).empty());
  CHECK_THROWS_AS(sl3->positive_roots_below(rv({-1, 1})), WeightError);
  CHECK_THROWS_AS(sl3->pairing(rv({2, 0})), Error);
  CHECK(sl3->root_label(rv({1, 2})) == "a1+2a2");
}

TEST_CASE("sl4 validates") { CHECK_NOTHROW(builtin_algebra("sl4")); }

TEST_CASE("witt and virasoro") {
  auto witt = builtin_algebra("witt");
  CHECK(witt->bracket(x({1}), y({1})) == BaseCombination::single(h(0), 2));
  auto vir = builtin_algebra("virasoro");
  BaseCombination expect;
  expect.add(h(0), 4);
  expect.add(h(1), Rational(1, 2));
  CHECK(vir->bracket(x({2}), y({2})) == expect);
  CHECK(vir->pairing(rv({2})).h_alpha == expect);
  CHECK(vir->positive_roots_below(rv({2})) == std::vector<RootVector>{rv({1}), rv({2})});
  CHECK(vir->bracket(x({1}), x({2})) == BaseCombination::single(x({3}), -1));
}

TEST_CASE("heisenberg") {
  auto heis = builtin_algebra("heisenberg");
  CHECK(heis->bracket(x({1}), y({1})) == BaseCombination::single(h(0)));
  CHECK(heis->bracket(h(0), x({3})).is_zero());
  CHECK(heis->pairing(rv({3})).h_alpha == BaseCombination::single(h(0), 3));
}

TEST_CASE("a cocycle violating Jacobi is rejected") {
  AlgebraParams params;
  params.psi = PsiRule::from_polynomial({0, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS(builtin_algebra("virasoro", params), ValidationError);
  params.psi = PsiRule::from_polynomial({0, 3, 0, 5});
  CHECK_NOTHROW(builtin_algebra("virasoro", params));
}

TEST_CASE("finite tables") {
  auto table = load_finite_table(read_file(TCLA_DATA_DIR "/sl3.json"));
  auto sl3 = builtin_algebra("sl3");
  for (const auto& a : validation_window(*sl3)) {
    for (const auto& b : validation_window(*sl3)) CHECK(table->bracket(a, b) == sl3->bracket(a, b));
  }
  auto heis5 = load_finite_table(read_file(TCLA_DATA_DIR "/heis5.json"));
  CHECK(heis5->root_multiplicity(rv({1})) == 2);
  CHECK(heis5->bracket(x({1}, 1), y({1}, 1)) == BaseCombination::single(h(0), 2));
}

TEST_CASE("broken tables are rejected with a witness") {
  const std::string bad = R"({"cartan":["h"],"positive_roots":[{"coords":[1],"dim":1}],
    "brackets":[["x[1]","y[1]",[[1,"h"]]],["h","x[1]",[[2,"x[1]"]]],["h","y[1]",[[2,"y[1]"]]]],
    "pairing":[{"root":[1],"h_alpha":[[1,"h"]],"gram":[[1]]}]})";
  CHECK_THROWS_AS(load_finite_table(bad), ValidationError);
  CHECK_THROWS_AS(load_finite_table("{"), ParseError);
}

#include "tcla/properties.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tcla/error.hpp"

namespace tcla {

void PropertyResult::absorb(const PropertyResult& o) {
  checks += o.checks;
  skipped += o.skipped;
  if (o.failures > 0 && failures == 0) first_failure = o.first_failure;
  failures += o.failures;
}

namespace {

bool height_then_coords(const RootVector& a, const RootVector& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a.coords < b.coords;
}

bool only_degree(const CartanPoly& p, int degree) {
  for (const auto& t : p.terms()) {
    for (const auto& f : t.monomial.factors()) {
      if (f.gen.t_degree != degree) return false;
    }
  }
  return true;
}

std::string entry_witness(const TruncatedAlgebra& alg, const RootVector& chi, const Partition& a, const Partition& b) {
  return alg.base().name() + " N=" + std::to_string(alg.nilpotency()) + " chi=" + alg.base().root_label(chi) + " " +
         partition_label(alg, a) + " " + partition_label(alg, b);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

// Cartan parts of [x_a, y_b] summed over all of Sym(r); brackets across
// different roots have no Cartan part.
CartanPoly brute_leading(const TruncatedAlgebra& alg, const Partition& lambda, const Partition& mu) {
  const auto& a = lambda.entries();
  const auto& b = mu.entries();
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<CartanPoly>> table(a.size(), std::vector<CartanPoly>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const TruncCombination bracket = alg.bracket(a[i].x(), b[j].y());
      for (const auto& t : bracket.terms()) {
        if (t.elem.base.part == Part::Cartan) {
          table[i][j] += CartanPoly::generator(alg.cartan_gen(t.elem.base.cartan, t.elem.degree)) * t.coeff;
        }
      }
    }
  }
  CartanPoly sum;
  do {
    CartanPoly prod(1);
    for (std::size_t i = 0; i < perm.size() && !prod.is_zero(); ++i) prod = prod * table[perm[i]][i];
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

bool slices_match(const TruncatedAlgebra& alg, const Partition& lambda, const Partition& mu) {
  std::set<RootVector> roots;
  for (const auto& e : lambda.entries()) roots.insert(e.root);
  for (const auto& e : mu.entries()) roots.insert(e.root);
  for (const auto& r : roots) {
    if (lambda.root_slice(r).size() != mu.root_slice(r).size()) return false;
  }
  (void)alg;
  return true;
}

}  // namespace

std::vector<RootVector> sweep_weights(const TruncatedAlgebra& alg, std::size_t max_basis) {
  const int rank = alg.base().rank();
  std::set<RootVector> seen;
  std::vector<RootVector> frontier, out;
  for (int i = 0; i < rank; ++i) {
    RootVector e = RootVector::zero(rank);
    e.coords[static_cast<std::size_t>(i)] = 1;
    frontier.push_back(e);
    seen.insert(e);
  }
  while (!frontier.empty()) {
    RootVector chi = frontier.back();
    frontier.pop_back();
    const std::size_t n = enumerate_partitions(alg, chi).size();
    if (n > max_basis) continue;
    if (n > 0) out.push_back(chi);
    // Adding a simple root never shrinks P_χ.
    for (int i = 0; i < rank; ++i) {
      RootVector next = chi;
      ++next.coords[static_cast<std::size_t>(i)];
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), height_then_coords);
  return out;
}

SweepReport check_sweep(const TruncatedAlgebra& alg, std::size_t max_basis, int workers) {
  SweepReport report;
  report.weights = sweep_weights(alg, max_basis);
  FormEngine engine(alg);
  const int n = alg.nilpotency();
  for (const auto& chi : report.weights) {
    const FormMatrix m = oracle_lower_b(alg, chi, workers);
    report.largest_basis = std::max(report.largest_basis, m.basis.size());
    std::vector<std::size_t> block_of;
    const auto blocks = blocks_of(alg, chi);
    for (std::size_t b = 0; b < blocks.size(); ++b) block_of.insert(block_of.end(), blocks[b].partitions.size(), b);
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
      for (std::size_t j = 0; j < m.basis.size(); ++j) {
        if (block_of[i] > block_of[j]) {
          ++report.triangular.checks;
          if (!m.entries[i][j].is_zero()) report.triangular.fail(entry_witness(alg, chi, m.basis[i], m.basis[j]));
        } else if (block_of[i] == block_of[j]) {
          ++report.fast_vs_oracle.checks;
          if (engine.entry(m.basis[i], m.basis[j], FormVariant::B).value != m.entries[i][j]) {
            report.fast_vs_oracle.fail(entry_witness(alg, chi, m.basis[i], m.basis[j]));
          }
        }
      }
    }
    ++report.det_support.checks;
    const CartanPoly det = determinant(alg, chi, DetMethod::Block, workers).det_b;
    if (det.is_zero() || !only_degree(det, n)) {
      report.det_support.fail(alg.base().name() + " N=" + std::to_string(n) + " chi=" + alg.base().root_label(chi));
    }
  }
  return report;
}

PropertyResult check_lemma_bounds(const TruncatedAlgebra& alg, const std::vector<RootVector>& weights, int pairs,
                                  std::mt19937_64& rng) {
  PropertyResult out{"lemma-bounds"};
  if (weights.empty()) return out;
  FormEngine engine(alg);
  std::map<RootVector, std::vector<Partition>> cache;
  std::uniform_int_distribution<std::size_t> pick_weight(0, weights.size() - 1);
  for (int k = 0; k < pairs; ++k) {
    const RootVector& chi = weights[pick_weight(rng)];
    auto& parts = cache[chi];
    if (parts.empty()) parts = enumerate_partitions(alg, chi);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    const Partition& lambda = parts[pick(rng)];
    const Partition* mu = &parts[pick(rng)];
    if (k % 2 == 0) {
      // Prefer a partner of the same length so parts 2 and 3 get exercised.
      std::vector<const Partition*> same;
      for (const auto& p : parts) {
        if (p.size() == lambda.size()) same.push_back(&p);
      }
      mu = same[std::uniform_int_distribution<std::size_t>(0, same.size() - 1)(rng)];
    }
    const CartanPoly q = engine.oracle_f(lambda, *mu);
    const int r = static_cast<int>(lambda.size()), s = static_cast<int>(mu->size());
    ++out.checks;
    if (q.degree() > std::min(r, s)) out.fail("degree bound: " + entry_witness(alg, chi, lambda, *mu));
    if (r != s) continue;
    const CartanPoly top = q.homogeneous_component(r);
    if (!slices_match(alg, lambda, *mu)) {
      ++out.checks;
      if (!top.is_zero()) out.fail("strict drop: " + entry_witness(alg, chi, lambda, *mu));
      continue;
    }
    if (r > 8) {
      ++out.skipped;
      continue;
    }
    ++out.checks;
    if (top != brute_leading(alg, lambda, *mu)) out.fail("leading term: " + entry_witness(alg, chi, lambda, *mu));
  }
  return out;
}

Functional random_lambda(const TruncatedAlgebra& alg, std::mt19937_64& rng) {
  const LieAlgebra& base = alg.base();
  Functional lam;
  for (int d = 0; d <= alg.nilpotency(); ++d) {
    for (int h = 0; h < base.cartan_dim(); ++h) lam.set(alg.cartan_gen(h, d), random_rational(rng));
  }
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return lam;
  RootVector alpha;
  if (base.is_finite()) {
    const auto roots = base.positive_roots();
    alpha = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)];
  } else {
    alpha = RootVector({std::uniform_int_distribution<int>(1, 3)(rng)});
  }
  // Solve Λ(h_α@N) = 0 for the first generator it involves.
  const CartanPoly p = alg.pairing(alpha);
  const CartanGen g = p.terms().back().monomial.factors().front().gen;
  Rational coeff = 0;
  for (const auto& t : p.terms()) {
    if (t.monomial == Monomial::generator(g)) coeff = t.coeff;
  }
  lam.set(g, Rational(0));
  const Rational rest = poly_eval(p, lam);
  lam.set(g, -rest / coeff);
  return lam;
}

PropertyResult check_criterion(const TruncatedAlgebra& alg, const std::vector<RootVector>& window, int samples,
                               std::mt19937_64& rng) {
  PropertyResult out{"criterion-vs-radical"};
  std::vector<CartanPoly> dets;
  for (const auto& chi : window) dets.push_back(determinant(alg, chi, DetMethod::Block).det_f);
  const std::string tag = alg.base().name() + " N=" + std::to_string(alg.nilpotency());
  for (int k = 0; k < samples; ++k) {
    const Functional lam = random_lambda(alg, rng);
    const auto verdict = is_reducible(alg, lam);
    bool witness_seen = false;
    bool any_radical = false;
    for (std::size_t i = 0; i < window.size(); ++i) {
      const RootVector& chi = window[i];
      const bool radical = radical_dimension(alg, chi, lam) > 0;
      const bool det_zero = is_zero(poly_eval(dets[i], lam));
      const bool primitive = primitive_vector_weights(alg, lam, chi).has_value();
      any_radical = any_radical || radical;
      ++out.checks;
      if (radical != det_zero || radical != primitive) {
        out.fail(tag + " sample " + std::to_string(k) + " chi=" + alg.base().root_label(chi) + ": radical " +
                 std::to_string(radical) + ", det zero " + std::to_string(det_zero) + ", primitive " +
                 std::to_string(primitive));
      }
      if (verdict.witness && *verdict.witness == chi) {
        witness_seen = true;
        ++out.checks;
        if (!radical) out.fail(tag + " sample " + std::to_string(k) + ": no radical at witness " + alg.base().root_label(chi));
      }
    }
    if (!verdict.reducible) {
      ++out.checks;
      if (any_radical) out.fail(tag + " sample " + std::to_string(k) + ": irreducible verdict but a radical in the window");
    } else if (!witness_seen) {
      ++out.skipped;
    }
  }
  return out;
}

PropertyResult check_affine(int samples, std::mt19937_64& rng) {
  PropertyResult out{"affine-criterion"};
  const RootSystem a1 = RootSystem::of_type("A1");
  std::uniform_int_distribution<int> scale(1, 3), coin(0, 5), shift(-4, 4);
  for (int k = 0; k < samples; ++k) {
    const int s = scale(rng);
    AffineWeightData data;
    data.killing_gram = {{Rational(2 * s)}};
    data.c_value = coin(rng) == 0 ? Rational(0) : random_rational(rng);
    if (coin(rng) < 3 && !is_zero(data.c_value)) {
      data.finite_part = {Rational(shift(rng)) * data.c_value / (2 * s)};
    } else {
      data.finite_part = {random_rational(rng)};
    }
    data.finite_part[0].canonicalize();
    const auto verdict = affine_criterion(a1, data);

    bool expected = is_zero(data.c_value);
    std::optional<Integer> expected_m;
    if (!expected) {
      const Rational pair = 2 * s * data.finite_part[0];
      const Rational ratio = abs(pair / data.c_value);
      const Integer bound = ratio.get_num() / ratio.get_den() + 1;
      for (Integer m = -bound; m <= bound; ++m) {
        if (is_zero(pair - Rational(m) * data.c_value)) {
          expected = true;
          expected_m = m;
          break;
        }
      }
    }
    ++out.checks;
    if (verdict.reducible != expected || verdict.m != expected_m) {
      out.fail("lambda_bar=" + to_string(data.finite_part[0]) + " c=" + to_string(data.c_value) +
               " gram=" + std::to_string(2 * s));
    }
  }
  return out;
}

PropertyResult check_det_methods(const TruncatedAlgebra& alg, const std::vector<RootVector>& weights, int workers) {
  PropertyResult out{"det-block-vs-bareiss"};
  for (const auto& chi : weights) {
    ++out.checks;
    try {
      determinant(alg, chi, DetMethod::Both, workers);
    } catch (const Error& e) {
      out.fail(alg.base().name() + " chi=" + alg.base().root_label(chi) + ": " + e.what());
    }
  }
  return out;
}

PropertyResult check_axioms(const LieAlgebra& alg) {
  PropertyResult out{"axioms"};
  ++out.checks;
  try {
    validate_algebra(alg);
  } catch (const ValidationError& e) {
    out.fail(alg.name() + ": " + e.what());
  }
  return out;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  std::mt19937_64 rng(options.seed);
  const std::vector<std::string> algebras =
      options.algebras.empty() ? std::vector<std::string>{"sl2", "sl3", "heisenberg", "witt", "virasoro"}
                               : options.algebras;
  const std::vector<int> degrees = options.nilpotencies.empty() ? std::vector<int>{1, 2} : options.nilpotencies;
  auto record = [&](const std::string& scope, const PropertyResult& r) {
    std::string line = (r.ok() ? "pass " : "FAIL ") + scope + " " + r.name + ": " + std::to_string(r.checks) +
                       " checks";
    if (r.skipped > 0) line += ", " + std::to_string(r.skipped) + " skipped";
    if (!r.ok()) {
      line += ", " + std::to_string(r.failures) + " failures, first: " + r.first_failure;
      if (report.ok) report.first_failure = r.first_failure;
      report.ok = false;
    }
    report.lines.push_back(line);
  };
  record("affine", check_affine(options.samples, rng));
  for (const auto& name : algebras) {
    const AlgebraPtr base = builtin_algebra(name);
    record(name, check_axioms(*base));
    for (int n : degrees) {
      const TruncatedAlgebra alg(base, n);
      const std::string scope = name + " N=" + std::to_string(n);
      const SweepReport sweep = check_sweep(alg, options.max_basis, options.workers);
      record(scope, sweep.triangular);
      record(scope, sweep.fast_vs_oracle);
      record(scope, sweep.det_support);
      record(scope, check_det_methods(alg, sweep.weights, options.workers));
      record(scope, check_lemma_bounds(alg, sweep.weights, options.samples, rng));
      record(scope, check_criterion(alg, sweep.weights, options.samples, rng));
    }
  }
  return report;
}

}  // namespace tcla

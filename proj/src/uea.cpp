#include "tcla/uea.hpp"

#include <algorithm>

#include "tcla/error.hpp"

namespace tcla {

namespace {

int part_rank(Part p) {
  switch (p) {
    case Part::Negative:
      return 0;
    case Part::Cartan:
      return 1;
    case Part::Positive:
      return 2;
  }
  return 1;
}

bool coeff_is_zero(const CartanPoly& p) { return p.is_zero(); }
bool coeff_is_zero(const Rational& r) { return is_zero(r); }

template <typename Coeff>
void add_into(std::map<Partition, Coeff>& acc, const std::map<Partition, Coeff>& v, const Coeff& scale) {
  for (const auto& [nu, c] : v) {
    auto [it, inserted] = acc.try_emplace(nu);
    it->second += c * scale;
    if (coeff_is_zero(it->second)) acc.erase(it);
  }
}

}  // namespace

std::strong_ordering normal_order(const Letter& a, const Letter& b) {
  const Part pa = a.elem.base.part;
  const Part pb = b.elem.base.part;
  if (auto c = part_rank(pa) <=> part_rank(pb); c != 0) return c;
  if (pa == Part::Cartan) {
    if (auto c = a.elem.base.cartan <=> b.elem.base.cartan; c != 0) return c;
    return a.elem.degree <=> b.elem.degree;
  }
  auto index_order = [](const Letter& u, const Letter& v) {
    if (auto c = u.elem.degree <=> v.elem.degree; c != 0) return c;
    if (auto c = u.key <=> v.key; c != 0) return c;
    return u.elem.base.slot <=> v.elem.base.slot;
  };
  return pa == Part::Positive ? index_order(a, b) : index_order(b, a);
}

bool is_normal(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (normal_order(w[i], w[i + 1]) > 0) return false;
  }
  return true;
}

// --------------------------------------------------------------- UEAElement

UEAElement UEAElement::word(Word w, Rational c) {
  UEAElement e;
  e.add(w, c);
  return e;
}

void UEAElement::add(const Word& w, const Rational& c) {
  if (tcla::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (tcla::is_zero(it->second)) terms_.erase(it);
  }
}

void UEAElement::add(const UEAElement& o, const Rational& scale) {
  for (const auto& [w, c] : o.terms_) add(w, c * scale);
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) {
  UEAElement out;
  for (const auto& [u, c] : a.terms_) {
    for (const auto& [v, d] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, c * d);
    }
  }
  return out;
}

Letter make_letter(const TruncatedAlgebra& alg, const TruncElement& e) {
  Letter l{e, 0};
  if (e.base.part != Part::Cartan) l.key = alg.base().enumeration_key(e.base.root);
  return l;
}

Word x_word(const TruncatedAlgebra& alg, const Partition& lambda) {
  Word w;
  for (const auto& g : lambda.entries()) w.push_back(make_letter(alg, g.x()));
  return w;
}

Word y_word(const TruncatedAlgebra& alg, const Partition& lambda) {
  Word w;
  for (auto it = lambda.entries().rbegin(); it != lambda.entries().rend(); ++it) w.push_back(make_letter(alg, it->y()));
  return w;
}

// ------------------------------------------------------------- Straightener

UEAElement Straightener::rewrite(const Word& w, std::size_t i) const {
  UEAElement out;
  Word swapped = w;
  std::swap(swapped[i], swapped[i + 1]);
  out.add(swapped, 1);
  const TruncCombination commutator = alg_.bracket(w[i].elem, w[i + 1].elem);
  for (const auto& t : commutator.terms()) {
    Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    shorter.push_back(make_letter(alg_, t.elem));
    shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
    out.add(shorter, t.coeff);
  }
  return out;
}

const UEAElement& Straightener::normal(const Word& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  UEAElement result;
  std::size_t i = 0;
  while (i + 1 < w.size() && normal_order(w[i], w[i + 1]) <= 0) ++i;
  if (i + 1 >= w.size()) {
    result.add(w, 1);
  } else {
    const UEAElement rewritten = rewrite(w, i);
    for (const auto& [v, c] : rewritten.terms()) result.add(normal(v), c);
  }
  return memo_.emplace(w, std::move(result)).first->second;
}

UEAElement Straightener::straighten(const UEAElement& e) {
  UEAElement out;
  for (const auto& [w, c] : e.terms()) out.add(normal(w), c);
  return out;
}

UEAElement Straightener::straighten_random(const UEAElement& e, std::mt19937& rng) const {
  UEAElement done;
  UEAElement pending = e;
  while (!pending.is_zero()) {
    const auto [w, c] = *pending.terms().begin();
    pending.add(w, -c);
    std::vector<std::size_t> inversions;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (normal_order(w[i], w[i + 1]) > 0) inversions.push_back(i);
    }
    if (inversions.empty()) {
      done.add(w, c);
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, inversions.size() - 1);
    pending.add(rewrite(w, inversions[pick(rng)]), c);
  }
  return done;
}

CartanPoly Straightener::project_q(const UEAElement& e) {
  CartanPoly q;
  const UEAElement normal_form = straighten(e);
  for (const auto& [w, c] : normal_form.terms()) {
    const bool cartan_only =
        std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.elem.base.part == Part::Cartan; });
    if (!cartan_only) continue;
    Monomial m;
    for (const auto& l : w) {
      m = m * Monomial::generator(alg_.cartan_gen(l.elem.base.cartan, l.elem.degree));
    }
    q += CartanPoly::monomial(m, c);
  }
  return q;
}

// -------------------------------------------------------- VermaRealization

template <typename Coeff>
VermaRealization<Coeff>::VermaRealization(const TruncatedAlgebra& alg, CartanValue cartan_value)
    : alg_(alg), cartan_value_(std::move(cartan_value)) {}

template <typename Coeff>
const typename VermaRealization<Coeff>::Vector& VermaRealization<Coeff>::left_mul_y(const TruncIndex& g,
                                                                                     const Partition& nu) {
  auto key = std::make_pair(g, nu);
  if (auto it = y_memo_.find(key); it != y_memo_.end()) return it->second;
  Vector result;
  if (nu.empty() || !(g < nu.entries().back())) {
    std::vector<TruncIndex> e = nu.entries();
    e.push_back(g);
    result.emplace(Partition(std::move(e)), Coeff(1));
  } else {
    const TruncIndex top = nu.entries().back();
    const Partition rest(std::vector<TruncIndex>(nu.entries().begin(), nu.entries().end() - 1));
    // y_g y_top Y = y_top (y_g Y) + [y_g, y_top] Y
    const Vector inner = left_mul_y(g, rest);
    for (const auto& [rho, c] : inner) add_into(result, left_mul_y(top, rho), c);
    const TruncCombination commutator = alg_.bracket(g.y(), top.y());
    for (const auto& t : commutator.terms()) {
      add_into(result, left_mul_y(alg_.index_of(t.elem), rest), Coeff(t.coeff));
    }
  }
  return y_memo_.emplace(std::move(key), std::move(result)).first->second;
}

template <typename Coeff>
typename VermaRealization<Coeff>::Vector VermaRealization<Coeff>::left_mul_y(const TruncIndex& g, const Vector& v) {
  Vector out;
  for (const auto& [nu, c] : v) add_into(out, left_mul_y(g, nu), c);
  return out;
}

template <typename Coeff>
const typename VermaRealization<Coeff>::Vector& VermaRealization<Coeff>::act(const TruncElement& e,
                                                                             const Partition& nu) {
  if (e.base.part == Part::Negative) return left_mul_y(alg_.index_of(e), nu);
  auto key = std::make_pair(e, nu);
  if (auto it = act_memo_.find(key); it != act_memo_.end()) return it->second;
  Vector result;
  if (nu.empty()) {
    if (e.base.part == Part::Cartan) {
      Coeff value = cartan_value_(e.base.cartan, e.degree);
      if (!coeff_is_zero(value)) result.emplace(Partition(), std::move(value));
    }
  } else {
    const TruncIndex top = nu.entries().back();
    const Partition rest(std::vector<TruncIndex>(nu.entries().begin(), nu.entries().end() - 1));
    // e y_top Y = y_top (e Y) + [e, y_top] Y
    const Vector inner = act(e, rest);
    for (const auto& [rho, c] : inner) add_into(result, left_mul_y(top, rho), c);
    const TruncCombination commutator = alg_.bracket(e, top.y());
    for (const auto& t : commutator.terms()) add_into(result, act(t.elem, rest), Coeff(t.coeff));
  }
  return act_memo_.emplace(std::move(key), std::move(result)).first->second;
}

template <typename Coeff>
typename VermaRealization<Coeff>::Vector VermaRealization<Coeff>::apply(const TruncElement& e, const Vector& v) {
  Vector out;
  for (const auto& [nu, c] : v) add_into(out, act(e, nu), c);
  return out;
}

template <typename Coeff>
std::vector<Coeff> VermaRealization<Coeff>::form_column(const Partition& mu, const std::vector<Partition>& rows) {
  std::map<std::vector<TruncIndex>, Vector> cache;
  cache[{}] = Vector{{mu, Coeff(1)}};
  std::vector<Coeff> out;
  out.reserve(rows.size());
  for (const auto& lambda : rows) {
    // x_λ acts with its last letter first.
    const std::vector<TruncIndex> seq(lambda.entries().rbegin(), lambda.entries().rend());
    std::size_t k = seq.size();
    while (cache.count(std::vector<TruncIndex>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k))) == 0) --k;
    for (; k < seq.size(); ++k) {
      std::vector<TruncIndex> prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k));
      Vector next = apply(seq[k].x(), cache.at(prefix));
      prefix.push_back(seq[k]);
      cache.emplace(std::move(prefix), std::move(next));
    }
    const Vector& v = cache.at(seq);
    auto it = v.find(Partition());
    out.push_back(it == v.end() ? Coeff(0) : it->second);
  }
  return out;
}

template <typename Coeff>
Coeff VermaRealization<Coeff>::form_entry(const Partition& lambda, const Partition& mu) {
  return form_column(mu, {lambda}).front();
}

template class VermaRealization<CartanPoly>;
template class VermaRealization<Rational>;

SymbolicVerma make_symbolic_verma(const TruncatedAlgebra& alg) {
  return SymbolicVerma(alg, [&alg](int h, int d) { return CartanPoly::generator(alg.cartan_gen(h, d)); });
}

EvaluatedVerma make_evaluated_verma(const TruncatedAlgebra& alg, const Functional& lam) {
  return EvaluatedVerma(alg, [&alg, lam](int h, int d) { return lam.at(alg.cartan_gen(h, d)); });
}

CartanPoly form_entry_oracle(const TruncatedAlgebra& alg, const Partition& lambda, const Partition& mu) {
  const int rank = alg.base().rank();
  if (lambda.weight(rank) != mu.weight(rank)) {
    throw WeightError("form entry between partitions of weights " + alg.base().root_label(lambda.weight(rank)) +
                      " and " + alg.base().root_label(mu.weight(rank)));
  }
  auto verma = make_symbolic_verma(alg);
  return verma.form_entry(lambda, mu);
}

// ------------------------------------------------------- radical by action

namespace {

class RadicalSolver {
 public:
  RadicalSolver(const TruncatedAlgebra& alg, const Functional& lam) : alg_(alg), verma_(make_evaluated_verma(alg, lam)) {}

  // Rows whose common kernel is the maximal submodule at weight chi.
  const RationalMatrix& annihilator(const RootVector& chi) {
    if (auto it = memo_.find(chi); it != memo_.end()) return it->second;
    const auto basis = enumerate_partitions(alg_, chi);
    const std::size_t n = basis.size();
    RationalMatrix q;
    if (chi.is_zero()) {
      q = {{Rational(1)}};
    } else {
      const auto kernel = submodule(chi, basis, nullptr);
      q = kernel.empty() ? identity(n) : null_space(kernel);
    }
    return memo_.emplace(chi, std::move(q)).first->second;
  }

  // Basis of the maximal submodule at chi; records the raising matrices.
  std::vector<std::vector<Rational>> submodule(const RootVector& chi, const std::vector<Partition>& basis,
                                               std::vector<std::pair<TruncIndex, RationalMatrix>>* actions) {
    const std::size_t n = basis.size();
    if (chi.is_zero()) return {};
    RationalMatrix stacked;
    for (const auto& root : alg_.base().positive_roots_below(chi)) {
      const RootVector lower = chi - root;
      const auto lower_basis = enumerate_partitions(alg_, lower);
      std::map<Partition, std::size_t> position;
      for (std::size_t i = 0; i < lower_basis.size(); ++i) position.emplace(lower_basis[i], i);
      const RationalMatrix& q = annihilator(lower);
      const int mult = alg_.base().root_multiplicity(root);
      for (int d = 0; d <= alg_.nilpotency(); ++d) {
        for (int s = 0; s < mult; ++s) {
          const TruncIndex g = alg_.index(root, d, s);
          RationalMatrix a(lower_basis.size(), std::vector<Rational>(n, 0));
          for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [nu, c] : verma_.act(g.x(), basis[j])) a[position.at(nu)][j] = c;
          }
          for (const auto& row : q) {
            std::vector<Rational> r(n, 0);
            for (std::size_t i = 0; i < row.size(); ++i) {
              if (is_zero(row[i])) continue;
              for (std::size_t j = 0; j < n; ++j) r[j] += row[i] * a[i][j];
            }
            stacked.push_back(std::move(r));
          }
          if (actions != nullptr) actions->emplace_back(g, std::move(a));
        }
      }
    }
    if (stacked.empty()) return identity(n);
    return null_space(std::move(stacked));
  }

 private:
  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  }

  const TruncatedAlgebra& alg_;
  EvaluatedVerma verma_;
  std::map<RootVector, RationalMatrix> memo_;
};

}  // namespace

VermaActionReport verma_action_oracle(const TruncatedAlgebra& alg, const Functional& lam, const RootVector& chi) {
  alg.base().require_positive_cone(chi);
  VermaActionReport report;
  report.basis = enumerate_partitions(alg, chi);
  RadicalSolver solver(alg, lam);
  report.radical_dimension = static_cast<int>(solver.submodule(chi, report.basis, &report.actions).size());
  return report;
}

}  // namespace tcla

#include "tcla/shapovalov.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "tcla/error.hpp"

namespace tcla {

std::string to_string(FormVariant v) { return v == FormVariant::F ? "F" : "B"; }

std::string to_string(EntrySource s) {
  switch (s) {
    case EntrySource::ClosedForm:
      return "closed-form";
    case EntrySource::Vanishing:
      return "vanishing";
    case EntrySource::Factored:
      return "factored";
    case EntrySource::Oracle:
      break;
  }
  return "oracle";
}

int default_workers() {
  if (const char* env = std::getenv("TCLA_JOBS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    throw Error(std::string("TCLA_JOBS must be a positive integer, got '") + env + "'");
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Permanent of the matrix value(row, col) where rows repeat: rows are given
// as distinct entries with multiplicities, so the sum over bijections runs
// over count vectors instead of permutations.
template <typename T, typename Value>
T grouped_permanent(const std::vector<TruncIndex>& rows, const std::vector<TruncIndex>& cols, Value value) {
  std::vector<TruncIndex> types;
  std::vector<int> counts;
  for (const auto& g : rows) {
    if (!types.empty() && types.back() == g) {
      ++counts.back();
    } else {
      types.push_back(g);
      counts.push_back(1);
    }
  }
  std::map<std::vector<int>, T> layer{{counts, T(1)}};
  for (const auto& c : cols) {
    std::vector<T> column;
    column.reserve(types.size());
    for (const auto& t : types) column.push_back(value(t, c));
    std::map<std::vector<int>, T> next;
    for (const auto& [remaining, acc] : layer) {
      for (std::size_t t = 0; t < types.size(); ++t) {
        if (remaining[t] == 0 || column[t] == T(0)) continue;
        std::vector<int> r = remaining;
        --r[t];
        T term = acc * column[t];
        term *= Rational(remaining[t]);
        auto [it, inserted] = next.emplace(std::move(r), term);
        if (!inserted) it->second += term;
      }
    }
    layer = std::move(next);
    if (layer.empty()) return T(0);
  }
  T total(0);
  for (const auto& [remaining, acc] : layer) total += acc;
  return total;
}

CartanPoly cartan_part(const TruncatedAlgebra& alg, const TruncCombination& c) {
  CartanPoly p;
  for (const auto& t : c.terms()) {
    if (t.elem.base.part == Part::Cartan) p += CartanPoly::generator(alg.cartan_gen(t.elem.base.cartan, t.elem.degree)) * t.coeff;
  }
  return p;
}

void require_same_weight(const TruncatedAlgebra& alg, const Partition& lambda, const Partition& mu) {
  const int rank = alg.base().rank();
  if (lambda.weight(rank) != mu.weight(rank)) {
    throw WeightError("form entry between partitions of weights " + alg.base().root_label(lambda.weight(rank)) +
                      " and " + alg.base().root_label(mu.weight(rank)));
  }
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<TruncIndex> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return Partition(std::move(e));
}

std::vector<RootVector> roots_of(const Partition& p) {
  std::vector<RootVector> out;
  for (const auto& g : p.entries()) {
    if (std::find(out.begin(), out.end(), g.root) == out.end()) out.push_back(g.root);
  }
  return out;
}

}  // namespace

CartanPoly symmetrized_pair(const TruncatedAlgebra& alg, const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw WeightError("symmetrized pairing of partitions of lengths " + std::to_string(lambda.size()) + " and " +
                      std::to_string(mu.size()));
  }
  return grouped_permanent<CartanPoly>(lambda.entries(), mu.entries(), [&](const TruncIndex& a, const TruncIndex& b) {
    return cartan_part(alg, alg.bracket(a.x(), b.y()));
  });
}

CartanPoly leading_term(const TruncatedAlgebra& alg, const Partition& lambda, const Partition& mu) {
  CartanPoly out(1);
  auto roots = roots_of(lambda);
  for (const auto& r : roots_of(mu)) {
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  for (const auto& r : roots) {
    const Partition a = lambda.root_slice(r);
    const Partition b = mu.root_slice(r);
    if (a.size() != b.size()) return CartanPoly();
    out *= symmetrized_pair(alg, a, b);
  }
  return out;
}

CartanPoly block_entry(const TruncatedAlgebra& alg, const Partition& lambda, const Partition& mu) {
  const LArray l = l_array_of(lambda);
  if (l != l_array_of(mu)) throw Error("closed-form entry needs partitions with the same multiplicity array");
  const int n = alg.nilpotency();
  CartanPoly out(1);
  for (const auto& [cell, count] : l.counts()) {
    out *= symmetrized_pair(alg, lambda.cell(cell.root, cell.degree), star_partition(mu.cell(cell.root, cell.degree), n));
  }
  return out;
}

// ------------------------------------------------------------- FormEngine

FormEngine::FormEngine(const TruncatedAlgebra& alg) : alg_(alg), verma_(make_symbolic_verma(alg)) {}

CartanPoly FormEngine::oracle_f(const Partition& lambda, const Partition& mu) {
  require_same_weight(alg_, lambda, mu);
  return verma_.form_entry(lambda, mu);
}

std::vector<CartanPoly> FormEngine::oracle_column(const Partition& mu, const std::vector<Partition>& rows,
                                                  FormVariant variant) {
  const Partition col = variant == FormVariant::F ? mu : star_partition(mu, alg_.nilpotency());
  return verma_.form_column(col, rows);
}

FormEntry FormEngine::entry(const Partition& lambda, const Partition& mu, FormVariant variant) {
  require_same_weight(alg_, lambda, mu);
  // F(λ, μ) = B(λ, μ*).
  return modified(lambda, variant == FormVariant::F ? star_partition(mu, alg_.nilpotency()) : mu);
}

FormEntry FormEngine::single_degree(const Partition& lambda, const Partition& mu, int d) {
  const int n = alg_.nilpotency();
  if (l_array_of(lambda) == l_array_of(mu)) return {block_entry(alg_, lambda, mu), EntrySource::ClosedForm};
  if ((d == 0 && lambda.size() < mu.size()) || (d > 0 && lambda.size() > mu.size())) {
    return {CartanPoly(), EntrySource::Vanishing};
  }
  if (lambda.size() == mu.size()) {
    for (const auto& r : roots_of(join(lambda, mu))) {
      if (lambda.root_slice(r).size() != mu.root_slice(r).size()) return {CartanPoly(), EntrySource::Vanishing};
    }
  }
  return {verma_.form_entry(lambda, star_partition(mu, n)), EntrySource::Oracle};
}

FormEntry FormEngine::modified(const Partition& lambda, const Partition& mu) {
  const int n = alg_.nilpotency();
  const int rank = alg_.base().rank();
  const LArray l = l_array_of(lambda);
  const LArray m = l_array_of(mu);
  if (l == m) return {block_entry(alg_, lambda, mu), EntrySource::ClosedForm};
  if (compare_theta(l, m, n, rank) == std::strong_ordering::greater) return {CartanPoly(), EntrySource::Vanishing};

  // Split off the leading degrees whose weights agree.
  int k = 0;
  while (k <= n && l.degree_weight(k, rank) == m.degree_weight(k, rank)) ++k;
  FormEntry out{CartanPoly(1), EntrySource::Factored};
  bool used_oracle = false;
  for (int d = 0; d < k && d <= n; ++d) {
    FormEntry f = single_degree(lambda.degree_slice(d), mu.degree_slice(d), d);
    if (f.value.is_zero()) return {CartanPoly(), f.source == EntrySource::Oracle ? EntrySource::Oracle : EntrySource::Vanishing};
    used_oracle = used_oracle || f.source == EntrySource::Oracle;
    out.value *= f.value;
  }
  if (k <= n) {
    Partition rest_l, rest_m;
    for (int d = k; d <= n; ++d) {
      rest_l = join(rest_l, lambda.degree_slice(d));
      rest_m = join(rest_m, mu.degree_slice(d));
    }
    out.value *= verma_.form_entry(rest_l, star_partition(rest_m, n));
    used_oracle = true;
  }
  if (used_oracle) out.source = EntrySource::Oracle;
  return out;
}

// --------------------------------------------------------------- assembly

namespace {

// Runs job(engine, j) for j in [0, count) on a pool of workers, each with
// its own engine. Rethrows the first exception.
template <typename Job>
void for_each_column(const TruncatedAlgebra& alg, std::size_t count, int workers, Job job) {
  if (workers <= 0) workers = default_workers();
  const std::size_t pool = std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    FormEngine engine(alg);
    for (std::size_t j = next++; j < count; j = next++) {
      try {
        job(engine, j);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (pool <= 1) {
    run();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < pool; ++i) threads.emplace_back(run);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

FormMatrix assemble_matrix(const TruncatedAlgebra& alg, const RootVector& chi, FormVariant variant,
                           AssemblyMode mode, int workers) {
  FormMatrix out;
  out.chi = chi;
  out.variant = variant;
  out.basis = enumerate_partitions(alg, chi);
  const std::size_t size = out.basis.size();
  out.entries.assign(size, std::vector<CartanPoly>(size));
  if (mode != AssemblyMode::Oracle) out.sources.assign(size, std::vector<EntrySource>(size, EntrySource::Oracle));

  for_each_column(alg, size, workers, [&](FormEngine& engine, std::size_t j) {
    std::vector<CartanPoly> oracle;
    if (mode != AssemblyMode::Fast) oracle = engine.oracle_column(out.basis[j], out.basis, variant);
    for (std::size_t i = 0; i < size; ++i) {
      if (mode == AssemblyMode::Oracle) {
        out.entries[i][j] = oracle[i];
        continue;
      }
      FormEntry e = engine.entry(out.basis[i], out.basis[j], variant);
      if (mode == AssemblyMode::Both && e.value != oracle[i]) {
        const auto namer = alg.base().cartan_namer();
        throw Error(to_string(variant) + " entry (" + partition_label(alg, out.basis[i]) + ", " +
                    partition_label(alg, out.basis[j]) + "): " + to_string(e.source) + " value " +
                    to_string(e.value, namer) + " differs from oracle value " + to_string(oracle[i], namer));
      }
      out.entries[i][j] = std::move(e.value);
      out.sources[i][j] = e.source;
    }
  });

  if (variant == FormVariant::B) {
    const int n = alg.nilpotency();
    const int rank = alg.base().rank();
    std::vector<LArray> arrays;
    for (const auto& p : out.basis) arrays.push_back(l_array_of(p));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (!out.entries[i][j].is_zero() && compare_theta(arrays[i], arrays[j], n, rank) == std::strong_ordering::greater) {
          throw Error("B entry (" + partition_label(alg, out.basis[i]) + ", " + partition_label(alg, out.basis[j]) +
                      ") below the block diagonal is nonzero");
        }
      }
    }
  }
  return out;
}

FormMatrix oracle_lower_b(const TruncatedAlgebra& alg, const RootVector& chi, int workers) {
  FormMatrix out;
  out.chi = chi;
  out.variant = FormVariant::B;
  out.basis = enumerate_partitions(alg, chi);
  const std::size_t size = out.basis.size();
  out.entries.assign(size, std::vector<CartanPoly>(size));
  std::vector<LArray> arrays;
  for (const auto& p : out.basis) arrays.push_back(l_array_of(p));
  for_each_column(alg, size, workers, [&](FormEngine& engine, std::size_t j) {
    // Basis is in block order, so the first row of the column's block starts
    // the rows needed.
    std::size_t first = j;
    while (first > 0 && arrays[first - 1] == arrays[j]) --first;
    const std::vector<Partition> rows(out.basis.begin() + static_cast<std::ptrdiff_t>(first), out.basis.end());
    auto column = engine.oracle_column(out.basis[j], rows, FormVariant::B);
    for (std::size_t i = first; i < size; ++i) out.entries[i][j] = std::move(column[i - first]);
  });
  return out;
}

std::vector<BlockValue> block_values(const TruncatedAlgebra& alg, const RootVector& chi) {
  std::vector<BlockValue> out;
  for (auto& block : blocks_of(alg, chi)) {
    BlockValue v;
    v.array = block.array;
    v.h_factor = CartanPoly(1);
    std::map<RootVector, RationalMatrix> grams;
    for (const auto& [cell, count] : block.array.counts()) {
      v.h_factor *= alg.pairing(cell.root).pow(static_cast<unsigned>(count)) * factorial(static_cast<unsigned>(count));
      grams.emplace(cell.root, alg.base().pairing(cell.root).gram);
    }
    const std::size_t size = block.partitions.size();
    v.gram.assign(size, std::vector<Rational>(size, Rational(0)));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        Rational value = 1;
        for (const auto& [cell, count] : block.array.counts()) {
          const auto& g = grams.at(cell.root);
          const Rational perm = grouped_permanent<Rational>(
              block.partitions[i].cell(cell.root, cell.degree).entries(),
              block.partitions[j].cell(cell.root, cell.degree).entries(), [&](const TruncIndex& a, const TruncIndex& b) {
                return g[static_cast<std::size_t>(a.slot)][static_cast<std::size_t>(b.slot)];
              });
          value *= perm / factorial(static_cast<unsigned>(count));
        }
        v.gram[i][j] = value;
      }
    }
    v.partitions = std::move(block.partitions);
    out.push_back(std::move(v));
  }
  return out;
}

int star_permutation_sign(const TruncatedAlgebra& alg, const std::vector<Partition>& basis) {
  std::map<Partition, std::size_t> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position[basis[i]] = i;
  std::vector<std::size_t> perm(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = position.find(star_partition(basis[i], alg.nilpotency()));
    if (it == position.end()) throw Error("basis is not closed under the star involution");
    perm[i] = it->second;
  }
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t length = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

Determinants determinant(const TruncatedAlgebra& alg, const RootVector& chi, DetMethod method, int workers) {
  const auto basis = enumerate_partitions(alg, chi);
  const int sign = star_permutation_sign(alg, basis);
  Determinants block, bareiss;
  if (method != DetMethod::Bareiss) {
    block.det_b = CartanPoly(1);
    for (const auto& v : block_values(alg, chi)) {
      const Rational g = tcla::determinant(v.gram);
      if (is_zero(g)) throw Error("singular Gram matrix on a block");
      block.det_b *= v.h_factor.pow(static_cast<unsigned>(v.partitions.size())) * g;
    }
    block.det_f = block.det_b * Rational(sign);
    if (method == DetMethod::Block) return block;
  }
  const FormMatrix f = assemble_matrix(alg, chi, FormVariant::F, AssemblyMode::Fast, workers);
  bareiss.det_f = bareiss_determinant(f.entries);
  bareiss.det_b = bareiss.det_f * Rational(sign);
  if (method == DetMethod::Bareiss) return bareiss;
  if (block.det_b != bareiss.det_b) {
    const auto namer = alg.base().cartan_namer();
    throw Error("block determinant " + to_string(block.det_b, namer) + " differs from elimination determinant " +
                to_string(bareiss.det_b, namer));
  }
  return block;
}

RationalMatrix evaluated_form(const TruncatedAlgebra& alg, const RootVector& chi, const Functional& lam) {
  const auto basis = enumerate_partitions(alg, chi);
  auto verma = make_evaluated_verma(alg, lam);
  RationalMatrix m(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto column = verma.form_column(basis[j], basis);
    for (std::size_t i = 0; i < basis.size(); ++i) m[i][j] = column[i];
  }
  return m;
}

int radical_dimension(const TruncatedAlgebra& alg, const RootVector& chi, const Functional& lam) {
  const RationalMatrix m = evaluated_form(alg, chi, lam);
  return static_cast<int>(m.size()) - matrix_rank(m);
}

}  // namespace tcla

#pragma once

#include <string>
#include <vector>

#include "tcla/linalg.hpp"
#include "tcla/partitions.hpp"
#include "tcla/uea.hpp"

namespace tcla {

enum class FormVariant { F, B };
enum class AssemblyMode { Fast, Oracle, Both };
enum class DetMethod { Block, Bareiss, Both };

/// Where a fast-path value came from.
enum class EntrySource { ClosedForm, Vanishing, Factored, Oracle };

std::string to_string(FormVariant v);
std::string to_string(EntrySource s);

struct FormEntry {
  CartanPoly value;
  EntrySource source = EntrySource::Oracle;
};

struct FormMatrix {
  RootVector chi;
  std::vector<Partition> basis;
  PolyMatrix entries;
  FormVariant variant = FormVariant::F;
  /// Per-entry provenance of the fast path; empty in oracle mode.
  std::vector<std::vector<EntrySource>> sources;
};

struct BlockValue {
  LArray array;
  std::vector<Partition> partitions;
  CartanPoly h_factor;
  RationalMatrix gram;
};

/// Worker count from TCLA_JOBS, else the hardware concurrency.
int default_workers();

/// Σ_τ Π_i Cartan part of [x_{λ_τ(i)}, y_{μ_i}]. Throws WeightError when the
/// lengths differ.
CartanPoly symmetrized_pair(const TruncatedAlgebra& alg, const Partition& lambda, const Partition& mu);

/// Π_α ⟨λ^α, μ^α⟩ when every root slice has matching length, else 0: the
/// top Cartan-degree part of F(λ, μ) when |λ| = |μ|.
CartanPoly leading_term(const TruncatedAlgebra& alg, const Partition& lambda, const Partition& mu);

/// Form values with closed forms, vanishing rules and the per-degree
/// factorization, falling back to the straightening oracle. Not thread-safe;
/// use one engine per thread.
class FormEngine {
 public:
  explicit FormEngine(const TruncatedAlgebra& alg);

  const TruncatedAlgebra& algebra() const { return alg_; }

  /// Throws WeightError when the weights differ.
  FormEntry entry(const Partition& lambda, const Partition& mu, FormVariant variant);
  /// q(x_λ y_μ) by straightening.
  CartanPoly oracle_f(const Partition& lambda, const Partition& mu);
  /// Oracle values of a whole column.
  std::vector<CartanPoly> oracle_column(const Partition& mu, const std::vector<Partition>& rows, FormVariant variant);

 private:
  FormEntry modified(const Partition& lambda, const Partition& mu);
  FormEntry single_degree(const Partition& lambda, const Partition& mu, int d);

  const TruncatedAlgebra& alg_;
  SymbolicVerma verma_;
};

/// Closed-form B(λ, μ) for partitions with the same multiplicity array.
CartanPoly block_entry(const TruncatedAlgebra& alg, const Partition& lambda, const Partition& mu);

/// Full matrix in block order. Mode Both compares every fast value that did
/// not come from the oracle against the oracle and throws Error on mismatch.
FormMatrix assemble_matrix(const TruncatedAlgebra& alg, const RootVector& chi, FormVariant variant,
                           AssemblyMode mode, int workers = 0);

/// B in block order with oracle values on and below the block diagonal.
/// Entries above it are not computed and hold zero.
FormMatrix oracle_lower_b(const TruncatedAlgebra& alg, const RootVector& chi, int workers = 0);

/// h_L and the Gram matrix of G_L for every block, in block order.
std::vector<BlockValue> block_values(const TruncatedAlgebra& alg, const RootVector& chi);

/// Sign of the column permutation μ ↦ μ* of the basis, so det B = sign·det F.
int star_permutation_sign(const TruncatedAlgebra& alg, const std::vector<Partition>& basis);

struct Determinants {
  CartanPoly det_b;
  CartanPoly det_f;
};

/// det B_χ and det F_χ. Block uses Π h_L^{|P_L|} det G_L; Bareiss eliminates
/// the assembled F matrix; Both computes both and throws Error unless they
/// agree with the sign of the star permutation.
Determinants determinant(const TruncatedAlgebra& alg, const RootVector& chi, DetMethod method, int workers = 0);

/// dim of the radical of F_χ(Λ). Λ must be total on the Cartan generators.
int radical_dimension(const TruncatedAlgebra& alg, const RootVector& chi, const Functional& lam);

/// F_χ(Λ) by the evaluated realization.
RationalMatrix evaluated_form(const TruncatedAlgebra& alg, const RootVector& chi, const Functional& lam);

}  // namespace tcla

#include "tcla/reducibility.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include "tcla/error.hpp"

namespace tcla {

namespace {

CartanPoly degree_n_pairing(const TruncatedAlgebra& alg, const RootVector& alpha) { return alg.pairing(alpha); }

bool vanishes(const TruncatedAlgebra& alg, const RootVector& alpha, const Functional& lam) {
  return is_zero(poly_eval(degree_n_pairing(alg, alpha), lam));
}

Integer evaluate(const std::vector<Integer>& coeffs, const Integer& x) {
  Integer v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
  if (n == 1) return;
  for (unsigned long p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  const Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Integer> divisors_up_to(const Integer& n, const Integer& bound) {
  std::map<Integer, int> primes;
  factor_into(abs(n), primes);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : primes) {
    const std::size_t count = divs.size();
    for (std::size_t i = 0; i < count; ++i) {
      Integer d = divs[i];
      for (int k = 0; k < e; ++k) {
        d *= p;
        if (d > bound) break;
        divs.push_back(d);
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

ReducibilityVerdict virasoro_verdict(const TruncatedAlgebra& alg, const PsiRule& psi, const Functional& lam,
                                     const ReducibilityOptions& options) {
  const int n = alg.nilpotency();
  const Rational x = lam.at(alg.cartan_gen(0, n));
  const Rational y = lam.at(alg.cartan_gen(1, n));
  ReducibilityVerdict v;
  if (!psi.polynomial) {
    for (long m = 1; m <= options.psi_window; ++m) {
      if (is_zero(2 * m * x + psi(m) * y)) {
        v.reducible = true;
        v.witness = RootVector({static_cast<int>(m)});
        break;
      }
    }
    v.window = options.psi_window;
    return v;
  }
  // 2m·X + ψ(m)·Y as a polynomial in m.
  std::vector<Rational> p = *psi.polynomial;
  if (p.size() < 2) p.resize(2, Rational(0));
  for (auto& c : p) c *= y;
  p[1] += 2 * x;
  Integer lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> coeffs;
  for (const auto& c : p) coeffs.push_back(Integer(c * lcm));
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c == 0; })) {
    v.reducible = true;
    v.witness = RootVector({1});
    return v;
  }
  const auto roots = positive_integer_roots(coeffs);
  if (!roots.empty()) {
    if (!roots.front().fits_sint_p() || roots.front() > std::numeric_limits<int>::max()) {
      throw Error("reducibility witness m = " + roots.front().get_str() + " exceeds the supported root range");
    }
    v.reducible = true;
    v.witness = RootVector({static_cast<int>(roots.front().get_si())});
  }
  return v;
}

}  // namespace

std::vector<Integer> positive_integer_roots(std::vector<Integer> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) throw Error("integer roots of the zero polynomial");
  // Roots m > 0 are unaffected by a factor m^k.
  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(low));
  std::vector<Integer> roots;
  if (coeffs.size() == 1) return roots;
  // Cauchy bound.
  Integer bound = 0;
  const Integer lead = abs(coeffs.back());
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
    Integer q = abs(coeffs[i]) / lead + 1;
    if (q > bound) bound = q;
  }
  bound += 1;
  if (bound <= 1000000) {
    for (long m = 1; m <= bound.get_si(); ++m) {
      if (evaluate(coeffs, Integer(m)) == 0) roots.emplace_back(m);
    }
    return roots;
  }
  for (const auto& d : divisors_up_to(coeffs.front(), bound)) {
    if (evaluate(coeffs, d) == 0) roots.push_back(d);
  }
  return roots;
}

ReducibilityVerdict is_reducible(const TruncatedAlgebra& alg, const Functional& lam,
                                 const ReducibilityOptions& options) {
  const LieAlgebra& base = alg.base();
  ReducibilityVerdict v;
  switch (base.kind()) {
    case AlgebraKind::SpecialLinear:
    case AlgebraKind::FiniteTable:
      for (const auto& alpha : base.positive_roots()) {
        if (vanishes(alg, alpha, lam)) {
          v.reducible = true;
          v.witness = alpha;
          break;
        }
      }
      return v;
    case AlgebraKind::Heisenberg:
    case AlgebraKind::Witt:
      // h_{mδ} is a nonzero multiple of h_δ.
      if (vanishes(alg, RootVector({1}), lam)) {
        v.reducible = true;
        v.witness = RootVector({1});
      }
      return v;
    case AlgebraKind::Virasoro:
      break;
  }
  return virasoro_verdict(alg, *virasoro_psi(base), lam, options);
}

std::optional<RootVector> primitive_vector_weights(const TruncatedAlgebra& alg, const Functional& lam,
                                                   const RootVector& chi) {
  for (const auto& alpha : alg.base().positive_roots_below(chi)) {
    if (vanishes(alg, alpha, lam)) return alpha;
  }
  return std::nullopt;
}

// ------------------------------------------------------------- RootSystem

RootSystem RootSystem::of_type(const std::string& type) {
  static const std::regex pattern("([ABCDG])([0-9]+)");
  std::smatch m;
  if (!std::regex_match(type, m, pattern)) throw Error("unknown Cartan type '" + type + "'");
  const char series = m[1].str()[0];
  const int n = std::stoi(m[2].str());
  auto chain = [](int r) {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) {
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
      if (i + 1 < r) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
        a[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
      }
    }
    return a;
  };
  // Entry (i, j) is 2(α_i|α_j)/(α_i|α_i).
  std::vector<std::vector<int>> a;
  switch (series) {
    case 'A':
      if (n < 1) break;
      a = chain(n);
      break;
    case 'B':
      if (n < 2) break;
      a = chain(n);
      a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = -2;
      break;
    case 'C':
      if (n < 2) break;
      a = chain(n);
      a[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = -2;
      break;
    case 'D':
      if (n < 4) break;
      a = chain(n);
      a[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = 0;
      a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = 0;
      a[static_cast<std::size_t>(n - 3)][static_cast<std::size_t>(n - 1)] = -1;
      a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 3)] = -1;
      break;
    case 'G':
      if (n != 2) break;
      a = {{2, -3}, {-1, 2}};
      break;
    default:
      break;
  }
  if (a.empty()) throw Error("unsupported Cartan type '" + type + "'");
  return RootSystem(type, std::move(a));
}

RootSystem::RootSystem(std::string name, std::vector<std::vector<int>> cartan_matrix)
    : name_(std::move(name)), cartan_(std::move(cartan_matrix)) {
  const std::size_t r = cartan_.size();
  if (r == 0) throw Error("empty Cartan matrix");
  for (const auto& row : cartan_) {
    if (row.size() != r) throw Error("Cartan matrix is not square");
  }
  // Symmetrize: d_i a_ij = d_j a_ji, propagated along the Dynkin diagram.
  std::vector<Rational> d(r, Rational(0));
  for (std::size_t start = 0; start < r; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j || cartan_[i][j] == 0) continue;
        if (cartan_[j][i] == 0) throw Error("Cartan matrix is not symmetrizable");
        Rational dj = d[i] * cartan_[i][j] / cartan_[j][i];
        dj.canonicalize();
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw Error("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  const Rational smallest = *std::min_element(d.begin(), d.end());
  gram_.assign(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      gram_[i][j] = d[i] / smallest * cartan_[i][j];
      gram_[i][j].canonicalize();
    }
  }

  // Weyl-group closure of the simple roots.
  std::set<RootVector> all;
  std::vector<RootVector> frontier;
  for (std::size_t i = 0; i < r; ++i) {
    RootVector e = RootVector::zero(static_cast<int>(r));
    e.coords[i] = 1;
    all.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    RootVector beta = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < r; ++i) {
      int coroot = 0;
      for (std::size_t j = 0; j < r; ++j) coroot += beta.coords[j] * cartan_[i][j];
      RootVector image = beta;
      image.coords[i] -= coroot;
      if (all.insert(image).second) {
        if (all.size() > 100000) throw Error("Cartan matrix is not of finite type");
        frontier.push_back(image);
      }
    }
  }
  for (const auto& beta : all) {
    if (beta.is_nonnegative()) roots_.push_back(beta);
  }
  std::sort(roots_.begin(), roots_.end(), [](const RootVector& a, const RootVector& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });
}

std::vector<Rational> RootSystem::covector(const RootVector& alpha) const {
  std::vector<Rational> out(static_cast<std::size_t>(rank()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) out[i] += gram_[i][j] * alpha.coords[j];
  }
  return out;
}

Rational RootSystem::pair(const std::vector<Rational>& lambda_bar, const RootVector& alpha) const {
  if (static_cast<int>(lambda_bar.size()) != rank()) {
    throw WeightError("weight has " + std::to_string(lambda_bar.size()) + " coordinates, root system " + name_ +
                      " has rank " + std::to_string(rank()));
  }
  const auto c = covector(alpha);
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * lambda_bar[i];
  return s;
}

FiniteVerdict killing_criterion(const RootSystem& roots, const std::vector<Rational>& lambda_bar) {
  FiniteVerdict v;
  for (const auto& alpha : roots.positive_roots()) {
    if (is_zero(roots.pair(lambda_bar, alpha))) {
      v.reducible = true;
      v.witness = alpha;
      break;
    }
  }
  return v;
}

AffineVerdict affine_criterion(const RootSystem& finite, const AffineWeightData& data) {
  const std::size_t r = static_cast<std::size_t>(finite.rank());
  const auto& g = data.killing_gram;
  if (g.size() != r || data.finite_part.size() != r) throw Error("affine weight data does not match rank " + std::to_string(r));
  for (const auto& row : g) {
    if (row.size() != r) throw Error("Killing Gram matrix is not square");
  }
  // The form must be a positive multiple of the normalized one.
  const Rational scale = g[0][0] / finite.gram()[0][0];
  if (sgn(scale) <= 0) throw Error("Killing Gram matrix is not positive on roots");
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (g[i][j] != g[j][i]) throw Error("Killing Gram matrix is not symmetric");
      if (g[i][j] != scale * finite.gram()[i][j]) throw Error("Killing Gram matrix does not match the root data");
    }
  }
  AffineVerdict v;
  if (is_zero(data.c_value)) {
    v.reducible = true;
    return v;
  }
  for (const auto& alpha : finite.positive_roots()) {
    Rational p = 0;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) p += data.finite_part[i] * g[i][j] * alpha.coords[j];
    }
    Rational m = p / data.c_value;
    m.canonicalize();
    if (m.get_den() == 1) {
      v.reducible = true;
      v.root = alpha;
      v.m = m.get_num();
      return v;
    }
  }
  return v;
}

// ------------------------------------------------------------- hyperplanes

namespace {

std::string simple_root_label(const RootVector& r) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    const int c = r.coords[i];
    if (c == 0) continue;
    if (!first) os << '+';
    if (c != 1) os << c;
    os << 'a' << (i + 1);
    first = false;
  }
  return os.str();
}

HyperplaneSet finite_planes(const RootSystem& rs) {
  HyperplaneSet out;
  for (int i = 1; i <= rs.rank(); ++i) out.coordinates.push_back("a" + std::to_string(i));
  for (const auto& alpha : rs.positive_roots()) out.planes.push_back({simple_root_label(alpha), rs.covector(alpha), 0});
  return out;
}

HyperplaneSet affine_planes(const RootSystem& rs, long window, const Rational& c_value) {
  HyperplaneSet out;
  for (int i = 1; i <= rs.rank(); ++i) out.coordinates.push_back("a" + std::to_string(i));
  for (const auto& alpha : rs.positive_roots()) {
    for (long m = -window; m <= window; ++m) {
      std::string label = simple_root_label(alpha);
      if (m != 0) label += (m > 0 ? "+" : "") + std::to_string(m) + "d";
      out.planes.push_back({label, rs.covector(alpha), Rational(m) * c_value});
    }
  }
  return out;
}

HyperplaneSet virasoro_planes(const PsiRule& psi, long window) {
  HyperplaneSet out;
  out.coordinates = {"c", "L0"};
  for (long m = 1; m <= window; ++m) {
    out.planes.push_back({(m == 1 ? std::string() : std::to_string(m)) + "d", {psi(m), Rational(2 * m)}, 0});
  }
  return out;
}

HyperplaneSet single_plane(const std::string& coordinate) {
  HyperplaneSet out;
  out.coordinates = {coordinate};
  out.planes.push_back({"d", {Rational(1)}, 0});
  return out;
}

}  // namespace

HyperplaneSet hyperplane_data(const std::string& kind, long window, const Rational& c_value) {
  if (window < 0) throw Error("hyperplane window must be nonnegative");
  static const std::regex sl_pattern("sl([0-9]+)");
  std::smatch m;
  if (std::regex_match(kind, m, sl_pattern)) {
    return finite_planes(RootSystem::of_type("A" + std::to_string(std::stoi(m[1].str()) - 1)));
  }
  if (kind == "virasoro") return virasoro_planes(PsiRule::standard(), window);
  if (kind == "heisenberg") return single_plane("hbar");
  if (kind == "witt") return single_plane("L0");
  if (kind.rfind("affine-", 0) == 0) return affine_planes(RootSystem::of_type(kind.substr(7)), window, c_value);
  return finite_planes(RootSystem::of_type(kind));
}

HyperplaneSet hyperplane_data(const LieAlgebra& alg, long window) {
  switch (alg.kind()) {
    case AlgebraKind::SpecialLinear:
    case AlgebraKind::Witt:
    case AlgebraKind::Heisenberg:
      return hyperplane_data(alg.name(), window);
    case AlgebraKind::Virasoro:
      return virasoro_planes(*virasoro_psi(alg), window);
    case AlgebraKind::FiniteTable:
      break;
  }
  HyperplaneSet out;
  out.coordinates = alg.cartan_names();
  for (const auto& alpha : alg.positive_roots()) {
    Hyperplane h{alg.root_label(alpha), std::vector<Rational>(static_cast<std::size_t>(alg.cartan_dim()), Rational(0)), 0};
    const PairingData pairing = alg.pairing(alpha);
    for (const auto& t : pairing.h_alpha.terms()) h.normal[static_cast<std::size_t>(t.elem.cartan)] += t.coeff;
    out.planes.push_back(std::move(h));
  }
  return out;
}

std::string hyperplanes_csv(const HyperplaneSet& set) {
  std::ostringstream os;
  os << "label";
  for (std::size_t i = 1; i <= set.coordinates.size(); ++i) os << ",normal_" << i;
  os << ",offset\n";
  for (const auto& h : set.planes) {
    os << h.label;
    for (const auto& c : h.normal) os << ',' << to_string(c);
    os << ',' << to_string(h.offset) << '\n';
  }
  return os.str();
}

// -------------------------------------------------------------- characters

CharacterTable character(const TruncatedAlgebra& alg, const Functional& lam, int depth) {
  const LieAlgebra& base = alg.base();
  if (base.cartan_dim() != 1) {
    throw Error("characters need a one-dimensional Cartan subalgebra; " + base.name() + " has dimension " +
                std::to_string(base.cartan_dim()));
  }
  if (depth < 0) throw Error("character depth must be nonnegative");
  CharacterTable out;
  for (int d = alg.nilpotency(); d > 0; --d) {
    if (!is_zero(lam.at(alg.cartan_gen(0, d)))) {
      out.m = d;
      break;
    }
  }
  if (out.m == 0) {
    out.delegated = true;
    return out;
  }
  out.dims.assign(static_cast<std::size_t>(depth) + 1, Integer(0));
  out.dims[0] = 1;
  const int copies = out.m + 1;
  for (int n = 1; n <= depth; ++n) {
    const RootVector root({n});
    if (!base.is_positive_root(root)) continue;
    const int factors = copies * base.root_multiplicity(root);
    // Multiply by (1 - q^n)^{-1}, once per factor.
    for (int f = 0; f < factors; ++f) {
      for (int k = n; k <= depth; ++k) out.dims[static_cast<std::size_t>(k)] += out.dims[static_cast<std::size_t>(k - n)];
    }
  }
  return out;
}

}  // namespace tcla

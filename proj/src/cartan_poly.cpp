#include "tcla/cartan_poly.hpp"

#include <algorithm>
#include <sstream>

#include "tcla/error.hpp"

namespace tcla {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::generator(CartanGen g, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.push_back({g, exponent});
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.exponent;
  return d;
}

std::uint32_t Monomial::t_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.exponent * f.gen.t_degree;
  return d;
}

std::uint32_t Monomial::exponent_of(CartanGen g) const {
  for (const auto& f : factors_) {
    if (f.gen == g) return f.exponent;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->gen < j->gen) {
      out.factors_.push_back(*i++);
    } else if (j->gen < i->gen) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.push_back({i->gen, i->exponent + j->exponent});
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  return out;
}

// Graded lexicographic order. It is multiplicative, which the merge in
// add_scaled and the leading-term division both rely on.
std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
    if (i->gen != j->gen) return i->gen < j->gen ? std::strong_ordering::greater : std::strong_ordering::less;
    if (i->exponent != j->exponent) return i->exponent <=> j->exponent;
  }
  if (i != a.factors_.end()) return std::strong_ordering::greater;
  if (j != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

namespace {

bool divides(const Monomial& d, const Monomial& m) {
  for (const auto& f : d.factors()) {
    if (m.exponent_of(f.gen) < f.exponent) return false;
  }
  return true;
}

Monomial quotient(const Monomial& m, const Monomial& d) {
  Monomial q;
  for (const auto& f : m.factors()) {
    const std::uint32_t e = f.exponent - d.exponent_of(f.gen);
    if (e > 0) q = q * Monomial::generator(f.gen, e);
  }
  return q;
}

}  // namespace

// -------------------------------------------------------------- CartanPoly

CartanPoly::CartanPoly(const Rational& c) {
  if (!tcla::is_zero(c)) terms_.push_back({Monomial{}, c});
}

CartanPoly CartanPoly::generator(CartanGen g) { return monomial(Monomial::generator(g)); }

CartanPoly CartanPoly::monomial(Monomial m, Rational coeff) {
  CartanPoly p;
  if (!tcla::is_zero(coeff)) p.terms_.push_back({std::move(m), std::move(coeff)});
  return p;
}

CartanPoly CartanPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  CartanPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return tcla::is_zero(t.coeff); });
  return p;
}

int CartanPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().monomial.degree());
}

CartanPoly CartanPoly::homogeneous_component(int degree) const {
  CartanPoly out;
  for (const auto& t : terms_) {
    if (static_cast<int>(t.monomial.degree()) == degree) out.terms_.push_back(t);
  }
  return out;
}

bool CartanPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational CartanPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().monomial.is_one()) return terms_.front().coeff;
  return 0;
}

void CartanPoly::add_scaled(const CartanPoly& o, const Rational& c, const Monomial& m) {
  if (o.terms_.empty() || tcla::is_zero(c)) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  const bool shift = !m.is_one();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end()) {
      merged.push_back(std::move(*i++));
      continue;
    }
    Monomial jm = shift ? j->monomial * m : j->monomial;
    if (i == terms_.end() || jm < i->monomial) {
      merged.push_back({std::move(jm), j->coeff * c});
      ++j;
    } else if (i->monomial < jm) {
      merged.push_back(std::move(*i++));
    } else {
      Rational sum = i->coeff + j->coeff * c;
      if (!tcla::is_zero(sum)) merged.push_back({std::move(jm), std::move(sum)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

CartanPoly& CartanPoly::operator+=(const CartanPoly& o) {
  add_scaled(o, 1);
  return *this;
}

CartanPoly& CartanPoly::operator-=(const CartanPoly& o) {
  add_scaled(o, -1);
  return *this;
}

CartanPoly& CartanPoly::operator*=(const Rational& c) {
  if (tcla::is_zero(c)) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

CartanPoly operator*(const CartanPoly& a, const CartanPoly& b) {
  const CartanPoly& small = a.size() <= b.size() ? a : b;
  const CartanPoly& large = a.size() <= b.size() ? b : a;
  CartanPoly out;
  for (const auto& t : small.terms_) out.add_scaled(large, t.coeff, t.monomial);
  return out;
}

CartanPoly& CartanPoly::operator*=(const CartanPoly& o) { return *this = *this * o; }

CartanPoly CartanPoly::operator-() const {
  CartanPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

CartanPoly CartanPoly::pow(unsigned e) const {
  CartanPoly result(1);
  CartanPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::vector<CartanGen> CartanPoly::generators() const {
  std::vector<CartanGen> gens;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) gens.push_back(f.gen);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

CartanPoly poly_add(const CartanPoly& a, const CartanPoly& b) { return a + b; }
CartanPoly poly_mul(const CartanPoly& a, const CartanPoly& b) { return a * b; }

// -------------------------------------------------------------- Functional

const Rational& Functional::at(CartanGen g) const {
  auto it = values_.find(g);
  if (it == values_.end()) {
    throw MissingAssignment("functional has no value for generator (h" + std::to_string(g.h_index) + ", t^" +
                            std::to_string(g.t_degree) + ")");
  }
  return it->second;
}

Rational poly_eval(const CartanPoly& p, const Functional& lam) {
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (const auto& f : t.monomial.factors()) {
      const Rational& x = lam.at(f.gen);
      for (std::uint32_t k = 0; k < f.exponent; ++k) v *= x;
    }
    total += v;
  }
  return total;
}

std::map<int, CartanPoly> poly_t_degree_components(const CartanPoly& p) {
  std::map<int, std::vector<CartanPoly::Term>> buckets;
  for (const auto& t : p.terms()) buckets[static_cast<int>(t.monomial.t_degree())].push_back(t);
  std::map<int, CartanPoly> out;
  for (auto& [d, terms] : buckets) out.emplace(d, CartanPoly::from_terms(std::move(terms)));
  return out;
}

CartanPoly poly_divide_exact(const CartanPoly& a, const CartanPoly& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  const auto& lead = b.terms().back();
  CartanPoly rem = a;
  std::vector<CartanPoly::Term> q;
  while (!rem.is_zero()) {
    const auto& lt = rem.terms().back();
    if (!divides(lead.monomial, lt.monomial)) throw Error("polynomial division is not exact");
    Monomial qm = quotient(lt.monomial, lead.monomial);
    Rational qc = lt.coeff / lead.coeff;
    rem.add_scaled(b, -qc, qm);
    q.push_back({std::move(qm), std::move(qc)});
  }
  return CartanPoly::from_terms(std::move(q));
}

std::string to_string(const CartanPoly& p, const CartanNamer& name) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rational c = it->coeff;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == 1;
    if (it->monomial.is_one()) {
      os << to_string(c);
      continue;
    }
    if (!unit) os << to_string(c) << '*';
    bool first_factor = true;
    for (const auto& f : it->monomial.factors()) {
      if (!first_factor) os << '*';
      first_factor = false;
      const std::string g = name(f.gen.h_index) + "@" + std::to_string(f.gen.t_degree);
      if (f.exponent == 1) {
        os << g;
      } else {
        os << '(' << g << ")^" << f.exponent;
      }
    }
  }
  return os.str();
}

}  // namespace tcla

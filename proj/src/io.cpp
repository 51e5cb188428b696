#include "tcla/io.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "tcla/error.hpp"

namespace tcla {

// ------------------------------------------------------------------ weights

RootVector parse_weight(const LieAlgebra& alg, const std::string& text) {
  const auto symbols = alg.lattice_symbols();
  RootVector out = RootVector::zero(alg.rank());
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> WeightError {
    return WeightError("cannot parse weight '" + text + "': " + why);
  };
  skip();
  if (i == text.size()) throw fail("empty");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected + or - at position " + std::to_string(i));
    }
    first = false;
    long coeff = 1;
    bool has_number = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t end = i;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      coeff = std::stol(text.substr(i, end - i));
      has_number = true;
      i = end;
      if (i < text.size() && text[i] == '*') ++i;
    }
    std::size_t end = i;
    while (end < text.size() && std::isalnum(static_cast<unsigned char>(text[end]))) ++end;
    const std::string sym = text.substr(i, end - i);
    i = end;
    if (sym.empty()) {
      if (has_number && coeff == 0) continue;
      throw fail("missing lattice symbol");
    }
    auto it = std::find(symbols.begin(), symbols.end(), sym);
    if (it == symbols.end()) throw fail("unknown symbol '" + sym + "'");
    out.coords[static_cast<std::size_t>(it - symbols.begin())] += sign * static_cast<int>(coeff);
  }
  return out;
}

// --------------------------------------------------------------- functionals

CartanGen parse_cartan_gen(const TruncatedAlgebra& alg, const std::string& text) {
  const auto at = text.rfind('@');
  if (at == std::string::npos) throw ParseError("Cartan generator '" + text + "' needs the form name@degree");
  const std::string name = text.substr(0, at);
  const auto& names = alg.base().cartan_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw ParseError("unknown Cartan generator '" + name + "' for " + alg.base().name());
  int degree = 0;
  try {
    std::size_t used = 0;
    degree = std::stoi(text.substr(at + 1), &used);
    if (used != text.size() - at - 1) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw ParseError("bad degree in '" + text + "'");
  }
  return alg.cartan_gen(static_cast<int>(it - names.begin()), degree);
}

std::string cartan_gen_name(const TruncatedAlgebra& alg, CartanGen g) {
  return alg.base().cartan_names().at(g.h_index) + "@" + std::to_string(g.t_degree);
}

Functional parse_lambda(const TruncatedAlgebra& alg, const Json& doc) {
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_object()) {
    throw ParseError("lambda JSON needs an object \"values\"");
  }
  // Unlisted generators are zero.
  Functional lam;
  for (int h = 0; h < alg.base().cartan_dim(); ++h) {
    for (int d = 0; d <= alg.nilpotency(); ++d) lam.set(alg.cartan_gen(h, d), Rational(0));
  }
  for (const auto& [key, value] : doc["values"].items()) {
    Rational r;
    if (value.is_string()) {
      r = parse_rational(value.get<std::string>());
    } else if (value.is_number_integer()) {
      r = Rational(value.get<long>());
    } else {
      throw ParseError("value of " + key + " must be a rational string or an integer");
    }
    lam.set(parse_cartan_gen(alg, key), r);
  }
  return lam;
}

Json lambda_to_json(const TruncatedAlgebra& alg, const Functional& lam) {
  Json values = Json::object();
  for (const auto& [g, v] : lam.values()) values[cartan_gen_name(alg, g)] = to_string(v);
  return Json{{"values", values}};
}

// --------------------------------------------------------------- polynomials

Json poly_to_json(const TruncatedAlgebra& alg, const CartanPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    Json mono = Json::array();
    for (const auto& f : t.monomial.factors()) {
      for (std::uint32_t e = 0; e < f.exponent; ++e) {
        mono.push_back(Json::array({alg.base().cartan_names().at(f.gen.h_index), f.gen.t_degree}));
      }
    }
    out.push_back(Json{{"coeff", to_string(t.coeff)}, {"monomial", mono}});
  }
  return out;
}

CartanPoly poly_from_json(const TruncatedAlgebra& alg, const Json& doc) {
  if (!doc.is_array()) throw ParseError("polynomial JSON must be a list of terms");
  std::vector<CartanPoly::Term> terms;
  for (const auto& t : doc) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("monomial")) {
      throw ParseError("polynomial term needs coeff and monomial");
    }
    Monomial m;
    for (const auto& f : t["monomial"]) {
      if (!f.is_array() || f.size() != 2) throw ParseError("monomial factor must be [name, degree]");
      m = m * Monomial::generator(
                  parse_cartan_gen(alg, f[0].get<std::string>() + "@" + std::to_string(f[1].get<int>())));
    }
    terms.push_back({m, parse_rational(t["coeff"].get<std::string>())});
  }
  return CartanPoly::from_terms(std::move(terms));
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const TruncatedAlgebra& alg, const std::string& text) : alg_(alg), text_(text) {}

  CartanPoly parse() {
    CartanPoly p = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse expression '" + text_ + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected an integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  CartanPoly sum() {
    CartanPoly acc = product();
    while (true) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }
  CartanPoly product() {
    CartanPoly acc = power();
    while (true) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        const CartanPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1) / d.constant_term();
      } else {
        return acc;
      }
    }
  }
  CartanPoly power() {
    if (accept('-')) return -power();
    CartanPoly base = primary();
    if (accept('^')) {
      const long e = integer();
      if (e < 0) fail("negative exponent");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }
  CartanPoly primary() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      CartanPoly p = sum();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return CartanPoly(Rational(integer()));
    std::size_t end = pos_;
    while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
    if (end == pos_) fail("unexpected character");
    const std::string word = text_.substr(pos_, end - pos_);
    pos_ = end;
    skip();
    if ((word == "H" || word == "T") && pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      const std::size_t comma = text_.find(',', pos_);
      if (comma == std::string::npos) fail("expected ','");
      const std::string arg = text_.substr(pos_, comma - pos_);
      pos_ = comma + 1;
      const long degree = integer();
      expect(')');
      RootVector root;
      if (word == "H") {
        root = parse_weight(alg_.base(), arg);
      } else {
        if (alg_.base().rank() != 1) fail("T(m, d) needs a rank-one algebra");
        root = RootVector({std::stoi(arg)});
      }
      return alg_.base().pairing(root).h_alpha_at(static_cast<int>(degree));
    }
    if (!accept('@')) fail("generator '" + word + "' needs @degree");
    const long degree = integer();
    return CartanPoly::generator(parse_cartan_gen(alg_, word + "@" + std::to_string(degree)));
  }

  const TruncatedAlgebra& alg_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

CartanPoly parse_expression(const TruncatedAlgebra& alg, const std::string& text) {
  return ExpressionParser(alg, text).parse();
}

// ---------------------------------------------------------------- partitions

Partition parse_partition(const TruncatedAlgebra& alg, const std::string& text) {
  std::string body;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  }
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
  std::vector<TruncIndex> out;
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] != '(') throw ParseError("cannot parse partition '" + text + "': expected '('");
    const std::size_t close = body.find(')', i);
    const std::size_t comma = body.rfind(',', close);
    if (close == std::string::npos || comma == std::string::npos || comma < i) {
      throw ParseError("cannot parse partition '" + text + "': expected (root,degree)");
    }
    std::string root = body.substr(i + 1, comma - i - 1);
    int slot = 0;
    if (const auto hash = root.find('#'); hash != std::string::npos) {
      slot = std::stoi(root.substr(hash + 1));
      root = root.substr(0, hash);
    }
    const RootVector r = parse_weight(alg.base(), root);
    if (!alg.base().is_positive_root(r)) throw ParseError("'" + root + "' is not a positive root");
    int degree = 0;
    try {
      degree = std::stoi(body.substr(comma + 1, close - comma - 1));
    } catch (const std::logic_error&) {
      throw ParseError("cannot parse partition '" + text + "': bad degree");
    }
    if (slot < 0 || slot >= alg.base().root_multiplicity(r)) throw ParseError("root-space slot out of range in '" + text + "'");
    out.push_back(alg.index(r, degree, slot));
    i = close + 1;
    if (i < body.size() && body[i] == ',') ++i;
  }
  return Partition(std::move(out));
}

Json partition_to_json(const TruncatedAlgebra& alg, const Partition& p) {
  Json entries = Json::array();
  for (const auto& e : p.entries()) {
    Json j{{"root", e.root.coords}, {"degree", e.degree}};
    if (e.slot != 0) j["slot"] = e.slot;
    entries.push_back(j);
  }
  return Json{{"label", partition_label(alg, p)}, {"entries", entries}};
}

Partition partition_from_json(const TruncatedAlgebra& alg, const Json& doc) {
  if (!doc.is_object() || !doc.contains("entries")) throw ParseError("partition JSON needs entries");
  std::vector<TruncIndex> out;
  for (const auto& e : doc["entries"]) {
    RootVector root(e.at("root").get<std::vector<int>>());
    if (!alg.base().is_positive_root(root)) throw ParseError("partition entry is not a positive root");
    out.push_back(alg.index(root, e.at("degree").get<int>(), e.value("slot", 0)));
  }
  return Partition(std::move(out));
}

// ------------------------------------------------------------------ matrices

Json matrix_to_json(const TruncatedAlgebra& alg, const FormMatrix& m) {
  Json basis = Json::array();
  for (const auto& p : m.basis) basis.push_back(partition_to_json(alg, p));
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(poly_to_json(alg, e));
    rows.push_back(r);
  }
  return Json{{"chi", m.chi.coords}, {"variant", to_string(m.variant)}, {"basis", basis}, {"entries", rows}};
}

FormMatrix matrix_from_json(const TruncatedAlgebra& alg, const Json& doc) {
  FormMatrix m;
  try {
    m.chi = RootVector(doc.at("chi").get<std::vector<int>>());
    const std::string variant = doc.value("variant", "F");
    if (variant != "F" && variant != "B") throw ParseError("variant must be F or B");
    m.variant = variant == "F" ? FormVariant::F : FormVariant::B;
    for (const auto& p : doc.at("basis")) m.basis.push_back(partition_from_json(alg, p));
    for (const auto& row : doc.at("entries")) {
      std::vector<CartanPoly> r;
      for (const auto& e : row) r.push_back(poly_from_json(alg, e));
      if (r.size() != m.basis.size()) throw ParseError("matrix row length does not match the basis");
      m.entries.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
  if (m.entries.size() != m.basis.size()) throw ParseError("matrix row count does not match the basis");
  return m;
}

std::string poly_to_latex(const TruncatedAlgebra& alg, const CartanPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (sgn(c) < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    const bool unit = c == 1 && !t.monomial.is_one();
    if (!unit) {
      if (c.get_den() == 1) {
        os << c.get_num().get_str();
      } else {
        os << "\\frac{" << c.get_num().get_str() << "}{" << c.get_den().get_str() << "}";
      }
    }
    for (const auto& f : t.monomial.factors()) {
      std::string name = alg.base().cartan_names().at(f.gen.h_index);
      std::string escaped;
      for (char ch : name) escaped += ch == '_' ? std::string("_{") : std::string(1, ch);
      if (name.find('_') != std::string::npos) escaped += "}";
      std::string gen = escaped + "\\otimes t^{" + std::to_string(f.gen.t_degree) + "}";
      if (f.exponent == 1) {
        os << " (" << gen << ")";
      } else {
        os << " (" << gen << ")^{" << f.exponent << "}";
      }
    }
  }
  return os.str();
}

std::string matrix_to_latex(const TruncatedAlgebra& alg, const FormMatrix& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    for (std::size_t j = 0; j < m.entries[i].size(); ++j) {
      if (j > 0) os << " & ";
      os << poly_to_latex(alg, m.entries[i][j]);
    }
    os << (i + 1 < m.entries.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}\n";
  return os.str();
}

std::string matrix_to_text(const TruncatedAlgebra& alg, const FormMatrix& m) {
  std::ostringstream os;
  const auto namer = alg.base().cartan_namer();
  os << to_string(m.variant) << " at chi = " << alg.base().root_label(m.chi) << "\n";
  for (std::size_t i = 0; i < m.basis.size(); ++i) os << "  [" << i << "] " << partition_label(alg, m.basis[i]) << "\n";
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    for (std::size_t j = 0; j < m.entries[i].size(); ++j) {
      os << "(" << i << "," << j << ") " << to_string(m.entries[i][j], namer) << "\n";
    }
  }
  return os.str();
}

// ------------------------------------------------------------------ verdicts

Json verdict_to_json(const LieAlgebra& alg, const ReducibilityVerdict& v) {
  Json out{{"reducible", v.reducible}};
  out["witness"] = v.witness ? Json{{"root", v.witness->coords}, {"label", alg.root_label(*v.witness)}} : Json();
  out["window"] = v.window ? Json(*v.window) : Json();
  return out;
}

ReducibilityVerdict verdict_from_json(const Json& doc) {
  ReducibilityVerdict v;
  try {
    v.reducible = doc.at("reducible").get<bool>();
    if (doc.contains("witness") && !doc["witness"].is_null()) {
      v.witness = RootVector(doc["witness"].at("root").get<std::vector<int>>());
    }
    if (doc.contains("window") && !doc["window"].is_null()) v.window = doc["window"].get<long>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed verdict JSON: ") + e.what());
  }
  return v;
}

Json hyperplanes_to_json(const HyperplaneSet& set) {
  Json planes = Json::array();
  for (const auto& h : set.planes) {
    Json normal = Json::array();
    for (const auto& c : h.normal) normal.push_back(to_string(c));
    planes.push_back(Json{{"label", h.label}, {"normal", normal}, {"offset", to_string(h.offset)}});
  }
  return Json{{"coordinates", set.coordinates}, {"planes", planes}};
}

}  // namespace tcla

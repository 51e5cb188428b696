#include <json.hpp>

#include <map>

#include "tcla/error.hpp"
#include "tcla/lie_algebra.hpp"

namespace tcla {

namespace {

using json = nlohmann::json;

Rational json_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational as string or integer, got " + j.dump());
}

RootVector json_root(const json& j) {
  if (!j.is_array()) throw ParseError("expected a coordinate array, got " + j.dump());
  return RootVector(j.get<std::vector<int>>());
}

struct TableRoot {
  RootVector root;
  int dim = 1;
};

class FiniteTable final : public LieAlgebra {
 public:
  explicit FiniteTable(const json& doc) {
    name_ = doc.value("name", std::string("table"));
    names_ = doc.at("cartan").get<std::vector<std::string>>();
    for (const auto& r : doc.at("positive_roots")) {
      TableRoot tr{json_root(r.at("coords")), r.value("dim", 1)};
      if (tr.dim < 1) throw ParseError("root dimension must be positive");
      if (!roots_.empty() && tr.root.rank() != roots_.front().root.rank()) throw ParseError("roots of mixed rank");
      if (!tr.root.is_nonnegative() || tr.root.is_zero()) throw ParseError("positive root outside Q+");
      roots_.push_back(std::move(tr));
    }
    if (roots_.empty()) throw ParseError("finite table without positive roots");
    rank_ = roots_.front().root.rank();
    for (int i = 1; i <= rank_; ++i) symbols_.push_back("a" + std::to_string(i));

    for (const auto& entry : doc.at("brackets")) {
      if (!entry.is_array() || entry.size() != 3) throw ParseError("bracket entry must be [a, b, terms]");
      const BasisElement a = element(entry[0].get<std::string>());
      const BasisElement b = element(entry[1].get<std::string>());
      BaseCombination value;
      for (const auto& t : entry[2]) value.add(element(t.at(1).get<std::string>()), json_rational(t.at(0)));
      table_[{a, b}] = value;
    }
    // Antisymmetry fills the reversed pairs that were not listed.
    for (const auto& [key, value] : std::map(table_)) {
      std::pair<BasisElement, BasisElement> rev{key.second, key.first};
      if (table_.count(rev) == 0) {
        BaseCombination neg;
        neg.add(value, -1);
        table_[rev] = neg;
      }
    }

    for (const auto& p : doc.at("pairing")) {
      PairingData d;
      d.alpha = json_root(p.at("root"));
      for (const auto& t : p.at("h_alpha")) d.h_alpha.add(element(t.at(1).get<std::string>()), json_rational(t.at(0)));
      for (const auto& row : p.at("gram")) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(json_rational(v));
        d.gram.push_back(std::move(r));
      }
      pairing_[d.alpha] = std::move(d);
    }
    for (const auto& r : roots_) {
      if (pairing_.count(r.root) == 0) throw ParseError("no pairing data for root " + root_label(r.root));
    }
  }

  AlgebraKind kind() const override { return AlgebraKind::FiniteTable; }
  std::string name() const override { return name_; }
  int rank() const override { return rank_; }
  std::vector<std::string> lattice_symbols() const override { return symbols_; }
  const std::vector<std::string>& cartan_names() const override { return names_; }
  bool is_finite() const override { return true; }

  bool is_positive_root(const RootVector& root) const override { return find(root) >= 0; }
  int root_multiplicity(const RootVector& root) const override { return roots_[require(root)].dim; }
  std::int64_t enumeration_key(const RootVector& root) const override {
    return static_cast<std::int64_t>(require(root));
  }
  std::vector<RootVector> positive_roots_below(const RootVector& chi) const override {
    require_positive_cone(chi);
    std::vector<RootVector> out;
    for (const auto& r : roots_) {
      if ((chi - r.root).is_nonnegative()) out.push_back(r.root);
    }
    return out;
  }
  std::vector<RootVector> positive_roots() const override { return validation_roots(); }
  std::vector<RootVector> validation_roots() const override {
    std::vector<RootVector> out;
    for (const auto& r : roots_) out.push_back(r.root);
    return out;
  }

  BaseCombination bracket(const BasisElement& a, const BasisElement& b) const override {
    require_valid(a);
    require_valid(b);
    auto it = table_.find({a, b});
    return it == table_.end() ? BaseCombination{} : it->second;
  }

  PairingData pairing(const RootVector& alpha) const override {
    require(alpha);
    return pairing_.at(alpha);
  }

 private:
  int find(const RootVector& root) const {
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      if (roots_[i].root == root) return static_cast<int>(i);
    }
    return -1;
  }

  std::size_t require(const RootVector& root) const {
    const int i = find(root);
    if (i < 0) throw Error("not a positive root of " + name_ + ": " + root_label(root));
    return static_cast<std::size_t>(i);
  }

  // "x[1,0]", "x[1,0]#1", "y[0,1]" or a Cartan name.
  BasisElement element(const std::string& text) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == text) return BasisElement::cartan_element(static_cast<int>(i));
    }
    if (text.size() < 4 || (text[0] != 'x' && text[0] != 'y') || text[1] != '[') {
      throw ParseError("unknown basis element '" + text + "'");
    }
    const auto close = text.find(']');
    if (close == std::string::npos) throw ParseError("unterminated root in '" + text + "'");
    RootVector root = json_root(json::parse("[" + text.substr(2, close - 2) + "]"));
    int slot = 0;
    if (close + 1 < text.size()) {
      if (text[close + 1] != '#') throw ParseError("bad slot suffix in '" + text + "'");
      slot = std::stoi(text.substr(close + 2));
    }
    const int i = find(root);
    if (i < 0 || slot < 0 || slot >= roots_[static_cast<std::size_t>(i)].dim) {
      throw ParseError("'" + text + "' is not a root vector of the table");
    }
    return text[0] == 'x' ? BasisElement::positive(std::move(root), slot)
                          : BasisElement::negative(std::move(root), slot);
  }

  std::string name_;
  int rank_ = 0;
  std::vector<std::string> names_;
  std::vector<std::string> symbols_;
  std::vector<TableRoot> roots_;
  std::map<std::pair<BasisElement, BasisElement>, BaseCombination> table_;
  std::map<RootVector, PairingData> pairing_;
};

}  // namespace

AlgebraPtr load_finite_table(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("algebra table is not valid JSON: ") + e.what());
  }
  AlgebraPtr alg;
  try {
    alg = std::make_shared<FiniteTable>(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra table: ") + e.what());
  }
  validate_algebra(*alg);
  return alg;
}

}  // namespace tcla

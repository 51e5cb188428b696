#include "tcla/golden.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "tcla/error.hpp"

namespace tcla {

namespace {

// Transcribed once from the worked examples. H(root, d) is h_root at t^d and
// T(m, d) is (2m L0 + psi(m) c) at t^d.
const char* const kGoldenJson = R"json({
  "sl3-n1": {
    "algebra": "sl3", "nilpotency": 1, "chi": "a1+a2",
    "basis": [[["a1", 0], ["a2", 0]], [["a1+a2", 0]], [["a1", 0], ["a2", 1]],
              [["a1", 1], ["a2", 0]], [["a1+a2", 1]], [["a1", 1], ["a2", 1]]],
    "entries": [
      ["H(a1+a2,0) + H(a1,0)", "H(a1,0)", "H(a1,0)*H(a2,1) + H(a1,1)", "H(a1,1)*(H(a2,0) + 2)", "H(a1,1)", "H(a1,1)*H(a2,1)"],
      ["H(a1,0)", "H(a1+a2,0)", "H(a1,1)", "-H(a2,1)", "H(a1+a2,1)", "0"],
      ["H(a1,0)*H(a2,1) + H(a1,1)", "H(a1,1)", "0", "H(a1,1)*H(a2,1)", "0", "0"],
      ["H(a1,1)*(H(a2,0) + 2)", "-H(a2,1)", "H(a1,1)*H(a2,1)", "0", "0", "0"],
      ["H(a1,1)", "H(a1+a2,1)", "0", "0", "0", "0"],
      ["H(a1,1)*H(a2,1)", "0", "0", "0", "0", "0"]
    ],
    "determinant": "H(a1,1)^4*H(a2,1)^4*H(a1+a2,1)^2"
  },
  "virasoro-n1": {
    "algebra": "virasoro", "nilpotency": 1, "chi": "2d",
    "basis": [[["d", 0], ["d", 0]], [["2d", 0]], [["d", 0], ["d", 1]], [["2d", 1]], [["d", 1], ["d", 1]]],
    "entries": [
      ["2*T(1,0)*(T(1,0) + 1)", "3*T(1,0)", "2*T(1,1)*(T(1,0) + 1)", "3*T(1,1)", "2*T(1,1)^2"],
      ["3*T(1,0)", "T(2,0)", "3*T(1,1)", "T(2,1)", "0"],
      ["2*T(1,1)*(T(1,0) + 1)", "3*T(1,1)", "T(1,1)^2", "0", "0"],
      ["3*T(1,1)", "T(2,1)", "0", "0", "0"],
      ["2*T(1,1)^2", "0", "0", "0", "0"]
    ],
    "determinant": "4*T(1,1)^6*T(2,1)^2"
  },
  "virasoro-n2": {
    "algebra": "virasoro", "nilpotency": 2, "chi": "2d",
    "basis": [[["d", 0], ["d", 0]], [["2d", 0]], [["d", 0], ["d", 1]],
              [["d", 0], ["d", 2]], [["2d", 1]], [["d", 1], ["d", 1]],
              [["d", 1], ["d", 2]], [["2d", 2]], [["d", 2], ["d", 2]]],
    "entries": [
      ["2*T(1,0)*(T(1,0) + 1)", "3*T(1,0)", "2*T(1,1)*(T(1,0) + 1)", "2*T(1,2)*(T(1,0) + 1)", "3*T(1,1)", "2*(T(1,1)^2 + T(1,2))", "2*T(1,1)*T(1,2)", "3*T(1,2)", "2*T(1,2)^2"],
      ["3*T(1,0)", "T(2,0)", "3*T(1,1)", "3*T(1,2)", "T(2,1)", "3*T(1,2)", "0", "T(2,2)", "0"],
      ["2*T(1,1)*(T(1,0) + 1)", "3*T(1,1)", "T(1,2)*(T(1,0) + 2) + T(1,1)^2", "T(1,1)*T(1,2)", "3*T(1,2)", "2*T(1,1)*T(1,2)", "T(1,2)^2", "0", "0"],
      ["2*T(1,2)*(T(1,0) + 1)", "3*T(1,2)", "T(1,1)*T(1,2)", "T(1,2)^2", "0", "0", "0", "0", "0"],
      ["3*T(1,1)", "T(2,1)", "3*T(1,2)", "0", "T(2,2)", "0", "0", "0", "0"],
      ["2*(T(1,1)^2 + T(1,2))", "3*T(1,2)", "2*T(1,1)*T(1,2)", "0", "0", "2*T(1,2)^2", "0", "0", "0"],
      ["2*T(1,1)*T(1,2)", "0", "T(1,2)^2", "0", "0", "0", "0", "0", "0"],
      ["3*T(1,2)", "T(2,2)", "0", "0", "0", "0", "0", "0", "0"],
      ["2*T(1,2)^2", "0", "0", "0", "0", "0", "0", "0", "0"]
    ]
  }
})json";

const Json& golden_document() {
  static const Json doc = Json::parse(kGoldenJson);
  return doc;
}

}  // namespace

std::vector<std::string> golden_example_ids() { return {"sl3-n1", "virasoro-n1", "virasoro-n2"}; }

const Json& golden_example(const std::string& id) {
  const auto& doc = golden_document();
  if (!doc.contains(id)) throw Error("unknown example '" + id + "'; expected sl3-n1, virasoro-n1 or virasoro-n2");
  return doc.at(id);
}

ExampleReport reproduce_example(const std::string& id, int workers) {
  const auto start = std::chrono::steady_clock::now();
  const Json& ex = golden_example(id);
  ExampleReport r;
  r.id = id;
  r.algebra = builtin_algebra(ex.at("algebra").get<std::string>());
  r.nilpotency = ex.at("nilpotency").get<int>();
  const TruncatedAlgebra alg(r.algebra, r.nilpotency);
  const RootVector chi = parse_weight(*r.algebra, ex.at("chi").get<std::string>());

  std::vector<Partition> basis;
  for (const auto& p : ex.at("basis")) {
    std::vector<TruncIndex> entries;
    for (const auto& e : p) entries.push_back(alg.index(parse_weight(*r.algebra, e[0].get<std::string>()), e[1].get<int>()));
    basis.emplace_back(std::move(entries));
  }

  r.computed = assemble_matrix(alg, chi, FormVariant::F, AssemblyMode::Both, workers);
  r.basis_matches = r.computed.basis == basis;
  const auto& rows = ex.at("entries");
  if (r.basis_matches) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        CartanPoly expected = parse_expression(alg, rows[i][j].get<std::string>());
        if (expected != r.computed.entries[i][j]) r.mismatches.push_back({i, j, expected, r.computed.entries[i][j]});
      }
    }
  }

  Determinants det;
  try {
    det = determinant(alg, chi, DetMethod::Both, workers);
    r.methods_agree = true;
  } catch (const Error&) {
    det = determinant(alg, chi, DetMethod::Bareiss, workers);
  }
  r.det_f = det.det_f;
  if (ex.contains("determinant")) {
    r.expected_det = parse_expression(alg, ex["determinant"].get<std::string>());
  } else {
    // No displayed determinant: use the transcribed matrix itself.
    PolyMatrix m;
    for (const auto& row : rows) {
      std::vector<CartanPoly> out;
      for (const auto& e : row) out.push_back(parse_expression(alg, e.get<std::string>()));
      m.push_back(std::move(out));
    }
    r.expected_det = bareiss_determinant(std::move(m));
  }
  r.det_matches = r.det_f == r.expected_det || r.det_f == -r.expected_det;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_report(const ExampleReport& r, bool all_entries) {
  const TruncatedAlgebra alg(r.algebra, r.nilpotency);
  const auto namer = r.algebra->cartan_namer();
  std::ostringstream os;
  os << "example " << r.id << "\n";
  os << (r.basis_matches ? "pass" : "FAIL") << " basis order\n";
  std::map<std::pair<std::size_t, std::size_t>, const EntryDiff*> bad;
  for (const auto& d : r.mismatches) bad[{d.row, d.col}] = &d;
  const std::size_t n = r.computed.entries.size();
  for (std::size_t i = 0; i < n && r.basis_matches; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = bad.find({i, j});
      if (it != bad.end()) {
        os << "FAIL entry (" << i + 1 << "," << j + 1 << "): transcribed " << to_string(it->second->expected, namer)
           << ", computed " << to_string(it->second->actual, namer) << "\n";
      } else if (all_entries) {
        os << "pass entry (" << i + 1 << "," << j + 1 << ")\n";
      }
    }
  }
  os << (r.det_matches ? "pass" : "FAIL") << " determinant up to sign: " << to_string(r.det_f, namer) << "\n";
  os << (r.methods_agree ? "pass" : "FAIL") << " block and Bareiss determinants agree\n";
  return os.str();
}

}  // namespace tcla

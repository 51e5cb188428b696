#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tcla/error.hpp"
#include "tcla/golden.hpp"
#include "tcla/io.hpp"
#include "tcla/properties.hpp"

using namespace tcla;

namespace {

struct RunConfig {
  std::string algebra = "sl2";
  int nilpotency = 1;
  std::string psi;
  int jobs = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraPtr resolve_algebra(const RunConfig& cfg) {
  if (std::filesystem::is_regular_file(cfg.algebra)) return load_finite_table(read_file(cfg.algebra));
  AlgebraParams params;
  if (!cfg.psi.empty()) {
    std::vector<Rational> coeffs;
    std::stringstream ss(cfg.psi);
    for (std::string item; std::getline(ss, item, ',');) coeffs.push_back(parse_rational(item));
    params.psi = PsiRule::from_polynomial(coeffs);
  }
  return builtin_algebra(cfg.algebra, params);
}

TruncatedAlgebra resolve(const RunConfig& cfg) {
  if (cfg.nilpotency < 1) throw Error("--nilpotency must be at least 1");
  return TruncatedAlgebra(resolve_algebra(cfg), cfg.nilpotency);
}

int workers(const RunConfig& cfg) { return cfg.jobs > 0 ? cfg.jobs : default_workers(); }

Json integer_json(const Integer& v) { return v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str()); }

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--algebra,-a", cfg.algebra, "built-in name (sl2, sl3, sl<n>, witt, virasoro, heisenberg) or a finite-table JSON file");
  cmd->add_option("--nilpotency,-N", cfg.nilpotency, "truncation degree N >= 1");
  cmd->add_option("--psi", cfg.psi, "Virasoro cocycle as polynomial coefficients c0,c1,... in m");
  cmd->add_option("--jobs,-j", cfg.jobs, "worker threads (default: TCLA_JOBS or the hardware concurrency)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shapovalov forms and Verma module reducibility for truncated current Lie algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string weight, format, variant = "F", mode = "fast", method = "both", lambda_path, row, col, example = "all";
  long window = 5;
  int depth = 6;
  std::string c_value = "1";
  bool all_entries = false;
  SelftestOptions selftest;

  auto* partitions = app.add_subcommand("partitions", "partitions of a weight in block order");
  add_common(partitions, cfg);
  partitions->add_option("--weight,-w", weight, "weight such as a1+a2 or 2d")->required();
  partitions->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->default_val("text");

  auto* matrix = app.add_subcommand("matrix", "Shapovalov form matrix");
  add_common(matrix, cfg);
  matrix->add_option("--weight,-w", weight)->required();
  matrix->add_option("--variant", variant)->check(CLI::IsMember({"F", "B"}));
  matrix->add_option("--mode", mode)->check(CLI::IsMember({"fast", "oracle", "both"}));
  matrix->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}))->default_val("json");

  auto* det = app.add_subcommand("det", "Shapovalov determinant");
  add_common(det, cfg);
  det->add_option("--weight,-w", weight)->required();
  det->add_option("--method", method)->check(CLI::IsMember({"block", "bareiss", "both"}));
  det->add_option("--format", format)->check(CLI::IsMember({"json", "text"}))->default_val("text");

  auto* oracle = app.add_subcommand("oracle-entry", "one form value by straightening");
  add_common(oracle, cfg);
  oracle->add_option("--row", row, "partition such as {(a1,0),(a2,1)}")->required();
  oracle->add_option("--col", col, "partition of the same weight")->required();
  oracle->add_option("--variant", variant)->check(CLI::IsMember({"F", "B"}));

  auto* reducible = app.add_subcommand("reducible", "reducibility verdict for M(Lambda)");
  add_common(reducible, cfg);
  reducible->add_option("--lambda", lambda_path, "JSON file {\"values\": {\"h_a1@1\": \"3/2\", ...}}")->required();
  reducible->add_option("--window", window, "search bound for non-polynomial cocycles")->default_val(10000);

  auto* hyperplanes = app.add_subcommand("hyperplanes", "reducibility hyperplanes");
  hyperplanes->add_option("--algebra,-a", cfg.algebra,
                          "built-in algebra, finite-table file, Cartan type (A2, B2, G2, ...) or affine-<type>");
  hyperplanes->add_option("--psi", cfg.psi);
  hyperplanes->add_option("--window,-M", window, "line count for virasoro, |m| bound for affine types");
  hyperplanes->add_option("--c", c_value, "value of the central element for affine types");
  hyperplanes->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->default_val("csv");

  auto* character_cmd = app.add_subcommand("character", "graded dimensions of L(Lambda) for dim h = 1");
  add_common(character_cmd, cfg);
  character_cmd->add_option("--lambda", lambda_path)->required();
  character_cmd->add_option("--depth,-D", depth);

  auto* reproduce = app.add_subcommand("reproduce", "recompute the worked examples and diff them");
  reproduce->add_option("--example", example, "sl3-n1, virasoro-n1, virasoro-n2 or all");
  reproduce->add_flag("--all-entries", all_entries, "print matching entries too");
  reproduce->add_option("--jobs,-j", cfg.jobs);

  auto* self = app.add_subcommand("selftest", "randomized property checks on small instances");
  self->add_option("--seed", selftest.seed);
  self->add_option("--algebra,-a", selftest.algebras, "restrict to these built-in algebras");
  self->add_option("--nilpotency,-N", selftest.nilpotencies);
  self->add_option("--max-basis", selftest.max_basis, "largest weight space in the window");
  self->add_option("--samples", selftest.samples, "random cases per property");
  self->add_option("--jobs,-j", selftest.workers);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*partitions) {
      const TruncatedAlgebra alg = resolve(cfg);
      const RootVector chi = parse_weight(alg.base(), weight);
      const auto blocks = blocks_of(alg, chi);
      if (format == "json") {
        Json out{{"chi", chi.coords}, {"blocks", Json::array()}, {"basis", Json::array()}};
        for (const auto& b : blocks) {
          Json block = Json::array();
          for (const auto& p : b.partitions) {
            block.push_back(partition_to_json(alg, p));
            out["basis"].push_back(partition_to_json(alg, p));
          }
          out["blocks"].push_back(block);
        }
        std::cout << out.dump(2) << "\n";
      } else {
        std::size_t index = 0;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          for (const auto& p : blocks[b].partitions) {
            std::cout << ++index << "\tblock " << b + 1 << "\t" << partition_label(alg, p) << "\n";
          }
        }
      }
    } else if (*matrix) {
      const TruncatedAlgebra alg = resolve(cfg);
      const RootVector chi = parse_weight(alg.base(), weight);
      const AssemblyMode m = mode == "fast" ? AssemblyMode::Fast : mode == "oracle" ? AssemblyMode::Oracle : AssemblyMode::Both;
      const FormMatrix fm = assemble_matrix(alg, chi, variant == "F" ? FormVariant::F : FormVariant::B, m, workers(cfg));
      if (format == "json") {
        std::cout << matrix_to_json(alg, fm).dump(2) << "\n";
      } else if (format == "latex") {
        std::cout << matrix_to_latex(alg, fm);
      } else {
        std::cout << matrix_to_text(alg, fm);
      }
    } else if (*det) {
      const TruncatedAlgebra alg = resolve(cfg);
      const RootVector chi = parse_weight(alg.base(), weight);
      const DetMethod dm = method == "block" ? DetMethod::Block : method == "bareiss" ? DetMethod::Bareiss : DetMethod::Both;
      const Determinants d = determinant(alg, chi, dm, workers(cfg));
      const auto namer = alg.base().cartan_namer();
      if (format == "json") {
        std::cout << Json{{"chi", chi.coords}, {"method", method}, {"det_b", poly_to_json(alg, d.det_b)},
                          {"det_f", poly_to_json(alg, d.det_f)}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "det B = " << to_string(d.det_b, namer) << "\n";
        std::cout << "det F = " << to_string(d.det_f, namer) << "\n";
      }
    } else if (*oracle) {
      const TruncatedAlgebra alg = resolve(cfg);
      FormEngine engine(alg);
      const Partition lambda = parse_partition(alg, row);
      Partition mu = parse_partition(alg, col);
      if (variant == "B") mu = star_partition(mu, alg.nilpotency());
      std::cout << to_string(engine.oracle_f(lambda, mu), alg.base().cartan_namer()) << "\n";
    } else if (*reducible) {
      const TruncatedAlgebra alg = resolve(cfg);
      const Functional lam = parse_lambda(alg, Json::parse(read_file(lambda_path)));
      ReducibilityOptions opts;
      opts.psi_window = window;
      std::cout << verdict_to_json(alg.base(), is_reducible(alg, lam, opts)).dump(2) << "\n";
    } else if (*hyperplanes) {
      HyperplaneSet set;
      bool builtin = std::filesystem::is_regular_file(cfg.algebra);
      if (!builtin) {
        try {
          builtin_algebra(cfg.algebra);
          builtin = true;
        } catch (const Error&) {
        }
      }
      if (builtin) {
        set = hyperplane_data(*resolve_algebra(cfg), window);
      } else {
        set = hyperplane_data(cfg.algebra, window, parse_rational(c_value));
      }
      if (format == "json") {
        std::cout << hyperplanes_to_json(set).dump(2) << "\n";
      } else {
        std::cout << hyperplanes_csv(set);
      }
    } else if (*character_cmd) {
      const TruncatedAlgebra alg = resolve(cfg);
      const Functional lam = parse_lambda(alg, Json::parse(read_file(lambda_path)));
      const CharacterTable table = character(alg, lam, depth);
      Json out{{"m", table.m}, {"delegated", table.delegated}, {"dims", Json::array()}};
      for (const auto& d : table.dims) out["dims"].push_back(integer_json(d));
      std::cout << out.dump(2) << "\n";
    } else if (*reproduce) {
      const auto ids = example == "all" ? golden_example_ids() : std::vector<std::string>{example};
      bool det_ok = true;
      for (const auto& id : ids) {
        const ExampleReport r = reproduce_example(id, workers(cfg));
        std::cout << format_report(r, all_entries);
        det_ok = det_ok && r.det_matches && r.methods_agree;
      }
      return det_ok ? 0 : 1;
    } else if (*self) {
      const SelftestReport r = run_selftest(selftest);
      for (const auto& line : r.lines) std::cout << line << "\n";
      if (!r.ok) {
        std::cerr << "first failure: " << r.first_failure << "\n";
        return 1;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

#pragma once

#include <string>
#include <vector>

#include "tcla/io.hpp"

namespace tcla {

/// One entry where the computed matrix differs from the transcribed one.
struct EntryDiff {
  std::size_t row = 0;
  std::size_t col = 0;
  CartanPoly expected;
  CartanPoly actual;
};

struct ExampleReport {
  std::string id;
  AlgebraPtr algebra;
  int nilpotency = 0;
  FormMatrix computed;
  bool basis_matches = false;
  std::vector<EntryDiff> mismatches;
  CartanPoly expected_det;
  CartanPoly det_f;
  /// det F equals the transcribed determinant up to sign.
  bool det_matches = false;
  /// Block and Bareiss determinants agree up to the star sign.
  bool methods_agree = false;
  double seconds = 0;
};

/// "sl3-n1", "virasoro-n1", "virasoro-n2".
std::vector<std::string> golden_example_ids();
/// The embedded transcription: {algebra, nilpotency, chi, basis, entries,
/// determinant}, polynomials as expression strings.
const Json& golden_example(const std::string& id);

/// Recomputes the example and diffs it against the transcription. Never
/// corrects the transcription.
ExampleReport reproduce_example(const std::string& id, int workers = 0);

/// Human-readable report, one line per entry and one for the determinant.
std::string format_report(const ExampleReport& r, bool all_entries);

}  // namespace tcla

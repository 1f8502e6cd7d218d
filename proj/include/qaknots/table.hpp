#ifndef QAKNOTS_TABLE_HPP
#define QAKNOTS_TABLE_HPP

#include "qaknots/braid.hpp"
#include "qaknots/montesinos.hpp"
#include "qaknots/quasialt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qak {

/// One ingested knot-table row. The pd field holds PD text; qa_status,
/// prime, and jones_expected default to unknown/absent.
struct TableRow {
  std::string name;
  std::string pd;
  int crossing_number = 0;
  Flag qa_status = Flag::unknown;
  Flag prime = Flag::unknown;
  std::optional<std::string> jones_expected;
};

/// CSV columns: name, pd, crossing_number, qa_status, prime, jones_expected.
/// Fields containing commas or quotes are double-quoted; an optional header
/// row naming the first column "name" is skipped.
std::vector<TableRow> table_from_csv(const std::string& text);
std::string table_to_csv(const std::vector<TableRow>& rows);

/// JSON array of objects with the CSV column names as keys.
std::vector<TableRow> table_from_json(const std::string& text);

enum class JonesMatch { absent, match, mismatch };

struct ScanRowReport {
  std::string name;
  bool parse_error = false;
  Verdict verdict = Verdict::out_of_scope;
  bool torus_2n = false;
  bool gap_free = false;
  bool strictly_alternating = false;
  bool breadth_ok = false;
  JonesMatch jones_match = JonesMatch::absent;
  std::string note;
};

struct ScanReport {
  std::vector<ScanRowReport> rows;
  int n_consistent = 0;
  int n_candidates = 0;
  int n_out_of_scope = 0;
  int n_errors = 0;
  /// 0 clean, 1 counterexample-candidate present.
  int exit_code = 0;
};

/// Per-row Jones / determinant / gap analysis in input order. Row parse
/// failures are recorded in the report, never thrown.
ScanReport scan_table(const std::vector<TableRow>& rows);

/// Deterministic plain-text rendering: one line per row plus summary counts.
std::string report_to_text(const ScanReport& report);

/// True when v equals the Jones polynomial of the (2,n)-torus link with
/// n = det, up to mirror image. det outside [2, cap] always fails.
bool matches_torus_2n(const LaurentPoly& v, const BigInt& det, int cap = 64);

/// All quasi-alternating 3-braid normal forms whose words have at most
/// max_letters letters, in deterministic order.
std::vector<BaldwinNormalForm> enumerate_baldwin_qa_forms(int max_letters);

/// Deterministic sample of standard-form quasi-alternating Montesinos data
/// whose diagrams stay within max_crossings crossings.
std::vector<MontesinosData> sample_montesinos_qa(int max_crossings = 16);

/// Fallback scan corpus: closures of the Baldwin-QA forms up to 14 letters
/// plus the Montesinos-QA sample, with affirmative qa flags and prime flags
/// screened for the unknot.
std::vector<TableRow> builtin_fallback_table();

}  // namespace qak

#endif

#pragma once

// Regenerates the three reference tables from scratch and diffs them
// against the golden CSV transcriptions compiled into the library.

#include <string>
#include <vector>

namespace monocurve {

/// A table as text cells; header first.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// A golden cell that is known to disagree with the computed value, because
/// the transcribed cell contradicts other cells of its own row.
struct KnownDiscrepancy {
  int table = 0;
  std::string row_key;  // first column of the row
  std::string column;
  std::string golden;
  std::string computed;
  std::string note;
};

const std::vector<KnownDiscrepancy>& known_discrepancies();

struct CellDiff {
  std::string row_key;
  std::string column;
  std::string golden;
  std::string computed;
  const KnownDiscrepancy* known = nullptr;  // set when whitelisted
};

struct TableDiff {
  std::vector<CellDiff> cells;
  std::vector<std::string> structural;  // missing rows, header drift
  bool ok() const;
};

struct TableResult {
  int which = 0;
  TextTable computed;
  TextTable golden;
  TableDiff diff;
};

/// Raw CSV text of golden table 1, 2 or 3.
const std::string& golden_csv(int which);

std::vector<std::string> parse_csv_line(const std::string& line);
/// Skips blank lines and lines starting with '#'.
TextTable parse_csv(const std::string& text);
std::string render_csv(const TextTable& t);
std::string render_pretty(const TextTable& t);

/// Throws std::out_of_range for which outside 1..3.
TextTable compute_table(int which);
TableDiff diff_tables(int which, const TextTable& golden, const TextTable& computed);
TableResult run_table(int which);

}  // namespace monocurve

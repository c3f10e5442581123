#pragma once

#include <string>
#include <vector>

#include "horolib/report.hpp"

namespace horolib {

// One classification row: hard-coded expectation next to the computed answer.
struct TableRow {
  std::string table;     // "reflexive_commutative", "heisenberg", "heisenberg_restricted"
  std::string label;     // "A5", "E7", "sl(H^3)"
  std::string row;       // row of the printed table, empty when no row applies
  std::vector<std::vector<int>> expected;  // 1-based theta sets
  std::vector<std::vector<int>> computed;
  std::string note;
  bool matches() const { return expected == computed; }
};

// Every simple type up to max_rank for the reflexive commutative and Heisenberg
// tables, plus the restricted-root fixtures of the non-complex Heisenberg rows.
std::vector<TableRow> classification_tables(int max_rank = 8);

nlohmann::json to_json(const TableRow& row);
Report tables_report(const std::vector<TableRow>& rows);

}  // namespace horolib

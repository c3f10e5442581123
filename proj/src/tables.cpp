#include "horolib/tables.hpp"

#include "horolib/error.hpp"
#include "horolib/rootsys.hpp"

namespace horolib {

namespace {

struct SimpleType {
  char type;
  int rank;
};

std::vector<SimpleType> simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({'A', r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({'B', r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({'C', r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({'D', r});
  for (int r : {6, 7, 8})
    if (r <= max_rank) out.push_back({'E', r});
  if (max_rank >= 4) out.push_back({'F', 4});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

// Reflexive commutative thetas as printed: middle node of A_{2n-1}, first node of
// B_r and D_r, last node of C_r, end nodes of D_r for r even, node 7 of E7.
std::pair<std::string, std::vector<std::vector<int>>> expected_reflexive(char type, int r) {
  switch (type) {
    case 'A':
      if (r % 2 == 1) return {r >= 5 ? "1" : "", {{(r + 1) / 2}}};
      return {"", {}};
    case 'B':
      return {"2", {{1}}};
    case 'C':
      return {"3", {{r}}};
    case 'D':
      if (r % 2 == 0) return {"2, 4", {{1}, {r - 1}, {r}}};
      return {"2", {{1}}};
    case 'E':
      if (r == 7) return {"5", {{7}}};
      return {"", {}};
    default:
      return {"", {}};
  }
}

std::pair<std::string, std::vector<std::vector<int>>> expected_heisenberg(char type, int r) {
  switch (type) {
    case 'A':
      if (r == 1) return {"", {}};
      return {"1", {{1, r}}};
    case 'B':
      return {r == 2 ? "3" : "2", {{2}}};
    case 'C':
      return {"3", {{1}}};
    case 'D':
      return {"2", {{2}}};
    case 'E':
      if (r == 6) return {"4", {{2}}};
      if (r == 7) return {"5", {{1}}};
      return {"6", {{8}}};
    case 'F':
      return {"7", {{1}}};
    default:
      return {"8", {{2}}};
  }
}

std::string label_of(char type, int rank) { return std::string(1, type) + std::to_string(rank); }

}  // namespace

std::vector<TableRow> classification_tables(int max_rank) {
  std::vector<TableRow> rows;
  for (auto [type, rank] : simple_types(max_rank)) {
    RootSystem rs = root_system(type, rank);
    {
      auto [row, expected] = expected_reflexive(type, rank);
      TableRow t{"reflexive_commutative", label_of(type, rank), row, expected, {}, ""};
      for (const auto& th : classify_reflexive_commutative(rs)) t.computed.push_back(th.one_based());
      if (type == 'A' && rank == 3) t.note = "sl(4) middle node, below the printed bound n >= 3";
      rows.push_back(std::move(t));
    }
    {
      auto [row, expected] = expected_heisenberg(type, rank);
      TableRow t{"heisenberg", label_of(type, rank), row, expected, {}, ""};
      try {
        ThetaSet th = heisenberg_theta(rs, 0);
        t.computed.push_back(th.one_based());
        if (check_heisenberg_sum(rs, th) != 2) t.note = "sum of n_i over theta differs from 2";
      } catch (const PreconditionFailed& e) {
        t.note = e.what();
      }
      rows.push_back(std::move(t));
    }
  }
  // Non-complex Heisenberg rows, through the reduced restricted root system.
  struct Restricted {
    std::string label, row;
    char type;
    int rank;
    std::vector<int> theta;
    std::string note;
  };
  std::vector<Restricted> restricted;
  for (int n = 1; n + 1 <= max_rank && n <= 4; ++n)
    restricted.push_back({"sl(H^" + std::to_string(n + 2) + ")", "9", 'A', n + 1, {1, n + 1},
                          "restricted roots A" + std::to_string(n + 1) + ", dim z = 4"});
  for (int p = 1; p + 1 <= max_rank && p <= 3; ++p)
    restricted.push_back({"sp(H^{" + std::to_string(p + 1) + ",q+1}), q > " + std::to_string(p), "10", 'C', p + 1, {1},
                          "restricted roots BC" + std::to_string(p + 1) + ", computed on the reduced C" +
                              std::to_string(p + 1) + ", dim z = 3"});
  restricted.push_back({"e6 real form with restricted roots A2", "11", 'A', 2, {1, 2}, "root multiplicity 8, dim z = 8"});
  for (const auto& r : restricted) {
    RootSystem rs = root_system(r.type, r.rank);
    TableRow t{"heisenberg_restricted", r.label, r.row, {r.theta}, {heisenberg_theta(rs, 0).one_based()}, r.note};
    rows.push_back(std::move(t));
  }
  return rows;
}

nlohmann::json to_json(const TableRow& row) {
  nlohmann::json j{{"table", row.table},       {"label", row.label},       {"row", row.row},
                   {"expected", row.expected}, {"computed", row.computed}, {"match", row.matches()}};
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

Report tables_report(const std::vector<TableRow>& rows) {
  Report r;
  for (const auto& row : rows) {
    CheckResult c{row.table + "/" + row.label, row.matches(), "", nullptr};
    if (!c.passed) c.counterexample = to_json(row);
    r.add(std::move(c));
  }
  return r;
}

}  // namespace horolib

#pragma once

#include <string>
#include <vector>

namespace mrn {

// One instance m_j(K_m, nK_2): j host parts, forbidden clique order m in
// color 1, forbidden matching size n in color 2.
struct RamseyQuery {
  int parts = 0;         // j >= 2
  int clique_order = 0;  // m >= 3
  int stripes = 0;       // n >= 1

  void validate() const;  // throws std::invalid_argument
};

struct RamseyValue {
  bool finite = false;
  int value = 0;  // smallest sufficient t when finite

  static RamseyValue infinite() { return {false, 0}; }
  static RamseyValue of(int t) { return {true, t}; }
  bool operator==(const RamseyValue&) const = default;
};

enum class Regime {
  infinite_few_parts,    // j <= m-1: no t suffices
  diagonal,              // j == m
  subdiagonal_small_n,   // j == m+1 and n in 1..5
  general,
};

struct RegimeTag {
  Regime regime;
  std::string theorem;  // label printed by the CLI, e.g. "Theorem t3"
};

// Unified closed form: INF when j <= m-1, else ceil(2n / (j + 2 - m)).
RamseyValue ramsey_value(const RamseyQuery& q);
RegimeTag classify_regime(const RamseyQuery& q);

// Cross-check row: the unified value against the specialized statement
// that covers the query.
struct ConsistencyRow {
  RamseyQuery query;
  RamseyValue unified;
  RamseyValue specialized;
  std::string theorem;
};

// Every specialized statement evaluated over j <= j_max, n <= n_max
// (clique orders 3..5 on the full grid plus the diagonal, subdiagonal and
// general families up to clique order 8). All rows must agree.
std::vector<ConsistencyRow> consistency_table(int j_max = 12, int n_max = 20);

}  // namespace mrn

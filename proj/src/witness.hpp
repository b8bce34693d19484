#pragma once

#include <optional>
#include <vector>

#include "coloring.hpp"
#include "formulas.hpp"
#include "matching.hpp"

namespace mrn {

// Result of checking one coloring against targets (m, n). The coloring is
// good when color 1 holds no K_m and color 2 holds no n pairwise disjoint
// edges; whichever target is hit is certified.
struct GoodnessReport {
  bool good = false;
  int omega1 = 0;  // clique number of the color-1 subgraph
  int nu2 = 0;     // matching number of the color-2 subgraph
  std::optional<std::vector<int>> clique_cert;            // a K_m in color 1
  std::optional<std::vector<MatchedEdge>> matching_cert;  // n stripes in color 2
};

// Exact clique and matching numbers of the two color classes, with
// certificates for whichever targets are reached.
GoodnessReport verify_good(const TwoColoring& coloring, int clique_order,
                           int stripe_count);

// Good coloring of K_{j x (t* - 1)} where t* is the closed-form value:
// cross edges among the last j + 2 - m parts get color 2, everything else
// color 1. Throws std::invalid_argument when no finite value exists.
TwoColoring build_extremal(const RamseyQuery& q);

// All-color-1 coloring of K_{j x part_size}, good for every stripe count
// when j <= m - 1. Throws std::invalid_argument outside that regime.
TwoColoring build_infinite_regime(const RamseyQuery& q, int part_size);

struct SweepResult {
  long long checked = 0;
  std::vector<RamseyQuery> failures;
};

// build_extremal + verify_good over a parameter box, holding every built
// coloring to the predicted clique and matching numbers.
SweepResult witness_sweep(int clique_lo, int clique_hi, int parts_hi,
                          int stripes_lo, int stripes_hi);

}  // namespace mrn

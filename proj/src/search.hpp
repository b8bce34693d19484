#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "coloring.hpp"

namespace mrn {

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SearchStatus {
  colorable,      // a good coloring exists; a verified witness is attached
  not_colorable,  // exhaustive: every coloring is bad
  out_of_budget,
};

struct SearchBudget {
  long long max_nodes = -1;   // -1: unlimited
  double max_seconds = -1.0;  // -1: unlimited
  int threads = 1;
};

struct SearchStats {
  long long nodes = 0;   // colored-edge attempts (masks for the brute force)
  long long covers = 0;  // cover profiles examined
  double seconds = 0.0;
};

struct SearchOutcome {
  SearchStatus status;
  std::optional<TwoColoring> witness;  // set iff colorable
  SearchStats stats;
};

// Occupancy profiles c_1 >= c_2 >= ... >= c_j with 0 <= c_i <= t summing
// to min(2 (n - 1), j t): the shapes a maximum-size vertex cover of the
// color-2 subgraph of a good coloring can take, up to host automorphism.
// Descending lexicographic order.
std::vector<std::vector<int>> cover_profiles(int parts, int part_size,
                                             int stripe_count);

// Exhaustive decision: does K_{j x t} admit a good coloring for (m, n)?
// The endpoints of the color-2 edges of a good coloring span at most
// 2 (n - 1) vertices, so it suffices to fix each cover profile in turn,
// force color 1 on all edges avoiding the cover, and branch over the rest
// (color 1 unless it completes a K_m, color 2 unless the matching reaches
// n). Branches that are lex-greater than an image under some host symmetry
// fixing the cover are skipped; every symmetry class keeps its lex-least
// member, so the decision is unchanged. Deterministic for any thread count:
// the witness is the lex-least good coloring of the least feasible profile
// index. Stats are scheduling-dependent when threads > 1.
SearchOutcome decide_colorable(int parts, int part_size, int clique_order,
                               int stripe_count,
                               const SearchBudget& budget = {});

// Same decision by brute force over all 2^E edge colorings, sharing no
// search machinery with decide_colorable. Shapes with more than
// `max_edges` edges throw UnsupportedError.
SearchOutcome decide_colorable_naive(int parts, int part_size,
                                     int clique_order, int stripe_count,
                                     long long max_edges = 24);

enum class ValueKind {
  finite,             // some scanned t admits no good coloring
  infinite_evidence,  // every scanned t colorable and j <= m-1
  unresolved,         // scan exhausted or budget hit
};

struct SearchValueResult {
  ValueKind kind;
  int value = 0;          // least t with no good coloring, when finite
  int scanned_up_to = 0;  // largest t decided
  SearchStats stats;      // summed over all decisions
};

// Scan t = 1, 2, ..., t_max for the least part size admitting no good
// coloring. The budget applies to each decision separately.
SearchValueResult compute_value_by_search(int parts, int clique_order,
                                          int stripe_count, int t_max,
                                          const SearchBudget& budget = {});

}  // namespace mrn

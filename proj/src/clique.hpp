#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "shape.hpp"

namespace mrn {

// Partition of the vertex set into independent sets; a candidate set
// touching p parts cannot hold a clique larger than p.
struct PartLabels {
  std::vector<int> part_of;
  int part_count = 0;

  static PartLabels from_shape(const Shape& shape);
  static PartLabels from_sizes(const std::vector<int>& part_sizes);
};

// Branch-and-bound clique search. Branches on the lowest-id candidate
// (include, then exclude), pruning when neither the part count nor a
// greedy coloring of the candidates leaves room to beat the incumbent.
// Results and certificate choice are deterministic. Reusable: scratch
// buffers are allocated once and shared across queries against the same
// graph.
class CliqueDetector {
 public:
  CliqueDetector(const Graph& g, const PartLabels& parts);

  // True iff the subgraph induced by `candidates` (bitmask over vertices,
  // nullptr = all) holds a clique on `target` vertices. target <= 0 is
  // vacuously true. Fills `witness` with one such clique when non-null.
  bool exists(int target, const std::uint64_t* candidates,
              std::vector<int>* witness = nullptr);

  // Exact clique number (0 on the vertexless graph); optional witness.
  int maximum(std::vector<int>* witness = nullptr);

 private:
  bool expand(std::uint64_t* cand, int depth);
  int parts_touched(const std::uint64_t* cand) const;
  int greedy_color_bound(const std::uint64_t* cand);
  bool leaf();

  const Graph& g_;
  int words_;
  std::vector<std::uint64_t> part_masks_;
  std::vector<std::uint64_t> color_buf_;  // greedy color classes, one row each
  std::vector<std::vector<std::uint64_t>> cand_stack_;
  std::vector<int> current_;
  std::vector<int> best_set_;
  int best_ = 0;
  int target_ = -1;  // -1: exhaustive maximum
  bool stop_ = false;
};

// Certificate for K_m in color 1, or of clique number >= m generally.
std::optional<std::vector<int>> contains_clique(const Graph& g,
                                                const PartLabels& parts, int m);
int clique_number(const Graph& g, const PartLabels& parts);
bool verify_clique(const Graph& g, const std::vector<int>& certificate, int m);

}  // namespace mrn

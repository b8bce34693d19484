#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mrn {

// Dense undirected simple graph on vertex ids [0, n). Adjacency rows are
// 64-bit bitsets so neighborhood intersection is a handful of word ops.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertices);

  int vertex_count() const { return vertices_; }
  int words_per_row() const { return words_; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }

  int degree(int v) const;
  long long edge_count() const;
  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int vertices_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// K_{a1,...,ak}: every cross-part pair adjacent, parts laid out contiguously.
Graph complete_multipartite(const std::vector<int>& part_sizes);

}  // namespace mrn

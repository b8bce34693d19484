#pragma once

#include <utility>
#include <vector>

namespace mrn {

// Complete multipartite host K_{j x t}: `parts` partite sets of `part_size`
// vertices each. Vertex ids are part-major: v = part * part_size + slot.
// Cross-part pairs (u, v), u < v, are ranked lexicographically with
// intra-part pairs skipped; ranks index coloring storage.
class Shape {
 public:
  static Shape make(int parts, int part_size);

  int parts() const { return parts_; }
  int part_size() const { return part_size_; }
  int vertex_count() const { return vertices_; }
  long long edge_count() const { return edges_; }

  int part_of(int v) const { return v / part_size_; }
  int slot_of(int v) const { return v % part_size_; }
  int vertex(int part, int slot) const { return part * part_size_ + slot; }
  bool same_part(int u, int v) const { return part_of(u) == part_of(v); }

  long long edge_rank(int u, int v) const;
  std::pair<int, int> edge_unrank(long long rank) const;

 private:
  Shape(int parts, int part_size);

  int parts_ = 0;
  int part_size_ = 0;
  int vertices_ = 0;
  long long edges_ = 0;
  // rank_offset_[v] = rank of the first edge whose lower endpoint is v;
  // one extra entry holding the total edge count.
  std::vector<long long> rank_offset_;
};

}  // namespace mrn

#include "shape.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mrn {

Shape Shape::make(int parts, int part_size) {
  if (parts < 2) throw std::invalid_argument("j must be >= 2");
  if (part_size < 0) throw std::invalid_argument("t must be >= 0");
  return Shape(parts, part_size);
}

Shape::Shape(int parts, int part_size)
    : parts_(parts), part_size_(part_size) {
  vertices_ = parts_ * part_size_;
  edges_ = static_cast<long long>(part_size_) * part_size_ * parts_ *
           (parts_ - 1) / 2;
  rank_offset_.resize(vertices_ + 1);
  long long r = 0;
  for (int v = 0; v < vertices_; ++v) {
    rank_offset_[v] = r;
    // cross-part neighbors above v: everything past v minus the rest of
    // v's own part
    r += (vertices_ - v - 1) - (part_size_ - slot_of(v) - 1);
  }
  rank_offset_[vertices_] = r;
}

long long Shape::edge_rank(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertices_ || v >= vertices_)
    throw std::invalid_argument("vertex id out of range");
  if (u == v) throw std::invalid_argument("edge endpoints must differ");
  if (same_part(u, v))
    throw std::invalid_argument("no edge inside a part: vertices " +
                                std::to_string(u) + " and " +
                                std::to_string(v) + " share part " +
                                std::to_string(part_of(u)));
  int a = std::min(u, v), b = std::max(u, v);
  return rank_offset_[a] + (b - a) - (part_size_ - slot_of(a));
}

std::pair<int, int> Shape::edge_unrank(long long rank) const {
  if (rank < 0 || rank >= edges_)
    throw std::invalid_argument("edge rank out of range");
  auto it = std::upper_bound(rank_offset_.begin(), rank_offset_.end(), rank);
  int a = static_cast<int>(it - rank_offset_.begin()) - 1;
  int b = static_cast<int>(rank - rank_offset_[a]) + a +
          (part_size_ - slot_of(a));
  return {a, b};
}

}  // namespace mrn

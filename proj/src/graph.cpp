#include "graph.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace mrn {

Graph::Graph(int vertices)
    : vertices_(vertices), words_((vertices + 63) / 64) {
  if (vertices < 0) throw std::invalid_argument("vertex count must be >= 0");
  rows_.assign(static_cast<std::size_t>(vertices_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  assert(u != v && u >= 0 && v >= 0 && u < vertices_ && v < vertices_);
  rows_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
  rows_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
}

void Graph::remove_edge(int u, int v) {
  assert(u != v && u >= 0 && v >= 0 && u < vertices_ && v < vertices_);
  rows_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(1ULL << (v % 64));
  rows_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(1ULL << (u % 64));
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertices_ || v >= vertices_ || u == v) return false;
  return (rows_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1ULL;
}

int Graph::degree(int v) const {
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < vertices_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertices_; ++u) {
    const std::uint64_t* r = row(u);
    for (int w = (u + 1) / 64; w < words_; ++w) {
      std::uint64_t bits = r[w];
      if (w == (u + 1) / 64 && (u + 1) % 64 != 0)
        bits &= ~0ULL << ((u + 1) % 64);
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        out.emplace_back(u, v);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  int n = 0;
  for (int s : part_sizes) {
    if (s < 0) throw std::invalid_argument("part size must be >= 0");
    n += s;
  }
  Graph g(n);
  int lo_a = 0;
  for (std::size_t a = 0; a < part_sizes.size(); ++a) {
    int lo_b = lo_a + part_sizes[a];
    for (std::size_t b = a + 1; b < part_sizes.size(); ++b) {
      for (int u = lo_a; u < lo_a + part_sizes[a]; ++u)
        for (int v = lo_b; v < lo_b + part_sizes[b]; ++v) g.add_edge(u, v);
      lo_b += part_sizes[b];
    }
    lo_a += part_sizes[a];
  }
  return g;
}

}  // namespace mrn

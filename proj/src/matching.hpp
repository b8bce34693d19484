#pragma once

#include <utility>
#include <vector>

#include "graph.hpp"

namespace mrn {

using MatchedEdge = std::pair<int, int>;

// Maximum matching in an arbitrary simple graph (odd cycles handled by
// blossom contraction). Deterministic: greedy seed over lexicographic
// edges, then augmenting phases rooted at exposed vertices in id order.
std::vector<MatchedEdge> max_matching(const Graph& g);

// True iff the graph holds a matching with at least `size` edges; stops
// augmenting as soon as that many are matched.
bool has_matching_of_size(const Graph& g, int size);

// Matching number of K_{a1,...,ak} by the closed form
// min(floor(N/2), N - max_i a_i).
long long nu_complete_multipartite(const std::vector<long long>& part_sizes);

// Matching maintained under edge insertion with LIFO undo. After every
// push_edge the stored matching is maximum for the edges pushed so far:
// one new edge raises the matching number by at most one, so a single
// augmenting-path phase restores maximality.
class MatchingState {
 public:
  explicit MatchingState(int vertices);

  int size() const { return pairs_; }
  bool push_edge(int u, int v);  // true iff the matching grew
  void pop_edge();
  std::vector<MatchedEdge> matched_edges() const;

 private:
  struct Undo {
    int u, v;
    bool augmented;
    std::vector<int> match_before;
  };

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  int pairs_ = 0;
  std::vector<Undo> undo_;
  // scratch for the augmenting phase
  std::vector<int> p_, base_, queue_;
  std::vector<char> used_, blossom_, seen_;
};

}  // namespace mrn

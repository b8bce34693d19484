#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "graph.hpp"
#include "matching.hpp"
#include "oracles.hpp"

using mrn::Graph;
using mrn::MatchingState;

namespace {

Graph from_pair_mask(int n, std::uint32_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) g.add_edge(u, v);
  return g;
}

int nu(const Graph& g) { return static_cast<int>(mrn::max_matching(g).size()); }

}  // namespace

TEST_CASE("matching on fixed graphs") {
  CHECK(nu(Graph(5)) == 0);
  CHECK(nu(Graph(0)) == 0);

  Graph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  CHECK(nu(triangle) == 1);

  CHECK(nu(mrn::complete_multipartite({2, 2, 2})) == 3);

  Graph five_cycle(5);
  for (int i = 0; i < 5; ++i) five_cycle.add_edge(i, (i + 1) % 5);
  CHECK(nu(five_cycle) == 2);

  Graph bowtie(5);  // two triangles sharing vertex 2
  bowtie.add_edge(0, 1);
  bowtie.add_edge(0, 2);
  bowtie.add_edge(1, 2);
  bowtie.add_edge(2, 3);
  bowtie.add_edge(2, 4);
  bowtie.add_edge(3, 4);
  CHECK(nu(bowtie) == 2);

  Graph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  CHECK(nu(petersen) == 5);
}

TEST_CASE("matching agrees with the oracle on every 6-vertex graph") {
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
    const Graph g = from_pair_mask(6, mask);
    CHECK(nu(g) == oracle::max_matching(g));
  }
}

TEST_CASE("matching agrees with the oracle on random graphs") {
  std::mt19937 seeds(2024);
  for (int round = 0; round < 500; ++round) {
    const int n = 8 + static_cast<int>(seeds() % 9);  // 8..16
    const int percent = 10 + static_cast<int>(seeds() % 81);
    const Graph g = oracle::random_graph(n, percent, seeds());
    const int best = oracle::max_matching(g);
    CAPTURE(round);
    CHECK(nu(g) == best);
    CHECK(mrn::has_matching_of_size(g, best));
    CHECK_FALSE(mrn::has_matching_of_size(g, best + 1));
  }
}

TEST_CASE("matching returns a valid certificate") {
  std::mt19937 seeds(99);
  for (int round = 0; round < 50; ++round) {
    const Graph g = oracle::random_graph(12, 30, seeds());
    const auto edges = mrn::max_matching(g);
    CHECK(static_cast<int>(edges.size()) == oracle::max_matching(g));
    std::vector<char> used(12, 0);
    for (const auto& [u, v] : edges) {
      CHECK(g.has_edge(u, v));
      CHECK_FALSE(used[u]);
      CHECK_FALSE(used[v]);
      used[u] = used[v] = 1;
    }
  }
}

TEST_CASE("complete multipartite matching number") {
  CHECK(mrn::nu_complete_multipartite({1, 5}) == 1);
  CHECK(mrn::nu_complete_multipartite({2, 2, 2}) == 3);
  CHECK(mrn::nu_complete_multipartite({3, 3, 3}) == 4);
  CHECK(mrn::nu_complete_multipartite({5}) == 0);
  CHECK(mrn::nu_complete_multipartite({1, 1}) == 1);
  CHECK(mrn::nu_complete_multipartite({7, 1}) == 1);
  CHECK(mrn::nu_complete_multipartite({4, 4}) == 4);
  CHECK(mrn::nu_complete_multipartite({}) == 0);

  const std::vector<std::vector<long long>> families = {
      {1, 1, 1}, {2, 3}, {2, 3, 4}, {1, 2, 3, 4}, {5, 5},
      {1, 1, 8}, {2, 2, 2, 2}, {3, 1, 3, 1}, {10}, {6, 2, 2}};
  for (const auto& parts : families) {
    const std::vector<int> p(parts.begin(), parts.end());
    const Graph g = mrn::complete_multipartite(p);
    CHECK(mrn::nu_complete_multipartite(parts) == oracle::max_matching(g));
  }
}

TEST_CASE("has_matching_of_size boundary cases") {
  CHECK(mrn::has_matching_of_size(Graph(0), 0));
  CHECK(mrn::has_matching_of_size(Graph(3), 0));
  CHECK_FALSE(
      mrn::has_matching_of_size(mrn::complete_multipartite({1, 1, 1}), 2));
}

TEST_CASE("incremental matching tracks pushes and pops") {
  std::mt19937 seeds(7);
  for (int round = 0; round < 60; ++round) {
    const int n = 6 + static_cast<int>(seeds() % 7);  // 6..12
    const Graph g = oracle::random_graph(n, 40, seeds());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u, v)) edges.emplace_back(u, v);
    std::shuffle(edges.begin(), edges.end(), seeds);

    MatchingState state(n);
    Graph prefix(n);
    std::vector<int> sizes;
    for (const auto& [u, v] : edges) {
      prefix.add_edge(u, v);
      state.push_edge(u, v);
      sizes.push_back(state.size());
      CHECK(state.size() == oracle::max_matching(prefix));
    }
    const auto matched = state.matched_edges();
    CHECK(static_cast<int>(matched.size()) == state.size());
    std::vector<char> used(n, 0);
    for (const auto& [u, v] : matched) {
      CHECK(prefix.has_edge(u, v));
      CHECK_FALSE(used[u]);
      CHECK_FALSE(used[v]);
      used[u] = used[v] = 1;
    }
    for (int k = static_cast<int>(edges.size()) - 1; k >= 0; --k) {
      CHECK(state.size() == sizes[k]);
      state.pop_edge();
    }
    CHECK(state.size() == 0);
  }
}

TEST_CASE("push_edge reports whether the matching grew") {
  MatchingState state(4);
  CHECK(state.push_edge(0, 1));
  CHECK_FALSE(state.push_edge(1, 2));  // 1 already saturated, no augment
  CHECK(state.push_edge(2, 3));
  CHECK(state.size() == 2);
  state.pop_edge();
  CHECK(state.size() == 1);
  state.pop_edge();
  CHECK(state.size() == 1);
  state.pop_edge();
  CHECK(state.size() == 0);
}

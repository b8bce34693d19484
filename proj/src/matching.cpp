#include "matching.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace mrn {

namespace {

/*
 * One phase of the classic array-based blossom algorithm. BFS grows an
 * alternating tree from an exposed root. An edge closing an odd cycle
 * contracts the blossom by pointing every member's base[] at the cycle's
 * least common ancestor; contracted vertices re-enter the queue as outer
 * vertices. Reaching another exposed vertex yields an augmenting path,
 * which is flipped along the p[] chain. O(V*E) per phase.
 *
 * All arrays are caller-owned scratch so hot paths allocate nothing.
 */
struct PhaseBuffers {
  std::vector<int>& p;
  std::vector<int>& base;
  std::vector<int>& queue;
  std::vector<char>& used;
  std::vector<char>& blossom;
  std::vector<char>& seen;
};

int phase_lca(const std::vector<int>& match, PhaseBuffers& b, int a, int c) {
  std::fill(b.seen.begin(), b.seen.end(), 0);
  int v = a;
  for (;;) {
    v = b.base[v];
    b.seen[v] = 1;
    if (match[v] == -1) break;
    v = b.base[b.p[match[v]]];
  }
  int u = c;
  for (;;) {
    u = b.base[u];
    if (b.seen[u]) return u;
    u = b.base[b.p[match[u]]];
  }
}

void phase_mark_path(const std::vector<int>& match, PhaseBuffers& b, int v,
                     int stop, int child) {
  while (b.base[v] != stop) {
    b.blossom[b.base[v]] = 1;
    b.blossom[b.base[match[v]]] = 1;
    b.p[v] = child;
    child = match[v];
    v = b.p[match[v]];
  }
}

bool phase_augment(const std::vector<std::vector<int>>& adj,
                   std::vector<int>& match, int root, PhaseBuffers& b) {
  const int n = static_cast<int>(adj.size());
  std::fill(b.used.begin(), b.used.end(), 0);
  std::fill(b.p.begin(), b.p.end(), -1);
  std::iota(b.base.begin(), b.base.end(), 0);
  b.queue.clear();
  b.queue.push_back(root);
  b.used[root] = 1;
  int finish = -1;
  for (std::size_t head = 0; head < b.queue.size() && finish < 0; ++head) {
    int v = b.queue[head];
    for (int to : adj[v]) {
      if (b.base[v] == b.base[to] || match[v] == to) continue;
      if (to == root || (match[to] != -1 && b.p[match[to]] != -1)) {
        int stop = phase_lca(match, b, v, to);
        std::fill(b.blossom.begin(), b.blossom.end(), 0);
        phase_mark_path(match, b, v, stop, to);
        phase_mark_path(match, b, to, stop, v);
        for (int i = 0; i < n; ++i) {
          if (b.blossom[b.base[i]]) {
            b.base[i] = stop;
            if (!b.used[i]) {
              b.used[i] = 1;
              b.queue.push_back(i);
            }
          }
        }
      } else if (b.p[to] == -1) {
        b.p[to] = v;
        if (match[to] == -1) {
          finish = to;
          break;
        }
        b.used[match[to]] = 1;
        b.queue.push_back(match[to]);
      }
    }
  }
  if (finish == -1) return false;
  while (finish != -1) {
    int pv = b.p[finish], next = match[pv];
    match[finish] = pv;
    match[pv] = finish;
    finish = next;
  }
  return true;
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Greedy seed plus one augmenting phase per still-exposed vertex. If no
// augmenting path starts at an exposed vertex, later augmentations never
// create one, so a single pass reaches a maximum matching. Stops early
// once `enough` pairs are matched (pass -1 for no cap).
int run_matching(const std::vector<std::vector<int>>& adj,
                 std::vector<int>& match, int enough) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> p(n), base(n), queue;
  std::vector<char> used(n), blossom(n), seen(n);
  PhaseBuffers buffers{p, base, queue, used, blossom, seen};
  int pairs = 0;
  for (int u = 0; u < n && pairs != enough; ++u) {
    if (match[u] != -1) continue;
    for (int v : adj[u]) {
      if (v > u && match[v] == -1) {
        match[u] = v;
        match[v] = u;
        ++pairs;
        break;
      }
    }
  }
  for (int root = 0; root < n && pairs != enough; ++root) {
    if (match[root] != -1 || adj[root].empty()) continue;
    if (phase_augment(adj, match, root, buffers)) ++pairs;
  }
  return pairs;
}

std::vector<MatchedEdge> collect_pairs(const std::vector<int>& match) {
  std::vector<MatchedEdge> out;
  for (int v = 0; v < static_cast<int>(match.size()); ++v)
    if (match[v] > v) out.emplace_back(v, match[v]);
  return out;
}

}  // namespace

std::vector<MatchedEdge> max_matching(const Graph& g) {
  auto adj = adjacency_lists(g);
  std::vector<int> match(g.vertex_count(), -1);
  run_matching(adj, match, -1);
  return collect_pairs(match);
}

bool has_matching_of_size(const Graph& g, int size) {
  if (size <= 0) return true;
  if (size > g.vertex_count() / 2) return false;
  auto adj = adjacency_lists(g);
  std::vector<int> match(g.vertex_count(), -1);
  return run_matching(adj, match, size) >= size;
}

long long nu_complete_multipartite(const std::vector<long long>& part_sizes) {
  long long total = 0, largest = 0;
  for (long long s : part_sizes) {
    if (s < 0) throw std::invalid_argument("part size must be >= 0");
    total += s;
    largest = std::max(largest, s);
  }
  return std::min(total / 2, total - largest);
}

MatchingState::MatchingState(int vertices)
    : adj_(vertices),
      match_(vertices, -1),
      p_(vertices),
      base_(vertices),
      used_(vertices),
      blossom_(vertices),
      seen_(vertices) {}

bool MatchingState::push_edge(int u, int v) {
  assert(u != v);
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  Undo undo{u, v, false, {}};
  if (match_[u] == -1 && match_[v] == -1) {
    undo.augmented = true;
    undo.match_before = match_;
    match_[u] = v;
    match_[v] = u;
    ++pairs_;
  } else {
    PhaseBuffers buffers{p_, base_, queue_, used_, blossom_, seen_};
    std::vector<int> saved = match_;
    // Any augmenting path in the grown graph must pass through (u, v), but
    // its endpoints are exposed, so scanning exposed roots finds it.
    for (int root = 0; root < static_cast<int>(adj_.size()); ++root) {
      if (match_[root] != -1 || adj_[root].empty()) continue;
      if (phase_augment(adj_, match_, root, buffers)) {
        undo.augmented = true;
        undo.match_before = std::move(saved);
        ++pairs_;
        break;
      }
    }
  }
  bool grew = undo.augmented;
  undo_.push_back(std::move(undo));
  return grew;
}

void MatchingState::pop_edge() {
  assert(!undo_.empty());
  Undo undo = std::move(undo_.back());
  undo_.pop_back();
  assert(adj_[undo.u].back() == undo.v && adj_[undo.v].back() == undo.u);
  adj_[undo.u].pop_back();
  adj_[undo.v].pop_back();
  if (undo.augmented) {
    match_ = std::move(undo.match_before);
    --pairs_;
  }
}

std::vector<MatchedEdge> MatchingState::matched_edges() const {
  return collect_pairs(match_);
}

}  // namespace mrn

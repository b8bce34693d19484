#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "clique.hpp"
#include "formulas.hpp"
#include "matching.hpp"
#include "witness.hpp"

namespace mrn {
namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

constexpr long long kNoWitness = std::numeric_limits<long long>::max();

// State shared by the workers of one decide_colorable call.
struct SharedSearch {
  std::atomic<long long> next{0};
  std::atomic<long long> nodes{0};
  std::atomic<long long> covers{0};
  std::atomic<long long> best{kNoWitness};  // least profile index with witness
  std::atomic<bool> out_of_budget{false};
  long long max_nodes = -1;
  double max_seconds = -1.0;
  std::chrono::steady_clock::time_point start;
};

void lower_best(SharedSearch& shared, long long index) {
  long long seen = shared.best.load();
  while (index < seen && !shared.best.compare_exchange_weak(seen, index)) {
  }
}

// The parts left partially uncovered carry forced color-1 edges forming a
// complete multipartite graph; m or more of them put a K_m there outright.
bool profile_feasible(const std::vector<int>& profile, int part_size,
                      int clique_order) {
  int open_parts = 0;
  for (int c : profile)
    if (c < part_size) ++open_parts;
  return open_parts < clique_order;
}

// DFS over the free edges of one cover profile: color 1 unless that
// completes a K_m, color 2 unless the matching reaches n. Slots inside a
// part with the same cover status are interchangeable, as are whole parts
// with equal occupancy; for each adjacent transposition the coloring must
// not be lex-greater than its image, which keeps exactly the lex-least
// member of each symmetry class reachable. Reusable across profiles;
// graph, matching and detector scratch stay allocated.
class CoverSearcher {
 public:
  CoverSearcher(const Shape& shape, int clique_order, int stripe_count,
                SharedSearch& shared)
      : shape_(shape),
        clique_order_(clique_order),
        stripe_count_(stripe_count),
        shared_(shared),
        g1_(shape.vertex_count()),
        labels_(PartLabels::from_shape(shape)),
        detector_(g1_, labels_),
        match2_(shape.vertex_count()),
        mask_(std::max(1, g1_.words_per_row())) {}

  // 0: exhausted without a witness, 1: witness found, 2: budget hit
  int search(const std::vector<int>& profile) {
    reset(profile);
    const int verdict = dfs(0);
    flush();
    if (verdict == 1) build_colors();
    return verdict;
  }

  const std::vector<std::uint8_t>& witness_colors() const { return colors_; }

 private:
  void reset(const std::vector<int>& profile) {
    const int vertices = shape_.vertex_count();
    in_cover_.assign(vertices, 0);
    for (int part = 0; part < shape_.parts(); ++part)
      for (int slot = 0; slot < profile[part]; ++slot)
        in_cover_[shape_.vertex(part, slot)] = 1;
    g1_ = Graph(vertices);
    free_ends_.clear();
    free_ranks_.clear();
    rank_to_free_.assign(static_cast<std::size_t>(shape_.edge_count()), -1);
    for (long long rank = 0; rank < shape_.edge_count(); ++rank) {
      const auto [u, v] = shape_.edge_unrank(rank);
      if (in_cover_[u] || in_cover_[v]) {
        rank_to_free_[rank] = static_cast<int>(free_ends_.size());
        free_ends_.emplace_back(u, v);
        free_ranks_.push_back(rank);
      } else {
        g1_.add_edge(u, v);
      }
    }
    assign_.assign(free_ends_.size(), 0);
    match2_ = MatchingState(vertices);
    build_constraints(profile);
  }

  void build_constraints(const std::vector<int>& profile) {
    constraints_.clear();
    triggers_.assign(free_ends_.size(), {});
    trail_.clear();
    perm_.resize(shape_.vertex_count());
    const int width = shape_.part_size();
    for (int part = 0; part < shape_.parts(); ++part)
      for (int slot = 0; slot + 1 < width; ++slot) {
        const int a = shape_.vertex(part, slot);
        const int b = shape_.vertex(part, slot + 1);
        if (in_cover_[a] != in_cover_[b]) continue;
        identity_perm();
        std::swap(perm_[a], perm_[b]);
        add_constraint();
      }
    for (int part = 0; part + 1 < shape_.parts(); ++part) {
      if (profile[part] != profile[part + 1]) continue;
      identity_perm();
      for (int slot = 0; slot < width; ++slot)
        std::swap(perm_[shape_.vertex(part, slot)],
                  perm_[shape_.vertex(part + 1, slot)]);
      add_constraint();
    }
  }

  void identity_perm() {
    for (int v = 0; v < static_cast<int>(perm_.size()); ++v) perm_[v] = v;
  }

  void add_constraint() {
    LexConstraint constraint;
    for (std::size_t k = 0; k < free_ends_.size(); ++k) {
      const auto [u, v] = free_ends_[k];
      const int iu = perm_[u];
      const int iv = perm_[v];
      if ((iu == u && iv == v) || (iu == v && iv == u)) continue;
      const int image = rank_to_free_[shape_.edge_rank(iu, iv)];
      if (image < 0)
        throw std::logic_error("symmetry image of a free edge is forced");
      if (static_cast<int>(k) < image)
        constraint.pairs.emplace_back(static_cast<int>(k), image);
    }
    if (constraint.pairs.empty()) return;
    const int id = static_cast<int>(constraints_.size());
    for (const auto& [lo, hi] : constraint.pairs) triggers_[hi].push_back(id);
    constraints_.push_back(std::move(constraint));
  }

  // Walk the comparator of one constraint as far as assigned colors allow.
  // False means the partial coloring is already lex-greater than its image.
  bool advance(int id, int depth) {
    LexConstraint& constraint = constraints_[id];
    if (constraint.satisfied) return true;
    const int old_ptr = constraint.ptr;
    while (constraint.ptr < static_cast<int>(constraint.pairs.size()) &&
           constraint.pairs[constraint.ptr].second <= depth) {
      const auto [lo, hi] = constraint.pairs[constraint.ptr];
      if (assign_[lo] != assign_[hi]) {
        if (assign_[lo] > assign_[hi]) {
          constraint.ptr = old_ptr;
          return false;
        }
        trail_.push_back({id, old_ptr});
        constraint.satisfied = true;
        return true;
      }
      ++constraint.ptr;
    }
    if (constraint.ptr != old_ptr) trail_.push_back({id, old_ptr});
    return true;
  }

  bool advance_all(std::size_t k) {
    for (const int id : triggers_[k])
      if (!advance(id, static_cast<int>(k))) return false;
    return true;
  }

  void unwind(std::size_t mark) {
    while (trail_.size() > mark) {
      const TrailEntry entry = trail_.back();
      trail_.pop_back();
      constraints_[entry.constraint].ptr = entry.ptr;
      constraints_[entry.constraint].satisfied = false;
    }
  }

  int dfs(std::size_t k) {
    if (k == free_ends_.size()) return 1;
    const auto [u, v] = free_ends_[k];
    const std::size_t mark = trail_.size();

    if (!spend()) return 2;
    assign_[k] = 1;
    if (advance_all(k)) {
      g1_.add_edge(u, v);
      if (!completes_clique(u, v)) {
        const int verdict = dfs(k + 1);
        if (verdict != 0) {
          g1_.remove_edge(u, v);
          return verdict;
        }
      }
      g1_.remove_edge(u, v);
    }
    unwind(mark);

    if (!spend()) return 2;
    assign_[k] = 2;
    if (advance_all(k)) {
      match2_.push_edge(u, v);
      if (match2_.size() < stripe_count_) {
        const int verdict = dfs(k + 1);
        if (verdict != 0) {
          match2_.pop_edge();
          return verdict;
        }
      }
      match2_.pop_edge();
    }
    unwind(mark);
    return 0;
  }

  // Would a K_m through the edge (u, v) exist in g1 (the edge is already
  // in)? Checks for a K_{m-2} inside the common neighborhood.
  bool completes_clique(int u, int v) {
    const std::uint64_t* row_u = g1_.row(u);
    const std::uint64_t* row_v = g1_.row(v);
    const int words = g1_.words_per_row();
    bool any = false;
    for (int w = 0; w < words; ++w) {
      mask_[w] = row_u[w] & row_v[w];
      any = any || mask_[w] != 0;
    }
    if (clique_order_ == 3) return any;
    if (!any) return false;
    if (clique_order_ == 4) {
      for (int w = 0; w < words; ++w) {
        std::uint64_t bits = mask_[w];
        while (bits) {
          const int x = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          const std::uint64_t* row_x = g1_.row(x);
          for (int k = 0; k < words; ++k)
            if (row_x[k] & mask_[k]) return true;
        }
      }
      return false;
    }
    return detector_.exists(clique_order_ - 2, mask_.data());
  }

  bool spend() {
    ++unflushed_;
    if (shared_.max_nodes >= 0 &&
        shared_.nodes.load(std::memory_order_relaxed) + unflushed_ >
            shared_.max_nodes) {
      flush();
      shared_.out_of_budget.store(true, std::memory_order_relaxed);
      return false;
    }
    if (unflushed_ >= 1024) {
      flush();
      if (shared_.out_of_budget.load(std::memory_order_relaxed)) return false;
      if (shared_.max_seconds >= 0 &&
          seconds_since(shared_.start) > shared_.max_seconds) {
        shared_.out_of_budget.store(true, std::memory_order_relaxed);
        return false;
      }
    }
    return true;
  }

  void flush() {
    shared_.nodes.fetch_add(unflushed_, std::memory_order_relaxed);
    unflushed_ = 0;
  }

  void build_colors() {
    colors_.assign(static_cast<std::size_t>(shape_.edge_count()), 1);
    for (std::size_t k = 0; k < free_ranks_.size(); ++k)
      colors_[free_ranks_[k]] = assign_[k];
  }

  // One adjacent transposition: the coloring, read as free-edge colors in
  // rank order, must be lex-<= the permuted coloring. Each pair holds the
  // free indices of an edge and its image; the comparator resolves at the
  // lowest unequal pair.
  struct LexConstraint {
    std::vector<std::pair<int, int>> pairs;
    int ptr = 0;
    bool satisfied = false;
  };
  struct TrailEntry {
    int constraint;
    int ptr;
  };

  const Shape& shape_;
  const int clique_order_;
  const int stripe_count_;
  SharedSearch& shared_;
  Graph g1_;
  PartLabels labels_;
  CliqueDetector detector_;
  MatchingState match2_;
  std::vector<std::uint64_t> mask_;
  std::vector<char> in_cover_;
  std::vector<std::pair<int, int>> free_ends_;
  std::vector<long long> free_ranks_;
  std::vector<int> rank_to_free_;
  std::vector<int> perm_;
  std::vector<LexConstraint> constraints_;
  std::vector<std::vector<int>> triggers_;
  std::vector<TrailEntry> trail_;
  std::vector<std::uint8_t> assign_;
  std::vector<std::uint8_t> colors_;
  long long unflushed_ = 0;
};

void descend_profiles(int parts, int index, int cap, int remaining,
                      std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  if (index == parts) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (int c = std::min(cap, remaining); c >= 0; --c) {
    // entries from here on are at most c each
    if (static_cast<long long>(c) * (parts - index) < remaining) break;
    current[index] = c;
    descend_profiles(parts, index + 1, c, remaining - c, current, out);
  }
}

// n pairwise disjoint edges inside `avail` (edges as rank bits)?
bool mask_matching_at_least(std::uint64_t avail, int need,
                            const std::vector<std::uint64_t>& conflict) {
  if (need <= 0) return true;
  if (std::popcount(avail) < need) return false;
  const int e = std::countr_zero(avail);
  if (mask_matching_at_least(avail & ~conflict[e], need - 1, conflict))
    return true;
  return mask_matching_at_least(avail & (avail - 1), need, conflict);
}

}  // namespace

std::vector<std::vector<int>> cover_profiles(int parts, int part_size,
                                             int stripe_count) {
  if (parts < 2) throw std::invalid_argument("j must be >= 2");
  if (part_size < 0) throw std::invalid_argument("t must be >= 0");
  if (stripe_count < 1) throw std::invalid_argument("n must be >= 1");
  const long long total = static_cast<long long>(parts) * part_size;
  const int sum = static_cast<int>(
      std::min<long long>(2LL * (stripe_count - 1), total));
  std::vector<std::vector<int>> out;
  std::vector<int> current(parts, 0);
  descend_profiles(parts, 0, part_size, sum, current, out);
  return out;
}

SearchOutcome decide_colorable(int parts, int part_size, int clique_order,
                               int stripe_count, const SearchBudget& budget) {
  RamseyQuery{parts, clique_order, stripe_count}.validate();
  const Shape shape = Shape::make(parts, part_size);
  const std::vector<std::vector<int>> profiles =
      cover_profiles(parts, part_size, stripe_count);

  SharedSearch shared;
  shared.max_nodes = budget.max_nodes;
  shared.max_seconds = budget.max_seconds;
  shared.start = std::chrono::steady_clock::now();

  std::vector<std::vector<std::uint8_t>> found(profiles.size());

  const auto worker = [&]() {
    CoverSearcher searcher(shape, clique_order, stripe_count, shared);
    for (;;) {
      if (shared.out_of_budget.load(std::memory_order_relaxed)) break;
      const long long index = shared.next.fetch_add(1);
      if (index >= static_cast<long long>(profiles.size())) break;
      if (index > shared.best.load(std::memory_order_relaxed)) continue;
      shared.covers.fetch_add(1, std::memory_order_relaxed);
      if (!profile_feasible(profiles[index], part_size, clique_order))
        continue;
      const int verdict = searcher.search(profiles[index]);
      if (verdict == 1) {
        found[index] = searcher.witness_colors();
        lower_best(shared, index);
        break;
      }
      if (verdict == 2) break;
    }
  };

  int thread_count = std::max(1, budget.threads);
  if (static_cast<std::size_t>(thread_count) > profiles.size())
    thread_count = static_cast<int>(profiles.size());
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  SearchOutcome out;
  out.stats.nodes = shared.nodes.load();
  out.stats.covers = shared.covers.load();
  out.stats.seconds = seconds_since(shared.start);
  const long long best = shared.best.load();
  if (best != kNoWitness) {
    out.status = SearchStatus::colorable;
    out.witness.emplace(shape, std::move(found[best]));
    if (!verify_good(*out.witness, clique_order, stripe_count).good)
      throw std::logic_error("searcher emitted a bad coloring");
  } else if (shared.out_of_budget.load()) {
    out.status = SearchStatus::out_of_budget;
  } else {
    out.status = SearchStatus::not_colorable;
  }
  return out;
}

SearchOutcome decide_colorable_naive(int parts, int part_size,
                                     int clique_order, int stripe_count,
                                     long long max_edges) {
  RamseyQuery{parts, clique_order, stripe_count}.validate();
  const Shape shape = Shape::make(parts, part_size);
  const auto start = std::chrono::steady_clock::now();
  const long long edge_count = shape.edge_count();
  const long long limit = std::min<long long>(max_edges, 62);
  if (edge_count > limit)
    throw UnsupportedError("brute force supports at most " +
                           std::to_string(limit) + " edges; the shape has " +
                           std::to_string(edge_count));

  std::vector<std::pair<int, int>> ends(edge_count);
  for (long long rank = 0; rank < edge_count; ++rank)
    ends[rank] = shape.edge_unrank(rank);

  // edges sharing an endpoint, self included, as masks over ranks
  std::vector<std::uint64_t> conflict(edge_count, 0);
  for (long long r = 0; r < edge_count; ++r)
    for (long long s = 0; s < edge_count; ++s)
      if (ends[r].first == ends[s].first || ends[r].first == ends[s].second ||
          ends[r].second == ends[s].first || ends[r].second == ends[s].second)
        conflict[r] |= 1ULL << s;

  // every K_m of the host as the mask of its edge ranks
  std::vector<std::uint64_t> clique_masks;
  if (clique_order <= parts && part_size >= 1) {
    std::vector<int> combo(clique_order);
    for (int i = 0; i < clique_order; ++i) combo[i] = i;
    for (;;) {
      std::vector<int> slots(clique_order, 0);
      for (;;) {
        std::uint64_t mask = 0;
        for (int a = 0; a < clique_order; ++a)
          for (int b = a + 1; b < clique_order; ++b)
            mask |= 1ULL << shape.edge_rank(shape.vertex(combo[a], slots[a]),
                                            shape.vertex(combo[b], slots[b]));
        clique_masks.push_back(mask);
        int digit = clique_order - 1;
        while (digit >= 0 && slots[digit] == part_size - 1) slots[digit--] = 0;
        if (digit < 0) break;
        ++slots[digit];
      }
      int pos = clique_order - 1;
      while (pos >= 0 && combo[pos] == parts - clique_order + pos) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (int i = pos + 1; i < clique_order; ++i) combo[i] = combo[i - 1] + 1;
    }
  }

  // color-2 edge sets in increasing mask order; bit r set = rank r color 2
  SearchOutcome out;
  for (std::uint64_t mask = 0; mask < (1ULL << edge_count); ++mask) {
    ++out.stats.nodes;
    bool bad = false;
    for (const std::uint64_t clique : clique_masks)
      if ((clique & mask) == 0) {  // clique entirely color 1
        bad = true;
        break;
      }
    if (!bad && mask_matching_at_least(mask, stripe_count, conflict))
      bad = true;
    if (bad) continue;
    std::vector<std::uint8_t> colors(edge_count);
    for (long long rank = 0; rank < edge_count; ++rank)
      colors[rank] = (mask >> rank) & 1 ? 2 : 1;
    out.status = SearchStatus::colorable;
    out.witness.emplace(shape, std::move(colors));
    out.stats.seconds = seconds_since(start);
    return out;
  }
  out.status = SearchStatus::not_colorable;
  out.stats.seconds = seconds_since(start);
  return out;
}

SearchValueResult compute_value_by_search(int parts, int clique_order,
                                          int stripe_count, int t_max,
                                          const SearchBudget& budget) {
  RamseyQuery{parts, clique_order, stripe_count}.validate();
  if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
  SearchValueResult result;
  result.kind = ValueKind::unresolved;
  for (int t = 1; t <= t_max; ++t) {
    const SearchOutcome outcome =
        decide_colorable(parts, t, clique_order, stripe_count, budget);
    result.stats.nodes += outcome.stats.nodes;
    result.stats.covers += outcome.stats.covers;
    result.stats.seconds += outcome.stats.seconds;
    if (outcome.status == SearchStatus::out_of_budget) return result;
    result.scanned_up_to = t;
    if (outcome.status == SearchStatus::not_colorable) {
      result.kind = ValueKind::finite;
      result.value = t;
      return result;
    }
  }
  if (parts <= clique_order - 1) result.kind = ValueKind::infinite_evidence;
  return result;
}

}  // namespace mrn

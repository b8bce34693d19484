#include "clique.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace mrn {

PartLabels PartLabels::from_shape(const Shape& shape) {
  PartLabels labels;
  labels.part_count = shape.parts();
  labels.part_of.resize(shape.vertex_count());
  for (int v = 0; v < shape.vertex_count(); ++v)
    labels.part_of[v] = shape.part_of(v);
  return labels;
}

PartLabels PartLabels::from_sizes(const std::vector<int>& part_sizes) {
  PartLabels labels;
  labels.part_count = static_cast<int>(part_sizes.size());
  for (int part = 0; part < labels.part_count; ++part)
    labels.part_of.insert(labels.part_of.end(), part_sizes[part], part);
  return labels;
}

CliqueDetector::CliqueDetector(const Graph& g, const PartLabels& parts)
    : g_(g), words_(std::max(1, g.words_per_row())) {
  assert(static_cast<int>(parts.part_of.size()) == g.vertex_count());
  part_masks_.assign(static_cast<std::size_t>(parts.part_count) * words_, 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    part_masks_[static_cast<std::size_t>(parts.part_of[v]) * words_ + v / 64] |=
        1ULL << (v % 64);
  cand_stack_.assign(g.vertex_count() + 1,
                     std::vector<std::uint64_t>(words_, 0));
  color_buf_.assign(static_cast<std::size_t>(g.vertex_count()) * words_, 0);
}

// Class count of a greedy coloring of the candidate subgraph; any proper
// coloring bounds its clique number. Vertices are taken in id order and
// join the first class holding none of their neighbors.
int CliqueDetector::greedy_color_bound(const std::uint64_t* cand) {
  int classes = 0;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = cand[w];
    while (bits) {
      const int v = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      const std::uint64_t* adjacent = g_.row(v);
      int c = 0;
      for (; c < classes; ++c) {
        const std::uint64_t* members =
            color_buf_.data() + static_cast<std::size_t>(c) * words_;
        bool clash = false;
        for (int k = 0; k < words_; ++k)
          if (members[k] & adjacent[k]) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      std::uint64_t* members =
          color_buf_.data() + static_cast<std::size_t>(c) * words_;
      if (c == classes) {
        std::fill(members, members + words_, 0);
        ++classes;
      }
      members[v / 64] |= 1ULL << (v % 64);
    }
  }
  return classes;
}

int CliqueDetector::parts_touched(const std::uint64_t* cand) const {
  int touched = 0;
  const int parts = static_cast<int>(part_masks_.size()) / words_;
  for (int p = 0; p < parts; ++p) {
    const std::uint64_t* mask = part_masks_.data() + static_cast<std::size_t>(p) * words_;
    for (int w = 0; w < words_; ++w) {
      if (mask[w] & cand[w]) {
        ++touched;
        break;
      }
    }
  }
  return touched;
}

bool CliqueDetector::leaf() {
  if (static_cast<int>(current_.size()) > best_) {
    best_ = static_cast<int>(current_.size());
    best_set_ = current_;
    if (target_ >= 0 && best_ >= target_) stop_ = true;
  }
  return stop_;
}

bool CliqueDetector::expand(std::uint64_t* cand, int depth) {
  for (;;) {
    int v = -1;
    for (int w = 0; w < words_; ++w) {
      if (cand[w]) {
        v = w * 64 + std::countr_zero(cand[w]);
        break;
      }
    }
    if (v < 0) return leaf();
    const int slack = best_ - static_cast<int>(current_.size());
    if (parts_touched(cand) <= slack) return false;
    if (greedy_color_bound(cand) <= slack) return false;
    cand[v / 64] &= ~(1ULL << (v % 64));
    std::uint64_t* next = cand_stack_[depth + 1].data();
    const std::uint64_t* adjacent = g_.row(v);
    bool next_empty = true;
    for (int w = 0; w < words_; ++w) {
      next[w] = cand[w] & adjacent[w];
      next_empty = next_empty && next[w] == 0;
    }
    current_.push_back(v);
    bool found;
    if (next_empty)
      found = leaf();
    else
      found = expand(next, depth + 1);
    if (found) return true;
    current_.pop_back();
    // loop resumes with v excluded from cand
  }
}

bool CliqueDetector::exists(int target, const std::uint64_t* candidates,
                            std::vector<int>* witness) {
  if (target <= 0) {
    if (witness) witness->clear();
    return true;
  }
  if (g_.vertex_count() == 0) return false;
  target_ = target;
  best_ = target - 1;  // prune anything that cannot beat target - 1
  stop_ = false;
  current_.clear();
  best_set_.clear();
  std::uint64_t* root = cand_stack_[0].data();
  if (candidates) {
    std::copy(candidates, candidates + words_, root);
  } else {
    std::fill(root, root + words_, ~0ULL);
    const int spare = words_ * 64 - g_.vertex_count();
    if (spare > 0) root[words_ - 1] = ~0ULL >> spare;
  }
  expand(root, 0);
  if (static_cast<int>(best_set_.size()) < target) return false;
  if (witness)
    witness->assign(best_set_.begin(), best_set_.begin() + target);
  return true;
}

int CliqueDetector::maximum(std::vector<int>* witness) {
  if (g_.vertex_count() == 0) {
    if (witness) witness->clear();
    return 0;
  }
  target_ = -1;
  best_ = 0;
  stop_ = false;
  current_.clear();
  best_set_.clear();
  std::uint64_t* root = cand_stack_[0].data();
  std::fill(root, root + words_, ~0ULL);
  const int spare = words_ * 64 - g_.vertex_count();
  if (spare > 0) root[words_ - 1] = ~0ULL >> spare;
  expand(root, 0);
  if (witness) *witness = best_set_;
  return best_;
}

std::optional<std::vector<int>> contains_clique(const Graph& g,
                                                const PartLabels& parts,
                                                int m) {
  if (m < 0) return std::nullopt;
  if (m == 0) return std::vector<int>{};
  CliqueDetector detector(g, parts);
  std::vector<int> witness;
  if (!detector.exists(m, nullptr, &witness)) return std::nullopt;
  return witness;
}

int clique_number(const Graph& g, const PartLabels& parts) {
  CliqueDetector detector(g, parts);
  return detector.maximum();
}

bool verify_clique(const Graph& g, const std::vector<int>& certificate,
                   int m) {
  if (static_cast<int>(certificate.size()) != m) return false;
  for (int v : certificate)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (std::size_t i = 0; i < certificate.size(); ++i)
    for (std::size_t k = i + 1; k < certificate.size(); ++k)
      if (!g.has_edge(certificate[i], certificate[k])) return false;
  return true;
}

}  // namespace mrn

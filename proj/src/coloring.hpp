#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "shape.hpp"

namespace mrn {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Assignment of color 1 or 2 to every edge of a shape, stored densely in
// canonical edge-rank order. Immutable after construction.
class TwoColoring {
 public:
  TwoColoring(Shape shape, std::vector<std::uint8_t> colors);
  static TwoColoring uniform(Shape shape, std::uint8_t color);

  const Shape& shape() const { return shape_; }
  std::uint8_t color_at(long long rank) const { return colors_[rank]; }
  std::uint8_t color_of(int u, int v) const {
    return colors_[shape_.edge_rank(u, v)];
  }
  const std::vector<std::uint8_t>& colors() const { return colors_; }

  // Spanning subgraph holding exactly the edges of one color class.
  Graph color_subgraph(std::uint8_t color) const;

 private:
  Shape shape_;
  std::vector<std::uint8_t> colors_;
};

// One coloring as a text document:
//
//   MRN1
//   j=5 t=1 m=4 n=3
//   colors=1111111222
//
// LF line endings, exactly one trailing newline, no other whitespace.
// The m=/n= pair is optional and records the targets the coloring was
// built against. serialize/parse are mutually inverse on valid documents.
struct ColoringDocument {
  int parts = 0;
  int part_size = 0;
  bool has_targets = false;
  int clique_order = 0;  // m
  int stripe_count = 0;  // n
  std::string colors;    // chars '1'/'2', length = edge count

  static ColoringDocument from_coloring(const TwoColoring& coloring);
  static ColoringDocument from_coloring(const TwoColoring& coloring,
                                        int clique_order, int stripe_count);
  TwoColoring to_coloring() const;

  std::string serialize() const;
  static ColoringDocument parse(const std::string& text);  // throws ParseError
};

}  // namespace mrn

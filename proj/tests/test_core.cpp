#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "oracles.hpp"
#include "shape.hpp"

using mrn::ColoringDocument;
using mrn::ParseError;
using mrn::Shape;
using mrn::TwoColoring;

TEST_CASE("shape counts") {
  const Shape s = Shape::make(5, 2);
  CHECK(s.vertex_count() == 10);
  CHECK(s.edge_count() == 40);

  CHECK(Shape::make(4, 1).edge_count() == 6);

  const Shape empty = Shape::make(3, 0);
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);

  CHECK_THROWS_AS(Shape::make(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(Shape::make(3, -1), std::invalid_argument);
}

TEST_CASE("vertex addressing is part-major") {
  const Shape s = Shape::make(3, 4);
  CHECK(s.vertex(0, 0) == 0);
  CHECK(s.vertex(2, 3) == 11);
  for (int v = 0; v < s.vertex_count(); ++v) {
    CHECK(s.vertex(s.part_of(v), s.slot_of(v)) == v);
  }
  CHECK(s.same_part(4, 7));
  CHECK_FALSE(s.same_part(3, 4));
}

TEST_CASE("edge ranks of a triangle host") {
  const Shape s = Shape::make(3, 1);
  CHECK(s.edge_rank(0, 1) == 0);
  CHECK(s.edge_rank(0, 2) == 1);
  CHECK(s.edge_rank(1, 2) == 2);
  CHECK(s.edge_rank(2, 0) == 1);  // order of endpoints is free
}

TEST_CASE("edge rank rejects intra-part and bad ids") {
  const Shape s = Shape::make(2, 2);
  CHECK_THROWS_AS(s.edge_rank(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(s.edge_rank(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(s.edge_rank(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(s.edge_unrank(4), std::invalid_argument);
  CHECK_THROWS_AS(s.edge_unrank(-1), std::invalid_argument);
}

TEST_CASE("rank and unrank are inverse on every small shape") {
  for (int parts = 2; parts <= 5; ++parts)
    for (int width = 0; width <= 3; ++width) {
      const Shape s = Shape::make(parts, width);
      std::set<std::pair<int, int>> seen;
      for (long long rank = 0; rank < s.edge_count(); ++rank) {
        const auto [u, v] = s.edge_unrank(rank);
        CHECK(u < v);
        CHECK_FALSE(s.same_part(u, v));
        CHECK(s.edge_rank(u, v) == rank);
        CHECK(s.edge_rank(v, u) == rank);
        seen.emplace(u, v);
      }
      CHECK(static_cast<long long>(seen.size()) == s.edge_count());
    }
}

TEST_CASE("coloring stores colors by rank") {
  const Shape s = Shape::make(4, 2);
  const auto colors = oracle::random_colors(
      static_cast<std::size_t>(s.edge_count()), 40, 11);
  const TwoColoring coloring(s, colors);
  for (long long rank = 0; rank < s.edge_count(); ++rank) {
    const auto [u, v] = s.edge_unrank(rank);
    CHECK(coloring.color_at(rank) == colors[rank]);
    CHECK(coloring.color_of(u, v) == colors[rank]);
    CHECK(coloring.color_of(v, u) == colors[rank]);
  }
}

TEST_CASE("coloring rejects bad input") {
  const Shape s = Shape::make(3, 1);
  CHECK_THROWS_AS(TwoColoring(s, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(TwoColoring(s, {1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(TwoColoring(s, {1, 0, 1}), std::invalid_argument);
}

TEST_CASE("color subgraphs partition the host") {
  const Shape s = Shape::make(4, 2);
  const auto colors = oracle::random_colors(
      static_cast<std::size_t>(s.edge_count()), 50, 7);
  const TwoColoring coloring(s, colors);
  const mrn::Graph g1 = coloring.color_subgraph(1);
  const mrn::Graph g2 = coloring.color_subgraph(2);
  CHECK(g1.edge_count() + g2.edge_count() == s.edge_count());
  for (int u = 0; u < s.vertex_count(); ++u)
    for (int v = u + 1; v < s.vertex_count(); ++v) {
      if (s.same_part(u, v)) {
        CHECK_FALSE(g1.has_edge(u, v));
        CHECK_FALSE(g2.has_edge(u, v));
      } else {
        CHECK((g1.has_edge(u, v) != g2.has_edge(u, v)));
        const std::uint8_t c = coloring.color_of(u, v);
        CHECK(g1.has_edge(u, v) == (c == 1));
      }
    }
}

TEST_CASE("document serializes to exact bytes") {
  const TwoColoring one_edge(Shape::make(2, 1), {2});
  CHECK(ColoringDocument::from_coloring(one_edge).serialize() ==
        "MRN1\nj=2 t=1\ncolors=2\n");
  CHECK(ColoringDocument::from_coloring(one_edge, 4, 2).serialize() ==
        "MRN1\nj=2 t=1 m=4 n=2\ncolors=2\n");

  const TwoColoring empty = TwoColoring::uniform(Shape::make(3, 0), 1);
  CHECK(ColoringDocument::from_coloring(empty).serialize() ==
        "MRN1\nj=3 t=0\ncolors=\n");
}

TEST_CASE("document parse round-trips") {
  const std::vector<std::string> docs = {
      "MRN1\nj=2 t=1\ncolors=2\n",
      "MRN1\nj=3 t=0\ncolors=\n",
      "MRN1\nj=2 t=1 m=4 n=2\ncolors=1\n",
      "MRN1\nj=3 t=2 m=3 n=5\ncolors=121212121212\n",
  };
  for (const std::string& text : docs) {
    const ColoringDocument doc = ColoringDocument::parse(text);
    CHECK(doc.serialize() == text);
    const TwoColoring coloring = doc.to_coloring();
    CHECK(ColoringDocument::from_coloring(coloring).colors == doc.colors);
  }

  const ColoringDocument with_targets =
      ColoringDocument::parse("MRN1\nj=2 t=1 m=4 n=2\ncolors=1\n");
  CHECK(with_targets.has_targets);
  CHECK(with_targets.clique_order == 4);
  CHECK(with_targets.stripe_count == 2);
  const ColoringDocument without =
      ColoringDocument::parse("MRN1\nj=2 t=1\ncolors=1\n");
  CHECK_FALSE(without.has_targets);
}

TEST_CASE("single byte corruptions are rejected") {
  const std::string base = "MRN1\nj=2 t=1\ncolors=1\n";
  CHECK_NOTHROW(ColoringDocument::parse(base));
  const std::string replacements = "x90\n";
  int cases = 0;
  for (std::size_t pos = 0; pos < base.size(); ++pos)
    for (char b : replacements) {
      if (base[pos] == b) continue;
      std::string broken = base;
      broken[pos] = b;
      CAPTURE(pos);
      CAPTURE(b);
      CHECK_THROWS_AS(ColoringDocument::parse(broken), ParseError);
      ++cases;
    }
  CHECK(cases >= 80);
}

TEST_CASE("structural parse rejections") {
  CHECK_THROWS_AS(ColoringDocument::parse(""), ParseError);
  CHECK_THROWS_AS(ColoringDocument::parse("MRN1\nj=2 t=1\ncolors=1"),
                  ParseError);  // missing final LF
  CHECK_THROWS_AS(ColoringDocument::parse("MRN1\nj=2 t=1\ncolors=1\n\n"),
                  ParseError);  // extra line
  CHECK_THROWS_AS(ColoringDocument::parse("MRN1\nj=02 t=1\ncolors=1\n"),
                  ParseError);  // leading zero
  CHECK_THROWS_AS(ColoringDocument::parse("MRN1\nj=2  t=1\ncolors=1\n"),
                  ParseError);  // double space makes an empty field
  CHECK_THROWS_AS(ColoringDocument::parse("MRN1\nj=2 t=1 m=4\ncolors=1\n"),
                  ParseError);  // m without n
  CHECK_THROWS_AS(ColoringDocument::parse("MRN1\nt=1 j=2\ncolors=1\n"),
                  ParseError);  // swapped keys
  CHECK_THROWS_AS(ColoringDocument::parse("MRN1\nj=1 t=1\ncolors=\n"),
                  ParseError);  // j too small
  CHECK_THROWS_AS(
      ColoringDocument::parse("MRN1\nj=2 t=1 m=2 n=1\ncolors=1\n"),
      ParseError);  // m too small
  CHECK_THROWS_AS(
      ColoringDocument::parse("MRN1\nj=2 t=1 m=4 n=0\ncolors=1\n"),
      ParseError);  // n too small
  CHECK_THROWS_AS(ColoringDocument::parse("MRN1\nj=2 t=1\ncolors=12\n"),
                  ParseError);  // wrong length
  CHECK_THROWS_AS(
      ColoringDocument::parse("MRN1\nj=2 t=1000000000\ncolors=\n"),
      ParseError);  // value too large
}

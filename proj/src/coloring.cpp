#include "coloring.hpp"

#include <utility>

namespace mrn {

TwoColoring::TwoColoring(Shape shape, std::vector<std::uint8_t> colors)
    : shape_(std::move(shape)), colors_(std::move(colors)) {
  if (static_cast<long long>(colors_.size()) != shape_.edge_count())
    throw std::invalid_argument("color sequence length must equal edge count");
  for (std::uint8_t c : colors_)
    if (c != 1 && c != 2)
      throw std::invalid_argument("edge colors must be 1 or 2");
}

TwoColoring TwoColoring::uniform(Shape shape, std::uint8_t color) {
  std::vector<std::uint8_t> colors(shape.edge_count(), color);
  return TwoColoring(std::move(shape), std::move(colors));
}

Graph TwoColoring::color_subgraph(std::uint8_t color) const {
  if (color != 1 && color != 2)
    throw std::invalid_argument("color must be 1 or 2");
  Graph g(shape_.vertex_count());
  for (long long r = 0; r < shape_.edge_count(); ++r) {
    if (colors_[r] != color) continue;
    auto [u, v] = shape_.edge_unrank(r);
    g.add_edge(u, v);
  }
  return g;
}

ColoringDocument ColoringDocument::from_coloring(const TwoColoring& coloring) {
  ColoringDocument doc;
  doc.parts = coloring.shape().parts();
  doc.part_size = coloring.shape().part_size();
  doc.colors.reserve(coloring.colors().size());
  for (std::uint8_t c : coloring.colors())
    doc.colors.push_back(static_cast<char>('0' + c));
  return doc;
}

ColoringDocument ColoringDocument::from_coloring(const TwoColoring& coloring,
                                                 int clique_order,
                                                 int stripe_count) {
  ColoringDocument doc = from_coloring(coloring);
  doc.has_targets = true;
  doc.clique_order = clique_order;
  doc.stripe_count = stripe_count;
  return doc;
}

TwoColoring ColoringDocument::to_coloring() const {
  Shape shape = Shape::make(parts, part_size);
  std::vector<std::uint8_t> cs;
  cs.reserve(colors.size());
  for (char c : colors) cs.push_back(static_cast<std::uint8_t>(c - '0'));
  return TwoColoring(std::move(shape), std::move(cs));
}

std::string ColoringDocument::serialize() const {
  std::string out = "MRN1\n";
  out += "j=" + std::to_string(parts) + " t=" + std::to_string(part_size);
  if (has_targets)
    out += " m=" + std::to_string(clique_order) +
           " n=" + std::to_string(stripe_count);
  out += "\ncolors=";
  out += colors;
  out += '\n';
  return out;
}

namespace {

// Strict unsigned decimal: digits only, no leading zeros (except "0").
int parse_uint_field(const std::string& token, const char* key) {
  const std::string prefix = std::string(key) + "=";
  if (token.size() <= prefix.size() || token.compare(0, prefix.size(), prefix) != 0)
    throw ParseError(std::string("expected ") + key + "=<integer>, got \"" +
                     token + "\"");
  const std::string digits = token.substr(prefix.size());
  if (digits.size() > 9) throw ParseError(std::string(key) + " value too large");
  if (digits.size() > 1 && digits[0] == '0')
    throw ParseError(std::string(key) + " value has a leading zero");
  long long value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw ParseError(std::string(key) + " value must be a decimal integer");
    value = value * 10 + (c - '0');
  }
  return static_cast<int>(value);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t space = line.find(' ', start);
    if (space == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, space - start));
    start = space + 1;
  }
}

}  // namespace

ColoringDocument ColoringDocument::parse(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos)
      throw ParseError("every line must end with LF");
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.size() != 3)
    throw ParseError("document must have exactly 3 lines, got " +
                     std::to_string(lines.size()));
  if (lines[0] != "MRN1")
    throw ParseError("first line must be MRN1");

  const std::vector<std::string> fields = split_fields(lines[1]);
  if (fields.size() != 2 && fields.size() != 4)
    throw ParseError("parameter line must be \"j=J t=T\" or \"j=J t=T m=M n=N\"");
  ColoringDocument doc;
  doc.parts = parse_uint_field(fields[0], "j");
  doc.part_size = parse_uint_field(fields[1], "t");
  if (doc.parts < 2) throw ParseError("j must be >= 2");
  if (fields.size() == 4) {
    doc.has_targets = true;
    doc.clique_order = parse_uint_field(fields[2], "m");
    doc.stripe_count = parse_uint_field(fields[3], "n");
    if (doc.clique_order < 3) throw ParseError("m must be >= 3");
    if (doc.stripe_count < 1) throw ParseError("n must be >= 1");
  }

  const std::string prefix = "colors=";
  if (lines[2].compare(0, prefix.size(), prefix) != 0)
    throw ParseError("third line must start with colors=");
  doc.colors = lines[2].substr(prefix.size());
  for (char c : doc.colors)
    if (c != '1' && c != '2')
      throw ParseError("colors must be drawn from {1,2}");
  const long long expected = static_cast<long long>(doc.part_size) *
                             doc.part_size * doc.parts * (doc.parts - 1) / 2;
  if (static_cast<long long>(doc.colors.size()) != expected)
    throw ParseError("colors length " + std::to_string(doc.colors.size()) +
                     " does not match edge count " + std::to_string(expected) +
                     " for j=" + std::to_string(doc.parts) +
                     " t=" + std::to_string(doc.part_size));
  return doc;
}

}  // namespace mrn

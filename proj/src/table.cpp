#include "table.hpp"

#include <stdexcept>

#include "formulas.hpp"

namespace mrn {
namespace {

std::string cell(int parts, int clique_order, int stripes) {
  const RamseyValue value = ramsey_value({parts, clique_order, stripes});
  return value.finite ? std::to_string(value.value) : "inf";
}

}  // namespace

std::string format_value_table(int clique_order, int j_lo, int j_hi, int n_lo,
                               int n_hi, TableFormat format) {
  if (clique_order < 3) throw std::invalid_argument("m must be >= 3");
  if (j_lo < 2) throw std::invalid_argument("j must be >= 2");
  if (n_lo < 1) throw std::invalid_argument("n must be >= 1");
  if (j_hi < j_lo) throw std::invalid_argument("empty part-count range");
  if (n_hi < n_lo) throw std::invalid_argument("empty stripe-count range");

  std::string out;
  if (format == TableFormat::markdown) {
    out += "| n\\j |";
    for (int j = j_lo; j <= j_hi; ++j) out += " " + std::to_string(j) + " |";
    out += "\n| --- |";
    for (int j = j_lo; j <= j_hi; ++j) out += " --- |";
    out += "\n";
    for (int n = n_lo; n <= n_hi; ++n) {
      out += "| " + std::to_string(n) + " |";
      for (int j = j_lo; j <= j_hi; ++j)
        out += " " + cell(j, clique_order, n) + " |";
      out += "\n";
    }
  } else {
    out += "n\\j";
    for (int j = j_lo; j <= j_hi; ++j) out += "," + std::to_string(j);
    out += "\n";
    for (int n = n_lo; n <= n_hi; ++n) {
      out += std::to_string(n);
      for (int j = j_lo; j <= j_hi; ++j)
        out += "," + cell(j, clique_order, n);
      out += "\n";
    }
  }
  return out;
}

}  // namespace mrn

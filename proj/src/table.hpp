#pragma once

#include <string>

namespace mrn {

enum class TableFormat { markdown, csv };

// Grid of closed-form values for one clique order: one row per stripe
// count n in [n_lo, n_hi], one column per part count j in [j_lo, j_hi].
// Infinite entries render as "inf".
std::string format_value_table(int clique_order, int j_lo, int j_hi, int n_lo,
                               int n_hi, TableFormat format);

}  // namespace mrn

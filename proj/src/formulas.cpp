#include "formulas.hpp"

#include <stdexcept>

namespace mrn {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

void RamseyQuery::validate() const {
  if (parts < 2) throw std::invalid_argument("j must be >= 2");
  if (clique_order < 3) throw std::invalid_argument("m must be >= 3");
  if (stripes < 1) throw std::invalid_argument("n must be >= 1");
}

RamseyValue ramsey_value(const RamseyQuery& q) {
  q.validate();
  if (q.parts <= q.clique_order - 1) return RamseyValue::infinite();
  const int stripe_width = q.parts + 2 - q.clique_order;  // >= 2 here
  return RamseyValue::of(ceil_div(2 * q.stripes, stripe_width));
}

RegimeTag classify_regime(const RamseyQuery& q) {
  q.validate();
  const int j = q.parts, m = q.clique_order, n = q.stripes;
  if (j <= m - 1) return {Regime::infinite_few_parts, "Theorem t2"};
  if (j == m) {
    if (n <= 2) return {Regime::diagonal, "Lemma l1"};
    return {Regime::diagonal, "Theorem t3"};
  }
  if (j == m + 1 && n <= 5) {
    if (n <= 2) return {Regime::subdiagonal_small_n, "small-n remark"};
    return {Regime::subdiagonal_small_n, "Theorem t4"};
  }
  if (n <= 2) return {Regime::general, "small-n remark"};
  switch (m) {
    case 3:
      return {Regime::general, "Theorem t1"};
    case 4:
      if (j == 5) return {Regime::general, "Theorem t6"};
      return {Regime::general, "combined K_4 theorem"};
    case 5:
      if (j == 6) {
        if (n <= 8) return {Regime::general, "Theorem th4"};
        return {Regime::general, "Theorem th5"};
      }
      return {Regime::general, "combined K_5 theorem"};
    default:
      if (j == m + 1) return {Regime::general, "Theorem Mth"};
      return {Regime::general, "Theorem th7"};
  }
}

namespace {

void emit(std::vector<ConsistencyRow>& rows, int j, int m, int n,
          RamseyValue specialized, const char* theorem) {
  RamseyQuery q{j, m, n};
  rows.push_back({q, ramsey_value(q), specialized, theorem});
}

}  // namespace

std::vector<ConsistencyRow> consistency_table(int j_max, int n_max) {
  if (j_max < 2 || n_max < 1)
    throw std::invalid_argument("consistency ranges must cover j>=2, n>=1");
  std::vector<ConsistencyRow> rows;

  // K_3 column: infinite on two parts, ceil(2n/(j-1)) otherwise.
  for (int j = 2; j <= j_max; ++j)
    for (int n = 1; n <= n_max; ++n)
      emit(rows, j, 3, n,
           j == 2 ? RamseyValue::infinite()
                  : RamseyValue::of(ceil_div(2 * n, j - 1)),
           "Theorem t1");

  // Too few parts: an (m-1)-partite host never holds K_m.
  for (int m = 3; m <= 8; ++m)
    for (int j = 2; j <= m - 1 && j <= j_max; ++j)
      for (int n = 1; n <= n_max; ++n)
        emit(rows, j, m, n, RamseyValue::infinite(), "Theorem t2");

  // Diagonal j == m: value n (n <= 2 settled separately from n >= 3).
  for (int m = 3; m <= 12 && m <= j_max; ++m) {
    for (int n = 1; n <= n_max; ++n)
      emit(rows, m, m, n, RamseyValue::of(n), n <= 2 ? "Lemma l1" : "Theorem t3");
  }

  // First superdiagonal j == m+1: n-1 when n in 3..5, and the small-n
  // remark values 1, 2 for n = 1, 2.
  for (int m = 3; m <= 11 && m + 1 <= j_max; ++m) {
    for (int n = 3; n <= 5 && n <= n_max; ++n)
      emit(rows, m + 1, m, n, RamseyValue::of(n - 1), "Theorem t4");
    emit(rows, m + 1, m, 1, RamseyValue::of(1), "small-n remark");
    if (n_max >= 2) emit(rows, m + 1, m, 2, RamseyValue::of(2), "small-n remark");
  }

  // K_4 rows: five parts ceil(2n/3); six or more parts ceil(2n/(j-2)),
  // infinite on two or three parts.
  if (j_max >= 5)
    for (int n = 3; n <= n_max; ++n)
      emit(rows, 5, 4, n, RamseyValue::of(ceil_div(2 * n, 3)), "Theorem t6");
  for (int j = 2; j <= j_max; ++j)
    for (int n = 1; n <= n_max; ++n)
      emit(rows, j, 4, n,
           j <= 3 ? RamseyValue::infinite()
                  : RamseyValue::of(ceil_div(2 * n, j - 2)),
           "combined K_4 theorem");

  // K_5 rows: six parts n - floor(n/3) for n >= 6 (n - 2 on 6 <= n <= 8),
  // seven or more parts ceil(2n/(j-3)), infinite below five parts.
  if (j_max >= 6) {
    for (int n = 6; n <= 8 && n <= n_max; ++n)
      emit(rows, 6, 5, n, RamseyValue::of(n - 2), "Theorem th4");
    for (int n = 6; n <= n_max; ++n)
      emit(rows, 6, 5, n, RamseyValue::of(n - n / 3), "Theorem th5");
  }
  for (int j = 2; j <= j_max; ++j)
    for (int n = 1; n <= n_max; ++n)
      emit(rows, j, 5, n,
           j <= 4 ? RamseyValue::infinite()
                  : RamseyValue::of(ceil_div(2 * n, j - 3)),
           "combined K_5 theorem");

  // General stripe-width form for clique orders up to 8.
  for (int m = 4; m <= 8; ++m)
    for (int j = m; j <= j_max; ++j)
      for (int n = 3; n <= n_max; ++n)
        emit(rows, j, m, n, RamseyValue::of(ceil_div(2 * n, j + 2 - m)),
             "Theorem Mth");

  // Width >= 4 makes one part's worth of cover unnecessary: value 1 for a
  // single stripe, and for two stripes 2 at width <= 3 else 1.
  for (int m = 4; m <= 8; ++m) {
    for (int j = m; j <= j_max; ++j) {
      emit(rows, j, m, 1, RamseyValue::of(1), "small-n remark");
      if (n_max >= 2)
        emit(rows, j, m, 2, RamseyValue::of(j + 2 - m >= 4 ? 1 : 2),
             "small-n remark");
    }
  }

  return rows;
}

}  // namespace mrn

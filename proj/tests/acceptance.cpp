// Acceptance gate: seven checks covering the closed form, the extremal
// constructions, both search engines, both certificate engines, and the
// document format. One PASS/FAIL line per check; wall-clock limits count
// toward the verdict; exit is nonzero when anything fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "clique.hpp"
#include "coloring.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "oracles.hpp"
#include "search.hpp"
#include "shape.hpp"
#include "table.hpp"
#include "witness.hpp"

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// All partitions (non-increasing positive parts) of every total in
// [0, n_max], the empty partition included.
void partitions_into(int remaining, int max_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int next = std::min(remaining, max_part); next >= 1; --next) {
    current.push_back(next);
    partitions_into(remaining - next, next, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> partitions_up_to(int n_max) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  for (int total = 0; total <= n_max; ++total)
    partitions_into(total, total, current, out);
  return out;
}

// 1. The unified closed form against every specialized statement on its
// stated range.
bool check_formula_consistency(std::string& note) {
  const std::vector<mrn::ConsistencyRow> rows = mrn::consistency_table(12, 40);
  long long disagreements = 0;
  for (const mrn::ConsistencyRow& row : rows)
    if (!(row.unified == row.specialized)) ++disagreements;
  note = std::to_string(rows.size()) + " rows";
  if (disagreements) note += ", " + std::to_string(disagreements) + " disagree";
  return disagreements == 0 && rows.size() > 1000;
}

// 2. build_extremal at t*-1 verifies good with the predicted clique and
// matching numbers for 3 <= m <= 8, m <= j <= 12, 1 <= n <= 20.
bool check_witness_sweep(std::string& note) {
  const mrn::SweepResult sweep = mrn::witness_sweep(3, 8, 12, 1, 20);
  note = std::to_string(sweep.checked) + " triples";
  if (!sweep.failures.empty())
    note += ", " + std::to_string(sweep.failures.size()) + " failures";
  return sweep.failures.empty() && sweep.checked == 900;
}

// 3. The search-confirmed value equals the closed form on the grid that is
// exhaustively decidable at desk scale. 60 s budget per decision.
bool check_search_grid(std::string& note) {
  std::vector<std::array<int, 3>> grid;  // {j, m, n}
  const auto add = [&grid](int j, int m, int n) {
    for (const std::array<int, 3>& q : grid)
      if (q[0] == j && q[1] == m && q[2] == n) return;
    grid.push_back({j, m, n});
  };
  for (int j : {5, 6, 7})
    for (int n = 1; n <= 4; ++n) add(j, 4, n);
  for (int j : {5, 6, 7})
    for (int n = 1; n <= 3; ++n) add(j, 5, n);
  for (int j : {3, 4, 5})
    for (int n = 1; n <= 4; ++n) add(j, 3, n);
  for (int m : {4, 5})
    for (int n = 1; n <= 3; ++n) add(m, m, n);

  const mrn::SearchBudget budget{-1, 60.0, 1};
  int bad = 0;
  for (const std::array<int, 3>& q : grid) {
    const int j = q[0], m = q[1], n = q[2];
    const mrn::RamseyValue expected = mrn::ramsey_value({j, m, n});
    const mrn::SearchValueResult got =
        mrn::compute_value_by_search(j, m, n, expected.value, budget);
    if (got.kind != mrn::ValueKind::finite || got.value != expected.value) {
      ++bad;
      std::fprintf(stderr, "  search disagrees at j=%d m=%d n=%d\n", j, m, n);
    }
  }
  note = std::to_string(grid.size()) + " instances";
  if (bad) note += ", " + std::to_string(bad) + " disagree";
  return bad == 0 && grid.size() == 36;
}

// 4. Cover search and brute force reach the same verdict on every shape
// with at most 24 edges in j in [2,7], t in [0,2], m in {3,4,5}, n in [1,4].
bool check_engine_agreement(std::string& note) {
  int instances = 0;
  int bad = 0;
  for (int j = 2; j <= 7; ++j)
    for (int t = 0; t <= 2; ++t) {
      const long long edges = static_cast<long long>(t) * t * j * (j - 1) / 2;
      if (edges > 24) continue;
      for (int m = 3; m <= 5; ++m)
        for (int n = 1; n <= 4; ++n) {
          ++instances;
          const mrn::SearchOutcome fast = mrn::decide_colorable(j, t, m, n);
          const mrn::SearchOutcome naive =
              mrn::decide_colorable_naive(j, t, m, n, 24);
          if (fast.status != naive.status) {
            ++bad;
            std::fprintf(stderr, "  engines disagree at j=%d t=%d m=%d n=%d\n",
                         j, t, m, n);
          }
        }
    }
  note = std::to_string(instances) + " instances";
  if (bad) note += ", " + std::to_string(bad) + " disagree";
  return bad == 0 && instances == 180;
}

// 5. Matching engine against the closed form on complete multipartite
// graphs and against the subset-DP optimum on random graphs.
bool check_matching_oracles(std::string& note) {
  long long cases = 0;
  int bad = 0;
  for (const std::vector<int>& sizes : partitions_up_to(10)) {
    const mrn::Graph g = mrn::complete_multipartite(sizes);
    const std::vector<long long> wide(sizes.begin(), sizes.end());
    ++cases;
    if (mrn::nu_complete_multipartite(wide) !=
        static_cast<long long>(mrn::max_matching(g).size()))
      ++bad;
  }
  std::mt19937 rng(611953);
  for (int round = 0; round < 200; ++round) {
    const int parts = 1 + static_cast<int>(rng() % 6);
    std::vector<int> sizes(parts);
    for (int& s : sizes) s = static_cast<int>(rng() % (40 / parts + 1));
    const mrn::Graph g = mrn::complete_multipartite(sizes);
    const std::vector<long long> wide(sizes.begin(), sizes.end());
    ++cases;
    if (mrn::nu_complete_multipartite(wide) !=
        static_cast<long long>(mrn::max_matching(g).size()))
      ++bad;
  }
  for (int round = 0; round < 500; ++round) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const int percent = 10 + static_cast<int>(rng() % 81);
    const mrn::Graph g = oracle::random_graph(n, percent, rng());
    ++cases;
    if (static_cast<int>(mrn::max_matching(g).size()) !=
        oracle::max_matching(g))
      ++bad;
  }
  note = std::to_string(cases) + " cases";
  if (bad) note += ", " + std::to_string(bad) + " disagree";
  return bad == 0;
}

// 6. Clique engine against the subset-scan optimum on random subgraphs of
// small shapes, and the part-count law on complete multipartite graphs.
bool check_clique_oracles(std::string& note) {
  long long cases = 0;
  int bad = 0;
  std::mt19937 rng(611954);
  for (int round = 0; round < 500; ++round) {
    const int j = 2 + static_cast<int>(rng() % 4);
    const int t = 1 + static_cast<int>(rng() % (10 / j));
    const mrn::Shape shape = mrn::Shape::make(j, t);
    mrn::Graph g(shape.vertex_count());
    const int percent = 10 + static_cast<int>(rng() % 81);
    for (long long rank = 0; rank < shape.edge_count(); ++rank) {
      const std::pair<int, int> ends = shape.edge_unrank(rank);
      if (static_cast<int>(rng() % 100) < percent)
        g.add_edge(ends.first, ends.second);
    }
    ++cases;
    if (mrn::clique_number(g, mrn::PartLabels::from_shape(shape)) !=
        oracle::clique_number(g))
      ++bad;
  }
  std::vector<std::vector<int>> families = partitions_up_to(10);
  families.push_back({0});
  families.push_back({0, 0});
  families.push_back({3, 0, 2});
  families.push_back({1, 0, 1});
  families.push_back({4, 0, 0, 4});
  for (const std::vector<int>& sizes : families) {
    const mrn::Graph g = mrn::complete_multipartite(sizes);
    int nonempty = 0;
    for (const int s : sizes)
      if (s > 0) ++nonempty;
    ++cases;
    if (mrn::clique_number(g, mrn::PartLabels::from_sizes(sizes)) != nonempty)
      ++bad;
  }
  note = std::to_string(cases) + " cases";
  if (bad) note += ", " + std::to_string(bad) + " disagree";
  return bad == 0;
}

// Twenty defective variants of a valid document; the parser must reject
// every one.
std::vector<std::string> corrupted_documents() {
  return {
      "",
      "MRN1\nj=5 t=1 m=4 n=3\ncolors=1111111222",
      "MRN1\r\nj=5 t=1 m=4 n=3\ncolors=1111111222\n",
      "mrn1\nj=5 t=1 m=4 n=3\ncolors=1111111222\n",
      "MRN2\nj=5 t=1 m=4 n=3\ncolors=1111111222\n",
      "j=5 t=1 m=4 n=3\ncolors=1111111222\n",
      "MRN1\nj=05 t=1 m=4 n=3\ncolors=1111111222\n",
      "MRN1\nj=5  t=1 m=4 n=3\ncolors=1111111222\n",
      "MRN1\nt=1 j=5 m=4 n=3\ncolors=1111111222\n",
      "MRN1\nj=5 t=1 m=4\ncolors=1111111222\n",
      "MRN1\nj=5 t=1 n=3 m=4\ncolors=1111111222\n",
      "MRN1\nj=1 t=1 m=4 n=3\ncolors=1111111222\n",
      "MRN1\nj=5 t=1 m=2 n=3\ncolors=1111111222\n",
      "MRN1\nj=5 t=1 m=4 n=0\ncolors=1111111222\n",
      "MRN1\nj=5 t=1 m=4 n=3\ncolors=111111122\n",
      "MRN1\nj=5 t=1 m=4 n=3\ncolors=11111112221\n",
      "MRN1\nj=5 t=1 m=4 n=3\ncolors=1111111223\n",
      "MRN1\nj=5 t=1 m=4 n=3\ncolors=1111111220\n",
      "MRN1\nj=5 t=1 m=4 n=3\nCOLORS=1111111222\n",
      "MRN1\nj=5 t=1 m=4 n=3\ncolors=1111111222\nextra\n",
  };
}

// 7. Byte equality against the golden documents and golden table, and
// rejection of the corrupted variants.
bool check_format_stability(std::string& note) {
  const std::filesystem::path dir = MRN_GOLDEN_DIR;
  struct GoldenDoc {
    const char* file;
    int j, m, n;
  };
  const GoldenDoc docs[] = {
      {"witness_5_4_3.mrn", 5, 4, 3},
      {"witness_7_5_8.mrn", 7, 5, 8},
      {"witness_6_5_6.mrn", 6, 5, 6},
  };
  int bad = 0;
  for (const GoldenDoc& doc : docs) {
    const std::string want = read_file(dir / doc.file);
    const mrn::TwoColoring coloring =
        mrn::build_extremal({doc.j, doc.m, doc.n});
    const std::string got =
        mrn::ColoringDocument::from_coloring(coloring, doc.m, doc.n)
            .serialize();
    if (want.empty() || want != got) {
      ++bad;
      std::fprintf(stderr, "  golden mismatch: %s\n", doc.file);
    }
  }
  const std::string table =
      mrn::format_value_table(4, 2, 7, 1, 5, mrn::TableFormat::markdown);
  const std::string want_table = read_file(dir / "table_m4.md");
  if (want_table.empty() || want_table != table) {
    ++bad;
    std::fprintf(stderr, "  golden mismatch: table_m4.md\n");
  }
  const std::vector<std::string> corrupted = corrupted_documents();
  int rejected = 0;
  for (const std::string& text : corrupted) {
    try {
      mrn::ColoringDocument::parse(text);
      std::fprintf(stderr, "  corrupted document accepted: %s\n",
                   text.substr(0, 24).c_str());
    } catch (const mrn::ParseError&) {
      ++rejected;
    }
  }
  note = "4 goldens, " + std::to_string(rejected) + "/" +
         std::to_string(corrupted.size()) + " rejections";
  return bad == 0 && rejected == static_cast<int>(corrupted.size()) &&
         corrupted.size() == 20;
}

}  // namespace

int main() {
  struct Check {
    int id;
    const char* what;
    double limit_seconds;
    bool (*run)(std::string&);
  };
  const Check checks[] = {
      {1, "closed form matches every specialized statement", 1.0,
       check_formula_consistency},
      {2, "extremal witnesses verify across the parameter box", 10.0,
       check_witness_sweep},
      {3, "search-confirmed values equal the closed form", 1800.0,
       check_search_grid},
      {4, "cover search agrees with the brute force", 300.0,
       check_engine_agreement},
      {5, "matching engine matches its oracles", 60.0,
       check_matching_oracles},
      {6, "clique engine matches its oracles", 60.0, check_clique_oracles},
      {7, "documents and tables are byte-stable", 60.0,
       check_format_stability},
  };

  int failures = 0;
  for (const Check& check : checks) {
    std::string note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = check.run(note);
    } catch (const std::exception& e) {
      note = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > check.limit_seconds) {
      ok = false;
      note += (note.empty() ? "" : "; ") + std::string("over the ") +
              std::to_string(static_cast<int>(check.limit_seconds)) +
              " s limit";
    }
    if (!ok) ++failures;
    std::printf("criterion %d %s  %s (%.2f s%s%s)\n", check.id,
                ok ? "PASS" : "FAIL", check.what, elapsed,
                note.empty() ? "" : "; ", note.c_str());
    std::fflush(stdout);
  }
  if (failures) std::printf("acceptance: %d criteria failed\n", failures);
  else std::printf("acceptance: all 7 criteria passed\n");
  return failures == 0 ? 0 : 1;
}

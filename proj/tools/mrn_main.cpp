// Command-line front end over the C API: closed-form values, witness
// construction, verification, exhaustive search and value tables.
//
// Exit codes: 0 success, 1 coloring rejected as bad, 2 usage or parse
// error, 3 search budget exhausted / value unresolved.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mrn.h"

namespace {

int usage_error(const std::string& message) {
  std::fprintf(stderr, "%s\n", message.c_str());
  return 2;
}

int library_error() { return usage_error(mrn_last_error()); }

bool parse_plain_int(const std::string& text, int& out) {
  if (text.empty() || text.size() > 9) return false;
  for (const char ch : text)
    if (ch < '0' || ch > '9') return false;
  out = std::stoi(text);
  return true;
}

// "LO:HI", or a bare value meaning a one-element range
bool parse_range(const std::string& text, int& lo, int& hi) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    if (!parse_plain_int(text, lo)) return false;
    hi = lo;
    return true;
  }
  return parse_plain_int(text.substr(0, colon), lo) &&
         parse_plain_int(text.substr(colon + 1), hi);
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin),
               std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in),
             std::istreambuf_iterator<char>());
  return true;
}

bool write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return out.good();
}

int run_formula(int j, int m, int n) {
  int finite = 0;
  int value = 0;
  if (mrn_value(j, m, n, &finite, &value) != MRN_OK) return library_error();
  int regime = 0;
  const char* theorem = nullptr;
  if (mrn_classify(j, m, n, &regime, &theorem) != MRN_OK)
    return library_error();
  const std::string shown = finite ? std::to_string(value) : "INF";
  std::printf("m_%d(K_%d, %dK2) = %s  [%s]\n", j, m, n, shown.c_str(),
              theorem);
  return 0;
}

int run_witness(int j, int m, int n, bool has_part_size, int part_size,
                const std::string& out_path) {
  mrn_coloring* coloring = nullptr;
  const int rc = has_part_size
                     ? mrn_witness_infinite(j, m, n, part_size, &coloring)
                     : mrn_witness_build(j, m, n, &coloring);
  if (rc != MRN_OK) return library_error();
  char* text = nullptr;
  if (mrn_coloring_serialize(coloring, &text) != MRN_OK) {
    mrn_coloring_free(coloring);
    return library_error();
  }
  const bool written = write_output(out_path, text);
  mrn_string_free(text);
  mrn_coloring_free(coloring);
  if (!written) return usage_error("cannot write " + out_path);
  return 0;
}

int run_verify(const std::string& path, bool has_m, int m_flag, bool has_n,
               int n_flag) {
  std::string text;
  if (!read_input(path, text)) return usage_error("cannot read " + path);
  mrn_coloring* coloring = nullptr;
  if (mrn_coloring_parse(text.c_str(), &coloring) != MRN_OK)
    return library_error();

  int file_m = 0;
  int file_n = 0;
  const bool has_file_targets =
      mrn_coloring_targets(coloring, &file_m, &file_n) == 1;
  if ((!has_m || !has_n) && !has_file_targets) {
    mrn_coloring_free(coloring);
    return usage_error(
        "no targets: pass --m and --n or use a document carrying m= and n=");
  }
  const int m = has_m ? m_flag : file_m;
  const int n = has_n ? n_flag : file_n;

  mrn_report* report = nullptr;
  const int rc = mrn_verify(coloring, m, n, &report);
  mrn_coloring_free(coloring);
  if (rc != MRN_OK) return library_error();

  std::string line = mrn_report_good(report) ? "good" : "bad";
  if (const int size = mrn_report_clique_size(report); size > 0) {
    line += " clique=[";
    for (int i = 0; i < size; ++i) {
      if (i) line += ",";
      line += std::to_string(mrn_report_clique_vertex(report, i));
    }
    line += "]";
  }
  if (const int size = mrn_report_matching_size(report); size > 0) {
    line += " matching=[";
    for (int i = 0; i < size; ++i) {
      int u = 0;
      int v = 0;
      mrn_report_matching_edge(report, i, &u, &v);
      if (i) line += ",";
      line += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    }
    line += "]";
  }
  line += " omega1=" + std::to_string(mrn_report_omega1(report));
  line += " nu2=" + std::to_string(mrn_report_nu2(report));
  const bool good = mrn_report_good(report) == 1;
  mrn_report_free(report);
  std::printf("%s\n", line.c_str());
  return good ? 0 : 1;
}

const char* status_word(int status) {
  switch (status) {
    case MRN_SEARCH_COLORABLE:
      return "COLORABLE";
    case MRN_SEARCH_NOT_COLORABLE:
      return "NOT_COLORABLE";
    default:
      return "OUT_OF_BUDGET";
  }
}

int run_search(int j, int t, int m, int n, const mrn_budget& budget,
               bool naive, long long max_edges,
               const std::string& witness_path) {
  mrn_search* search = nullptr;
  const int rc = naive
                     ? mrn_search_decide_naive(j, t, m, n, max_edges, &search)
                     : mrn_search_decide(j, t, m, n, &budget, &search);
  if (rc != MRN_OK) return library_error();

  const int status = mrn_search_status(search);
  std::printf("%s\n", status_word(status));
  std::fprintf(stderr, "nodes=%lld covers=%lld seconds=%.3f\n",
               mrn_search_nodes(search), mrn_search_covers(search),
               mrn_search_seconds(search));

  if (!witness_path.empty() && mrn_search_witness(search)) {
    char* text = nullptr;
    if (mrn_coloring_serialize(mrn_search_witness(search), &text) != MRN_OK) {
      mrn_search_free(search);
      return library_error();
    }
    const bool written = write_output(witness_path, text);
    mrn_string_free(text);
    if (!written) {
      mrn_search_free(search);
      return usage_error("cannot write " + witness_path);
    }
    std::printf("witness=%s\n", witness_path.c_str());
  }
  mrn_search_free(search);
  return status == MRN_SEARCH_OUT_OF_BUDGET ? 3 : 0;
}

int run_compute(int j, int m, int n, int t_max, const mrn_budget& budget) {
  const std::string instance =
      "m_" + std::to_string(j) + "(K_" + std::to_string(m) + ", " +
      std::to_string(n) + "K2)";
  std::string trace;
  long long nodes = 0;
  long long covers = 0;
  double seconds = 0.0;
  for (int t = 1; t <= t_max; ++t) {
    mrn_search* search = nullptr;
    if (mrn_search_decide(j, t, m, n, &budget, &search) != MRN_OK)
      return library_error();
    const int status = mrn_search_status(search);
    nodes += mrn_search_nodes(search);
    covers += mrn_search_covers(search);
    seconds += mrn_search_seconds(search);
    mrn_search_free(search);
    if (!trace.empty()) trace += ", ";
    trace += "t=" + std::to_string(t) + " " + status_word(status);
    if (status == MRN_SEARCH_NOT_COLORABLE) {
      std::printf("%s = %d  (%s)\n", instance.c_str(), t, trace.c_str());
      std::fprintf(stderr, "nodes=%lld covers=%lld seconds=%.3f\n", nodes,
                   covers, seconds);
      return 0;
    }
    if (status == MRN_SEARCH_OUT_OF_BUDGET) {
      std::printf("%s = UNRESOLVED  (%s)\n", instance.c_str(), trace.c_str());
      std::fprintf(stderr, "nodes=%lld covers=%lld seconds=%.3f\n", nodes,
                   covers, seconds);
      return 3;
    }
  }
  std::fprintf(stderr, "nodes=%lld covers=%lld seconds=%.3f\n", nodes, covers,
               seconds);
  if (j <= m - 1) {
    std::printf("%s = INF  (COLORABLE for all t <= %d, j <= m-1)\n",
                instance.c_str(), t_max);
    return 0;
  }
  std::printf("%s = UNRESOLVED  (COLORABLE for all t <= %d)\n",
              instance.c_str(), t_max);
  return 3;
}

int run_table(int m, const std::string& j_range, const std::string& n_range,
              const std::string& format) {
  int j_lo = 0, j_hi = 0, n_lo = 0, n_hi = 0;
  if (!parse_range(j_range, j_lo, j_hi))
    return usage_error("bad range: " + j_range);
  if (!parse_range(n_range, n_lo, n_hi))
    return usage_error("bad range: " + n_range);
  int table_format;
  if (format == "md")
    table_format = MRN_TABLE_MARKDOWN;
  else if (format == "csv")
    table_format = MRN_TABLE_CSV;
  else
    return usage_error("format must be md or csv");
  char* text = nullptr;
  if (mrn_format_table(m, j_lo, j_hi, n_lo, n_hi, table_format, &text) !=
      MRN_OK)
    return library_error();
  std::fputs(text, stdout);
  mrn_string_free(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"size multipartite Ramsey numbers m_j(K_m, nK2)"};
  app.require_subcommand(1);

  int j = 0, m = 0, n = 0, t = 0;

  CLI::App* formula =
      app.add_subcommand("formula", "closed-form value and statement label");
  formula->add_option("-j,--j", j, "number of parts")->required();
  formula->add_option("-m,--m", m, "forbidden clique order in color 1")
      ->required();
  formula->add_option("-n,--n", n, "forbidden matching size in color 2")
      ->required();

  std::string out_path;
  CLI::App* witness = app.add_subcommand(
      "witness", "extremal coloring document for the targets");
  witness->add_option("-j,--j", j, "number of parts")->required();
  witness->add_option("-m,--m", m, "forbidden clique order in color 1")
      ->required();
  witness->add_option("-n,--n", n, "forbidden matching size in color 2")
      ->required();
  CLI::Option* t_option = witness->add_option(
      "-t,--t", t, "part size (infinite regime only: j <= m-1)");
  witness->add_option("-o,--out", out_path, "output file (default stdout)");

  std::string in_path;
  int m_flag = 0, n_flag = 0;
  CLI::App* verify = app.add_subcommand(
      "verify", "check a coloring document against targets (m, n)");
  verify->add_option("file", in_path, "document path, or - for stdin")
      ->required();
  CLI::Option* m_option =
      verify->add_option("-m,--m", m_flag, "clique target, overrides m=");
  CLI::Option* n_option =
      verify->add_option("-n,--n", n_flag, "matching target, overrides n=");

  mrn_budget budget{-1, -1.0, 1};
  bool naive = false;
  long long max_edges = 24;
  std::string witness_path;
  CLI::App* search = app.add_subcommand(
      "search", "exhaustively decide whether a good coloring exists");
  search->add_option("-j,--j", j, "number of parts")->required();
  search->add_option("-t,--t", t, "part size")->required();
  search->add_option("-m,--m", m, "forbidden clique order in color 1")
      ->required();
  search->add_option("-n,--n", n, "forbidden matching size in color 2")
      ->required();
  search->add_option("--max-nodes", budget.max_nodes,
                     "node budget (-1: unlimited)");
  search->add_option("--max-seconds", budget.max_seconds,
                     "wall-clock budget (-1: unlimited)");
  search->add_option("--threads", budget.threads, "worker threads");
  search->add_flag("--naive", naive, "brute force over all 2^E colorings");
  search->add_option("--max-edges", max_edges,
                     "naive engine edge limit (default 24)");
  search->add_option("--witness", witness_path,
                     "write the witness document here when colorable");

  int t_max = 8;
  CLI::App* compute = app.add_subcommand(
      "compute", "search-confirmed value: scan t until not colorable");
  compute->add_option("-j,--j", j, "number of parts")->required();
  compute->add_option("-m,--m", m, "forbidden clique order in color 1")
      ->required();
  compute->add_option("-n,--n", n, "forbidden matching size in color 2")
      ->required();
  compute->add_option("--t-max", t_max, "largest part size to scan");
  compute->add_option("--max-nodes", budget.max_nodes,
                      "node budget per part size (-1: unlimited)");
  compute->add_option("--max-seconds", budget.max_seconds,
                      "wall-clock budget per part size (-1: unlimited)");
  compute->add_option("--threads", budget.threads, "worker threads");

  std::string j_range = "2:8", n_range = "1:8", format = "md";
  CLI::App* table =
      app.add_subcommand("table", "grid of closed-form values for one m");
  table->add_option("-m,--m", m, "forbidden clique order in color 1")
      ->required();
  table->add_option("--j", j_range, "part-count range LO:HI (default 2:8)");
  table->add_option("--n", n_range, "stripe-count range LO:HI (default 1:8)");
  table->add_option("--format", format, "md or csv (default md)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*formula) return run_formula(j, m, n);
  if (*witness)
    return run_witness(j, m, n, t_option->count() > 0, t, out_path);
  if (*verify)
    return run_verify(in_path, m_option->count() > 0, m_flag,
                      n_option->count() > 0, n_flag);
  if (*search)
    return run_search(j, t, m, n, budget, naive, max_edges, witness_path);
  if (*compute) return run_compute(j, m, n, t_max, budget);
  if (*table) return run_table(m, j_range, n_range, format);
  return 2;
}

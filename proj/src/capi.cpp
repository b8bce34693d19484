#include "mrn.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "coloring.hpp"
#include "formulas.hpp"
#include "search.hpp"
#include "table.hpp"
#include "witness.hpp"

struct mrn_coloring {
  mrn::TwoColoring coloring;
  bool has_targets = false;
  int clique_order = 0;
  int stripes = 0;
};

struct mrn_report {
  mrn::GoodnessReport report;
};

struct mrn_search {
  int status = MRN_SEARCH_OUT_OF_BUDGET;
  mrn_coloring* witness = nullptr;  // owned
  mrn::SearchStats stats;
};

namespace {

thread_local std::string t_last_error;
thread_local std::string t_theorem;

int fail(int code, const char* what) {
  t_last_error = what;
  return code;
}

// Maps the exceptions of the core onto status codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const mrn::ParseError& e) {
    return fail(MRN_ERR_PARSE, e.what());
  } catch (const mrn::UnsupportedError& e) {
    return fail(MRN_ERR_UNSUPPORTED, e.what());
  } catch (const std::exception& e) {
    return fail(MRN_ERR_PARAM, e.what());
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

int deliver_string(const std::string& text, char** out) {
  *out = copy_string(text);
  if (!*out) return fail(MRN_ERR_PARAM, "out of memory");
  return MRN_OK;
}

mrn::SearchBudget to_budget(const mrn_budget* budget) {
  if (!budget) return {};
  return {budget->max_nodes, budget->max_seconds, budget->threads};
}

int wrap_outcome(mrn::SearchOutcome&& outcome, int clique_order, int stripes,
                 mrn_search** out) {
  auto* search = new mrn_search;
  switch (outcome.status) {
    case mrn::SearchStatus::colorable:
      search->status = MRN_SEARCH_COLORABLE;
      break;
    case mrn::SearchStatus::not_colorable:
      search->status = MRN_SEARCH_NOT_COLORABLE;
      break;
    case mrn::SearchStatus::out_of_budget:
      search->status = MRN_SEARCH_OUT_OF_BUDGET;
      break;
  }
  search->stats = outcome.stats;
  if (outcome.witness)
    search->witness = new mrn_coloring{std::move(*outcome.witness), true,
                                       clique_order, stripes};
  *out = search;
  return MRN_OK;
}

}  // namespace

extern "C" {

const char* mrn_last_error(void) { return t_last_error.c_str(); }

const char* mrn_version(void) { return "1.0.0"; }

int mrn_value(int parts, int clique_order, int stripes, int* finite,
              int* value) {
  if (!finite || !value) return fail(MRN_ERR_PARAM, "null output pointer");
  return guarded([&] {
    const mrn::RamseyValue result =
        mrn::ramsey_value({parts, clique_order, stripes});
    *finite = result.finite ? 1 : 0;
    *value = result.value;
    return MRN_OK;
  });
}

int mrn_classify(int parts, int clique_order, int stripes, int* regime,
                 const char** theorem) {
  if (!regime || !theorem) return fail(MRN_ERR_PARAM, "null output pointer");
  return guarded([&] {
    const mrn::RegimeTag tag =
        mrn::classify_regime({parts, clique_order, stripes});
    switch (tag.regime) {
      case mrn::Regime::infinite_few_parts:
        *regime = MRN_REGIME_INFINITE_FEW_PARTS;
        break;
      case mrn::Regime::diagonal:
        *regime = MRN_REGIME_DIAGONAL;
        break;
      case mrn::Regime::subdiagonal_small_n:
        *regime = MRN_REGIME_SUBDIAGONAL_SMALL_N;
        break;
      case mrn::Regime::general:
        *regime = MRN_REGIME_GENERAL;
        break;
    }
    t_theorem = tag.theorem;
    *theorem = t_theorem.c_str();
    return MRN_OK;
  });
}

int mrn_shape_counts(int parts, int part_size, long long* vertices,
                     long long* edges) {
  if (!vertices || !edges) return fail(MRN_ERR_PARAM, "null output pointer");
  return guarded([&] {
    const mrn::Shape shape = mrn::Shape::make(parts, part_size);
    *vertices = shape.vertex_count();
    *edges = shape.edge_count();
    return MRN_OK;
  });
}

void mrn_coloring_free(mrn_coloring* coloring) { delete coloring; }

int mrn_coloring_parts(const mrn_coloring* coloring) {
  return coloring ? coloring->coloring.shape().parts() : 0;
}

int mrn_coloring_part_size(const mrn_coloring* coloring) {
  return coloring ? coloring->coloring.shape().part_size() : 0;
}

long long mrn_coloring_edge_count(const mrn_coloring* coloring) {
  return coloring ? coloring->coloring.shape().edge_count() : 0;
}

int mrn_coloring_color_at(const mrn_coloring* coloring, long long rank) {
  if (!coloring) return 0;
  if (rank < 0 || rank >= coloring->coloring.shape().edge_count()) return 0;
  return coloring->coloring.color_at(rank);
}

int mrn_coloring_targets(const mrn_coloring* coloring, int* clique_order,
                         int* stripes) {
  if (!coloring || !coloring->has_targets) return 0;
  if (clique_order) *clique_order = coloring->clique_order;
  if (stripes) *stripes = coloring->stripes;
  return 1;
}

int mrn_coloring_parse(const char* text, mrn_coloring** out) {
  if (!text || !out) return fail(MRN_ERR_PARAM, "null pointer");
  return guarded([&] {
    const mrn::ColoringDocument document = mrn::ColoringDocument::parse(text);
    *out = new mrn_coloring{document.to_coloring(), document.has_targets,
                            document.clique_order, document.stripe_count};
    return MRN_OK;
  });
}

int mrn_coloring_serialize(const mrn_coloring* coloring, char** out) {
  if (!coloring || !out) return fail(MRN_ERR_PARAM, "null pointer");
  return guarded([&] {
    const mrn::ColoringDocument document =
        coloring->has_targets
            ? mrn::ColoringDocument::from_coloring(coloring->coloring,
                                                   coloring->clique_order,
                                                   coloring->stripes)
            : mrn::ColoringDocument::from_coloring(coloring->coloring);
    return deliver_string(document.serialize(), out);
  });
}

void mrn_string_free(char* text) { std::free(text); }

int mrn_witness_build(int parts, int clique_order, int stripes,
                      mrn_coloring** out) {
  if (!out) return fail(MRN_ERR_PARAM, "null output pointer");
  return guarded([&] {
    *out = new mrn_coloring{
        mrn::build_extremal({parts, clique_order, stripes}), true,
        clique_order, stripes};
    return MRN_OK;
  });
}

int mrn_witness_infinite(int parts, int clique_order, int stripes,
                         int part_size, mrn_coloring** out) {
  if (!out) return fail(MRN_ERR_PARAM, "null output pointer");
  return guarded([&] {
    *out = new mrn_coloring{
        mrn::build_infinite_regime({parts, clique_order, stripes}, part_size),
        true, clique_order, stripes};
    return MRN_OK;
  });
}

int mrn_verify(const mrn_coloring* coloring, int clique_order, int stripes,
               mrn_report** out) {
  if (!coloring || !out) return fail(MRN_ERR_PARAM, "null pointer");
  return guarded([&] {
    *out = new mrn_report{
        mrn::verify_good(coloring->coloring, clique_order, stripes)};
    return MRN_OK;
  });
}

void mrn_report_free(mrn_report* report) { delete report; }

int mrn_report_good(const mrn_report* report) {
  return report && report->report.good ? 1 : 0;
}

int mrn_report_omega1(const mrn_report* report) {
  return report ? report->report.omega1 : 0;
}

int mrn_report_nu2(const mrn_report* report) {
  return report ? report->report.nu2 : 0;
}

int mrn_report_clique_size(const mrn_report* report) {
  if (!report || !report->report.clique_cert) return 0;
  return static_cast<int>(report->report.clique_cert->size());
}

int mrn_report_clique_vertex(const mrn_report* report, int index) {
  if (index < 0 || index >= mrn_report_clique_size(report)) return -1;
  return (*report->report.clique_cert)[index];
}

int mrn_report_matching_size(const mrn_report* report) {
  if (!report || !report->report.matching_cert) return 0;
  return static_cast<int>(report->report.matching_cert->size());
}

int mrn_report_matching_edge(const mrn_report* report, int index, int* u,
                             int* v) {
  if (index < 0 || index >= mrn_report_matching_size(report) || !u || !v)
    return fail(MRN_ERR_PARAM, "no matching certificate edge at that index");
  const mrn::MatchedEdge& edge = (*report->report.matching_cert)[index];
  *u = edge.first;
  *v = edge.second;
  return MRN_OK;
}

int mrn_search_decide(int parts, int part_size, int clique_order, int stripes,
                      const mrn_budget* budget, mrn_search** out) {
  if (!out) return fail(MRN_ERR_PARAM, "null output pointer");
  return guarded([&] {
    mrn::SearchOutcome outcome = mrn::decide_colorable(
        parts, part_size, clique_order, stripes, to_budget(budget));
    return wrap_outcome(std::move(outcome), clique_order, stripes, out);
  });
}

int mrn_search_decide_naive(int parts, int part_size, int clique_order,
                            int stripes, long long max_edges,
                            mrn_search** out) {
  if (!out) return fail(MRN_ERR_PARAM, "null output pointer");
  return guarded([&] {
    mrn::SearchOutcome outcome = mrn::decide_colorable_naive(
        parts, part_size, clique_order, stripes, max_edges);
    return wrap_outcome(std::move(outcome), clique_order, stripes, out);
  });
}

void mrn_search_free(mrn_search* search) {
  if (!search) return;
  mrn_coloring_free(search->witness);
  delete search;
}

int mrn_search_status(const mrn_search* search) {
  return search ? search->status : MRN_SEARCH_OUT_OF_BUDGET;
}

const mrn_coloring* mrn_search_witness(const mrn_search* search) {
  return search ? search->witness : nullptr;
}

long long mrn_search_nodes(const mrn_search* search) {
  return search ? search->stats.nodes : 0;
}

long long mrn_search_covers(const mrn_search* search) {
  return search ? search->stats.covers : 0;
}

double mrn_search_seconds(const mrn_search* search) {
  return search ? search->stats.seconds : 0.0;
}

int mrn_search_value(int parts, int clique_order, int stripes, int t_max,
                     const mrn_budget* budget, int* kind, int* value,
                     int* scanned_up_to) {
  if (!kind || !value || !scanned_up_to)
    return fail(MRN_ERR_PARAM, "null output pointer");
  return guarded([&] {
    const mrn::SearchValueResult result = mrn::compute_value_by_search(
        parts, clique_order, stripes, t_max, to_budget(budget));
    switch (result.kind) {
      case mrn::ValueKind::finite:
        *kind = MRN_VALUE_FINITE;
        *value = result.value;
        break;
      case mrn::ValueKind::infinite_evidence:
        *kind = MRN_VALUE_INFINITE_EVIDENCE;
        break;
      case mrn::ValueKind::unresolved:
        *kind = MRN_VALUE_UNRESOLVED;
        break;
    }
    *scanned_up_to = result.scanned_up_to;
    return MRN_OK;
  });
}

int mrn_format_table(int clique_order, int parts_lo, int parts_hi,
                     int stripes_lo, int stripes_hi, int format, char** out) {
  if (!out) return fail(MRN_ERR_PARAM, "null output pointer");
  if (format != MRN_TABLE_MARKDOWN && format != MRN_TABLE_CSV)
    return fail(MRN_ERR_PARAM, "format must be 0 (markdown) or 1 (csv)");
  return guarded([&] {
    const std::string text = mrn::format_value_table(
        clique_order, parts_lo, parts_hi, stripes_lo, stripes_hi,
        format == MRN_TABLE_MARKDOWN ? mrn::TableFormat::markdown
                                     : mrn::TableFormat::csv);
    return deliver_string(text, out);
  });
}

}  // extern "C"

/* Size multipartite Ramsey numbers m_j(K_m, nK_2): closed-form values,
 * extremal coloring construction and verification, and exhaustive search
 * over small hosts. C interface over an internal C++ core.
 *
 * Conventions: every fallible call returns MRN_OK or an MRN_ERR_* code and
 * leaves a message for mrn_last_error(); out parameters are written only
 * on MRN_OK. Objects handed out through ** out parameters are owned by
 * the caller and released with the matching mrn_*_free.
 */
#ifndef MRN_H
#define MRN_H

#ifdef __cplusplus
extern "C" {
#endif

#define MRN_OK 0
#define MRN_ERR_PARAM 1       /* invalid argument */
#define MRN_ERR_PARSE 2       /* malformed coloring document */
#define MRN_ERR_UNSUPPORTED 3 /* instance outside an engine's limits */

/* Message for the most recent failure on this thread; never NULL. */
const char* mrn_last_error(void);

const char* mrn_version(void);

/* ---- closed form ------------------------------------------------- */

/* m_j(K_m, nK_2). *finite gets 0 or 1; *value gets the least sufficient
 * part size when finite. */
int mrn_value(int parts, int clique_order, int stripes, int* finite,
              int* value);

#define MRN_REGIME_INFINITE_FEW_PARTS 0
#define MRN_REGIME_DIAGONAL 1
#define MRN_REGIME_SUBDIAGONAL_SMALL_N 2
#define MRN_REGIME_GENERAL 3

/* Parameter regime and the statement label the value comes from (for
 * example "Theorem t3"). The label stays valid until the next
 * mrn_classify call on the same thread; do not free it. */
int mrn_classify(int parts, int clique_order, int stripes, int* regime,
                 const char** theorem);

/* Vertex and edge counts of the host K_{j x t}. */
int mrn_shape_counts(int parts, int part_size, long long* vertices,
                     long long* edges);

/* ---- colorings ----------------------------------------------------
 * A coloring assigns color 1 or 2 to every cross-part edge of K_{j x t}.
 * Edges are indexed by rank: lexicographic over pairs (u, v), u < v, with
 * intra-part pairs skipped; vertex ids are part-major (v = part * t +
 * slot). The document form is three LF-terminated lines:
 *
 *   MRN1
 *   j=5 t=1 m=4 n=3
 *   colors=1111111222
 *
 * where the m=/n= pair is optional.
 */

typedef struct mrn_coloring mrn_coloring;

void mrn_coloring_free(mrn_coloring* coloring);

int mrn_coloring_parts(const mrn_coloring* coloring);
int mrn_coloring_part_size(const mrn_coloring* coloring);
long long mrn_coloring_edge_count(const mrn_coloring* coloring);
/* Color (1 or 2) of the edge with this rank; 0 when the rank is out of
 * range. */
int mrn_coloring_color_at(const mrn_coloring* coloring, long long rank);
/* Targets carried by the coloring (from its document header or builder).
 * Returns 1 and fills the outputs when present, else returns 0. */
int mrn_coloring_targets(const mrn_coloring* coloring, int* clique_order,
                         int* stripes);

int mrn_coloring_parse(const char* text, mrn_coloring** out);
/* Serialized document; release with mrn_string_free. */
int mrn_coloring_serialize(const mrn_coloring* coloring, char** out);
void mrn_string_free(char* text);

/* Extremal coloring of K_{j x (t* - 1)} where t* is the closed-form
 * value; fails when the value is infinite. */
int mrn_witness_build(int parts, int clique_order, int stripes,
                      mrn_coloring** out);
/* All-color-1 coloring of K_{j x part_size}; good for every stripe count
 * when j <= m - 1, the only regime accepted. */
int mrn_witness_infinite(int parts, int clique_order, int stripes,
                         int part_size, mrn_coloring** out);

/* ---- verification -------------------------------------------------
 * A coloring is good for targets (m, n) when color 1 holds no K_m and
 * color 2 holds no n pairwise disjoint edges.
 */

typedef struct mrn_report mrn_report;

int mrn_verify(const mrn_coloring* coloring, int clique_order, int stripes,
               mrn_report** out);
void mrn_report_free(mrn_report* report);

int mrn_report_good(const mrn_report* report);
int mrn_report_omega1(const mrn_report* report); /* clique no., color 1 */
int mrn_report_nu2(const mrn_report* report);    /* matching no., color 2 */
/* Certificates when a target is hit: a K_m in color 1 as clique_order
 * vertex ids, n disjoint color-2 edges as endpoint pairs. Sizes are 0
 * when the certificate is absent; the vertex accessor returns -1 and the
 * edge accessor MRN_ERR_PARAM on a bad index. */
int mrn_report_clique_size(const mrn_report* report);
int mrn_report_clique_vertex(const mrn_report* report, int index);
int mrn_report_matching_size(const mrn_report* report);
int mrn_report_matching_edge(const mrn_report* report, int index, int* u,
                             int* v);

/* ---- exhaustive search -------------------------------------------- */

typedef struct {
  long long max_nodes; /* colored-edge attempts; -1: unlimited */
  double max_seconds;  /* wall clock; -1: unlimited */
  int threads;         /* <= 1: single-threaded */
} mrn_budget;

#define MRN_SEARCH_COLORABLE 0
#define MRN_SEARCH_NOT_COLORABLE 1
#define MRN_SEARCH_OUT_OF_BUDGET 2

typedef struct mrn_search mrn_search; /* one finished search */

/* Does K_{j x t} admit a good coloring for (m, n)? Exhaustive over cover
 * profiles; NULL budget means unlimited, single-threaded. */
int mrn_search_decide(int parts, int part_size, int clique_order,
                      int stripes, const mrn_budget* budget,
                      mrn_search** out);
/* Same decision brute-forced over all 2^E colorings; shapes with more
 * than max_edges edges (at most 62) are rejected as MRN_ERR_UNSUPPORTED. */
int mrn_search_decide_naive(int parts, int part_size, int clique_order,
                            int stripes, long long max_edges,
                            mrn_search** out);
void mrn_search_free(mrn_search* search);

int mrn_search_status(const mrn_search* search);
/* Witness coloring when colorable, else NULL. Owned by the search
 * object; do not free separately. */
const mrn_coloring* mrn_search_witness(const mrn_search* search);
long long mrn_search_nodes(const mrn_search* search);
long long mrn_search_covers(const mrn_search* search);
double mrn_search_seconds(const mrn_search* search);

#define MRN_VALUE_FINITE 0
#define MRN_VALUE_INFINITE_EVIDENCE 1
#define MRN_VALUE_UNRESOLVED 2

/* Scan t = 1..t_max for the least part size admitting no good coloring.
 * *value is written only when *kind is MRN_VALUE_FINITE. */
int mrn_search_value(int parts, int clique_order, int stripes, int t_max,
                     const mrn_budget* budget, int* kind, int* value,
                     int* scanned_up_to);

/* ---- tables -------------------------------------------------------- */

#define MRN_TABLE_MARKDOWN 0
#define MRN_TABLE_CSV 1

/* Closed-form value grid (rows n, columns j); release with
 * mrn_string_free. */
int mrn_format_table(int clique_order, int parts_lo, int parts_hi,
                     int stripes_lo, int stripes_hi, int format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MRN_H */

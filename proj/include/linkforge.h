/* linkforge C API: link-diagram invariants, unlinking-style bounds, and
 * crossing-change search behind opaque handles and status codes.
 *
 * Every function that can fail returns lf_status and reports details through
 * lf_last_error(). Strings returned through char** out-parameters are owned
 * by the caller and must be released with lf_string_free().
 */

#ifndef LINKFORGE_H
#define LINKFORGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef LINKFORGE_API
#define LINKFORGE_API __attribute__((visibility("default")))
#endif

typedef struct lf_diagram lf_diagram;

typedef enum lf_status {
  LF_OK = 0,
  LF_ERR_INPUT = 1,    /* malformed input, unknown ids, bad parameters */
  LF_ERR_CAPACITY = 2, /* monomial or search budget cap exceeded */
  LF_ERR_INTERNAL = 3,
} lf_status;

LINKFORGE_API const char* lf_version(void);
/* Thread-local message describing the most recent failure. */
LINKFORGE_API const char* lf_last_error(void);

/* ---- diagrams ---------------------------------------------------------- */

/* Parse PD text: one statement per line, X(a,b,c,d) tuples, optional
 * "unknots=k", '#' comments. */
LINKFORGE_API lf_status lf_diagram_parse(const char* pd_text, lf_diagram** out);
/* Build a catalog diagram from a spec string such as
 * "fig5a(m=6,k1=trefoil,k2=trefoil)". */
LINKFORGE_API lf_status lf_diagram_from_catalog(const char* spec,
                                                lf_diagram** out);
LINKFORGE_API void lf_diagram_free(lf_diagram* d);

LINKFORGE_API int lf_diagram_components(const lf_diagram* d);
LINKFORGE_API int lf_diagram_crossings(const lf_diagram* d);
LINKFORGE_API int lf_diagram_unknot_components(const lf_diagram* d);

LINKFORGE_API lf_status lf_diagram_serialize(const lf_diagram* d,
                                             char** out_text);
/* Structural invariant check; violations come back as JSON data. */
LINKFORGE_API lf_status lf_diagram_validate(const lf_diagram* d,
                                            char** out_json);
LINKFORGE_API lf_status lf_diagram_apply_changes(const lf_diagram* d,
                                                 const int* crossing_ids,
                                                 size_t count,
                                                 lf_diagram** out);
LINKFORGE_API lf_status lf_crossing_sign(const lf_diagram* d, int crossing_id,
                                         int* out_sign);
LINKFORGE_API lf_status lf_self_writhe(const lf_diagram* d, int component,
                                       int* out_writhe);

/* ---- invariants --------------------------------------------------------- */

/* Fills a row-major n*n matrix; len must be at least n*n. */
LINKFORGE_API lf_status lf_linking_matrix(const lf_diagram* d, int64_t* out,
                                          size_t len);
/* Milnor mu for a 1-based index sequence of length >= 2; the value is the
 * reduced residue in [0, delta) whenever delta > 0. */
LINKFORGE_API lf_status lf_mu(const lf_diagram* d, const int* index_seq,
                              size_t len, int64_t* out_value,
                              int64_t* out_delta);
LINKFORGE_API lf_status lf_mu_trivial_to_length(const lf_diagram* d, int k,
                                                int* out_trivial);
LINKFORGE_API lf_status lf_v2(const lf_diagram* d, int component,
                              int64_t* out_value);
LINKFORGE_API lf_status lf_milnor_table_json(const lf_diagram* d, int k,
                                             char** out_json);

/* ---- bounds ------------------------------------------------------------- */

LINKFORGE_API lf_status lf_cnk_bounds(int n, int k, int64_t* out_lower,
                                      int64_t* out_upper);
LINKFORGE_API lf_status lf_squares_mod8(int residue, int* out_representable);

/* ---- verb-level reports (JSON payloads used by the CLI) ----------------- */

LINKFORGE_API lf_status lf_invariants_json(const lf_diagram* d, int k,
                                           char** out_json);
LINKFORGE_API lf_status lf_bounds_json(const lf_diagram* d, int k,
                                       int min_ordering, char** out_json);
LINKFORGE_API lf_status lf_obstructions_json(const lf_diagram* d,
                                             char** out_json);
/* stable_ms forces the "ms" field to 0 for byte-stable output. */
LINKFORGE_API lf_status lf_search_json(const lf_diagram* d, int k,
                                       int max_budget, int workers,
                                       int stable_ms, char** out_json);
LINKFORGE_API lf_status lf_jin_scan_json(const lf_diagram* d, char** out_json);
LINKFORGE_API lf_status lf_catalog_json(char** out_json);

/* ---- configuration ------------------------------------------------------ */

/* Cap on dense monomial storage (default 10^7). */
LINKFORGE_API lf_status lf_set_capacity(uint64_t max_monomials);
LINKFORGE_API uint64_t lf_capacity(void);

LINKFORGE_API void lf_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* LINKFORGE_H */

/* tropmod: moduli of (extended) tropical curves as generalized cone
 * complexes. C interface over the C++ core: opaque handles, status codes,
 * JSON strings for structured data.
 *
 * Every char** output receives a malloc'd NUL-terminated string owned by the
 * caller; release it with tm_string_free. On any status other than TM_OK,
 * tm_last_error() describes what went wrong (thread-local).
 */
#ifndef TROPMOD_H
#define TROPMOD_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tm_status {
  TM_OK = 0,
  TM_ERR_VERIFY = 1, /* a verification suite reported failures */
  TM_ERR_USAGE = 2,  /* bad parameters, unknown verb/format, schema violation */
  TM_ERR_RANGE = 3,  /* 2g-2+n <= 0, or bound exceeded */
  TM_ERR_INTERNAL = 4
} tm_status;

const char* tm_last_error(void);
void tm_string_free(char* s);

/* Stable graph classes of genus g with n legs.
 * format: "json" (stratum list), "csv" (one row per class, no header:
 * id,edges,vertices,legs,genus,aut_order,monodromy_order) or "dot" (strata
 * poset). Output is deterministic: classes ordered by (dim, canonical form).
 */
tm_status tm_enumerate(int g, int n, const char* format, char** out);

/* M-bar_{g,n}^trop. */
typedef struct tm_space tm_space;
tm_status tm_space_build(int g, int n, tm_space** out);
void tm_space_free(tm_space* s);
int tm_space_genus(const tm_space* s);
int tm_space_legs(const tm_space* s);
int tm_space_num_strata(const tm_space* s);
/* {"g","n","strata":[{"id","graph","dim","monodromy_order"}],"arrows":[...]} */
tm_status tm_space_manifest(const tm_space* s, char** json_out);
/* DOT of the strata poset; nodes labeled "dim:|E| order:|H_G|". */
tm_status tm_space_poset_dot(const tm_space* s, char** dot_out);
/* Canonical moduli point of a curve (curve schema in, point JSON out). */
tm_status tm_space_locate(const tm_space* s, const char* curve_json, char** point_out);

/* Tautological and curve-level maps.
 *
 * verb: forget | section | clutch | glue | clutch-xy | glue-xy |
 *       cover-boundary | quotient | stabilize | naive-trop
 * input_json: curve schema; clutch/clutch-xy take
 *       {"first": <curve>, "second": <curve>}; naive-trop takes the graph
 *       schema plus "valuations".
 * params_json: {"i": <1-based leg>} for section; {"x":"p/q"|"inf","y":...}
 *       for the -xy verbs; may be NULL or "{}" otherwise.
 * Output curves are serialized canonically. forget returns
 * {"curve":...,"point":...}; cover-boundary returns the witness with
 * "roundtrip_equal"; quotient returns the quotient metric graph.
 */
tm_status tm_map_apply(const char* verb, const char* input_json, const char* params_json,
                       char** out_json);

/* Canonical curve JSON (byte-identical for isomorphic curves). */
tm_status tm_curve_canonical(const char* curve_json, char** out_json);

/* Invariant suites over M-bar_{g,n}^trop.
 * suite: all | poset | monodromy | sections | boundary | fibers.
 * bound <= 0 selects the default (4) unless TROPMOD_BOUND is set.
 * Returns TM_OK and a report (one line per check) when everything passes,
 * TM_ERR_VERIFY with the same report when something fails.
 */
tm_status tm_verify(int g, int n, const char* suite, int bound, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* TROPMOD_H */

/* dilatk: set-theoretic dilation toolkit.
 *
 * C interface over the core library. All objects are opaque handles created
 * by *_parse / constructor calls and released with the matching *_free.
 * Every function returns a status code; on failure, dlk_last_error() holds a
 * thread-local message. Strings returned through out-parameters are
 * heap-allocated and must be released with dlk_free_str.
 */
#ifndef DILATK_H
#define DILATK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. DLK_BAD_INPUT covers malformed documents and violated
 * operation preconditions; red verification reports are not errors. */
#define DLK_OK 0
#define DLK_VERIFY_FAIL 1
#define DLK_BAD_INPUT 2
#define DLK_INTERNAL 3

/* Output formats. */
#define DLK_FORMAT_TEXT 0
#define DLK_FORMAT_JSON 1
#define DLK_FORMAT_DOT 2

typedef struct dlk_map dlk_map;       /* structured map on a presented set */
typedef struct dlk_func dlk_func;     /* finite endofunction */
typedef struct dlk_quad dlk_quad;     /* dilation quadruple (B, i, v, p) */
typedef struct dlk_report dlk_report; /* verification report */

const char* dlk_last_error(void);
void dlk_free_str(char* s);

/* --- maps ------------------------------------------------------------- */
int dlk_map_parse(const char* json, dlk_map** out);
void dlk_map_free(dlk_map* m);
int dlk_map_render(const dlk_map* m, int format, long long depth, long long max_nodes,
                   char** out);
/* Injectivity verdict plus the orbit census (JSON or text). */
int dlk_map_classify(const dlk_map* m, int format, char** out);
/* Wandering set and the shift/bijective split. */
int dlk_map_wold(const dlk_map* m, int format, long long depth, long long max_nodes, char** out);

/* --- endofunctions and single-variable dilations ----------------------- */
int dlk_func_parse(const char* json, dlk_func** out);
void dlk_func_free(dlk_func* f);
/* Canonical minimal defect space and the count of all minimal ones. */
int dlk_func_defect_info(const dlk_func* f, int format, char** out);

/* kind: "standard" | "defect" | "halmos" | "unitary". defect may be NULL. */
int dlk_dilate(const dlk_func* h, const char* kind, const int* defect, size_t defect_len,
               dlk_quad** out);
int dlk_quad_parse(const char* json, dlk_quad** out);
void dlk_quad_free(dlk_quad* q);
int dlk_quad_render(const dlk_quad* q, int format, long long depth, long long max_nodes,
                    char** out);
/* base_json may hold an endofunction or a structured map. */
int dlk_verify(const dlk_quad* q, const char* base_json, long long depth, dlk_report** out);

/* --- reports ----------------------------------------------------------- */
int dlk_report_passed(const dlk_report* r); /* 1 = pass, 0 = fail */
int dlk_report_render(const dlk_report* r, int format, char** out);
void dlk_report_free(dlk_report* r);

/* --- intertwining lifts and projections -------------------------------- */
/* s_json: {"table":[...]}. Defect arrays may be NULL for plain lifts. */
int dlk_lift(const char* h1_json, const char* h2_json, const char* s_json, const int* d1,
             size_t d1_len, int use_defects, const int* d2, size_t d2_len, int format,
             char** out);
/* a1/a2: subset documents over the map's set; h_json: {"table":[[elem,elem],...]}
 * or a full map document, NULL for "restriction of v". */
int dlk_sarason(const char* v_json, const char* a1_json, const char* a2_json,
                const char* h_json, int format, char** out);
/* Exhaustive invariant-sandwich search on a finite set. Sets *found. */
int dlk_sandwich_search(const char* v_json, const char* a_json, long long max_size, int* found,
                        char** out);

/* --- multivariable ------------------------------------------------------ */
/* mode: "commuting" | "free". defect may be NULL for the standard space. */
int dlk_multi(const char* family_json, const char* mode, long long depth, const int* defect,
              size_t defect_len, int use_defect, int format, char** out, dlk_report** report);

/* --- normal form for commuting pairs ------------------------------------ */
int dlk_bcl_synth(const char* data_json, int format, char** out);
int dlk_bcl_analyze(const char* v1_json, const char* v2_json, int format, char** out);
/* maps_json: JSON array of map documents. */
int dlk_bcl_multi(const char* maps_json, long long depth, int format, char** out,
                  dlk_report** report);
int dlk_bcl_roundtrip(int wmax, long long depth, int format, char** out, int* passed);

/* --- monoid and linear dilations ---------------------------------------- */
int dlk_monoid(const char* preset, const char* action_json, long long length, int format,
               char** out, dlk_report** report);
/* field: "q" | "gf:<p>". */
int dlk_linear(const char* field, const char* matrix_json, long long depth, int format,
               char** out, dlk_report** report);

/* --- misc ---------------------------------------------------------------- */
/* Auto-detects map or quadruple documents. */
int dlk_export_dot(const char* object_json, long long depth, long long max_nodes, char** out);
int dlk_selftest(unsigned long long seed, int format, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* DILATK_H */

/* C interface to the csx library. All strings returned through char** are
 * heap-allocated and released with csx_string_free. On failure the message
 * is available from csx_last_error() until the next call on the thread. */
#ifndef CSX_H
#define CSX_H

#include <stddef.h>

#if defined(_WIN32)
#define CSX_API __declspec(dllexport)
#else
#define CSX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csx_status {
  CSX_OK = 0,
  CSX_CHECK_FAILED = 1,
  CSX_INVALID_INPUT = 2,
  CSX_RESOURCE_CAP = 3,
  CSX_OVERFLOW = 4,
  CSX_NOT_SIMPLICIAL = 5,
  CSX_INTERNAL = 6
} csx_status;

typedef enum csx_overflow { CSX_OVERFLOW_BIGINT = 0, CSX_OVERFLOW_CHECKED = 1 } csx_overflow;

typedef struct csx_sset csx_sset;

CSX_API const char* csx_last_error(void);
CSX_API void csx_string_free(char* s);

/* Hard cap on truncation: 9, lowered (never raised) by CSX_MAX_DIM. */
CSX_API int csx_max_dim_cap(void);

/* target: S | C | SC | delta:N | twisted:S:N | twisted:C:N | E:<word>
 *         | simplex:N | boundary:N */
CSX_API csx_status csx_sset_build(const char* target, int max_dim, csx_sset** out);
CSX_API csx_status csx_sset_from_json(const char* json, csx_sset** out);
CSX_API void csx_sset_free(csx_sset* x);

CSX_API int csx_sset_max_dim(const csx_sset* x);
CSX_API int csx_sset_is_simplicial(const csx_sset* x);
CSX_API csx_status csx_sset_count(const csx_sset* x, int dim, size_t* total, size_t* nondegenerate);
CSX_API csx_status csx_sset_to_json(const csx_sset* x, char** json);

/* CSX_CHECK_FAILED with the first violation in *message; *message is NULL on success. */
CSX_API csx_status csx_sset_audit(const csx_sset* x, char** message);

/* {"H": [{"betti": b, "torsion": [...]}], "unreliable_top": true} */
CSX_API csx_status csx_homology(const csx_sset* x, csx_overflow policy, char** report_json);

/* Triplet text "dims R C" then "row col value" lines for the normalized
 * boundary C_dim -> C_{dim-1}. */
CSX_API csx_status csx_boundary_matrix(const csx_sset* x, int dim, char** triplets);

/* suite: identities | crossed | lemma | upsilon | all. target may be NULL.
 * report: {"passed": bool, "checks": [{"name", "passed", "cases", "counterexample"}]} */
CSX_API csx_status csx_check(const char* suite, const char* target, int max_dim, char** report_json);

/* Pullback of S* -> SC* along a decoration given as JSON. report holds the
 * total space, square and fiber checks, the Chern cochain and homology. */
CSX_API csx_status csx_bundle_from_decoration(const char* decoration_json, int max_dim, csx_overflow policy,
                                              char** report_json);

/* Same, decorating a base of dimension <= 2 from a 0/1 cochain
 * "id:value,id:value" on its 2-simplices (unlisted ids are 0). */
CSX_API csx_status csx_bundle_from_cochain(const csx_sset* base, const char* cochain, int max_dim,
                                           csx_overflow policy, char** report_json);

/* Decoration JSON (null entries allowed) -> completed decoration JSON, or
 * CSX_CHECK_FAILED with {"obstruction": {"dim", "id", "payload"}}. */
CSX_API csx_status csx_extend_decoration(const char* partial_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif

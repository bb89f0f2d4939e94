#ifndef NCFOCK_H
#define NCFOCK_H

/* C API for the ncfock library: weighted Fock-space operator models,
 * admissibility certification, tuple classification, Berezin kernels,
 * Fourier/Cesaro analysis, multiplier symbols, and Wold decompositions.
 *
 * Conventions:
 *   - Every function returns an ncf_status; NCF_OK is 0.
 *   - Objects are opaque handles released with the matching _free function.
 *   - Structured data crosses the boundary as JSON text in the schemas
 *     documented in the library headers; strings returned through char**
 *     are heap-allocated and must be released with ncf_string_free.
 *   - ncf_last_error() describes the most recent failure in the calling
 *     thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NCF_API __declspec(dllexport)
#else
#define NCF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ncf_status {
  NCF_OK = 0,
  NCF_ERR_INVALID_ARGUMENT = 1,
  NCF_ERR_PARSE = 2,
  NCF_ERR_CONVERGENCE = 3,
  NCF_ERR_DOMAIN = 4,
  NCF_ERR_INTERNAL = 5
} ncf_status;

typedef struct ncf_weights ncf_weights;
typedef struct ncf_tuple ncf_tuple;

NCF_API const char* ncf_version(void);

/* Thread-local message for the last failing call; never NULL. */
NCF_API const char* ncf_last_error(void);

NCF_API void ncf_string_free(char* s);

/* ---- weight families ---------------------------------------------------- */

NCF_API ncf_status ncf_weights_bergman(int n, double s, int degree, ncf_weights** out);
NCF_API ncf_status ncf_weights_dirichlet(int n, double s, int degree, ncf_weights** out);
/* phi_json: Series JSON { "n", "degree", "terms": [...] }. */
NCF_API ncf_status ncf_weights_psi(const char* phi_json, double s, int degree, ncf_weights** out);
/* Weight JSON { "kind", "n", "degree", ... }. */
NCF_API ncf_status ncf_weights_from_json(const char* weights_json, ncf_weights** out);
NCF_API ncf_status ncf_weights_to_json(const ncf_weights* wf, char** out_json);
NCF_API void ncf_weights_free(ncf_weights* wf);

NCF_API ncf_status ncf_weights_n(const ncf_weights* wf, int* out);
NCF_API ncf_status ncf_weights_degree(const ncf_weights* wf, int* out);
/* word: 1-based letters, length len (may be NULL when len = 0). */
NCF_API ncf_status ncf_weights_b(const ncf_weights* wf, const int* word, size_t len, double* out);
NCF_API ncf_status ncf_weights_a(const ncf_weights* wf, const int* word, size_t len, double* out);

/* ---- operator tuples ----------------------------------------------------- */

/* Tuple JSON { "n", "dim", "matrices": [...] }. */
NCF_API ncf_status ncf_tuple_from_json(const char* tuple_json, ncf_tuple** out);
NCF_API ncf_status ncf_tuple_to_json(const ncf_tuple* t, char** out_json);
/* The truncated universal model W at degree N (N <= weight degree). */
NCF_API ncf_status ncf_tuple_model(const ncf_weights* wf, int degree, ncf_tuple** out);
NCF_API void ncf_tuple_free(ncf_tuple* t);

NCF_API ncf_status ncf_tuple_dim(const ncf_tuple* t, int64_t* out);

/* ---- reports -------------------------------------------------------------
 * options_json (NULL for defaults):
 *   { "degree_cap": int, "tol": f, "pure_tol": f, "cuntz_tol": f,
 *     "radial_grid": [f], "seed": uint }
 * Every report carries "schema_version" and, where applicable, a "checks"
 * array with one {name, value, tol, pass} entry per verified identity.      */

NCF_API ncf_status ncf_report_weights(const ncf_weights* wf, char** out_json);
NCF_API ncf_status ncf_report_admissible(const ncf_weights* wf, const char* options_json,
                                         char** out_json);
NCF_API ncf_status ncf_report_classify(const ncf_weights* wf, const ncf_tuple* t,
                                       const char* options_json, char** out_json);
NCF_API ncf_status ncf_report_berezin(const ncf_weights* wf, const ncf_tuple* t,
                                      const char* options_json, char** out_json);
NCF_API ncf_status ncf_report_hardy(const ncf_weights* wf, const char* options_json,
                                    char** out_json);
/* symbol_json may be NULL: a seeded random symbol is used. */
NCF_API ncf_status ncf_report_multiplier(const ncf_weights* wf, const char* symbol_json,
                                         const char* options_json, char** out_json);
NCF_API ncf_status ncf_report_wold(const ncf_weights* wf, const ncf_tuple* t,
                                   const char* options_json, char** out_json);
NCF_API ncf_status ncf_report_selftest(int n, int degree, uint64_t seed, char** out_json);

/* 1 when every check in the report passed, 0 otherwise, -1 on parse error. */
NCF_API int ncf_report_all_checks_pass(const char* report_json);

#ifdef __cplusplus
}
#endif

#endif /* NCFOCK_H */

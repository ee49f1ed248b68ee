/* numrad — operator-inequality toolkit, C interface.
 *
 * Opaque handles plus status codes. Structured inputs and outputs cross the
 * boundary as JSON / CSV strings; every string returned through a char**
 * must be released with nr_string_free. Error details for the last failing
 * call on the current thread are available via nr_last_error.
 */
#ifndef NUMRAD_H
#define NUMRAD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nr_status {
  NR_OK = 0,
  NR_ERR_INVALID_ARGUMENT = 1,
  NR_ERR_PARSE = 2,
  NR_ERR_DIMENSION_MISMATCH = 3,
  NR_ERR_NOT_HERMITIAN = 4,
  NR_ERR_NOT_PSD = 5,
  NR_ERR_DOMAIN = 6,
  NR_ERR_NO_CONVERGENCE = 7,
  NR_ERR_CAP_EXCEEDED = 8,
  NR_ERR_SHAPE_MISMATCH = 9,
  NR_ERR_UNKNOWN_ID = 10,
  NR_ERR_CONDITION_UNSATISFIABLE = 11,
  NR_ERR_INCONCLUSIVE = 12,
  NR_ERR_INTERNAL = 13
} nr_status;

typedef struct nr_matrix nr_matrix;

/* --- lifecycle -------------------------------------------------------- */

/* entries: n*n complex values, row-major, interleaved (re, im). */
nr_status nr_matrix_create(int n, const double* entries, nr_matrix** out);

/* {"n": <int>, "entries": [[[re,im], ...], ...]} */
nr_status nr_matrix_from_json(const char* json_text, nr_matrix** out);
nr_status nr_matrix_to_json(const nr_matrix* m, char** out_json);

int nr_matrix_dim(const nr_matrix* m);
void nr_matrix_free(nr_matrix* m);
void nr_string_free(char* s);

/* --- scalar quantities ------------------------------------------------ */

/* quantity: "w" | "wmin" | "norm" | "ell" | "r" | "range-area".
 * NR_ERR_INCONCLUSIVE marks an unconverged spectral-radius estimate; the
 * best estimate is still stored in *out. */
nr_status nr_compute(const nr_matrix* m, const char* quantity, double* out);

/* --- structured operations -------------------------------------------- */

/* CSV "theta,re,im" with points rows, 17 significant digits. */
nr_status nr_range_boundary_csv(const nr_matrix* m, int points, char** out_csv);

/* Expansion of (a+b)^n into binomial terms, as JSON. */
nr_status nr_expand_binomial_json(const nr_matrix* a, const nr_matrix* b, int n,
                                  char** out_json);

/* config: {"seed":u64, "ids":[...]|"all", "dims":[lo,hi], "trials":int,
 *          "ensembles":"default"|[...]}
 * Writes the suite report; *any_fail is set to 1 when an established entry
 * recorded a violation (findings on novel entries do not count). */
nr_status nr_verify_json(const char* config_json, char** out_report_json,
                         int* any_fail);

/* config: {"id":..., "seed":u64, "dims":[lo,hi], "budget":int,
 *          "ensemble":name?, "alpha":num?, "p":num?, "n":int?}
 * Emits the best evaluation report found. */
nr_status nr_search_json(const char* config_json, char** out_report_json);

/* Single evaluation of one registry entry against explicit matrices.
 * params_json may pin "alpha", "p", "n". States, when the entry needs
 * them, are drawn from the stream keyed by (seed, id, 0). */
nr_status nr_evaluate_json(const char* id, const nr_matrix* const* matrices,
                           size_t n_matrices, const char* params_json,
                           unsigned long long seed, char** out_report_json);

/* --- metadata ---------------------------------------------------------- */

/* JSON array of {"id":..., "status":..., "anchor":..., "summary":...}. */
nr_status nr_registry_json(char** out_json);

const char* nr_status_name(nr_status s);

/* Message of the last failing call on this thread ("" when none). */
const char* nr_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* NUMRAD_H */

/* Public C interface to the higher Bruhat order library.
 *
 * Conventions:
 *   - Every fallible function returns an hbo_status; HBO_OK is 0.
 *   - On failure, hbo_last_error() returns a message for the calling thread.
 *   - Strings returned through char** out-parameters are heap-allocated and
 *     must be released with hbo_string_free().
 *   - Handles returned through ** out-parameters must be released with the
 *     matching *_free() function.  Out-parameters are untouched on failure.
 *   - Elements are exchanged as JSON: {"n": int, "d": int, "inv": [[int..]..]}.
 *   - budget caps the number of search nodes; pass 0 for the default
 *     (10,000,000 nodes).
 */

#ifndef HBO_H
#define HBO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hbo_status {
  HBO_OK = 0,
  HBO_ERROR_INVALID_ARGUMENT = 1,
  HBO_ERROR_BUDGET_EXCEEDED = 2,
  HBO_ERROR_PARSE = 3,
  HBO_ERROR_INTERNAL = 4
} hbo_status;

/* One element of a higher Bruhat order B(n, d). */
typedef struct hbo_element hbo_element;

/* A fully enumerated order B(n, d), elements in canonical sequence. */
typedef struct hbo_poset hbo_poset;

const char* hbo_version(void);

/* Message for the most recent failure on this thread; "" when none. */
const char* hbo_last_error(void);

void hbo_string_free(char* s);

/* ---- elements ---------------------------------------------------------- */

hbo_status hbo_element_parse(const char* json, hbo_element** out);
hbo_status hbo_element_minimal(int n, int d, hbo_element** out);
hbo_status hbo_element_maximal(int n, int d, hbo_element** out);
hbo_status hbo_element_to_json(const hbo_element* e, char** out);
/* *out = 1 when a <= b (inversion-set containment), else 0. */
hbo_status hbo_element_leq(const hbo_element* a, const hbo_element* b, int* out);
void hbo_element_free(hbo_element* e);

/* Interval-criterion report for an element given as JSON; the report lists
 * the violating packets, so invalid inversion sets still return HBO_OK. */
hbo_status hbo_validate_json(const char* element_json, char** out_report);

/* ---- insertion and composition ----------------------------------------- */

/* The insertion lhs o_j rhs; 0 <= j <= n - d. */
hbo_status hbo_insert(const hbo_element* lhs, const hbo_element* rhs, int j,
                      hbo_element** out);
/* Request {"lhs": element, "rhs": element, "j": int} -> element JSON. */
hbo_status hbo_insert_json(const char* request_json, char** out_element_json);

/* Request {"mode": "master"|"sym"|"team"|"small"|"big",
 *          "head": ..., "parts": [...]} -> result JSON in the same mode. */
hbo_status hbo_compose_json(const char* request_json, char** out_json);

/* ---- enumeration and structure ----------------------------------------- */

hbo_status hbo_poset_enumerate(int n, int d, uint64_t budget, hbo_poset** out);
size_t hbo_poset_size(const hbo_poset* p);
hbo_status hbo_poset_element(const hbo_poset* p, size_t index, hbo_element** out);
void hbo_poset_free(hbo_poset* p);

hbo_status hbo_enumerate_json(int n, int d, uint64_t budget, char** out);
/* Cross-check of the enumeration against the independent admissible-order
 * oracle; the JSON report carries both counts and a "match" flag. */
hbo_status hbo_oracle_json(int n, int d, uint64_t budget, char** out);
hbo_status hbo_hasse_json(int n, int d, uint64_t budget, char** out);
hbo_status hbo_hasse_dot(int n, int d, uint64_t budget, char** out);
/* All maximal chains plus the linear orders they induce one level up. */
hbo_status hbo_chains_json(int n, int d, uint64_t budget, char** out);

/* ---- law suites --------------------------------------------------------- */

/* Comma-separated suite names. */
hbo_status hbo_law_suite_names(char** out_csv);
/* names_csv selects suites (NULL or "" = all); seed drives the randomized
 * suite.  Returns HBO_OK even when identities fail; the report says which. */
hbo_status hbo_laws_json(const char* names_csv, uint64_t seed, uint64_t budget,
                         char** out);
hbo_status hbo_laws_text(const char* names_csv, uint64_t seed, uint64_t budget,
                         char** out);

#ifdef __cplusplus
}
#endif

#endif /* HBO_H */

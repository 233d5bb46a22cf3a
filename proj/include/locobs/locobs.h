/*
 * C interface to the local obstruction library.
 *
 * Every function returns a locobs_status. On failure the message for the
 * calling thread is available from locobs_last_error() until the next call
 * on that thread. Strings handed out through char** parameters are owned by
 * the caller and released with locobs_string_free(). Handles are released
 * with their matching *_free function; passing NULL to a free function is a
 * no-op.
 */
#ifndef LOCOBS_LOCOBS_H
#define LOCOBS_LOCOBS_H

#include <stddef.h>
#include <stdint.h>

#if defined(LOCOBS_BUILDING_LIBRARY)
#define LOCOBS_API __attribute__((visibility("default")))
#else
#define LOCOBS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum locobs_status {
  LOCOBS_OK = 0,
  LOCOBS_ERROR_NULL_ARGUMENT = 1,
  LOCOBS_ERROR_PARSE = 2,
  LOCOBS_ERROR_VALIDATION = 3,
  LOCOBS_ERROR_DIMENSION = 4,
  LOCOBS_ERROR_DEGENERATE = 5,
  LOCOBS_ERROR_NOT_RESOLUTION_GRAPH = 6,
  LOCOBS_ERROR_INTERNAL = 7
} locobs_status;

typedef enum locobs_verdict {
  LOCOBS_VERDICT_COMPATIBLE = 0,
  LOCOBS_VERDICT_ORDER_ONLY_MATCH = 1,
  LOCOBS_VERDICT_MISMATCH = 2,
  LOCOBS_VERDICT_SINGLE_ROUTE = 3
} locobs_verdict;

typedef struct locobs_report locobs_report;
typedef struct locobs_matrix locobs_matrix;

LOCOBS_API const char* locobs_version(void);
LOCOBS_API const char* locobs_status_string(locobs_status status);
LOCOBS_API const char* locobs_last_error(void);
LOCOBS_API void locobs_string_free(char* s);

/* Reports. spec_json is a singularity document such as
 * {"kind":"cyclic_quotient","n":5,"q":2}. */
LOCOBS_API locobs_status locobs_report_compute(const char* spec_json, locobs_report** out);
/* Rebuilds a report from the output of locobs_report_json. */
LOCOBS_API locobs_status locobs_report_parse_json(const char* report_json, locobs_report** out);
LOCOBS_API void locobs_report_free(locobs_report* report);
LOCOBS_API locobs_status locobs_report_verdict(const locobs_report* report, locobs_verdict* out);
LOCOBS_API locobs_status locobs_report_text(const locobs_report* report, char** out);
LOCOBS_API locobs_status locobs_report_json(const locobs_report* report, char** out);
/* "Z/d1 + Z/d2 + ..." agreed on by the routes, or "0"; LOCOBS_ERROR_VALIDATION
 * when the routes disagree or only an undetermined order is known. */
LOCOBS_API locobs_status locobs_report_group(const locobs_report* report, char** out);

/* Table reproduction. all_match receives 1 when every cell agrees with the
 * reference values. */
LOCOBS_API locobs_status locobs_tables(int as_json, char** out, int* all_match);
/* Cross-realization corpus. mismatches receives the number of MISMATCH
 * verdicts. */
LOCOBS_API locobs_status locobs_selfcheck(int as_json, char** out, size_t* mismatches);

/* Integer matrices, row-major. */
LOCOBS_API locobs_status locobs_matrix_create(size_t rows, size_t cols, const int64_t* entries,
                                              locobs_matrix** out);
LOCOBS_API void locobs_matrix_free(locobs_matrix* m);
/* Decimal string, sign included. */
LOCOBS_API locobs_status locobs_matrix_determinant(const locobs_matrix* m, char** out);
/* Space-separated diagonal of the Smith normal form, unit factors included. */
LOCOBS_API locobs_status locobs_matrix_invariant_factors(const locobs_matrix* m, char** out);
LOCOBS_API locobs_status locobs_matrix_cokernel(const locobs_matrix* m, char** torsion,
                                                size_t* free_rank);

#ifdef __cplusplus
}
#endif

#endif /* LOCOBS_LOCOBS_H */

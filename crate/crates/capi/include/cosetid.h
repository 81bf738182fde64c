#ifndef COSETID_H
#define COSETID_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Call outcome; `CID_OK` is zero, everything else is an error.
 */
typedef enum CidStatus {
  CidOk = 0,
  CidNullArgument = 1,
  CidInvalidUtf8 = 2,
  CidInvalidSpec = 3,
  CidCapExceeded = 4,
  CidOutOfRange = 5,
  CidInternal = 6,
} CidStatus;

/**
 * Opaque query report handle.
 */
typedef struct CidReport CidReport;

/**
 * ABI revision; bumped on any breaking change to this surface.
 */
uint32_t cid_abi_version(void);

/**
 * Static description of a status code.
 */
const char *cid_status_message(enum CidStatus status);

/**
 * Copy of the last error message on this thread, or NULL if none.
 * Release with [`cid_string_free`].
 */
enum CidStatus cid_last_error(char **out);

/**
 * Solve a problem given as JSON (the same document the CLI accepts with
 * `--spec`), evaluating query counts `1..=t_max`. On success writes a
 * report handle to `out_report`; release it with [`cid_report_free`].
 */
enum CidStatus cid_solve(const char *problem_json, uint32_t t_max, struct CidReport **out_report);

/**
 * Full report as JSON. Release the string with [`cid_string_free`].
 */
enum CidStatus cid_report_json(const struct CidReport *report, char **out);

/**
 * Exact query complexity: the count itself, -1 when provably infinite,
 * -2 when undecided at the iteration cap.
 */
enum CidStatus cid_report_gamma(const struct CidReport *report, int64_t *out);

/**
 * Bounded-error query complexity under the report's threshold; same
 * encoding as [`cid_report_gamma`].
 */
enum CidStatus cid_report_gamma_bdd(const struct CidReport *report, int64_t *out);

/**
 * Exact success probability at `t` queries as a "num/den" string.
 * Release the string with [`cid_string_free`].
 */
enum CidStatus cid_report_probability(const struct CidReport *report, uint32_t t, char **out);

/**
 * Classical base size when the problem came from a permutation action;
 * -1 when not applicable.
 */
enum CidStatus cid_report_base_size(const struct CidReport *report, int64_t *out);

/**
 * Build, validate and serialize the character table of a family group
 * given as GroupSpec JSON. Release the string with [`cid_string_free`].
 */
enum CidStatus cid_char_table_json(const char *group_json, char **out);

/**
 * Release a report handle.
 */
void cid_report_free(struct CidReport *report);

/**
 * Release a string produced by this library.
 */
void cid_string_free(char *s);

#endif  /* COSETID_H */

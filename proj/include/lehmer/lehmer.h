#ifndef LEHMER_LEHMER_H
#define LEHMER_LEHMER_H

/* C interface to the library. Objects are opaque and owned by the caller
 * once returned; free them with the matching *_free function. Strings
 * returned by accessors live as long as the object they came from.
 *
 * Every function returning lel_status records a message retrievable with
 * lel_last_error() on the calling thread when the status is not LEL_OK. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lel_status {
  LEL_OK = 0,
  LEL_COUNTEREXAMPLE = 1, /* a check found a counterexample or was inconclusive */
  LEL_INVALID_INPUT = 2,
  LEL_IO_ERROR = 3,
  LEL_CORRUPT_CHECKPOINT = 4,
  LEL_CONSISTENCY_ERROR = 5, /* two independent computations disagreed */
  LEL_INTERNAL_ERROR = 6
} lel_status;

/* Negative fields mean "not given": each operation then uses its default. */
typedef struct lel_params {
  long upto;          /* index count N; rows / checks cover n < N */
  long k;             /* power of the modulus, or Delta index */
  long m;             /* incomplete bound */
  long r;             /* higher-order step */
  long alpha;         /* higher-order order */
  const char* method; /* NULL for the default method */
  unsigned jobs;      /* worker threads for verification; 0 means 1 */
} lel_params;

typedef struct lel_table lel_table;
typedef struct lel_report lel_report;

typedef struct lel_check_info {
  const char* name;
  const char* theorem_id;
  const char* range_checked;
  const char* status; /* "verified", "counterexample" or "inconclusive" */
  int has_index;
  uint64_t counterexample_index;
  const char* note;
  double seconds;
  size_t witness_count;
} lel_check_info;

const char* lel_version(void);
const char* lel_last_error(void);

void lel_params_init(lel_params* params);

/* Table kinds: w, w-le, w-ge, higher, e, t, T, delta. Cells are decimal
 * integers, "p/q" rationals, or polynomial text. */
lel_status lel_compute_table(const char* kind, const lel_params* params, lel_table** out);
const char* lel_table_kind(const lel_table* table);
size_t lel_table_columns(const lel_table* table);
const char* lel_table_column_name(const lel_table* table, size_t column);
size_t lel_table_rows(const lel_table* table);
const char* lel_table_cell(const lel_table* table, size_t row, size_t column);
/* Echo of the resolved parameters as "name=value" pairs. */
size_t lel_table_param_count(const lel_table* table);
const char* lel_table_param(const lel_table* table, size_t index);
void lel_table_free(lel_table* table);

/* Suites: all, methods, mod9, mod27, mod81, cycles, conjecture, stern,
 * incomplete, higher, cfn, thm5, thm6. Returns LEL_OK when every check
 * verified, LEL_COUNTEREXAMPLE otherwise (the report is still produced). */
lel_status lel_verify(const char* suite, const lel_params* params, lel_report** out);

/* Conjecture scan for params->k over n < params->upto. With a checkpoint
 * path, indices already verified for the same k are skipped and the file
 * is rewritten with the new high-water mark. */
lel_status lel_scan(const lel_params* params, const char* checkpoint_path, lel_report** out);

const char* lel_report_name(const lel_report* report);
int lel_report_passed(const lel_report* report);
size_t lel_report_checks(const lel_report* report);
lel_status lel_report_check(const lel_report* report, size_t index, lel_check_info* out);
const char* lel_report_witness(const lel_report* report, size_t check, size_t index);
size_t lel_report_param_count(const lel_report* report);
const char* lel_report_param(const lel_report* report, size_t index);
void lel_report_free(lel_report* report);

#ifdef __cplusplus
}
#endif

#endif /* LEHMER_LEHMER_H */

#ifndef EXAMTT_H
#define EXAMTT_H

/* C interface of the exam timetabling solver library.
 *
 * Handles are opaque; every fallible call returns an examtt_status and
 * leaves a message for the calling thread in examtt_last_error(). Exams and
 * slots are 1-based at this boundary, matching the data files.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum examtt_status {
  EXAMTT_OK = 0,
  EXAMTT_ERR_INVALID_ARGUMENT = 1,
  EXAMTT_ERR_PARSE = 2,
  EXAMTT_ERR_IO = 3,
  EXAMTT_ERR_RUNTIME = 4
} examtt_status;

typedef struct examtt_instance examtt_instance;
typedef struct examtt_config examtt_config;
typedef struct examtt_result examtt_result;

/* Message of the most recent failure on the calling thread; never NULL. */
const char* examtt_last_error(void);

/* ---- Instances ------------------------------------------------------- */

/* Loads a .stu file. crs_path may be NULL or empty; when given, enrollment
 * counts are cross-checked and disagreements recorded as warnings. */
examtt_status examtt_instance_load(const char* stu_path, const char* crs_path, const char* name,
                                   int slot_count, examtt_instance** out);
void examtt_instance_free(examtt_instance* inst);

int examtt_instance_exam_count(const examtt_instance* inst);
int examtt_instance_slot_count(const examtt_instance* inst);
int examtt_instance_student_count(const examtt_instance* inst);
long long examtt_instance_enrollment(const examtt_instance* inst);
double examtt_instance_conflict_density(const examtt_instance* inst);
size_t examtt_instance_warning_count(const examtt_instance* inst);
const char* examtt_instance_warning(const examtt_instance* inst, size_t i);

/* ---- Configuration ---------------------------------------------------- */

/* String key-value configuration, validated as it is set.
 *
 * Keys: algorithm (parhga|prihga|multls|pure-parhga|pure-prihga),
 * time_limit, seed, max_generations, work_units_per_second, population,
 * hybridization, init_rule (min|dist), heuristic_init_fraction, ls
 * (none|vdls|vdls+hhls), selection_fraction, migration_fraction,
 * elite_key_probability, completion_rule (min|dist), constructor (min|dist),
 * w_conflict, hhls_iterations, hhls_stall, llh4_merge, lamarckian,
 * ls_on_offspring, preserve_source_slot, threads.
 */
examtt_status examtt_config_new(examtt_config** out);
void examtt_config_free(examtt_config* cfg);
examtt_status examtt_config_set(examtt_config* cfg, const char* key, const char* value);

/* ---- Running ----------------------------------------------------------- */

examtt_status examtt_run(const examtt_instance* inst, const examtt_config* cfg,
                         examtt_result** out);

/* Best-of-N construction batch: N independent samples with the given rule.
 * best_cost is the best proximity average among feasible samples and only
 * meaningful when *has_feasible is nonzero. */
examtt_status examtt_construct(const examtt_instance* inst, const char* rule, int samples,
                               uint64_t seed, double* best_cost, int* feasible_count,
                               int* has_feasible);

/* ---- Results ----------------------------------------------------------- */

void examtt_result_free(examtt_result* res);
const char* examtt_result_algorithm(const examtt_result* res);
double examtt_result_best_cost(const examtt_result* res);
double examtt_result_best_penalized(const examtt_result* res);
int examtt_result_best_feasible(const examtt_result* res);
uint64_t examtt_result_generations(const examtt_result* res);
double examtt_result_wall_seconds(const examtt_result* res);
double examtt_result_real_seconds(const examtt_result* res);
double examtt_result_init_best_penalized(const examtt_result* res);

/* Counter names: vdls_calls, hhls_calls, init_ls_calls, offspring_ls_calls,
 * migrant_ls_calls, crossovers. */
examtt_status examtt_result_counter(const examtt_result* res, const char* name, uint64_t* out);

size_t examtt_result_trace_size(const examtt_result* res);
examtt_status examtt_result_trace_point(const examtt_result* res, size_t i, double* seconds,
                                        double* cost);

/* Fills slots[0..exam_count) with the best solution's 1-based slot of each
 * exam. capacity must be at least the instance's exam count. */
examtt_status examtt_result_assignment(const examtt_result* res, int32_t* slots, size_t capacity);

/* ---- Utilities --------------------------------------------------------- */

examtt_status examtt_rpd(double val, double best, double* out);

/* Two-sided Mann-Whitney U test; u is the first sample's statistic. */
examtt_status examtt_mann_whitney(const double* xs, size_t n1, const double* ys, size_t n2,
                                  double* u, double* p);

/* Deterministic stream splitting; a NULL label counts as empty. */
uint64_t examtt_derive_seed(uint64_t master, const char* label, uint64_t index);

/* Looks a key up in a "<name> <value>" table file ('#' starts a comment).
 * Missing file: EXAMTT_ERR_IO; missing key: EXAMTT_ERR_INVALID_ARGUMENT. */
examtt_status examtt_table_lookup(const char* path, const char* key, double* out);

#ifdef __cplusplus
}
#endif

#endif

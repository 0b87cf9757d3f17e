/* C interface to the verification library. All functions returning a pointer
 * return NULL on failure and set a thread-local error message retrievable via
 * cf_last_error(); functions returning int return 0 on success. Strings
 * returned as char* are owned by the caller and released with cf_string_free.
 */
#ifndef CLIFFORDFORGE_H
#define CLIFFORDFORGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cf_options cf_options;
typedef struct cf_report cf_report;

const char* cf_version(void);

/* message from the most recent failing call on this thread, NULL if the most
 * recent call succeeded */
const char* cf_last_error(void);

/* Suite options: group order bound, primes, seed, worker count, per-entry
 * timing. Defaults: max_order 12, primes {3,5,7}, seed 0, jobs 1, timing off. */
cf_options* cf_options_new(void);
void cf_options_free(cf_options* opt);
int cf_options_set_max_order(cf_options* opt, uint32_t max_order);
int cf_options_set_primes(cf_options* opt, const uint32_t* primes, size_t count);
int cf_options_set_seed(cf_options* opt, uint64_t seed);
int cf_options_set_jobs(cf_options* opt, uint32_t jobs);
int cf_options_set_timing(cf_options* opt, int enabled);

/* newline-separated suite identifiers accepted by cf_run_suite */
char* cf_suite_names(void);

/* "<name> <order>" per catalog group, one per line */
char* cf_catalog_text(uint32_t max_order);

/* run a verification suite; NULL opt means defaults */
cf_report* cf_run_suite(const char* suite_id, const cf_options* opt);

/* load and run a scenario description file */
cf_report* cf_run_scenario_file(const char* path, uint64_t seed, int timing);

/* rebuild a report from its JSON rendering */
cf_report* cf_report_load(const char* json_text);

/* format is "text" or "json" */
char* cf_report_render(const cf_report* rep, const char* format);

size_t cf_report_entry_count(const cf_report* rep);
size_t cf_report_pass_count(const cf_report* rep);
size_t cf_report_fail_count(const cf_report* rep);
size_t cf_report_info_count(const cf_report* rep);
int cf_report_all_pass(const cf_report* rep); /* 1 when no entry failed */

void cf_report_free(cf_report* rep);
void cf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CLIFFORDFORGE_H */

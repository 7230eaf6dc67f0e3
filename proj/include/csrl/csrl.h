#ifndef CSRL_CSRL_H
#define CSRL_CSRL_H

/* C interface to the CSRL library. Every call returns a status code; on
 * failure csrl_last_error() describes the problem (per thread). Strings
 * returned through char** out-parameters belong to the caller and are
 * released with csrl_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CSRL_API __declspec(dllexport)
#else
#define CSRL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csrl_status {
    CSRL_OK = 0,
    CSRL_INVALID_ARGUMENT = 1,
    CSRL_CONFIG = 2,
    CSRL_IO = 3,
    CSRL_VERIFICATION = 4,
    CSRL_RUNTIME = 5
} csrl_status;

typedef struct csrl_experiment csrl_experiment;
typedef struct csrl_restriction_set csrl_restriction_set;

CSRL_API const char* csrl_last_error(void);
CSRL_API const char* csrl_version(void);
CSRL_API void csrl_string_free(char* s);

/* Experiments */
CSRL_API csrl_status csrl_experiment_load(const char* config_path, csrl_experiment** out);
/* Relative paths inside the document resolve against base_dir (NULL = "."). */
CSRL_API csrl_status csrl_experiment_from_json(const char* json, const char* base_dir, csrl_experiment** out);
CSRL_API void csrl_experiment_free(csrl_experiment* exp);
/* Seeds 0..n-1. */
CSRL_API csrl_status csrl_experiment_set_seeds(csrl_experiment* exp, size_t n);
CSRL_API csrl_status csrl_experiment_set_output(csrl_experiment* exp, const char* dir);
/* Sets a config value by dotted key, e.g. ("meta.t_l", "0.25"). */
CSRL_API csrl_status csrl_experiment_set_param(csrl_experiment* exp, const char* dotted_key, const char* json_value);
/* Runs every seed and writes the output directory if one is set. When
 * summary_json is non-NULL it receives the summary document. */
CSRL_API csrl_status csrl_experiment_run(csrl_experiment* exp, char** summary_json);
/* One run per value of meta.<param> under <output>/<param>=<value>/. */
CSRL_API csrl_status csrl_sweep(csrl_experiment* exp, const char* param, const char* const* values, size_t count);

/* Recomputes metrics from <dir>/records.csv. window 0 takes the window
 * recorded in <dir>/summary.json (100 if absent). baseline_dir may be NULL. */
CSRL_API csrl_status csrl_metrics(const char* dir, const double* fractions, size_t num_fractions, size_t window,
                                  const char* baseline_dir, char** out_json);

/* Checks the declared restriction relations of a config against the
 * brute-force order. Returns CSRL_VERIFICATION when any is contradicted;
 * report (may be NULL) receives a human-readable description either way. */
CSRL_API csrl_status csrl_verify_order(const char* config_path, char** report);

/* Restriction sets */
CSRL_API csrl_status csrl_restriction_set_load(const char* path, size_t num_states, size_t num_actions,
                                               csrl_restriction_set** out);
/* The 13-member recommendation family over default parameters for the seed. */
CSRL_API csrl_status csrl_restriction_set_builtin_recsys(uint64_t params_seed, csrl_restriction_set** out);
CSRL_API size_t csrl_restriction_set_size(const csrl_restriction_set* set);
CSRL_API const char* csrl_restriction_set_id(const csrl_restriction_set* set, size_t k);
/* *out = 1 when member k is strictly more restricted than member j. */
CSRL_API csrl_status csrl_restriction_set_is_subset(const csrl_restriction_set* set, size_t k, size_t j, int* out);
CSRL_API csrl_status csrl_restriction_set_verify(const csrl_restriction_set* set, char** report);
CSRL_API void csrl_restriction_set_free(csrl_restriction_set* set);

#ifdef __cplusplus
}
#endif

#endif

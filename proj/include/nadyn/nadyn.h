#ifndef NADYN_H
#define NADYN_H

/* C interface to the nadyn toolkit. Handles are opaque; every call that can
   fail returns a status, and nadyn_last_error() describes the most recent
   failure on the calling thread. */

#include <stdint.h>

#if defined(_WIN32)
#define NADYN_API __declspec(dllexport)
#else
#define NADYN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nadyn_status {
    NADYN_OK = 0,
    NADYN_ERR_DOMAIN = 1,
    NADYN_ERR_SCHEMA = 2,
    NADYN_ERR_BUDGET = 3,
    NADYN_ERR_ARGUMENT = 4
} nadyn_status;

typedef struct nadyn_config nadyn_config;
typedef struct nadyn_result nadyn_result;

NADYN_API const char* nadyn_version(void);

/* Number of subcommands and their names, index 0..count-1. */
NADYN_API int nadyn_subcommand_count(void);
NADYN_API const char* nadyn_subcommand_name(int index);

NADYN_API nadyn_config* nadyn_config_new(const char* subcommand);
NADYN_API void nadyn_config_free(nadyn_config* config);
NADYN_API nadyn_status nadyn_config_set_seed(nadyn_config* config, uint64_t seed);
NADYN_API nadyn_status nadyn_config_set_budget_bits(nadyn_config* config, uint64_t bits);
NADYN_API nadyn_status nadyn_config_set_horizon(nadyn_config* config, uint64_t horizon);
NADYN_API nadyn_status nadyn_config_set_sample(nadyn_config* config, uint64_t sample);

/* Runs the configured subcommand on a JSON document. On return *result
   holds the output or the error (free it with nadyn_result_free); the
   status mirrors nadyn_result_status(). */
NADYN_API nadyn_status nadyn_run(const nadyn_config* config, const char* input, nadyn_result** result);

NADYN_API nadyn_status nadyn_result_status(const nadyn_result* result);
/* Output text; empty on failure. */
NADYN_API const char* nadyn_result_output(const nadyn_result* result);
/* Stable error name such as "PoleInDisk"; empty on success. */
NADYN_API const char* nadyn_result_error_name(const nadyn_result* result);
NADYN_API const char* nadyn_result_error_message(const nadyn_result* result);
NADYN_API void nadyn_result_free(nadyn_result* result);

NADYN_API const char* nadyn_last_error(void);

#ifdef __cplusplus
}
#endif

#endif

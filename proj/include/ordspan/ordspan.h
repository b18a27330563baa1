#ifndef ORDSPAN_ORDSPAN_H
#define ORDSPAN_ORDSPAN_H

/* C interface to the ordered-span toolkit. All strings are UTF-8 and
 * NUL-terminated. Strings returned through char** out-parameters are owned by
 * the caller and released with ordspan_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ORDSPAN_API __declspec(dllexport)
#else
#define ORDSPAN_API __attribute__((visibility("default")))
#endif

typedef enum ordspan_status {
  ORDSPAN_OK = 0,
  ORDSPAN_INVALID_ARGUMENT = 1,
  ORDSPAN_INVALID_VALUE = 2,
  ORDSPAN_SYNTAX = 3,
  ORDSPAN_WITNESS_INVALID = 4,
  ORDSPAN_RESOURCE = 5,
  ORDSPAN_CONFIG = 6,
  ORDSPAN_IO = 7,
  ORDSPAN_INTERNAL = 8
} ordspan_status;

typedef enum ordspan_format {
  ORDSPAN_FORMAT_JSON = 0,
  ORDSPAN_FORMAT_CSV = 1,
  ORDSPAN_FORMAT_TABLE = 2
} ordspan_format;

typedef struct ordspan_context ordspan_context;
typedef struct ordspan_report ordspan_report;

ORDSPAN_API const char* ordspan_version(void);
ORDSPAN_API const char* ordspan_status_string(ordspan_status status);

/* A context holds one run configuration and the last error message. */
ORDSPAN_API ordspan_status ordspan_context_create(ordspan_context** out);
ORDSPAN_API void ordspan_context_destroy(ordspan_context* ctx);
/* Message for the most recent failed call on ctx; "" when none. */
ORDSPAN_API const char* ordspan_context_last_error(const ordspan_context* ctx);
/* Sets one configuration key (see the README for keys). */
ORDSPAN_API ordspan_status ordspan_context_set(ordspan_context* ctx, const char* key, const char* value);
ORDSPAN_API ordspan_status ordspan_context_load_config(ordspan_context* ctx, const char* path);
/* Output format and path from the configuration ("format" and "out" keys). */
ORDSPAN_API ordspan_format ordspan_context_format(const ordspan_context* ctx);
ORDSPAN_API const char* ordspan_context_out(const ordspan_context* ctx);

ORDSPAN_API ordspan_status ordspan_run_span(ordspan_context* ctx, ordspan_report** out);
ORDSPAN_API ordspan_status ordspan_run_table(ordspan_context* ctx, ordspan_report** out);
ORDSPAN_API ordspan_status ordspan_run_tuples(ordspan_context* ctx, ordspan_report** out);
ORDSPAN_API ordspan_status ordspan_run_prefix_code(ordspan_context* ctx, ordspan_report** out);
ORDSPAN_API ordspan_status ordspan_run_growth(ordspan_context* ctx, ordspan_report** out);
ORDSPAN_API ordspan_status ordspan_run_bound(ordspan_context* ctx, ordspan_report** out);
ORDSPAN_API ordspan_status ordspan_run_verify(ordspan_context* ctx, ordspan_report** out);
ORDSPAN_API ordspan_status ordspan_run_scan(ordspan_context* ctx, ordspan_report** out);

ORDSPAN_API ordspan_status ordspan_report_render(const ordspan_report* report, ordspan_format format, char** out);
/* path NULL, "" or "-" writes to stdout. bytes_written may be NULL. */
ORDSPAN_API ordspan_status ordspan_report_write(ordspan_context* ctx, const ordspan_report* report,
                                                ordspan_format format, const char* path, size_t* bytes_written);
/* Nonzero when a golden comparison in the report failed. */
ORDSPAN_API int ordspan_report_mismatch(const ordspan_report* report);
ORDSPAN_API void ordspan_report_destroy(ordspan_report* report);

/* Stand-alone helpers using the context's caps. */
ORDSPAN_API ordspan_status ordspan_eval_witness(ordspan_context* ctx, const char* witness, int base, char** value);
ORDSPAN_API ordspan_status ordspan_format_witness(ordspan_context* ctx, const char* witness, int base, char** text);
/* Decimal input; *result is 1 or 0. */
ORDSPAN_API ordspan_status ordspan_radical_free(ordspan_context* ctx, const char* value, const char* variant,
                                                int* result);
ORDSPAN_API ordspan_status ordspan_is_perfect_power(ordspan_context* ctx, const char* value, int* result);

ORDSPAN_API void ordspan_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif

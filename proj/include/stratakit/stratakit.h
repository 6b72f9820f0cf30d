#ifndef STRATAKIT_STRATAKIT_H
#define STRATAKIT_STRATAKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(STRATAKIT_BUILDING_LIBRARY)
#define SK_API __attribute__((visibility("default")))
#else
#define SK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit codes. */
typedef enum sk_status {
  SK_OK = 0,
  SK_SCHEMA_ERROR = 1,
  SK_INVARIANT_FAILURE = 2,
  SK_ORACLE_REFUSED = 3,
  SK_IO_ERROR = 4,
  SK_INVALID_ARGUMENT = 5,
  SK_INTERNAL_ERROR = 6
} sk_status;

typedef struct sk_spec sk_spec;
typedef struct sk_report sk_report;

typedef struct sk_check_options {
  const char* mode; /* recollement, simples, porism, eps, hw, homological */
  size_t n;
  int oracle;
  uint64_t seed;
  int timing;
} sk_check_options;

SK_API const char* sk_version(void);
SK_API const char* sk_status_string(sk_status s);

/* Loading keeps the raw text; parsing happens in sk_validate / sk_check. */
SK_API sk_status sk_spec_load_file(const char* path, sk_spec** out);
SK_API sk_status sk_spec_load_string(const char* text, size_t len, sk_spec** out);
SK_API void sk_spec_free(sk_spec* spec);

SK_API sk_check_options sk_check_options_default(void);

/* On success *out receives a report even when the status is nonzero. */
SK_API sk_status sk_validate(const sk_spec* spec, int timing, sk_report** out);
SK_API sk_status sk_check(const sk_spec* spec, const sk_check_options* opt, sk_report** out);
/* filter may be NULL or "" for all entries. */
SK_API sk_status sk_corpus(const char* filter, uint64_t seed, int timing, sk_report** out);

/* Strings stay valid until sk_report_free. */
SK_API const char* sk_report_json(const sk_report* r);
SK_API const char* sk_report_text(const sk_report* r);
SK_API int sk_report_exit_code(const sk_report* r);
SK_API void sk_report_free(sk_report* r);

/* Message for the most recent failure on this thread, or "". */
SK_API const char* sk_last_error(void);

#ifdef __cplusplus
}
#endif

#endif

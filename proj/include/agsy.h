/* agsy - aggregate-symbol text compression.
 *
 * C API over the core library: opaque handles, status codes, explicit
 * ownership.  Every object returned through an out-parameter is owned by
 * the caller and released with the matching _free function.  Functions
 * returning a status leave out-parameters untouched on failure;
 * agsy_last_error_message() describes the most recent failure on the
 * calling thread.
 */
#ifndef AGSY_H
#define AGSY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum agsy_status {
  AGSY_OK = 0,
  AGSY_E_INVALID = 1,  /* bad arguments or violated preconditions */
  AGSY_E_IO = 2,       /* reserved for callers doing file I/O */
  AGSY_E_FORMAT = 3,   /* malformed or corrupt container */
  AGSY_E_CAPACITY = 4, /* value does not fit a format field */
  AGSY_E_INTERNAL = 5
} agsy_status;

/* Owned byte buffer. */
typedef struct agsy_buffer agsy_buffer;
/* Statistics and per-step ledger of an analyze/build/compress run. */
typedef struct agsy_report agsy_report;

typedef struct agsy_build_options {
  /* Maximum aggregate symbols to add; negative means unlimited. */
  int64_t max_symbols;
  /* Stop once total bits per character reaches this; <= 0 disables. */
  double stop_bpc;
  /* Extra bits a step's gain must clear beyond the header cost. */
  double min_net_gain_bits;
  /* Worker threads for candidate scoring; 0 means all cores.  Results are
   * byte-identical for any value. */
  int32_t threads;
  /* Nonzero: cross-check accepted gains against the brute-force oracle and
   * record the worst relative deviation in the report. */
  int32_t verify;
} agsy_build_options;

void agsy_build_options_init(agsy_build_options* options);

/* Initial statistics only; no aggregate search. */
agsy_status agsy_analyze(const void* data, size_t size, const char* name,
                         agsy_report** out_report);

/* Greedy aggregate-alphabet construction with a per-step ledger. */
agsy_status agsy_build(const void* data, size_t size, const char* name,
                       const agsy_build_options* options,
                       agsy_report** out_report);

/* Build an alphabet for the input and write an AGSY container.
 * out_report may be NULL. */
agsy_status agsy_compress(const void* data, size_t size, const char* name,
                          const agsy_build_options* options,
                          agsy_buffer** out_container, agsy_report** out_report);

/* Exact inverse of agsy_compress. */
agsy_status agsy_decompress(const void* data, size_t size,
                            agsy_buffer** out_bytes);

const uint8_t* agsy_buffer_data(const agsy_buffer* buffer);
size_t agsy_buffer_size(const agsy_buffer* buffer);
void agsy_buffer_free(agsy_buffer* buffer);

/* Schema-stable JSON (schema_version 1). */
agsy_status agsy_report_to_json(const agsy_report* report, agsy_buffer** out);
/* Fixed columns:
 * step,symbol_expansion_escaped,freq,gain_bits,header_cost_bits,
 * bpc_message,bpc_total */
agsy_status agsy_report_to_csv(const agsy_report* report, agsy_buffer** out);
void agsy_report_free(agsy_report* report);

const char* agsy_status_name(agsy_status status);
/* Thread-local message for the last failed call; empty if none. */
const char* agsy_last_error_message(void);
const char* agsy_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* AGSY_H */

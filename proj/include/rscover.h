#ifndef RSCOVER_H
#define RSCOVER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Every function returning rsc_status leaves a message for rsc_last_error()
 * on failure. Messages are per thread. Field elements are passed as their
 * canonical integer encoding; complex vectors as interleaved (re, im). */

typedef enum {
  RSC_OK = 0,
  RSC_ERR_DOMAIN = 1,   /* precondition of a mathematical operation */
  RSC_ERR_USAGE = 2,    /* bad command, option or value */
  RSC_ERR_REFUSED = 3,  /* work cap exceeded */
  RSC_ERR_IO = 4,
  RSC_ERR_NULL = 5,     /* null handle or pointer argument */
  RSC_ERR_BUFFER = 6,   /* output buffer too small */
  RSC_ERR_INTERNAL = 7
} rsc_status;

typedef enum { RSC_MODE_UNIQUE = 0, RSC_MODE_LIST = 1 } rsc_mode;

typedef enum {
  RSC_OP_ADD = 0,
  RSC_OP_SUB,
  RSC_OP_MUL,
  RSC_OP_DIV,
  RSC_OP_INV,
  RSC_OP_POW
} rsc_field_op;

typedef enum {
  RSC_SNR_FINITE_N = 0,
  RSC_SNR_ASYMPTOTIC = 1,
  RSC_SNR_RATE_TO_ONE = 2
} rsc_snr_mode;

typedef struct rsc_field rsc_field;
typedef struct rsc_grs rsc_grs;
typedef struct rsc_crs rsc_crs;
typedef struct rsc_config rsc_config;
typedef struct rsc_report rsc_report;

const char* rsc_version(void);
const char* rsc_last_error(void);
const char* rsc_status_name(rsc_status status);

/* Fields */
rsc_status rsc_field_create(uint32_t p, uint32_t m, rsc_field** out);
rsc_status rsc_field_create_order(uint64_t q, rsc_field** out);
void rsc_field_destroy(rsc_field* field);
rsc_status rsc_field_info(const rsc_field* field, uint32_t* p, uint32_t* m,
                          uint32_t* q);
/* For RSC_OP_INV b is ignored; for RSC_OP_POW b is the exponent. */
rsc_status rsc_field_apply(const rsc_field* field, rsc_field_op op, uint32_t a,
                           uint32_t b, uint32_t* out);
rsc_status rsc_field_trace(const rsc_field* field, uint32_t a, uint32_t* out);
/* exp(2 pi i Tr(beta a) / p) */
rsc_status rsc_character(const rsc_field* field, uint32_t beta, uint32_t a,
                         double* re, double* im);

/* GRS codes. points / multipliers may be NULL for the defaults. */
rsc_status rsc_grs_create(const rsc_field* field, size_t n, size_t k,
                          const uint32_t* points, const uint32_t* multipliers,
                          rsc_grs** out);
void rsc_grs_destroy(rsc_grs* code);
rsc_status rsc_grs_info(const rsc_grs* code, size_t* n, size_t* k, size_t* d);
/* message has msg_len <= k coefficients, constant term first; out has n. */
rsc_status rsc_grs_encode(const rsc_grs* code, const uint32_t* message,
                          size_t msg_len, uint32_t* out);
rsc_status rsc_grs_puncture(const rsc_grs* code, rsc_grs** out);

rsc_status rsc_tau_gs(size_t n, size_t k, size_t* out);
/* found = 1 and message_out (k entries) set when decoding succeeds. */
rsc_status rsc_bw_decode(const rsc_grs* code, const uint32_t* y, size_t tau,
                         int raw, uint32_t* message_out, int* found);
/* Writes up to capacity messages of k coefficients each; count receives the
 * full list size (RSC_ERR_BUFFER when it exceeds capacity). */
rsc_status rsc_gs_decode(const rsc_grs* code, const uint32_t* y, size_t tau,
                         size_t max_multiplicity, uint32_t* messages_out,
                         size_t capacity, size_t* count);
rsc_status rsc_grs_cover(const rsc_grs* code, const uint32_t* y, rsc_mode mode,
                         uint32_t* message_out, uint32_t* codeword_out,
                         size_t* distance, size_t* punctures);
rsc_status rsc_nearest_exhaustive(const rsc_grs* code, const uint32_t* y,
                                  uint64_t cap, uint32_t* message_out,
                                  size_t* distance);

/* CRS codes; the GRS code is copied. */
rsc_status rsc_crs_create(const rsc_grs* base, uint32_t beta, rsc_crs** out);
void rsc_crs_destroy(rsc_crs* code);
rsc_status rsc_crs_encode(const rsc_crs* code, const uint32_t* message,
                          size_t msg_len, double* out);
rsc_status rsc_crs_size(const rsc_crs* code, size_t* rank);
/* Draws from the counter stream (seed, stream). */
rsc_status rsc_crs_cover(const rsc_crs* code, const double* y, rsc_mode mode,
                         size_t best_of_n, uint64_t seed, uint64_t stream,
                         uint32_t* message_out, double* distance,
                         size_t* punctures);
rsc_status rsc_chordal_distance(const double* u, const double* v, size_t n,
                                double* out);

/* Bounds */
rsc_status rsc_random_hamming_bound(uint64_t q, size_t n, double M,
                                    double* out);
rsc_status rsc_random_chordal_bound(size_t n, double M, double* out);
rsc_status rsc_random_chordal_bound_log(size_t n, double log_M, double* out);
rsc_status rsc_avg_punctures_unique(uint64_t q, size_t n, size_t k,
                                    double* out);
rsc_status rsc_coverage_lower_bound(uint64_t q, size_t n, size_t k, size_t tau,
                                    double* out);
rsc_status rsc_tau_max(uint64_t q, size_t n, size_t k, size_t* out);
rsc_status rsc_crs_upper_bound(uint32_t p, size_t n, size_t k, double mu,
                               double sigma, double* gooty, double* improved,
                               int* valid);
rsc_status rsc_crs_min_snr(uint32_t p, size_t n, double R, rsc_snr_mode mode,
                           double* out);

/* Commands. command is "group sub", e.g. "bound random-hamming"; keys are
 * option names without dashes. */
size_t rsc_command_count(void);
const char* rsc_command_name(size_t index);
rsc_status rsc_config_create(const char* command, rsc_config** out);
void rsc_config_destroy(rsc_config* config);
rsc_status rsc_config_set(rsc_config* config, const char* key,
                          const char* value);
rsc_status rsc_run(const rsc_config* config, rsc_report** out);
void rsc_report_destroy(rsc_report* report);
/* format is "csv" or "json"; free the result with rsc_string_free. */
rsc_status rsc_report_render(const rsc_report* report, const char* format,
                             char** out);
/* path NULL or "-" writes to stdout. */
rsc_status rsc_report_write(const rsc_report* report, const char* format,
                            const char* path);
rsc_status rsc_report_write_trials(const rsc_report* report, const char* path);
void rsc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RSCOVER_H */

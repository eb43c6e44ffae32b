#ifndef OTREAL_OTREAL_H
#define OTREAL_OTREAL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define OTR_API __attribute__((visibility("default")))
#else
#define OTR_API
#endif

typedef enum otr_status {
  OTR_OK = 0,
  OTR_ERR_INVALID_ARGUMENT = 1,
  OTR_ERR_PARAMETER_DOMAIN = 2,
  OTR_ERR_UNSUPPORTED_FAMILY = 3,
  OTR_ERR_SINGULAR_MATRIX = 4,
  OTR_ERR_NOT_FIBERED = 5,
  OTR_ERR_INTERNAL = 6,
  OTR_ERR_MONOTONICITY = 7,
  OTR_ERR_INVALID_MOVE = 8,
  OTR_ERR_NULL = 9,
  OTR_ERR_UNKNOWN = 10
} otr_status;

/* bits of otr_params.present */
enum {
  OTR_P = 1u << 0,
  OTR_Q = 1u << 1,
  OTR_R = 1u << 2,
  OTR_U = 1u << 3,
  OTR_V = 1u << 4,
  OTR_W = 1u << 5
};

typedef struct otr_params {
  int64_t p, q, r, u, v, w;
  uint32_t present;
} otr_params;

typedef struct otr_context otr_context;
typedef struct otr_result otr_result;

OTR_API const char* otr_version(void);
OTR_API const char* otr_status_name(otr_status status);

OTR_API otr_context* otr_context_new(void);
OTR_API void otr_context_free(otr_context* ctx);
/* Message of the last failing call on this context, "" if none. */
OTR_API const char* otr_last_error(const otr_context* ctx);
/* Worker threads for search and cross validation (0 is treated as 1). */
OTR_API void otr_set_workers(otr_context* ctx, unsigned workers);

/* Results own a JSON document. passed is 1 for computations and for
   verifications whose claim holds, 0 otherwise. */
OTR_API const char* otr_result_json(const otr_result* res);
OTR_API int otr_result_passed(const otr_result* res);
OTR_API void otr_result_free(otr_result* res);

/* Family names: I, II, III, I-I, I-I-I, II-I, III-I, II-III ('_' accepted). */
OTR_API otr_status otr_compute(otr_context* ctx, const char* family, const otr_params* params,
                               otr_result** out);
/* Closed-form d only, no matrices. */
OTR_API otr_status otr_compute_values(otr_context* ctx, const char* family,
                                      const otr_params* params, int64_t* d_out);
OTR_API otr_status otr_matrix(otr_context* ctx, const char* family, const otr_params* params,
                              otr_result** out);
OTR_API otr_status otr_diagram_json(otr_context* ctx, const char* family,
                                    const otr_params* params, otr_result** out);

OTR_API otr_status otr_search(otr_context* ctx, int64_t d_max, otr_result** out);

OTR_API otr_status otr_verify_exceptions(otr_context* ctx, int64_t d_max, otr_result** out);
OTR_API otr_status otr_verify_moves(otr_context* ctx, int64_t grid_bound, otr_result** out);
OTR_API otr_status otr_verify_iii_coverage(otr_context* ctx, int64_t d_lo, int64_t d_hi,
                                           otr_result** out);
OTR_API otr_status otr_verify_table1(otr_context* ctx, otr_result** out);
OTR_API otr_status otr_cross_validate(otr_context* ctx, int64_t weight_bound, int64_t count_bound,
                                      otr_result** out);

#ifdef __cplusplus
}
#endif

#endif

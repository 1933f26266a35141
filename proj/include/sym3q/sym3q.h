/* C interface to the symmetric three-qubit invariants library. */
#ifndef SYM3Q_H
#define SYM3Q_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef SYM3Q_BUILDING
#    define SYM3Q_API __declspec(dllexport)
#  else
#    define SYM3Q_API __declspec(dllimport)
#  endif
#else
#  define SYM3Q_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match sym3q::ErrorCode; S3Q_INTERNAL covers anything else. */
typedef enum s3q_status {
  S3Q_OK = 0,
  S3Q_INVALID_ARGUMENT = 1,
  S3Q_NOT_SYMMETRIC = 2,
  S3Q_EIGEN_FAILURE = 3,
  S3Q_NON_REAL_RESULT = 4,
  S3Q_ASYMMETRIC_STATE = 5,
  S3Q_ZERO_POLYNOMIAL = 6,
  S3Q_DEGENERATE_ROOT = 7,
  S3Q_PRODUCT_STATE = 8,
  S3Q_OUT_OF_REGION = 9,
  S3Q_EMPTY_SLICE = 10,
  S3Q_PARSE_ERROR = 11,
  S3Q_IO_ERROR = 12,
  S3Q_NON_CONVERGENCE = 13,
  S3Q_INTERNAL = 99
} s3q_status;

typedef struct s3q_state s3q_state;
typedef struct s3q_dataset s3q_dataset;

typedef struct s3q_triple {
  double concurrence;
  double tau;
  double kappa;
} s3q_triple;

typedef struct s3q_params {
  double y;
  double theta;
  double phi;
} s3q_params;

typedef enum s3q_branch {
  S3Q_BRANCH_CANONICAL = 0,
  S3Q_BRANCH_DEGENERATE = 1,
  S3Q_BRANCH_PRODUCT = 2
} s3q_branch;

/* For the degenerate branch only theta is meaningful; the product branch
   reports the common spinor direction in product_dir (re,im pairs). */
typedef struct s3q_reduction {
  s3q_branch branch;
  s3q_params params;
  int boundary;
  double overlap;
  double invariant_residual;
  double product_dir[4];
} s3q_reduction;

typedef enum s3q_region_mode {
  S3Q_MODE_UNIT_TAU_COEFFICIENT = 0,
  S3Q_MODE_INVERSION_CONSISTENT = 1
} s3q_region_mode;

typedef enum s3q_region_status {
  S3Q_INTERIOR = 0,
  S3Q_BOUNDARY = 1,
  S3Q_EXTERIOR = 2
} s3q_region_status;

typedef struct s3q_verdict {
  s3q_region_status status;
  double residuals[3];
  int active[3];
} s3q_verdict;

typedef enum s3q_source {
  S3Q_SOURCE_CANONICAL = 0,
  S3Q_SOURCE_DICKE = 1,
  S3Q_SOURCE_DEGENERATE = 2
} s3q_source;

typedef enum s3q_target { S3Q_TARGET_C = 0, S3Q_TARGET_TAU = 1, S3Q_TARGET_KAPPA = 2 } s3q_target;

SYM3Q_API const char* s3q_status_name(s3q_status status);
/* Message of the last failed call on this thread, "" if none. */
SYM3Q_API const char* s3q_last_error(void);
SYM3Q_API void s3q_string_free(char* s);

SYM3Q_API s3q_region_mode s3q_default_region_mode(void);
SYM3Q_API double s3q_default_region_tol(void);
SYM3Q_API uint64_t s3q_default_seed(void);

/* amplitudes: 4 (re, im) pairs. applied_factor may be NULL. */
SYM3Q_API s3q_status s3q_state_from_dicke(const double amplitudes[8], s3q_state** out,
                                          double* applied_factor);
/* name: "zero", "ghz" or "w". */
SYM3Q_API s3q_status s3q_state_named(const char* name, s3q_state** out);
SYM3Q_API s3q_status s3q_state_canonical(s3q_params p, s3q_state** out);
SYM3Q_API s3q_status s3q_state_degenerate(double theta, s3q_state** out);
SYM3Q_API s3q_status s3q_state_amplitudes(const s3q_state* s, double out[8]);
SYM3Q_API void s3q_state_free(s3q_state* s);

SYM3Q_API s3q_status s3q_invariants_oracle(const s3q_state* s, s3q_triple* out);
SYM3Q_API s3q_status s3q_invariants_closed(s3q_params p, s3q_triple* out);
SYM3Q_API s3q_status s3q_invariants_degenerate(double theta, s3q_triple* out);
/* boundary may be NULL. */
SYM3Q_API s3q_status s3q_invert(s3q_triple v, s3q_params* out, int* boundary);
/* cluster_tol <= 0 selects the default. */
SYM3Q_API s3q_status s3q_canonicalize(const s3q_state* s, double cluster_tol,
                                      s3q_reduction* out);

SYM3Q_API s3q_status s3q_region_check(s3q_triple v, double tol, s3q_region_mode mode,
                                      s3q_verdict* out);
/* coordinate: "C", "tau" or "kappa". Writes a boundary_id,x,y CSV. */
SYM3Q_API s3q_status s3q_region_slice_csv(const char* coordinate, double value, int grid,
                                          double tol, s3q_region_mode mode, char** csv);

SYM3Q_API s3q_status s3q_sample(s3q_source source, uint64_t n, uint64_t seed,
                                s3q_dataset** out);
SYM3Q_API size_t s3q_dataset_size(const s3q_dataset* ds);
SYM3Q_API size_t s3q_dataset_exterior_count(const s3q_dataset* ds);
SYM3Q_API s3q_status s3q_dataset_csv(const s3q_dataset* ds, char** csv);
SYM3Q_API s3q_status s3q_dataset_write(const s3q_dataset* ds, const char* path);
SYM3Q_API void s3q_dataset_free(s3q_dataset* ds);

/* report: JSON document. config may be NULL; otherwise receives the
   resolutions as a JSON config. passed is 1 when every check holds. */
SYM3Q_API s3q_status s3q_verify(uint64_t samples, uint64_t seed, int restarts, char** report,
                                char** config, int* passed);
SYM3Q_API s3q_status s3q_config_region_mode(const char* config_text, s3q_region_mode* mode);

SYM3Q_API s3q_status s3q_extremize(s3q_target target, int maximize, int restarts,
                                   uint64_t seed, double* value, s3q_params* at);

#ifdef __cplusplus
}
#endif

#endif

#ifndef LT_LT_H
#define LT_LT_H

/* C interface to the lt library. Every call returns an lt_status; on failure
   lt_last_error() describes the problem (thread-local, valid until the next
   call on the same thread). Strings returned through char** are owned by the
   caller and released with lt_string_free. */

#include <stdint.h>

#if defined(__GNUC__)
#define LT_API __attribute__((visibility("default")))
#else
#define LT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lt_status {
  LT_OK = 0,
  LT_ERR_INVALID_ARGUMENT,
  LT_ERR_PARSE,
  LT_ERR_INFINITE_COKERNEL,
  LT_ERR_COORDINATE_OUT_OF_RANGE,
  LT_ERR_DIVISION_BY_ZERO,
  LT_ERR_INCOMPATIBLE_LEVEL,
  LT_ERR_LEVEL_TOO_LARGE,
  LT_ERR_UNSUPPORTED_NAME,
  LT_ERR_GROUP_TOO_LARGE,
  LT_ERR_NOT_CLOSED,
  LT_ERR_SHAPE_MISMATCH,
  LT_ERR_NO_LIFT,
  LT_ERR_DATUM_MISMATCH,
  LT_ERR_WEIGHT_COUNT_MISMATCH,
  LT_ERR_INFINITE_FIXED_POINTS,
  LT_ERR_TORUS_MISMATCH,
  LT_ERR_NOT_INTERTWINING,
  LT_ERR_GUARD_VIOLATION,
  LT_ERR_CONTEXT_MISMATCH,
  LT_ERR_INVALID_MORPHISM,
  LT_ERR_UNSUPPORTED_GROUP,
  LT_ERR_NO_ORDER_FORMULA,
  LT_ERR_TOO_LARGE,
  LT_ERR_MISSING_TABLE,
  LT_ERR_VALIDATION_FAILED,
  LT_ERR_TRIVIAL_ADDITIVE_CHARACTER,
  LT_ERR_INTERNAL = 100
} lt_status;

typedef struct lt_context lt_context;   /* root datum + split Frobenius over F_q */
typedef struct lt_morphism lt_morphism; /* dual morphism with its lift table */
typedef struct lt_stable lt_stable;     /* gamma-values on geometric classes */

LT_API const char* lt_last_error(void);
LT_API const char* lt_status_name(lt_status s);
LT_API void lt_string_free(char* s);

/* A datum is a name ("GL(2)", "SL2", "Torus(2)") or a JSON object
   {rank, roots, coroots, simple}. */
LT_API lt_status lt_datum_report(const char* datum, char** json_out);

LT_API lt_status lt_context_new(const char* datum, int64_t q, lt_context** out);
LT_API void lt_context_free(lt_context* ctx);
/* {group, q, classes: [labels], pairs: [{label, w, theta, class}]} */
LT_API lt_status lt_context_classes(const lt_context* ctx, char** json_out);
/* {chi, class, W_chi, W_chi_circ, ...} for a tame character "[a/b,...]". */
LT_API lt_status lt_context_tame(const lt_context* ctx, const char* chi, char** json_out);

/* JSON {source, target, matrix} */
LT_API lt_status lt_morphism_new(const char* json, lt_morphism** out);
LT_API void lt_morphism_free(lt_morphism* m);
LT_API lt_status lt_morphism_report(const lt_morphism* m, char** json_out);

/* {classes: {label: value}}; values are integers, fraction strings or {level, coeffs}. */
LT_API lt_status lt_stable_from_json(const lt_context* ctx, const char* json, lt_stable** out);
LT_API lt_status lt_stable_delta(const lt_context* ctx, lt_stable** out);
LT_API lt_status lt_stable_random(const lt_context* ctx, uint64_t seed, lt_stable** out);
LT_API lt_status lt_stable_trace_psi(const lt_context* ctx, int64_t psi_k, lt_stable** out);
LT_API void lt_stable_free(lt_stable* f);
LT_API lt_status lt_stable_to_json(const lt_stable* f, char** json_out);

/* Pulls f back along the morphism onto target (a context for m's target). */
LT_API lt_status lt_transfer(const lt_morphism* m, const lt_stable* f, const lt_context* target, lt_stable** out);
/* Uniform function {pair label: value} plus its degree. */
LT_API lt_status lt_assemble(const lt_morphism* m, const lt_stable* f, const lt_context* target, char** json_out);

/* Checks that the delta gamma-function assembles to the delta class function.
   data_dir may be NULL (LT_DATA_DIR or the built-in table directory).
   *verified is 1 on agreement and 0 on a mismatch, which is not an error. */
LT_API lt_status lt_verify_delta(const char* group, int64_t q, const char* data_dir, char** json_out, int* verified);
/* Compares assemble(m, f) with assemble(id, transfer(m, f)) for random f. */
LT_API lt_status lt_verify_formula(const lt_morphism* m, int64_t q, int trials, uint64_t seed, int jobs, char** json_out,
                            int* verified);

/* Gauss sum over F_q^x with chi(g^i) = zeta^{j i}, psi = psi_k o Tr. */
LT_API lt_status lt_gauss(int64_t q, int64_t j, int64_t psi_k, char** json_out);

#ifdef __cplusplus
}
#endif

#endif

/* C interface to the sum-rank metric code library.
 *
 * Every function returns one of the SRK_* status codes. On failure, *err
 * (when err is non-NULL) receives a malloc'd JSON string
 * {"kind": ..., "message": ...}; release it with srk_string_free. All
 * returned strings are malloc'd and owned by the caller. */
#ifndef SUMRANK_H_
#define SUMRANK_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  SRK_OK = 0,
  SRK_VERIFY_FAILED = 1, /* a requested cross-check does not hold */
  SRK_INVALID = 2,       /* bad parameters, schema, or math preconditions */
  SRK_BUDGET = 3         /* enumeration budget exceeded */
};

typedef struct srk_code srk_code; /* opaque handle */

const char* srk_version(void);
void srk_string_free(char* s);
void srk_code_free(srk_code* c);

/* Build a code from a family descriptor, e.g.
 * {"family":"doubly_extended_lrs","q":2,"e":1,"m":3,"k":2}.
 * Families: lrs, doubly_extended_lrs, two_fold_lrs, twisted_lrs,
 * complete_twisted, simplex. Optional keys per family: t, n, sigma_power,
 * gamma, delta, modulus, U_basis (k-column rows), p_poly. */
int srk_construct(const char* params_json, srk_code** out, char** err);

/* Code JSON: {"field":{"p","e","m","modulus"},"profile":[...],"k":...,
 * "G":[[row]...]} with entries as canonical integer element codes. */
int srk_code_parse(const char* code_json, srk_code** out, char** err);
int srk_code_serialize(const srk_code* c, char** out_json, char** err);

/* Metric report: d, msrd, one_weight, constant_rank_profile, nondegeneracy,
 * dual distance flag, weight distribution (codeword and projective counts). */
int srk_analyze(const srk_code* c, unsigned workers, uint64_t budget,
                char** report_json, char** err);

/* weight,count CSV of the codeword weight distribution. */
int srk_weight_csv(const srk_code* c, unsigned workers, uint64_t budget,
                   char** out_csv, char** err);

/* checks: comma-separated subset of
 * duality,geometry-msrd,ext-formula,bonisoli,line-cover.
 * Returns SRK_VERIFY_FAILED if any requested check fails; the report JSON
 * carries a per-check verdict and a counterexample payload on failure. */
int srk_verify(const srk_code* c, const char* checks, unsigned workers,
               uint64_t budget, char** report_json, char** err);

/* Admissible one-weight MSRD block shapes for {"q":...,"m":...,"t":...},
 * as CSV rows q,m,t,profile,status,detail. Never claims nonexistence
 * beyond the enumerated entry range 1..m. */
int srk_search(const char* params_json, char** out_csv, char** err);

#ifdef __cplusplus
}
#endif

#endif /* SUMRANK_H_ */

/* C interface to the Veronese plane-orbit toolkit.
 *
 * All functions returning vrn_status put a UTF-8 JSON document into *json_out
 * on success; free it with vrn_string_free. On failure, vrn_last_error(ctx)
 * describes the problem.
 */
#ifndef VERONESE_H
#define VERONESE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vrn_ctx vrn_ctx;

typedef enum vrn_status {
  VRN_OK = 0,
  VRN_ERR_INVALID_ARGUMENT = 1,
  VRN_ERR_PARSE = 2,
  VRN_ERR_OUT_OF_SCOPE = 3, /* plane has no rank-1 point */
  VRN_ERR_UNSUPPORTED = 4,
  VRN_ERR_CHECK_FAILED = 5,
  VRN_ERR_INTERNAL = 6
} vrn_status;

/* q must be a power of two, 2 <= q <= 65536. modulus_bits is an optional
 * MSB-first bit string such as "1011" (t^3 + t + 1); pass NULL for the
 * built-in default of that degree. */
vrn_status vrn_ctx_create(unsigned q, const char* modulus_bits, vrn_ctx** out);
void vrn_ctx_destroy(vrn_ctx* ctx);
unsigned vrn_ctx_q(const vrn_ctx* ctx);
const char* vrn_last_error(const vrn_ctx* ctx);
void vrn_string_free(char* s);

/* input_kind: 0 = 18 hex entries (row-major 3x6 generator matrix),
 *             1 = three PG(5,q) points (18 hex entries),
 *             2 = symbolic symmetric pencil, e.g. "x,y,.; y,z,.; .,.,." */
vrn_status vrn_classify_plane(vrn_ctx* ctx, const char* text, int input_kind,
                              char** json_out);

/* label: "Sigma1" .. "Sigma15", "Sigma14p", "Sigma15p" */
vrn_status vrn_representative(vrn_ctx* ctx, const char* label, char** json_out);

/* group: "pgl3" or "sym7" (the latter only at q = 2). When full is zero and
 * q >= 8 the census runs in sampled-verification mode with random_samples
 * random planes. shards partitions the enumeration; the result is identical
 * for every shard count. */
vrn_status vrn_census(vrn_ctx* ctx, const char* group, int full, unsigned shards,
                      unsigned long long random_samples, char** json_out);

/* check: one of "table1", "census", "nonexistence", "orbit-stabilizer",
 * "sym7", "sigma6-hyperplanes", "inflexion-sweep", "solvers", "equivariance",
 * "line-orbits", "sigma14-bijection", "sigma12-bijection", "sigma13-bijection",
 * "extension-inflexions", "determinism", "all".
 * Returns VRN_OK with a report even when checks fail; all_pass tells. */
vrn_status vrn_verify(vrn_ctx* ctx, const char* check, int slow, char** json_out);

#ifdef __cplusplus
}
#endif

#endif

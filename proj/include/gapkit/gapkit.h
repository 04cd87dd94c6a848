/*
 * gapkit - reduction toolkit for weighted circuit satisfiability:
 * circuit analysis and exact solving, monotone gap amplification through
 * perfect hash families, and the clique-to-threshold-set reduction built
 * on Reed-Solomon erasure codes.
 *
 * All functions returning gapkit_status report failure details through
 * gapkit_last_error() (thread-local).  Strings returned through char**
 * out-parameters are heap-allocated; release them with gapkit_string_free.
 * Handles are opaque; release them with the matching *_free function.
 * A budget argument of 0 selects the built-in default.
 */

#ifndef GAPKIT_H
#define GAPKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef GAPKIT_API
#if defined(_WIN32)
#define GAPKIT_API
#else
#define GAPKIT_API __attribute__((visibility("default")))
#endif
#endif

typedef enum gapkit_status {
  GAPKIT_OK = 0,
  GAPKIT_ERROR_PARSE = 1,
  GAPKIT_ERROR_INVALID_ARGUMENT = 2,
  GAPKIT_ERROR_BUDGET_EXCEEDED = 3,
  GAPKIT_ERROR_CONSTRUCTION = 4,
  GAPKIT_ERROR_INTERNAL = 5
} gapkit_status;

typedef struct gapkit_circuit gapkit_circuit;
typedef struct gapkit_graph gapkit_graph;
typedef struct gapkit_hash_family gapkit_hash_family;
typedef struct gapkit_threshold gapkit_threshold;
typedef struct gapkit_gap_report gapkit_gap_report;

enum {
  GAPKIT_CLASS_MONOTONE = 0,
  GAPKIT_CLASS_ANTIMONOTONE = 1,
  GAPKIT_CLASS_GENERAL = 2
};

typedef struct gapkit_metrics {
  uint32_t depth;
  uint32_t weft;
  int circuit_class; /* GAPKIT_CLASS_* */
  uint64_t node_count;
} gapkit_metrics;

enum {
  GAPKIT_SOLVE_WEIGHT_K = 0,
  GAPKIT_SOLVE_MIN = 1,
  GAPKIT_SOLVE_MAX = 2
};

enum {
  GAPKIT_GATES_LARGE = 0,
  GAPKIT_GATES_BINARY = 1
};

enum {
  GAPKIT_THRESHOLD_AUTO = 0,
  GAPKIT_THRESHOLD_GENERIC = 1,
  GAPKIT_THRESHOLD_STRUCTURED = 2
};

GAPKIT_API const char* gapkit_version(void);
GAPKIT_API const char* gapkit_last_error(void);
GAPKIT_API void gapkit_string_free(char* s);

/* --- circuits ---------------------------------------------------------- */

GAPKIT_API gapkit_status gapkit_circuit_parse(const char* text, gapkit_circuit** out);
GAPKIT_API void gapkit_circuit_free(gapkit_circuit* c);
GAPKIT_API gapkit_status gapkit_circuit_serialize(const gapkit_circuit* c, char** out_text);
GAPKIT_API uint32_t gapkit_circuit_input_count(const gapkit_circuit* c);
GAPKIT_API uint64_t gapkit_circuit_gate_count(const gapkit_circuit* c);
GAPKIT_API gapkit_status gapkit_circuit_metrics(const gapkit_circuit* c, gapkit_metrics* out);

/* true_inputs: indices of the inputs assigned 1, in declaration order. */
GAPKIT_API gapkit_status gapkit_circuit_evaluate(const gapkit_circuit* c,
                                                 const uint32_t* true_inputs, uint32_t count,
                                                 int* out_value);

/* mode: GAPKIT_SOLVE_*.  k is used only by GAPKIT_SOLVE_WEIGHT_K.  On
 * success *out_found says whether a witness exists; when it does,
 * *out_weight and *out_witness (comma-joined input names) are filled. */
GAPKIT_API gapkit_status gapkit_circuit_solve(const gapkit_circuit* c, int mode, uint32_t k,
                                              uint64_t budget, int* out_found,
                                              uint32_t* out_weight, char** out_witness);

/* --- ratio functions and monotone gap amplification -------------------- */

/* rho is "c*k^e" text with rational parts: "1", "3/2", "k", "2*k", "k^(1/2)". */
GAPKIT_API gapkit_status gapkit_compute_k_prime(uint32_t k, const char* rho, uint64_t* out);
GAPKIT_API gapkit_status gapkit_compute_code_length(uint32_t k, const char* rho, uint64_t* out);

GAPKIT_API gapkit_status gapkit_amplify(const gapkit_circuit* c, uint32_t k, const char* rho,
                                        int gate_style, uint64_t seed, uint64_t budget,
                                        gapkit_circuit** out);
GAPKIT_API gapkit_status gapkit_verify_gap_monotone(const gapkit_circuit* c, uint32_t k,
                                                    const char* rho, uint64_t seed,
                                                    uint64_t budget, gapkit_gap_report** out);

/* --- auxiliary monotone encodings --------------------------------------- */

/* sets_text: lines of "set <elem>+", optional leading "universe <n>". */
GAPKIT_API gapkit_status gapkit_hitting_set_circuit(const char* sets_text, gapkit_circuit** out);
GAPKIT_API gapkit_status gapkit_clique_circuit(const gapkit_graph* g, gapkit_circuit** out);

/* --- perfect hash families ---------------------------------------------- */

GAPKIT_API gapkit_status gapkit_hash_family_build(uint32_t n, uint32_t k_prime, uint64_t seed,
                                                  uint64_t budget, gapkit_hash_family** out);
GAPKIT_API gapkit_status gapkit_hash_family_parse(const char* text, gapkit_hash_family** out);
GAPKIT_API void gapkit_hash_family_free(gapkit_hash_family* h);
GAPKIT_API gapkit_status gapkit_hash_family_dump(const gapkit_hash_family* h, char** out_text);
GAPKIT_API gapkit_status gapkit_hash_family_verify(const gapkit_hash_family* h, uint64_t budget,
                                                   int* out_perfect);
GAPKIT_API uint64_t gapkit_hash_family_size(const gapkit_hash_family* h);

/* --- GF(2^ell) and Reed-Solomon erasure codes --------------------------- */

GAPKIT_API gapkit_status gapkit_gf_add(uint32_t ell, uint32_t a, uint32_t b, uint32_t* out);
GAPKIT_API gapkit_status gapkit_gf_mul(uint32_t ell, uint32_t a, uint32_t b, uint32_t* out);
GAPKIT_API gapkit_status gapkit_gf_inv(uint32_t ell, uint32_t a, uint32_t* out);
GAPKIT_API gapkit_status gapkit_gf_pow(uint32_t ell, uint32_t a, uint64_t e, uint32_t* out);

/* message has k symbols; out_codeword receives D symbols. */
GAPKIT_API gapkit_status gapkit_rs_encode(uint32_t ell, uint32_t k, uint32_t D,
                                          const uint32_t* message, uint32_t* out_codeword);

/* positions are 1-based codeword indices; out_message receives k symbols. */
GAPKIT_API gapkit_status gapkit_rs_recover(uint32_t ell, uint32_t k, uint32_t D,
                                           uint32_t known_count, const uint32_t* positions,
                                           const uint32_t* values, uint32_t* out_message);

/* --- graphs -------------------------------------------------------------- */

GAPKIT_API gapkit_status gapkit_graph_parse(const char* text, gapkit_graph** out);
GAPKIT_API void gapkit_graph_free(gapkit_graph* g);
GAPKIT_API gapkit_status gapkit_graph_serialize(const gapkit_graph* g, char** out_text);
GAPKIT_API uint32_t gapkit_graph_vertex_count(const gapkit_graph* g);
GAPKIT_API gapkit_status gapkit_find_clique(const gapkit_graph* g, uint32_t k, uint64_t budget,
                                            int* out_found, char** out_vertices);

/* --- threshold set instances --------------------------------------------- */

GAPKIT_API gapkit_status gapkit_reduce_clique(const gapkit_graph* g, uint32_t k, const char* rho,
                                              uint64_t seed, gapkit_threshold** out);
GAPKIT_API gapkit_status gapkit_threshold_parse(const char* text, gapkit_threshold** out);
GAPKIT_API void gapkit_threshold_free(gapkit_threshold* t);
GAPKIT_API gapkit_status gapkit_threshold_serialize(const gapkit_threshold* t, char** out_text);
GAPKIT_API uint64_t gapkit_threshold_universe(const gapkit_threshold* t);
GAPKIT_API uint64_t gapkit_threshold_set_count(const gapkit_threshold* t);

/* Fills reduction metadata when present; *out_has_meta says whether it is. */
GAPKIT_API gapkit_status gapkit_threshold_meta(const gapkit_threshold* t, int* out_has_meta,
                                               uint32_t* out_k, uint32_t* out_D,
                                               uint32_t* out_ell, uint64_t* out_q);

GAPKIT_API gapkit_status gapkit_threshold_is_feasible(const gapkit_threshold* t,
                                                      const uint64_t* elements, uint64_t count,
                                                      int* out_feasible);

/* mode: GAPKIT_THRESHOLD_*.  out_witness: comma-joined element indices. */
GAPKIT_API gapkit_status gapkit_threshold_solve(const gapkit_threshold* t, int mode,
                                                uint64_t budget, int* out_mode_used,
                                                uint64_t* out_size, char** out_witness);

GAPKIT_API gapkit_status gapkit_threshold_circuit(const gapkit_threshold* t,
                                                  gapkit_circuit** out);
GAPKIT_API gapkit_status gapkit_verify_gap_threshold(const gapkit_graph* g, uint32_t k,
                                                     const char* rho, uint64_t budget,
                                                     gapkit_gap_report** out);

/* --- gap reports ---------------------------------------------------------- */

GAPKIT_API void gapkit_gap_report_free(gapkit_gap_report* r);
GAPKIT_API gapkit_status gapkit_gap_report_text(const gapkit_gap_report* r, char** out_text);
GAPKIT_API int gapkit_gap_report_claim1(const gapkit_gap_report* r);
GAPKIT_API int gapkit_gap_report_claim2(const gapkit_gap_report* r);

#ifdef __cplusplus
}
#endif

#endif /* GAPKIT_H */

#include "gapkit/gapkit.h"

#include <cstring>
#include <new>
#include <string>

#include "circuit.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "graph.hpp"
#include "hash_family.hpp"
#include "monotone_gap.hpp"
#include "ratio.hpp"
#include "reed_solomon.hpp"
#include "report.hpp"
#include "threshold.hpp"

struct gapkit_circuit {
  gapkit::Circuit impl;
};
struct gapkit_graph {
  gapkit::ColoredGraph impl;
};
struct gapkit_hash_family {
  gapkit::HashFamily impl;
};
struct gapkit_threshold {
  gapkit::ThresholdSetInstance impl;
};
struct gapkit_gap_report {
  gapkit::GapReport impl;
};

namespace {

thread_local std::string g_last_error;

gapkit_status to_status(gapkit::ErrorCode code) {
  switch (code) {
    case gapkit::ErrorCode::Parse: return GAPKIT_ERROR_PARSE;
    case gapkit::ErrorCode::InvalidArgument: return GAPKIT_ERROR_INVALID_ARGUMENT;
    case gapkit::ErrorCode::BudgetExceeded: return GAPKIT_ERROR_BUDGET_EXCEEDED;
    case gapkit::ErrorCode::Construction: return GAPKIT_ERROR_CONSTRUCTION;
    case gapkit::ErrorCode::Internal: return GAPKIT_ERROR_INTERNAL;
  }
  return GAPKIT_ERROR_INTERNAL;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
gapkit_status wrap(Fn&& fn) {
  try {
    fn();
    return GAPKIT_OK;
  } catch (const gapkit::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GAPKIT_ERROR_INTERNAL;
  }
}

gapkit_status require(bool ok, const char* what) {
  if (ok) return GAPKIT_OK;
  g_last_error = std::string("null argument: ") + what;
  return GAPKIT_ERROR_INVALID_ARGUMENT;
}

gapkit::SolveOptions solve_options(uint64_t budget) {
  gapkit::SolveOptions opt;
  if (budget != 0) opt.budget = budget;
  return opt;
}

std::string join_u64(const std::vector<uint64_t>& values) {
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values[i]);
  }
  return s;
}

}  // namespace

extern "C" {

const char* gapkit_version(void) { return "0.1.0"; }

const char* gapkit_last_error(void) { return g_last_error.c_str(); }

void gapkit_string_free(char* s) { ::operator delete(s); }

/* --- circuits ---------------------------------------------------------- */

gapkit_status gapkit_circuit_parse(const char* text, gapkit_circuit** out) {
  if (auto st = require(text && out, "gapkit_circuit_parse")) return st;
  return wrap([&] { *out = new gapkit_circuit{gapkit::parse_circuit(text)}; });
}

void gapkit_circuit_free(gapkit_circuit* c) { delete c; }

gapkit_status gapkit_circuit_serialize(const gapkit_circuit* c, char** out_text) {
  if (auto st = require(c && out_text, "gapkit_circuit_serialize")) return st;
  return wrap([&] { *out_text = copy_string(gapkit::serialize_circuit(c->impl)); });
}

uint32_t gapkit_circuit_input_count(const gapkit_circuit* c) {
  return c ? static_cast<uint32_t>(c->impl.inputs().size()) : 0;
}

uint64_t gapkit_circuit_gate_count(const gapkit_circuit* c) {
  return c ? c->impl.gates().size() : 0;
}

gapkit_status gapkit_circuit_metrics(const gapkit_circuit* c, gapkit_metrics* out) {
  if (auto st = require(c && out, "gapkit_circuit_metrics")) return st;
  return wrap([&] {
    auto m = gapkit::metrics(c->impl);
    out->depth = m.depth;
    out->weft = m.weft;
    out->node_count = m.node_count;
    switch (m.circuit_class) {
      case gapkit::CircuitClass::Monotone: out->circuit_class = GAPKIT_CLASS_MONOTONE; break;
      case gapkit::CircuitClass::Antimonotone:
        out->circuit_class = GAPKIT_CLASS_ANTIMONOTONE;
        break;
      case gapkit::CircuitClass::General: out->circuit_class = GAPKIT_CLASS_GENERAL; break;
    }
  });
}

gapkit_status gapkit_circuit_evaluate(const gapkit_circuit* c, const uint32_t* true_inputs,
                                      uint32_t count, int* out_value) {
  if (auto st = require(c && out_value && (count == 0 || true_inputs), "gapkit_circuit_evaluate"))
    return st;
  return wrap([&] {
    gapkit::Assignment a(true_inputs, true_inputs + count);
    *out_value = gapkit::evaluate(c->impl, a) ? 1 : 0;
  });
}

gapkit_status gapkit_circuit_solve(const gapkit_circuit* c, int mode, uint32_t k, uint64_t budget,
                                   int* out_found, uint32_t* out_weight, char** out_witness) {
  if (auto st = require(c && out_found && out_weight && out_witness, "gapkit_circuit_solve"))
    return st;
  return wrap([&] {
    auto opt = solve_options(budget);
    std::optional<std::pair<uint32_t, gapkit::Assignment>> result;
    switch (mode) {
      case GAPKIT_SOLVE_WEIGHT_K: {
        auto found = gapkit::is_k_satisfiable(c->impl, k, opt);
        if (found) result = std::make_pair(k, std::move(*found));
        break;
      }
      case GAPKIT_SOLVE_MIN: result = gapkit::min_weight_sat(c->impl, opt); break;
      case GAPKIT_SOLVE_MAX: result = gapkit::max_weight_sat(c->impl, opt); break;
      default: gapkit::throw_invalid("unknown solve mode");
    }
    *out_found = result.has_value() ? 1 : 0;
    *out_weight = result ? result->first : 0;
    *out_witness = copy_string(result ? c->impl.witness_names(result->second) : std::string());
  });
}

/* --- ratio + amplification --------------------------------------------- */

gapkit_status gapkit_compute_k_prime(uint32_t k, const char* rho, uint64_t* out) {
  if (auto st = require(rho && out, "gapkit_compute_k_prime")) return st;
  return wrap([&] { *out = gapkit::compute_k_prime(k, gapkit::RatioSpec::parse(rho)); });
}

gapkit_status gapkit_compute_code_length(uint32_t k, const char* rho, uint64_t* out) {
  if (auto st = require(rho && out, "gapkit_compute_code_length")) return st;
  return wrap([&] { *out = gapkit::compute_code_length(k, gapkit::RatioSpec::parse(rho)); });
}

gapkit_status gapkit_amplify(const gapkit_circuit* c, uint32_t k, const char* rho, int gate_style,
                             uint64_t seed, uint64_t budget, gapkit_circuit** out) {
  if (auto st = require(c && rho && out, "gapkit_amplify")) return st;
  return wrap([&] {
    gapkit::AmplifyOptions opt;
    opt.style = gate_style == GAPKIT_GATES_BINARY ? gapkit::GateStyle::Binary
                                                  : gapkit::GateStyle::Large;
    opt.seed = seed;
    if (budget != 0) opt.gate_budget = budget;
    *out = new gapkit_circuit{gapkit::amplify(c->impl, k, gapkit::RatioSpec::parse(rho), opt)};
  });
}

gapkit_status gapkit_verify_gap_monotone(const gapkit_circuit* c, uint32_t k, const char* rho,
                                         uint64_t seed, uint64_t budget, gapkit_gap_report** out) {
  if (auto st = require(c && rho && out, "gapkit_verify_gap_monotone")) return st;
  return wrap([&] {
    gapkit::GapVerifyOptions opt;
    opt.amplify.seed = seed;
    if (budget != 0) opt.solve_budget = budget;
    *out = new gapkit_gap_report{
        gapkit::verify_gap_monotone(c->impl, k, gapkit::RatioSpec::parse(rho), opt)};
  });
}

/* --- auxiliary encodings ------------------------------------------------ */

gapkit_status gapkit_hitting_set_circuit(const char* sets_text, gapkit_circuit** out) {
  if (auto st = require(sets_text && out, "gapkit_hitting_set_circuit")) return st;
  return wrap([&] {
    auto system = gapkit::parse_set_system(sets_text);
    *out = new gapkit_circuit{gapkit::hitting_set_to_circuit(system)};
  });
}

gapkit_status gapkit_clique_circuit(const gapkit_graph* g, gapkit_circuit** out) {
  if (auto st = require(g && out, "gapkit_clique_circuit")) return st;
  return wrap([&] { *out = new gapkit_circuit{gapkit::multicolored_clique_to_circuit(g->impl)}; });
}

/* --- hash families ------------------------------------------------------- */

gapkit_status gapkit_hash_family_build(uint32_t n, uint32_t k_prime, uint64_t seed,
                                       uint64_t budget, gapkit_hash_family** out) {
  if (auto st = require(out != nullptr, "gapkit_hash_family_build")) return st;
  return wrap([&] {
    gapkit::FamilyOptions opt;
    if (budget != 0) opt.subset_budget = budget;
    *out = new gapkit_hash_family{gapkit::build_perfect_family(n, k_prime, seed, opt)};
  });
}

gapkit_status gapkit_hash_family_parse(const char* text, gapkit_hash_family** out) {
  if (auto st = require(text && out, "gapkit_hash_family_parse")) return st;
  return wrap([&] { *out = new gapkit_hash_family{gapkit::HashFamily::parse(text)}; });
}

void gapkit_hash_family_free(gapkit_hash_family* h) { delete h; }

gapkit_status gapkit_hash_family_dump(const gapkit_hash_family* h, char** out_text) {
  if (auto st = require(h && out_text, "gapkit_hash_family_dump")) return st;
  return wrap([&] { *out_text = copy_string(h->impl.dump()); });
}

gapkit_status gapkit_hash_family_verify(const gapkit_hash_family* h, uint64_t budget,
                                        int* out_perfect) {
  if (auto st = require(h && out_perfect, "gapkit_hash_family_verify")) return st;
  return wrap([&] {
    gapkit::FamilyOptions opt;
    if (budget != 0) opt.subset_budget = budget;
    *out_perfect = gapkit::verify_perfect(h->impl, opt) ? 1 : 0;
  });
}

uint64_t gapkit_hash_family_size(const gapkit_hash_family* h) {
  return h ? h->impl.size() : 0;
}

/* --- field + Reed-Solomon ------------------------------------------------ */

gapkit_status gapkit_gf_add(uint32_t ell, uint32_t a, uint32_t b, uint32_t* out) {
  if (auto st = require(out != nullptr, "gapkit_gf_add")) return st;
  return wrap([&] { *out = gapkit::FieldSpec(ell).add(a, b); });
}

gapkit_status gapkit_gf_mul(uint32_t ell, uint32_t a, uint32_t b, uint32_t* out) {
  if (auto st = require(out != nullptr, "gapkit_gf_mul")) return st;
  return wrap([&] { *out = gapkit::FieldSpec(ell).mul(a, b); });
}

gapkit_status gapkit_gf_inv(uint32_t ell, uint32_t a, uint32_t* out) {
  if (auto st = require(out != nullptr, "gapkit_gf_inv")) return st;
  return wrap([&] { *out = gapkit::FieldSpec(ell).inv(a); });
}

gapkit_status gapkit_gf_pow(uint32_t ell, uint32_t a, uint64_t e, uint32_t* out) {
  if (auto st = require(out != nullptr, "gapkit_gf_pow")) return st;
  return wrap([&] { *out = gapkit::FieldSpec(ell).pow(a, e); });
}

gapkit_status gapkit_rs_encode(uint32_t ell, uint32_t k, uint32_t D, const uint32_t* message,
                               uint32_t* out_codeword) {
  if (auto st = require(message && out_codeword, "gapkit_rs_encode")) return st;
  return wrap([&] {
    gapkit::RSSpec spec(ell, k, D);
    auto codeword = gapkit::rs_encode(spec, std::span<const uint32_t>(message, k));
    std::copy(codeword.begin(), codeword.end(), out_codeword);
  });
}

gapkit_status gapkit_rs_recover(uint32_t ell, uint32_t k, uint32_t D, uint32_t known_count,
                                const uint32_t* positions, const uint32_t* values,
                                uint32_t* out_message) {
  if (auto st = require(positions && values && out_message, "gapkit_rs_recover")) return st;
  return wrap([&] {
    gapkit::RSSpec spec(ell, k, D);
    std::vector<std::pair<uint32_t, uint32_t>> known;
    known.reserve(known_count);
    for (uint32_t i = 0; i < known_count; ++i) known.emplace_back(positions[i], values[i]);
    auto message = gapkit::rs_recover(spec, known);
    std::copy(message.begin(), message.end(), out_message);
  });
}

/* --- graphs --------------------------------------------------------------- */

gapkit_status gapkit_graph_parse(const char* text, gapkit_graph** out) {
  if (auto st = require(text && out, "gapkit_graph_parse")) return st;
  return wrap([&] { *out = new gapkit_graph{gapkit::parse_graph(text)}; });
}

void gapkit_graph_free(gapkit_graph* g) { delete g; }

gapkit_status gapkit_graph_serialize(const gapkit_graph* g, char** out_text) {
  if (auto st = require(g && out_text, "gapkit_graph_serialize")) return st;
  return wrap([&] { *out_text = copy_string(gapkit::serialize_graph(g->impl)); });
}

uint32_t gapkit_graph_vertex_count(const gapkit_graph* g) {
  return g ? g->impl.vertex_count() : 0;
}

gapkit_status gapkit_find_clique(const gapkit_graph* g, uint32_t k, uint64_t budget,
                                 int* out_found, char** out_vertices) {
  if (auto st = require(g && out_found && out_vertices, "gapkit_find_clique")) return st;
  return wrap([&] {
    auto clique = gapkit::find_k_clique(g->impl, k, solve_options(budget));
    *out_found = clique.has_value() ? 1 : 0;
    std::string text;
    if (clique) {
      for (size_t i = 0; i < clique->size(); ++i) {
        if (i) text += ",";
        text += std::to_string((*clique)[i]);
      }
    }
    *out_vertices = copy_string(text);
  });
}

/* --- threshold set --------------------------------------------------------- */

gapkit_status gapkit_reduce_clique(const gapkit_graph* g, uint32_t k, const char* rho,
                                   uint64_t seed, gapkit_threshold** out) {
  if (auto st = require(g && rho && out, "gapkit_reduce_clique")) return st;
  return wrap([&] {
    gapkit::ReduceOptions opt;
    opt.seed = seed;
    *out = new gapkit_threshold{
        gapkit::reduce_clique_to_threshold(g->impl, k, gapkit::RatioSpec::parse(rho), opt)};
  });
}

gapkit_status gapkit_threshold_parse(const char* text, gapkit_threshold** out) {
  if (auto st = require(text && out, "gapkit_threshold_parse")) return st;
  return wrap([&] { *out = new gapkit_threshold{gapkit::parse_threshold(text)}; });
}

void gapkit_threshold_free(gapkit_threshold* t) { delete t; }

gapkit_status gapkit_threshold_serialize(const gapkit_threshold* t, char** out_text) {
  if (auto st = require(t && out_text, "gapkit_threshold_serialize")) return st;
  return wrap([&] { *out_text = copy_string(gapkit::serialize_threshold(t->impl)); });
}

uint64_t gapkit_threshold_universe(const gapkit_threshold* t) {
  return t ? t->impl.universe : 0;
}

uint64_t gapkit_threshold_set_count(const gapkit_threshold* t) {
  return t ? t->impl.sets.size() : 0;
}

gapkit_status gapkit_threshold_meta(const gapkit_threshold* t, int* out_has_meta, uint32_t* out_k,
                                    uint32_t* out_D, uint32_t* out_ell, uint64_t* out_q) {
  if (auto st = require(t && out_has_meta, "gapkit_threshold_meta")) return st;
  *out_has_meta = t->impl.meta.has_value() ? 1 : 0;
  if (t->impl.meta) {
    const auto& L = t->impl.meta->layout;
    if (out_k) *out_k = L.k;
    if (out_D) *out_D = L.D;
    if (out_ell) *out_ell = L.ell;
    if (out_q) *out_q = L.q;
  }
  return GAPKIT_OK;
}

gapkit_status gapkit_threshold_is_feasible(const gapkit_threshold* t, const uint64_t* elements,
                                           uint64_t count, int* out_feasible) {
  if (auto st = require(t && out_feasible && (count == 0 || elements),
                        "gapkit_threshold_is_feasible"))
    return st;
  return wrap([&] {
    std::span<const uint64_t> span(elements, count);
    *out_feasible = gapkit::is_feasible(t->impl, span) ? 1 : 0;
  });
}

gapkit_status gapkit_threshold_solve(const gapkit_threshold* t, int mode, uint64_t budget,
                                     int* out_mode_used, uint64_t* out_size, char** out_witness) {
  if (auto st = require(t && out_size && out_witness, "gapkit_threshold_solve")) return st;
  return wrap([&] {
    gapkit::ThresholdSolveMode m;
    switch (mode) {
      case GAPKIT_THRESHOLD_AUTO: m = gapkit::ThresholdSolveMode::Auto; break;
      case GAPKIT_THRESHOLD_GENERIC: m = gapkit::ThresholdSolveMode::Generic; break;
      case GAPKIT_THRESHOLD_STRUCTURED: m = gapkit::ThresholdSolveMode::Structured; break;
      default: gapkit::throw_invalid("unknown threshold solve mode");
    }
    if (m == gapkit::ThresholdSolveMode::Auto)
      m = t->impl.meta ? gapkit::ThresholdSolveMode::Structured
                       : gapkit::ThresholdSolveMode::Generic;
    auto [size, witness] = gapkit::max_solution(t->impl, m, solve_options(budget));
    if (out_mode_used)
      *out_mode_used = m == gapkit::ThresholdSolveMode::Structured ? GAPKIT_THRESHOLD_STRUCTURED
                                                                   : GAPKIT_THRESHOLD_GENERIC;
    *out_size = size;
    *out_witness = copy_string(join_u64(witness));
  });
}

gapkit_status gapkit_threshold_circuit(const gapkit_threshold* t, gapkit_circuit** out) {
  if (auto st = require(t && out, "gapkit_threshold_circuit")) return st;
  return wrap([&] { *out = new gapkit_circuit{gapkit::emit_antimonotone_circuit(t->impl)}; });
}

gapkit_status gapkit_verify_gap_threshold(const gapkit_graph* g, uint32_t k, const char* rho,
                                          uint64_t budget, gapkit_gap_report** out) {
  if (auto st = require(g && rho && out, "gapkit_verify_gap_threshold")) return st;
  return wrap([&] {
    gapkit::ThresholdVerifyOptions opt;
    if (budget != 0) {
      opt.solve_budget = budget;
      opt.clique_budget = budget;
    }
    *out = new gapkit_gap_report{
        gapkit::verify_gap_threshold(g->impl, k, gapkit::RatioSpec::parse(rho), opt)};
  });
}

/* --- gap reports ------------------------------------------------------------ */

void gapkit_gap_report_free(gapkit_gap_report* r) { delete r; }

gapkit_status gapkit_gap_report_text(const gapkit_gap_report* r, char** out_text) {
  if (auto st = require(r && out_text, "gapkit_gap_report_text")) return st;
  return wrap([&] { *out_text = copy_string(r->impl.to_text()); });
}

int gapkit_gap_report_claim1(const gapkit_gap_report* r) {
  return r && r->impl.claim1_holds ? 1 : 0;
}

int gapkit_gap_report_claim2(const gapkit_gap_report* r) {
  return r && r->impl.claim2_holds ? 1 : 0;
}

}  // extern "C"

#pragma once

#include <cstdint>
#include <vector>

#include "circuit.hpp"
#include "graph.hpp"
#include "hash_family.hpp"
#include "ratio.hpp"
#include "report.hpp"

namespace gapkit {

enum class GateStyle : uint8_t { Large, Binary };

struct AmplifyOptions {
  GateStyle style = GateStyle::Large;
  uint64_t seed = 0;
  FamilyOptions family;
  uint64_t gate_budget = uint64_t{1} << 22;
};

// ceil(rho(k) * k), the amplified weight bound.
uint64_t compute_k_prime(uint32_t k, const RatioSpec& rho);

// Builds the amplified circuit computing, over the same inputs,
//   AND over hash functions h of (OR over range subsets T, |T| <= k, of
//   the source circuit restricted to the inputs h maps into T).
// Inputs outside the restriction are fixed to 0 and constant-propagated.
// Requires a monotone source, k <= n and k' <= n.
Circuit amplify(const Circuit& c, uint32_t k, const RatioSpec& rho,
                const AmplifyOptions& opt = {});

struct GapVerifyOptions {
  AmplifyOptions amplify;
  uint64_t solve_budget = uint64_t{1} << 26;
};

// Checks, by brute force on both circuits:
//   claim 1: C k-satisfiable  =>  C' k-satisfiable;
//   claim 2: C not k-satisfiable  =>  C' has no satisfying assignment of
//            weight <= k'.
GapReport verify_gap_monotone(const Circuit& c, uint32_t k, const RatioSpec& rho,
                              const GapVerifyOptions& opt = {});

// Set system over elements 0..universe-1; used by the hitting-set encoding.
struct SetSystem {
  uint32_t universe = 0;
  std::vector<std::vector<uint32_t>> sets;
};

// Lines of "set <elem>+" with an optional leading "universe <n>".
SetSystem parse_set_system(const std::string& text);

// AND over sets of OR over member elements; depth <= 2, monotone; its
// minimum satisfying weight is the minimum hitting set size.
Circuit hitting_set_to_circuit(const SetSystem& system);

// Conjunction over class pairs of the disjunction, over edges joining the
// pair, of the conjunction of the two endpoint inputs.  The outer
// conjunction is an indegree-2 tree, so only the per-pair disjunctions can
// be large: weft <= 1.  Weight-k satisfiability (k = number of classes)
// is equivalent to the existence of a clique with one vertex per class.
Circuit multicolored_clique_to_circuit(const ColoredGraph& g);

}  // namespace gapkit

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "graph.hpp"
#include "ratio.hpp"
#include "report.hpp"

namespace gapkit {

// Index bookkeeping of a reduced instance.  Vertices are identified with
// k-digit base-q vectors: digit 1 is the most significant.  Element s_{d,g}
// has index (d-1)*n + vec_index(g).
struct ReductionLayout {
  uint32_t k = 0;
  uint32_t D = 0;
  uint32_t ell = 0;
  uint64_t q = 0;
  uint64_t n = 0;  // q^k, the padded vertex count

  uint64_t universe() const { return n * D; }
  uint64_t vec_index(std::span<const uint32_t> digits) const;
  std::vector<uint32_t> digits_of(uint64_t vertex) const;
  uint64_t element(uint32_t d, uint64_t g) const { return static_cast<uint64_t>(d - 1) * n + g; }
};

struct ReductionMeta {
  ReductionLayout layout;
  uint64_t seed = 0;
  uint32_t source_vertices = 0;
  uint64_t duplicate_sets_dropped = 0;
};

struct WeightedSet {
  uint64_t weight = 0;
  std::vector<uint64_t> members;  // sorted, distinct
};

struct ThresholdSetInstance {
  uint64_t universe = 0;
  std::vector<WeightedSet> sets;
  std::optional<ReductionMeta> meta;  // present on reduced instances
};

ThresholdSetInstance parse_threshold(const std::string& text);
std::string serialize_threshold(const ThresholdSetInstance& inst);

// Smallest D with D / rho(D) >= k.
uint64_t compute_code_length(uint32_t k, const RatioSpec& rho, uint64_t cap = 1000000);

// Appends isolated vertices up to the least n = 2^(k*ell) with n > D^k and
// n >= the current vertex count.
std::pair<ColoredGraph, ReductionLayout> pad_graph(const ColoredGraph& g, uint32_t k, uint32_t D);

struct ReduceOptions {
  uint64_t seed = 0;  // recorded in the instance header
  uint64_t universe_budget = uint64_t{1} << 16;
  uint64_t member_budget = uint64_t{1} << 24;
  uint64_t code_length_cap = 1000000;
};

// The clique-to-threshold-set reduction: D weight-1 group sets plus a
// weight-(k-1) constraint set for every (k-subset X of columns, row pair
// a < b, ordered nonadjacent vertex pair (u, v) including u = v).
ThresholdSetInstance reduce_clique_to_threshold(const ColoredGraph& g, uint32_t k,
                                                const RatioSpec& rho,
                                                const ReduceOptions& opt = {});

bool is_feasible(const ThresholdSetInstance& inst, std::span<const uint64_t> elements);

enum class ThresholdSolveMode : uint8_t { Auto, Generic, Structured };

// Exact maximum feasible subset with the lexicographically smallest witness.
// Generic mode enumerates element subsets (universe <= 24); structured mode
// branches over at most one element per group and needs reduction metadata.
std::pair<uint64_t, std::vector<uint64_t>> max_solution(const ThresholdSetInstance& inst,
                                                        ThresholdSolveMode mode,
                                                        const SolveOptions& opt = {});

// Antimonotone circuit over inputs s<d>_<g> equivalent to feasibility:
// pairwise exclusion inside every group, and for every constraint set a
// disjunction over its columns of "column untouched".
Circuit emit_antimonotone_circuit(const ThresholdSetInstance& inst);

struct ThresholdVerifyOptions {
  ReduceOptions reduce;
  uint64_t solve_budget = uint64_t{1} << 26;
  uint64_t clique_budget = uint64_t{1} << 26;
};

// claim 1: a k-clique yields a feasible solution of size exactly D;
// claim 2: without a k-clique every solution has size < k.
GapReport verify_gap_threshold(const ColoredGraph& g, uint32_t k, const RatioSpec& rho,
                               const ThresholdVerifyOptions& opt = {});

}  // namespace gapkit

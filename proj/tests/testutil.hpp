#pragma once

// Shared helpers for the test suites: seeded generators and reference
// oracles that stay independent of the library's solver paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "graph.hpp"

namespace testutil {

inline uint64_t rand_below(std::mt19937_64& rng, uint64_t m) { return rng() % m; }

// Plain recursive evaluation over a name->value map; shares nothing with
// gapkit::Evaluator.
inline bool reference_eval(const gapkit::Circuit& c, const std::vector<uint32_t>& ones) {
  std::vector<int> value(c.node_count(), -1);
  for (uint32_t i = 0; i < c.inputs().size(); ++i) value[i] = 0;
  for (uint32_t i : ones) value[i] = 1;
  const uint32_t base = static_cast<uint32_t>(c.inputs().size());
  for (uint32_t gi = 0; gi < c.gates().size(); ++gi) {
    const gapkit::Gate& g = c.gates()[gi];
    int v;
    switch (g.kind) {
      case gapkit::GateKind::And:
        v = 1;
        for (uint32_t op : g.operands) v = v && value[op];
        break;
      case gapkit::GateKind::Or:
        v = 0;
        for (uint32_t op : g.operands) v = v || value[op];
        break;
      default:
        v = !value[g.operands[0]];
        break;
    }
    value[base + gi] = v;
  }
  return value[c.output()] == 1;
}

// Exhaustive scan of all 2^n assignments; returns per-weight satisfiability
// plus the overall min and max satisfying weights.
struct TruthTableScan {
  std::vector<bool> weight_satisfiable;  // index = weight
  std::optional<uint32_t> min_weight;
  std::optional<uint32_t> max_weight;
};

inline TruthTableScan truth_table_scan(const gapkit::Circuit& c) {
  const uint32_t n = static_cast<uint32_t>(c.inputs().size());
  TruthTableScan scan;
  scan.weight_satisfiable.assign(n + 1, false);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    std::vector<uint32_t> ones;
    for (uint32_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) ones.push_back(i);
    if (reference_eval(c, ones)) {
      const uint32_t w = static_cast<uint32_t>(ones.size());
      scan.weight_satisfiable[w] = true;
      if (!scan.min_weight || w < *scan.min_weight) scan.min_weight = w;
      if (!scan.max_weight || w > *scan.max_weight) scan.max_weight = w;
    }
  }
  return scan;
}

// Random monotone circuit: AND/OR gates over earlier nodes, output = last gate.
inline gapkit::Circuit random_monotone_circuit(std::mt19937_64& rng, uint32_t n,
                                               uint32_t max_gates) {
  std::vector<std::string> inputs;
  for (uint32_t i = 0; i < n; ++i) inputs.push_back("x" + std::to_string(i + 1));
  const uint32_t gate_count = 1 + static_cast<uint32_t>(rand_below(rng, max_gates));
  std::vector<gapkit::Gate> gates;
  for (uint32_t gi = 0; gi < gate_count; ++gi) {
    const uint32_t prior = n + gi;
    uint32_t arity_roll = static_cast<uint32_t>(rand_below(rng, 10));
    uint32_t arity = arity_roll < 5 ? 2 : arity_roll < 8 ? 3 : arity_roll < 9 ? 4 : 5;
    arity = std::min(arity, prior);
    if (arity < 2) arity = 2;
    std::vector<uint32_t> pool(prior);
    for (uint32_t i = 0; i < prior; ++i) pool[i] = i;
    std::vector<uint32_t> operands;
    for (uint32_t a = 0; a < arity; ++a) {
      const size_t pick = rand_below(rng, pool.size());
      operands.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<ptrdiff_t>(pick));
    }
    gates.push_back({"g" + std::to_string(gi), rng() & 1 ? gapkit::GateKind::And : gapkit::GateKind::Or,
                     std::move(operands)});
  }
  return gapkit::Circuit(std::move(inputs), std::move(gates),
                         n + gate_count - 1);
}

// Random circuit that may also contain NOT gates (for general-class tests).
inline gapkit::Circuit random_general_circuit(std::mt19937_64& rng, uint32_t n,
                                              uint32_t max_gates) {
  std::vector<std::string> inputs;
  for (uint32_t i = 0; i < n; ++i) inputs.push_back("x" + std::to_string(i + 1));
  const uint32_t gate_count = 1 + static_cast<uint32_t>(rand_below(rng, max_gates));
  std::vector<gapkit::Gate> gates;
  for (uint32_t gi = 0; gi < gate_count; ++gi) {
    const uint32_t prior = n + gi;
    const uint32_t kind_roll = static_cast<uint32_t>(rand_below(rng, 5));
    if (kind_roll == 0) {
      gates.push_back({"g" + std::to_string(gi), gapkit::GateKind::Not,
                       {static_cast<uint32_t>(rand_below(rng, prior))}});
      continue;
    }
    uint32_t arity = 2 + static_cast<uint32_t>(rand_below(rng, 3));
    arity = std::min(arity, prior);
    if (arity < 2) arity = 2;
    std::vector<uint32_t> pool(prior);
    for (uint32_t i = 0; i < prior; ++i) pool[i] = i;
    std::vector<uint32_t> operands;
    for (uint32_t a = 0; a < arity; ++a) {
      const size_t pick = rand_below(rng, pool.size());
      operands.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<ptrdiff_t>(pick));
    }
    gates.push_back({"g" + std::to_string(gi),
                     kind_roll < 3 ? gapkit::GateKind::And : gapkit::GateKind::Or,
                     std::move(operands)});
  }
  return gapkit::Circuit(std::move(inputs), std::move(gates), n + gate_count - 1);
}

// Minimum hitting set size by scanning all element subsets.
inline uint32_t brute_force_min_hitting_set(uint32_t universe,
                                            const std::vector<std::vector<uint32_t>>& sets) {
  uint32_t best = universe + 1;
  for (uint64_t mask = 0; mask < (uint64_t{1} << universe); ++mask) {
    bool hits_all = true;
    for (const auto& s : sets) {
      bool hit = false;
      for (uint32_t e : s)
        if ((mask >> e) & 1) {
          hit = true;
          break;
        }
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) best = std::min<uint32_t>(best, static_cast<uint32_t>(__builtin_popcountll(mask)));
  }
  return best;
}

// One-vertex-per-class triangle search by direct enumeration.
inline bool has_multicolored_triangle(const gapkit::ColoredGraph& g) {
  std::vector<std::vector<uint32_t>> classes(g.color_count());
  for (uint32_t v = 0; v < g.vertex_count(); ++v) classes[g.color_of(v)].push_back(v);
  if (classes.size() != 3) return false;
  for (uint32_t a : classes[0])
    for (uint32_t b : classes[1])
      for (uint32_t c : classes[2])
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) return true;
  return false;
}

// GF(4) arithmetic from first principles (modulus x^2 + x + 1), given as
// exhaustive lookup tables.
inline uint32_t gf4_mul_table(uint32_t a, uint32_t b) {
  static const uint32_t table[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return table[a][b];
}

}  // namespace testutil

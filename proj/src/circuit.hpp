#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gapkit {

enum class GateKind : uint8_t { And, Or, Not };

const char* gate_kind_name(GateKind kind);

struct Gate {
  std::string name;
  GateKind kind;
  std::vector<uint32_t> operands;  // node ids: inputs first, then earlier gates
};

enum class CircuitClass : uint8_t { Monotone, Antimonotone, General };

const char* circuit_class_name(CircuitClass c);

struct CircuitMetrics {
  uint32_t depth = 0;  // longest input-to-output path, in edges
  uint32_t weft = 0;   // most indegree->2 nodes on any such path
  CircuitClass circuit_class = CircuitClass::Monotone;
  uint64_t node_count = 0;
};

// A subset of the input nodes (the ones assigned 1), as sorted input indices.
using Assignment = std::vector<uint32_t>;

// Immutable DAG of AND/OR/NOT gates over named inputs with a single output.
// Gates are stored in topological order; node id i < inputs().size() is an
// input, otherwise gate i - inputs().size().
class Circuit {
 public:
  Circuit(std::vector<std::string> inputs, std::vector<Gate> gates, uint32_t output,
          std::vector<std::string> header = {});

  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<Gate>& gates() const { return gates_; }
  uint32_t output() const { return output_; }
  uint64_t node_count() const { return inputs_.size() + gates_.size(); }
  bool is_input(uint32_t node) const { return node < inputs_.size(); }

  const std::string& name_of(uint32_t node) const;
  std::optional<uint32_t> find_node(const std::string& name) const;

  // Comment lines (without the leading '#') emitted ahead of serialized text.
  const std::vector<std::string>& header() const { return header_; }

  std::string witness_names(const Assignment& a) const;  // comma-joined

 private:
  std::vector<std::string> inputs_;
  std::vector<Gate> gates_;
  uint32_t output_;
  std::vector<std::string> header_;
  std::unordered_map<std::string, uint32_t> index_;
};

Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);

CircuitMetrics metrics(const Circuit& c);

// Evaluates 64 assignments at once; bit b of every word belongs to lane b.
class Evaluator {
 public:
  explicit Evaluator(const Circuit& c);

  uint32_t input_count() const { return input_count_; }

  // inputs: one word per input node; scratch is reused between calls.
  uint64_t run(std::span<const uint64_t> inputs, std::vector<uint64_t>& scratch) const;

 private:
  struct Op {
    GateKind kind;
    uint32_t first;
    uint32_t count;
  };
  uint32_t input_count_;
  uint32_t output_;
  std::vector<Op> ops_;
  std::vector<uint32_t> operands_;
};

bool evaluate(const Circuit& c, const Assignment& a);

struct SolveOptions {
  uint64_t budget = uint64_t{1} << 26;  // assignments evaluated per call
};

// Lexicographically smallest weight-k satisfying assignment, if any.
std::optional<Assignment> is_k_satisfiable(const Circuit& c, uint32_t k,
                                           const SolveOptions& opt = {});

std::optional<std::pair<uint32_t, Assignment>> min_weight_sat(const Circuit& c,
                                                              const SolveOptions& opt = {});
std::optional<std::pair<uint32_t, Assignment>> max_weight_sat(const Circuit& c,
                                                              const SolveOptions& opt = {});

// C(n, k) capped at `cap` (so callers can test budget overflow safely).
uint64_t binomial_capped(uint64_t n, uint64_t k, uint64_t cap);

bool valid_identifier(const std::string& s);

}  // namespace gapkit

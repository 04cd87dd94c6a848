#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace gapkit {

// Incrementally assembles a circuit with structural sharing: identical
// (kind, operand set) gates are emitted once.  AND/OR operand lists are
// sorted and deduplicated; unary AND/OR collapses to a wire.  Gate names
// are assigned at finish() with a prefix that cannot collide with inputs.
class CircuitBuilder {
 public:
  using Ref = uint32_t;
  static constexpr Ref kFalse = UINT32_MAX;  // absorbed constant-0 operand

  explicit CircuitBuilder(std::vector<std::string> input_names);

  uint32_t input_count() const { return static_cast<uint32_t>(inputs_.size()); }
  Ref input(uint32_t i) const;
  size_t gate_count() const { return gates_.size(); }

  // operands may contain kFalse: AND yields kFalse, OR drops them (kFalse
  // when none survive).  NOT requires a single non-constant operand.
  Ref gate(GateKind kind, std::vector<Ref> operands);

  // Same contract, but emits an indegree-2 tree instead of one wide node.
  Ref balanced(GateKind kind, std::vector<Ref> operands);

  Circuit finish(Ref output, std::vector<std::string> header = {});

 private:
  struct Node {
    GateKind kind;
    std::vector<Ref> operands;
  };
  Ref emit(GateKind kind, std::vector<Ref> operands);

  std::vector<std::string> inputs_;
  std::vector<Node> gates_;
  std::map<std::pair<GateKind, std::vector<Ref>>, Ref> cache_;
};

}  // namespace gapkit

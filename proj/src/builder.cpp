#include "builder.hpp"

#include <algorithm>
#include <cctype>

#include "error.hpp"

namespace gapkit {

CircuitBuilder::CircuitBuilder(std::vector<std::string> input_names)
    : inputs_(std::move(input_names)) {
  if (inputs_.empty()) throw_invalid("builder needs at least one input");
}

CircuitBuilder::Ref CircuitBuilder::input(uint32_t i) const {
  if (i >= inputs_.size()) throw_internal("builder input index out of range");
  return i;
}

CircuitBuilder::Ref CircuitBuilder::emit(GateKind kind, std::vector<Ref> operands) {
  auto key = std::make_pair(kind, operands);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Ref id = static_cast<Ref>(inputs_.size() + gates_.size());
  gates_.push_back({kind, std::move(operands)});
  cache_.emplace(std::move(key), id);
  return id;
}

CircuitBuilder::Ref CircuitBuilder::gate(GateKind kind, std::vector<Ref> operands) {
  if (kind == GateKind::Not) {
    if (operands.size() != 1 || operands[0] == kFalse)
      throw_internal("builder: NOT needs exactly one non-constant operand");
    return emit(kind, std::move(operands));
  }
  if (kind == GateKind::And) {
    for (Ref r : operands)
      if (r == kFalse) return kFalse;
  } else {
    std::erase(operands, kFalse);
  }
  std::sort(operands.begin(), operands.end());
  operands.erase(std::unique(operands.begin(), operands.end()), operands.end());
  if (operands.empty()) {
    if (kind == GateKind::Or) return kFalse;
    throw_internal("builder: AND over no operands");
  }
  if (operands.size() == 1) return operands[0];
  return emit(kind, std::move(operands));
}

CircuitBuilder::Ref CircuitBuilder::balanced(GateKind kind, std::vector<Ref> operands) {
  if (kind == GateKind::Not) return gate(kind, std::move(operands));
  if (kind == GateKind::And) {
    for (Ref r : operands)
      if (r == kFalse) return kFalse;
  } else {
    std::erase(operands, kFalse);
    if (operands.empty()) return kFalse;
  }
  std::sort(operands.begin(), operands.end());
  operands.erase(std::unique(operands.begin(), operands.end()), operands.end());
  while (operands.size() > 1) {
    std::vector<Ref> next;
    next.reserve(operands.size() / 2 + 1);
    size_t i = 0;
    for (; i + 1 < operands.size(); i += 2)
      next.push_back(gate(kind, {operands[i], operands[i + 1]}));
    if (i < operands.size()) next.push_back(operands[i]);
    operands = std::move(next);
  }
  return operands[0];
}

Circuit CircuitBuilder::finish(Ref output, std::vector<std::string> header) {
  if (output == kFalse)
    throw_construction("circuit collapsed to constant false; no constant-free representation");
  if (output >= inputs_.size() + gates_.size()) throw_internal("builder: bad output ref");

  std::string prefix = "g";
  auto collides = [&](const std::string& p) {
    for (const auto& name : inputs_) {
      if (name.size() <= p.size() || name.compare(0, p.size(), p) != 0) continue;
      bool digits = true;
      for (size_t i = p.size(); i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
          digits = false;
          break;
        }
      if (digits) return true;
    }
    return false;
  };
  while (collides(prefix)) prefix += "_";

  std::vector<Gate> gates;
  gates.reserve(gates_.size());
  for (size_t i = 0; i < gates_.size(); ++i)
    gates.push_back({prefix + std::to_string(i), gates_[i].kind, gates_[i].operands});
  return Circuit(inputs_, std::move(gates), output, std::move(header));
}

}  // namespace gapkit

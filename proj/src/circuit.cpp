#include "circuit.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "error.hpp"

namespace gapkit {

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Not: return "NOT";
  }
  return "?";
}

const char* circuit_class_name(CircuitClass c) {
  switch (c) {
    case CircuitClass::Monotone: return "monotone";
    case CircuitClass::Antimonotone: return "antimonotone";
    case CircuitClass::General: return "general";
  }
  return "?";
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

Circuit::Circuit(std::vector<std::string> inputs, std::vector<Gate> gates, uint32_t output,
                 std::vector<std::string> header)
    : inputs_(std::move(inputs)),
      gates_(std::move(gates)),
      output_(output),
      header_(std::move(header)) {
  if (inputs_.empty()) throw_invalid("circuit must declare at least one input");
  uint32_t id = 0;
  for (const auto& name : inputs_) {
    if (!valid_identifier(name)) throw_invalid("invalid identifier '" + name + "'");
    if (!index_.emplace(name, id).second) throw_invalid("duplicate identifier '" + name + "'");
    ++id;
  }
  for (const auto& g : gates_) {
    if (!valid_identifier(g.name)) throw_invalid("invalid identifier '" + g.name + "'");
    if (g.kind == GateKind::Not) {
      if (g.operands.size() != 1)
        throw_invalid("NOT gate '" + g.name + "' must have exactly 1 operand");
    } else if (g.operands.size() < 2) {
      throw_invalid(std::string(gate_kind_name(g.kind)) + " gate '" + g.name +
                    "' must have at least 2 operands");
    }
    for (uint32_t op : g.operands)
      if (op >= id) throw_invalid("gate '" + g.name + "' references a later node");
    if (!index_.emplace(g.name, id).second) throw_invalid("duplicate identifier '" + g.name + "'");
    ++id;
  }
  if (output_ >= id) throw_invalid("output references an unknown node");
}

const std::string& Circuit::name_of(uint32_t node) const {
  if (node < inputs_.size()) return inputs_[node];
  return gates_[node - inputs_.size()].name;
}

std::optional<uint32_t> Circuit::find_node(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Circuit::witness_names(const Assignment& a) const {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += inputs_[a[i]];
  }
  return s;
}

namespace {

struct Token {
  std::string text;
  size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

[[noreturn]] void parse_fail(size_t line, size_t column, const std::string& what) {
  throw_parse("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;

  std::vector<std::string> inputs;
  std::vector<Gate> gates;
  std::unordered_map<std::string, uint32_t> ids;
  std::optional<uint32_t> output;
  bool saw_inputs = false;

  auto lookup = [&](const Token& t) -> uint32_t {
    if (!valid_identifier(t.text)) parse_fail(lineno, t.column, "invalid identifier '" + t.text + "'");
    auto it = ids.find(t.text);
    if (it == ids.end()) parse_fail(lineno, t.column, "undeclared operand '" + t.text + "'");
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (output) parse_fail(lineno, tokens[0].column, "content after the output line");
    const std::string& head = tokens[0].text;
    if (!saw_inputs) {
      if (head != "inputs") parse_fail(lineno, tokens[0].column, "expected 'inputs', got '" + head + "'");
      if (tokens.size() < 2) parse_fail(lineno, tokens[0].column, "'inputs' needs at least one identifier");
      for (size_t i = 1; i < tokens.size(); ++i) {
        const auto& t = tokens[i];
        if (!valid_identifier(t.text)) parse_fail(lineno, t.column, "invalid identifier '" + t.text + "'");
        if (!ids.emplace(t.text, static_cast<uint32_t>(inputs.size())).second)
          parse_fail(lineno, t.column, "duplicate identifier '" + t.text + "'");
        inputs.push_back(t.text);
      }
      saw_inputs = true;
      continue;
    }
    if (head == "gate") {
      if (tokens.size() < 3) parse_fail(lineno, tokens[0].column, "gate line needs a name and a kind");
      const Token& name = tokens[1];
      const Token& kind_tok = tokens[2];
      GateKind kind;
      if (kind_tok.text == "AND") kind = GateKind::And;
      else if (kind_tok.text == "OR") kind = GateKind::Or;
      else if (kind_tok.text == "NOT") kind = GateKind::Not;
      else parse_fail(lineno, kind_tok.column, "unknown gate kind '" + kind_tok.text + "'");
      std::vector<uint32_t> operands;
      for (size_t i = 3; i < tokens.size(); ++i) operands.push_back(lookup(tokens[i]));
      if (kind == GateKind::Not && operands.size() != 1)
        parse_fail(lineno, name.column, "NOT gate '" + name.text + "' must have exactly 1 operand");
      if (kind != GateKind::Not && operands.size() < 2)
        parse_fail(lineno, name.column,
                   kind_tok.text + " gate '" + name.text + "' must have at least 2 operands");
      if (!valid_identifier(name.text)) parse_fail(lineno, name.column, "invalid identifier '" + name.text + "'");
      if (!ids.emplace(name.text, static_cast<uint32_t>(inputs.size() + gates.size())).second)
        parse_fail(lineno, name.column, "duplicate identifier '" + name.text + "'");
      gates.push_back({name.text, kind, std::move(operands)});
      continue;
    }
    if (head == "output") {
      if (tokens.size() != 2) parse_fail(lineno, tokens[0].column, "'output' takes exactly one identifier");
      output = lookup(tokens[1]);
      continue;
    }
    parse_fail(lineno, tokens[0].column, "expected 'gate' or 'output', got '" + head + "'");
  }
  if (!saw_inputs) throw_parse("line " + std::to_string(lineno + 1) + ", column 1: missing 'inputs' line");
  if (!output) throw_parse("line " + std::to_string(lineno + 1) + ", column 1: missing 'output' line");
  return Circuit(std::move(inputs), std::move(gates), *output);
}

std::string serialize_circuit(const Circuit& c) {
  std::string out;
  for (const auto& h : c.header()) out += "# " + h + "\n";
  out += "inputs";
  for (const auto& name : c.inputs()) out += " " + name;
  out += "\n";
  for (const auto& g : c.gates()) {
    out += "gate " + g.name + " " + gate_kind_name(g.kind);
    for (uint32_t op : g.operands) out += " " + c.name_of(op);
    out += "\n";
  }
  out += "output " + c.name_of(c.output()) + "\n";
  return out;
}

CircuitMetrics metrics(const Circuit& c) {
  const size_t n = c.inputs().size();
  const size_t total = c.node_count();
  std::vector<uint32_t> depth(total, 0), weft(total, 0);
  bool has_not = false;
  bool not_on_gate = false;     // some NOT whose operand is not an input
  bool input_feeds_plain = false;  // some input feeding a non-NOT gate

  for (size_t gi = 0; gi < c.gates().size(); ++gi) {
    const Gate& g = c.gates()[gi];
    const size_t node = n + gi;
    uint32_t d = 0, w = 0;
    for (uint32_t op : g.operands) {
      d = std::max(d, depth[op]);
      w = std::max(w, weft[op]);
      if (op < n && g.kind != GateKind::Not) input_feeds_plain = true;
    }
    depth[node] = d + 1;
    weft[node] = w + (g.operands.size() > 2 ? 1 : 0);
    if (g.kind == GateKind::Not) {
      has_not = true;
      if (g.operands[0] >= n) not_on_gate = true;
    }
  }

  CircuitMetrics m;
  m.depth = depth[c.output()];
  m.weft = weft[c.output()];
  m.node_count = total;
  if (!has_not)
    m.circuit_class = CircuitClass::Monotone;
  else if (!not_on_gate && !input_feeds_plain)
    m.circuit_class = CircuitClass::Antimonotone;
  else
    m.circuit_class = CircuitClass::General;
  return m;
}

Evaluator::Evaluator(const Circuit& c)
    : input_count_(static_cast<uint32_t>(c.inputs().size())), output_(c.output()) {
  ops_.reserve(c.gates().size());
  for (const Gate& g : c.gates()) {
    ops_.push_back({g.kind, static_cast<uint32_t>(operands_.size()),
                    static_cast<uint32_t>(g.operands.size())});
    operands_.insert(operands_.end(), g.operands.begin(), g.operands.end());
  }
}

uint64_t Evaluator::run(std::span<const uint64_t> inputs, std::vector<uint64_t>& scratch) const {
  scratch.resize(input_count_ + ops_.size());
  std::copy(inputs.begin(), inputs.end(), scratch.begin());
  uint64_t* values = scratch.data();
  size_t node = input_count_;
  for (const Op& op : ops_) {
    const uint32_t* ids = operands_.data() + op.first;
    uint64_t v = 0;
    switch (op.kind) {
      case GateKind::And:
        v = values[ids[0]];
        for (uint32_t i = 1; i < op.count; ++i) v &= values[ids[i]];
        break;
      case GateKind::Or:
        v = values[ids[0]];
        for (uint32_t i = 1; i < op.count; ++i) v |= values[ids[i]];
        break;
      case GateKind::Not:
        v = ~values[ids[0]];
        break;
    }
    values[node++] = v;
  }
  return values[output_];
}

bool evaluate(const Circuit& c, const Assignment& a) {
  Evaluator ev(c);
  std::vector<uint64_t> words(c.inputs().size(), 0);
  for (uint32_t i : a) {
    if (i >= words.size()) throw_invalid("assignment references input index out of range");
    words[i] = ~uint64_t{0};
  }
  std::vector<uint64_t> scratch;
  return (ev.run(words, scratch) & 1) != 0;
}

uint64_t binomial_capped(uint64_t n, uint64_t k, uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return static_cast<uint64_t>(result);
}

}  // namespace gapkit

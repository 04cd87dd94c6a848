#include "report.hpp"

namespace gapkit {

namespace {

std::string opt_to_string(const std::optional<uint64_t>& v) {
  return v ? std::to_string(*v) : "none";
}

}  // namespace

std::string GapReport::to_text() const {
  std::string out;
  out += "kind=" + kind + "\n";
  out += "k=" + std::to_string(k) + "\n";
  out += target_label + "=" + std::to_string(target_bound) + "\n";
  for (const auto& [key, value] : extras) out += key + "=" + value + "\n";
  out += "source_satisfiable=" + std::string(source_satisfiable ? "true" : "false") + "\n";
  out += "opt_source=" + opt_to_string(opt_source) + "\n";
  out += "opt_target=" + opt_to_string(opt_target) + "\n";
  out += "claim1=" + std::string(claim1_holds ? "true" : "false") + "\n";
  out += "claim2=" + std::string(claim2_holds ? "true" : "false") + "\n";
  if (claim1_witness) out += "claim1_witness=" + *claim1_witness + "\n";
  if (claim2_counterexample) out += "claim2_counterexample=" + *claim2_counterexample + "\n";
  return out;
}

}  // namespace gapkit

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gapkit {

// Outcome of a gap verification run.  `target_bound` is k' on the
// minimization side and D on the maximization side; `target_label` names it
// in the textual report.
struct GapReport {
  std::string kind;            // "monotone-gap" or "threshold-gap"
  std::string target_label = "kprime";
  uint32_t k = 0;
  uint64_t target_bound = 0;
  bool source_satisfiable = false;  // C is k-satisfiable / G has a k-clique
  std::optional<uint64_t> opt_source;
  std::optional<uint64_t> opt_target;
  bool claim1_holds = false;
  bool claim2_holds = false;
  std::optional<std::string> claim1_witness;
  std::optional<std::string> claim2_counterexample;
  std::vector<std::pair<std::string, std::string>> extras;  // ordered key/value

  bool all_claims_hold() const { return claim1_holds && claim2_holds; }
  std::string to_text() const;  // line-keyed key=value report
};

}  // namespace gapkit

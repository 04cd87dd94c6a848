#include <algorithm>
#include <bit>

#include "circuit.hpp"
#include "error.hpp"

namespace gapkit {

namespace {

// Lexicographic combination stream over {0..n-1} of fixed size k.
struct CombinationStream {
  uint32_t n, k;
  std::vector<uint32_t> current;
  bool done = false;

  CombinationStream(uint32_t n_, uint32_t k_) : n(n_), k(k_) {
    current.resize(k);
    for (uint32_t i = 0; i < k; ++i) current[i] = i;
    if (k > n) done = true;
  }

  void advance() {
    if (k == 0) {
      done = true;
      return;
    }
    uint32_t i = k;
    while (i-- > 0) {
      if (current[i] + (k - i) < n) {
        ++current[i];
        for (uint32_t j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
        return;
      }
    }
    done = true;
  }
};

// Searches weight-k assignments in lexicographic order, 64 lanes per pass.
// Consumes from `budget` the number of assignments evaluated.
std::optional<Assignment> solve_weight(const Evaluator& ev, uint32_t n, uint32_t k,
                                       uint64_t& budget, std::vector<uint64_t>& inputs,
                                       std::vector<uint64_t>& scratch) {
  uint64_t needed = binomial_capped(n, k, budget);
  if (needed > budget) throw_budget("enumeration budget exceeded: C(" + std::to_string(n) + "," +
                                    std::to_string(k) + ") weight-" + std::to_string(k) +
                                    " assignments");
  budget -= needed;

  CombinationStream comb(n, k);
  std::vector<Assignment> lanes;
  lanes.reserve(64);
  while (!comb.done) {
    std::fill(inputs.begin(), inputs.end(), 0);
    lanes.clear();
    while (!comb.done && lanes.size() < 64) {
      const uint64_t bit = uint64_t{1} << lanes.size();
      for (uint32_t idx : comb.current) inputs[idx] |= bit;
      lanes.push_back(comb.current);
      comb.advance();
    }
    uint64_t out = ev.run(inputs, scratch);
    out &= lanes.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << lanes.size()) - 1;
    if (out != 0) return lanes[static_cast<size_t>(std::countr_zero(out))];
  }
  return std::nullopt;
}

}  // namespace

std::optional<Assignment> is_k_satisfiable(const Circuit& c, uint32_t k, const SolveOptions& opt) {
  const uint32_t n = static_cast<uint32_t>(c.inputs().size());
  if (k > n) throw_invalid("k = " + std::to_string(k) + " exceeds the number of inputs");
  Evaluator ev(c);
  uint64_t budget = opt.budget;
  std::vector<uint64_t> inputs(n), scratch;
  return solve_weight(ev, n, k, budget, inputs, scratch);
}

std::optional<std::pair<uint32_t, Assignment>> min_weight_sat(const Circuit& c,
                                                              const SolveOptions& opt) {
  const uint32_t n = static_cast<uint32_t>(c.inputs().size());
  Evaluator ev(c);
  uint64_t budget = opt.budget;
  std::vector<uint64_t> inputs(n), scratch;
  for (uint32_t k = 0; k <= n; ++k) {
    auto found = solve_weight(ev, n, k, budget, inputs, scratch);
    if (found) return std::make_pair(k, std::move(*found));
  }
  return std::nullopt;
}

std::optional<std::pair<uint32_t, Assignment>> max_weight_sat(const Circuit& c,
                                                              const SolveOptions& opt) {
  const uint32_t n = static_cast<uint32_t>(c.inputs().size());
  Evaluator ev(c);
  uint64_t budget = opt.budget;
  std::vector<uint64_t> inputs(n), scratch;
  for (uint32_t k = n + 1; k-- > 0;) {
    auto found = solve_weight(ev, n, k, budget, inputs, scratch);
    if (found) return std::make_pair(k, std::move(*found));
  }
  return std::nullopt;
}

}  // namespace gapkit

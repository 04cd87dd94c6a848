#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gapkit {

// A family of functions [n] -> [k'] stored as explicit value tables.
// Domain elements are 0-based internally; values are 1-based, matching the
// textual dump format.
struct HashFamily {
  uint32_t n = 0;
  uint32_t k_prime = 0;
  uint64_t seed = 0;
  std::vector<std::vector<uint8_t>> functions;  // each of length n, values in [1, k']

  size_t size() const { return functions.size(); }

  // "hashfamily n=<n> kprime=<k'> size=<m> seed=<s>" + one line per function.
  std::string dump() const;
  static HashFamily parse(const std::string& text);
};

struct FamilyOptions {
  uint64_t subset_budget = uint64_t{1} << 26;  // k'-subsets enumerated
  uint64_t sample_budget = uint64_t{1} << 21;  // random functions drawn
};

// True iff every k'-subset of the domain is mapped injectively by some member.
bool verify_perfect(const HashFamily& family, const FamilyOptions& opt = {});

// Randomized-greedy construction: sample random functions, keep one exactly
// when it is injective on some still-uncovered k'-subset, stop once every
// subset is covered, then certify with verify_perfect.  For k' >= n a single
// injective embedding covers every subset and is returned directly.
HashFamily build_perfect_family(uint32_t n, uint32_t k_prime, uint64_t seed = 0,
                                const FamilyOptions& opt = {});

}  // namespace gapkit

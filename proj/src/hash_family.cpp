#include "hash_family.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "circuit.hpp"
#include "error.hpp"

namespace gapkit {

namespace {

constexpr uint32_t kMaxRange = 255;  // values stored in a byte

void validate_shape(const HashFamily& f) {
  if (f.n == 0 || f.k_prime == 0) throw_invalid("hash family needs n >= 1 and k' >= 1");
  if (f.k_prime > kMaxRange) throw_invalid("hash family range too large");
  for (const auto& table : f.functions) {
    if (table.size() != f.n) throw_invalid("hash family function table has wrong length");
    for (uint8_t v : table)
      if (v < 1 || v > f.k_prime) throw_invalid("hash family value out of range [1, k']");
  }
}

// Visits every k'-subset of {0..n-1}; returns false if the callback does.
template <typename F>
bool for_each_subset(uint32_t n, uint32_t k, F&& callback) {
  if (k > n) return true;
  std::vector<uint32_t> subset(k);
  for (uint32_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    if (!callback(subset)) return false;
    uint32_t i = k;
    bool advanced = false;
    while (i-- > 0) {
      if (subset[i] + (k - i) < n) {
        ++subset[i];
        for (uint32_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return true;
  }
}

bool injective_on(const std::vector<uint8_t>& table, const std::vector<uint32_t>& subset) {
  uint64_t seen[4] = {0, 0, 0, 0};  // bitmap over values 0..255
  for (uint32_t s : subset) {
    uint8_t v = table[s];
    uint64_t bit = uint64_t{1} << (v & 63);
    if (seen[v >> 6] & bit) return false;
    seen[v >> 6] |= bit;
  }
  return true;
}

}  // namespace

std::string HashFamily::dump() const {
  std::string out = "hashfamily n=" + std::to_string(n) + " kprime=" + std::to_string(k_prime) +
                    " size=" + std::to_string(functions.size()) + " seed=" + std::to_string(seed) +
                    "\n";
  for (const auto& table : functions) {
    for (size_t i = 0; i < table.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(table[i]);
    }
    out += "\n";
  }
  return out;
}

HashFamily HashFamily::parse(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  if (!(in >> word) || word != "hashfamily") throw_parse("hash family: expected 'hashfamily' header");
  HashFamily family;
  size_t declared_size = 0;
  for (int i = 0; i < 4; ++i) {
    if (!(in >> word)) throw_parse("hash family: truncated header");
    auto eq = word.find('=');
    if (eq == std::string::npos) throw_parse("hash family: malformed header field '" + word + "'");
    const std::string key = word.substr(0, eq);
    uint64_t value;
    try {
      value = std::stoull(word.substr(eq + 1));
    } catch (...) {
      throw_parse("hash family: malformed header field '" + word + "'");
    }
    if (key == "n") family.n = static_cast<uint32_t>(value);
    else if (key == "kprime") family.k_prime = static_cast<uint32_t>(value);
    else if (key == "size") declared_size = value;
    else if (key == "seed") family.seed = value;
    else throw_parse("hash family: unknown header field '" + key + "'");
  }
  for (size_t f = 0; f < declared_size; ++f) {
    std::vector<uint8_t> table(family.n);
    for (uint32_t i = 0; i < family.n; ++i) {
      uint64_t v;
      if (!(in >> v)) throw_parse("hash family: truncated function table");
      if (v < 1 || v > family.k_prime) throw_parse("hash family: value out of range [1, k']");
      table[i] = static_cast<uint8_t>(v);
    }
    family.functions.push_back(std::move(table));
  }
  if (in >> word) throw_parse("hash family: trailing content");
  validate_shape(family);
  return family;
}

bool verify_perfect(const HashFamily& family, const FamilyOptions& opt) {
  validate_shape(family);
  if (family.k_prime > family.n) return true;  // no k'-subsets exist
  uint64_t subsets = binomial_capped(family.n, family.k_prime, opt.subset_budget);
  if (subsets > opt.subset_budget)
    throw_budget("hash family verification: C(n, k') exceeds the subset budget");
  return for_each_subset(family.n, family.k_prime, [&](const std::vector<uint32_t>& subset) {
    for (const auto& table : family.functions)
      if (injective_on(table, subset)) return true;
    return false;
  });
}

HashFamily build_perfect_family(uint32_t n, uint32_t k_prime, uint64_t seed,
                                const FamilyOptions& opt) {
  if (n == 0 || k_prime == 0) throw_invalid("hash family needs n >= 1 and k' >= 1");
  if (k_prime > kMaxRange) throw_invalid("hash family range too large");

  HashFamily family;
  family.n = n;
  family.k_prime = k_prime;
  family.seed = seed;

  if (k_prime >= n) {
    // The identity embedding is injective on every subset.
    std::vector<uint8_t> identity(n);
    for (uint32_t i = 0; i < n; ++i) identity[i] = static_cast<uint8_t>(i + 1);
    family.functions.push_back(std::move(identity));
    return family;
  }

  uint64_t subsets = binomial_capped(n, k_prime, opt.subset_budget);
  if (subsets > opt.subset_budget)
    throw_budget("hash family construction: C(n, k') exceeds the subset budget");

  std::vector<std::vector<uint32_t>> uncovered;
  uncovered.reserve(static_cast<size_t>(subsets));
  for_each_subset(n, k_prime, [&](const std::vector<uint32_t>& subset) {
    uncovered.push_back(subset);
    return true;
  });

  std::mt19937_64 rng(seed);
  std::vector<uint8_t> candidate(n);
  uint64_t samples = 0;
  while (!uncovered.empty()) {
    if (++samples > opt.sample_budget)
      throw_construction("hash family construction: sample budget exhausted before covering all " +
                         std::to_string(uncovered.size()) + " remaining subsets");
    for (uint32_t i = 0; i < n; ++i)
      candidate[i] = static_cast<uint8_t>(1 + rng() % k_prime);
    size_t kept = 0;
    for (auto& subset : uncovered)
      if (!injective_on(candidate, subset)) std::swap(uncovered[kept++], subset);
    if (kept < uncovered.size()) {
      uncovered.resize(kept);
      family.functions.push_back(candidate);
    }
  }

  if (!verify_perfect(family, opt))
    throw_internal("hash family construction produced an uncertifiable family");
  return family;
}

}  // namespace gapkit

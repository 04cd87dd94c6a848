#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circuit.hpp"
#include "error.hpp"
#include "hash_family.hpp"
#include "testutil.hpp"

using namespace gapkit;

namespace {

// Direct double loop over subsets and members, sharing nothing with
// verify_perfect's early exits.
bool reference_verify(const HashFamily& family) {
  if (family.k_prime > family.n) return true;
  std::vector<uint32_t> subset(family.k_prime);
  for (uint32_t i = 0; i < family.k_prime; ++i) subset[i] = i;
  while (true) {
    bool covered = false;
    for (const auto& table : family.functions) {
      std::vector<bool> seen(family.k_prime + 1, false);
      bool injective = true;
      for (uint32_t s : subset) {
        if (seen[table[s]]) {
          injective = false;
          break;
        }
        seen[table[s]] = true;
      }
      if (injective) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
    uint32_t i = family.k_prime;
    bool advanced = false;
    while (i-- > 0) {
      if (subset[i] + (family.k_prime - i) < family.n) {
        ++subset[i];
        for (uint32_t j = i + 1; j < family.k_prime; ++j) subset[j] = subset[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return true;
  }
}

HashFamily make_family(uint32_t n, uint32_t k_prime, std::vector<std::vector<uint8_t>> fns) {
  HashFamily f;
  f.n = n;
  f.k_prime = k_prime;
  f.functions = std::move(fns);
  return f;
}

}  // namespace

TEST_CASE("identity is 2-perfect on a 2-element domain") {
  CHECK(verify_perfect(make_family(2, 2, {{1, 2}})));
}

TEST_CASE("a constant function is not 2-perfect") {
  CHECK_FALSE(verify_perfect(make_family(2, 2, {{1, 1}})));
}

TEST_CASE("the family of all functions is perfect") {
  // All 3^3 = 27 functions [3] -> [3].
  std::vector<std::vector<uint8_t>> fns;
  for (uint8_t a = 1; a <= 3; ++a)
    for (uint8_t b = 1; b <= 3; ++b)
      for (uint8_t c = 1; c <= 3; ++c) fns.push_back({a, b, c});
  CHECK(verify_perfect(make_family(3, 3, std::move(fns))));
}

TEST_CASE("construction certifies at desk scale") {
  for (auto [n, kp] : {std::pair{4u, 2u}, {8u, 3u}, {16u, 4u}, {10u, 2u}}) {
    auto family = build_perfect_family(n, kp, 42);
    CHECK(family.n == n);
    CHECK(family.k_prime == kp);
    CHECK(family.size() >= 1);
    CHECK(verify_perfect(family));
    CHECK(reference_verify(family));
  }
}

TEST_CASE("construction with k' >= n returns the injective embedding") {
  auto family = build_perfect_family(3, 5, 0);
  REQUIRE(family.size() == 1);
  CHECK(family.functions[0] == std::vector<uint8_t>{1, 2, 3});
  CHECK(verify_perfect(family));
}

TEST_CASE("construction is deterministic per seed") {
  auto a = build_perfect_family(10, 3, 7);
  auto b = build_perfect_family(10, 3, 7);
  CHECK(a.functions == b.functions);
}

TEST_CASE("verification agrees with the reference on random families") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    const uint32_t n = 2 + static_cast<uint32_t>(testutil::rand_below(rng, 7));
    const uint32_t kp = 1 + static_cast<uint32_t>(testutil::rand_below(rng, n));
    const size_t count = 1 + testutil::rand_below(rng, 6);
    std::vector<std::vector<uint8_t>> fns;
    for (size_t f = 0; f < count; ++f) {
      std::vector<uint8_t> table(n);
      for (uint32_t i = 0; i < n; ++i)
        table[i] = static_cast<uint8_t>(1 + testutil::rand_below(rng, kp));
      fns.push_back(std::move(table));
    }
    auto family = make_family(n, kp, std::move(fns));
    CHECK(verify_perfect(family) == reference_verify(family));
  }
}

TEST_CASE("adding any function keeps a family perfect") {
  std::mt19937_64 rng(31337);
  auto family = build_perfect_family(8, 3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    auto extended = family;
    std::vector<uint8_t> extra(8);
    for (auto& v : extra) v = static_cast<uint8_t>(1 + testutil::rand_below(rng, 3));
    extended.functions.push_back(std::move(extra));
    CHECK(verify_perfect(extended));
  }
}

TEST_CASE("dump round-trips through parse") {
  auto family = build_perfect_family(8, 3, 11);
  auto text = family.dump();
  auto back = HashFamily::parse(text);
  CHECK(back.n == family.n);
  CHECK(back.k_prime == family.k_prime);
  CHECK(back.seed == family.seed);
  CHECK(back.functions == family.functions);
  CHECK(back.dump() == text);
}

TEST_CASE("dump parser rejects malformed input") {
  CHECK_THROWS_AS(HashFamily::parse("nonsense"), Error);
  CHECK_THROWS_AS(HashFamily::parse("hashfamily n=2 kprime=2 size=1 seed=0\n1 7\n"), Error);
  CHECK_THROWS_AS(HashFamily::parse("hashfamily n=2 kprime=2 size=2 seed=0\n1 2\n"), Error);
}

TEST_CASE("budgets guard construction and verification") {
  FamilyOptions opt;
  opt.subset_budget = 10;
  CHECK_THROWS_AS(build_perfect_family(16, 4, 0, opt), Error);  // C(16,4) = 1820 subsets
  auto family = build_perfect_family(16, 4, 0);
  CHECK_THROWS_AS(verify_perfect(family, opt), Error);
  FamilyOptions samples;
  samples.sample_budget = 1;
  CHECK_THROWS_AS(build_perfect_family(16, 4, 0, samples), Error);
}

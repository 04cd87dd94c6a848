#pragma once

#include <cstdint>
#include <string>

namespace gapkit {

// Nonnegative rational, kept normalized (gcd(num, den) = 1, den >= 1).
struct Rational {
  uint64_t num = 0;
  uint64_t den = 1;

  Rational() = default;
  Rational(uint64_t n, uint64_t d);

  bool operator==(const Rational&) const = default;
  bool is_integer() const { return den == 1; }
  std::string to_string() const;
};

// Ratio function rho(k) = max(1, c * k^e) with rational c >= 0 and e >= 0.
// All evaluations are exact: products of integer powers compared through
// q-th roots, never through floating point.
class RatioSpec {
 public:
  RatioSpec(Rational c, Rational e);

  // Accepts "c*k^e" style text: "1", "3/2", "k", "2*k", "k^2", "k^(1/2)",
  // "3/2*k^(2/3)". Decimal exponents are rejected; use fractions.
  static RatioSpec parse(const std::string& text);

  const Rational& coefficient() const { return c_; }
  const Rational& exponent() const { return e_; }

  // Canonical text form, re-parses to an equal spec.
  std::string to_string() const;

  // True when k / rho(k) is unbounded (maximization-side validity): e < 1.
  bool valid_for_max() const;

  // ceil(rho(k) * k), exact.  k >= 1.
  uint64_t k_prime(uint32_t k) const;

  // Smallest D >= 1 with D / rho(D) >= k, searched up to `cap`.
  // Requires valid_for_max().
  uint64_t min_code_length(uint32_t k, uint64_t cap = 1000000) const;

  bool operator==(const RatioSpec&) const = default;

 private:
  Rational c_;
  Rational e_;
};

}  // namespace gapkit

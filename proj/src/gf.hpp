#pragma once

#include <cstdint>

namespace gapkit {

// GF(2^ell) with a fixed irreducible modulus per extension degree.
// Elements are ell-bit words; bit i is the coefficient of x^i.
class FieldSpec {
 public:
  static constexpr uint32_t kMaxEll = 8;

  explicit FieldSpec(uint32_t ell);

  uint32_t ell() const { return ell_; }
  uint32_t q() const { return uint32_t{1} << ell_; }
  uint32_t modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;  // rejects a = 0

 private:
  void check_element(uint32_t a) const;

  uint32_t ell_;
  uint32_t modulus_;
};

// Exhaustive divisor check over GF(2)[x]; poly encoded with bit i = coeff x^i.
bool gf2_poly_irreducible(uint32_t poly, uint32_t degree);

}  // namespace gapkit

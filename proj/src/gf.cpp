#include "gf.hpp"

#include <bit>
#include <string>

#include "error.hpp"

namespace gapkit {

namespace {

// Irreducible modulus per extension degree (degree 1 listed for
// completeness; the reductions always use ell >= 2).
constexpr uint32_t kModulus[FieldSpec::kMaxEll + 1] = {
    0,
    0b11,         // x + 1
    0b111,        // x^2 + x + 1
    0b1011,       // x^3 + x + 1
    0b10011,      // x^4 + x + 1
    0b100101,     // x^5 + x^2 + 1
    0b1000011,    // x^6 + x + 1
    0b10000011,   // x^7 + x + 1
    0b100011011,  // x^8 + x^4 + x^3 + x + 1
};

uint32_t poly_degree(uint32_t poly) {
  return poly == 0 ? 0 : 31 - static_cast<uint32_t>(std::countl_zero(poly));
}

uint32_t poly_mod(uint32_t a, uint32_t m) {
  const uint32_t dm = poly_degree(m);
  while (a != 0 && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
  return a;
}

}  // namespace

bool gf2_poly_irreducible(uint32_t poly, uint32_t degree) {
  if (poly_degree(poly) != degree || degree == 0) return false;
  for (uint32_t d = 1; 2 * d <= degree; ++d) {
    for (uint32_t low = 0; low < (uint32_t{1} << d); ++low) {
      uint32_t divisor = (uint32_t{1} << d) | low;  // monic of degree d
      if (poly_mod(poly, divisor) == 0) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(uint32_t ell) : ell_(ell) {
  if (ell < 1 || ell > kMaxEll)
    throw_invalid("field degree must be in [1, " + std::to_string(kMaxEll) + "]");
  modulus_ = kModulus[ell];
  if (!gf2_poly_irreducible(modulus_, ell)) throw_internal("field modulus is not irreducible");
}

void FieldSpec::check_element(uint32_t a) const {
  if (a >= q()) throw_invalid("field element " + std::to_string(a) + " out of range [0, " +
                              std::to_string(q()) + ")");
}

uint32_t FieldSpec::add(uint32_t a, uint32_t b) const {
  check_element(a);
  check_element(b);
  return a ^ b;
}

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
  check_element(a);
  check_element(b);
  uint32_t result = 0;
  while (b != 0) {
    if (b & 1) result ^= a;
    b >>= 1;
    a <<= 1;
    if (a & q()) a ^= modulus_;
  }
  return result;
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
  check_element(a);
  uint32_t result = 1;
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

uint32_t FieldSpec::inv(uint32_t a) const {
  check_element(a);
  if (a == 0) throw_invalid("inverse of zero field element");
  return pow(a, q() - 2);
}

}  // namespace gapkit

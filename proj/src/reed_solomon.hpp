#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace gapkit {

// Code parameters: message length k, codeword length D, evaluation points
// alpha_1..alpha_D (distinct, nonzero).  Component i of a codeword is
// sum over j = 1..k of alpha_i^j * m_j.
class RSSpec {
 public:
  // Canonical evaluation points: alpha_i is the field word i, i = 1..D.
  RSSpec(uint32_t ell, uint32_t k, uint32_t D);
  RSSpec(FieldSpec field, uint32_t k, uint32_t D, std::vector<uint32_t> alphas);

  const FieldSpec& field() const { return field_; }
  uint32_t k() const { return k_; }
  uint32_t D() const { return D_; }
  uint32_t alpha(uint32_t i) const;  // 1-based position

 private:
  FieldSpec field_;
  uint32_t k_;
  uint32_t D_;
  std::vector<uint32_t> alphas_;
};

std::vector<uint32_t> rs_encode(const RSSpec& spec, std::span<const uint32_t> message);

// Recovers the unique message matching the known (position, value) pairs;
// positions are 1-based.  Needs at least k known positions; with more, the
// extras must be consistent with the recovered message.
std::vector<uint32_t> rs_recover(const RSSpec& spec,
                                 std::span<const std::pair<uint32_t, uint32_t>> known);

}  // namespace gapkit

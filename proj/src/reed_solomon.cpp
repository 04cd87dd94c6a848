#include "reed_solomon.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace gapkit {

namespace {

void validate_params(const FieldSpec& field, uint32_t k, uint32_t D,
                     const std::vector<uint32_t>& alphas) {
  if (k < 1) throw_invalid("message length k must be >= 1");
  if (k > D) throw_invalid("message length k must not exceed codeword length D");
  if (D >= field.q())
    throw_invalid("codeword length D = " + std::to_string(D) + " must be below the field size " +
                  std::to_string(field.q()));
  if (alphas.size() != D) throw_invalid("need exactly D evaluation points");
  for (uint32_t a : alphas) {
    if (a == 0) throw_invalid("evaluation points must be nonzero");
    if (a >= field.q()) throw_invalid("evaluation point out of the field");
  }
  auto sorted = alphas;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw_invalid("evaluation points must be distinct");
}

}  // namespace

RSSpec::RSSpec(uint32_t ell, uint32_t k, uint32_t D) : field_(ell), k_(k), D_(D) {
  alphas_.resize(D);
  for (uint32_t i = 0; i < D; ++i) alphas_[i] = i + 1;
  validate_params(field_, k_, D_, alphas_);
}

RSSpec::RSSpec(FieldSpec field, uint32_t k, uint32_t D, std::vector<uint32_t> alphas)
    : field_(field), k_(k), D_(D), alphas_(std::move(alphas)) {
  validate_params(field_, k_, D_, alphas_);
}

uint32_t RSSpec::alpha(uint32_t i) const {
  if (i < 1 || i > D_) throw_invalid("codeword position out of range [1, D]");
  return alphas_[i - 1];
}

std::vector<uint32_t> rs_encode(const RSSpec& spec, std::span<const uint32_t> message) {
  if (message.size() != spec.k()) throw_invalid("message length must equal k");
  const FieldSpec& f = spec.field();
  for (uint32_t m : message)
    if (m >= f.q()) throw_invalid("message symbol out of the field");

  std::vector<uint32_t> codeword(spec.D(), 0);
  for (uint32_t i = 1; i <= spec.D(); ++i) {
    const uint32_t a = spec.alpha(i);
    uint32_t power = 1;
    uint32_t acc = 0;
    for (uint32_t j = 1; j <= spec.k(); ++j) {
      power = f.mul(power, a);  // alpha_i^j, starting at j = 1
      acc = f.add(acc, f.mul(power, message[j - 1]));
    }
    codeword[i - 1] = acc;
  }
  return codeword;
}

std::vector<uint32_t> rs_recover(const RSSpec& spec,
                                 std::span<const std::pair<uint32_t, uint32_t>> known) {
  const FieldSpec& f = spec.field();
  const uint32_t k = spec.k();
  if (known.size() < k)
    throw_invalid("erasure recovery needs at least k = " + std::to_string(k) +
                  " known positions, got " + std::to_string(known.size()));

  std::vector<std::pair<uint32_t, uint32_t>> pairs(known.begin(), known.end());
  std::sort(pairs.begin(), pairs.end());
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [pos, value] = pairs[i];
    if (pos < 1 || pos > spec.D()) throw_invalid("codeword position out of range [1, D]");
    if (value >= f.q()) throw_invalid("codeword value out of the field");
    if (i > 0 && pairs[i - 1].first == pos) throw_invalid("duplicate codeword position");
  }

  // Solve the k x k system with rows (alpha_i^1 .. alpha_i^k) from the k
  // lowest known positions; rows are independent (Vandermonde times a
  // nonzero diagonal), so elimination always finds pivots.
  std::vector<std::vector<uint32_t>> m(k, std::vector<uint32_t>(k + 1, 0));
  for (uint32_t r = 0; r < k; ++r) {
    const uint32_t a = spec.alpha(pairs[r].first);
    uint32_t power = 1;
    for (uint32_t j = 0; j < k; ++j) {
      power = f.mul(power, a);
      m[r][j] = power;
    }
    m[r][k] = pairs[r].second;
  }
  for (uint32_t col = 0; col < k; ++col) {
    uint32_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) throw_internal("erasure system is singular");
    std::swap(m[col], m[pivot]);
    const uint32_t inv = f.inv(m[col][col]);
    for (uint32_t j = col; j <= k; ++j) m[col][j] = f.mul(m[col][j], inv);
    for (uint32_t r = 0; r < k; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const uint32_t factor = m[r][col];
      for (uint32_t j = col; j <= k; ++j) m[r][j] = f.add(m[r][j], f.mul(factor, m[col][j]));
    }
  }
  std::vector<uint32_t> message(k);
  for (uint32_t j = 0; j < k; ++j) message[j] = m[j][k];

  auto codeword = rs_encode(spec, message);
  for (auto [pos, value] : pairs)
    if (codeword[pos - 1] != value)
      throw_invalid("inconsistent codeword values: position " + std::to_string(pos) +
                    " disagrees with the recovered message (erasures only, no errors)");
  return message;
}

}  // namespace gapkit

#include "ratio.hpp"

#include <cctype>
#include <numeric>
#include <optional>

#include "error.hpp"

namespace gapkit {

namespace {

using u128 = unsigned __int128;

std::optional<u128> checked_mul(u128 a, u128 b) {
  if (a != 0 && b > ~(u128)0 / a) return std::nullopt;
  return a * b;
}

std::optional<u128> checked_pow(u128 base, uint64_t exp) {
  u128 result = 1;
  while (exp != 0) {
    if (exp & 1) {
      auto r = checked_mul(result, base);
      if (!r) return std::nullopt;
      result = *r;
    }
    exp >>= 1;
    if (exp != 0) {
      auto b = checked_mul(base, base);
      if (!b) return std::nullopt;
      base = *b;
    }
  }
  return result;
}

u128 pow_or_throw(u128 base, uint64_t exp) {
  auto r = checked_pow(base, exp);
  if (!r) throw_invalid("ratio arithmetic overflow; spec is beyond desk scale");
  return *r;
}

// True iff m^q * b >= a, where a and b are known to fit in 128 bits.
bool root_ge(u128 m, uint64_t q, u128 b, u128 a) {
  auto p = checked_pow(m, q);
  if (!p) return true;
  auto v = checked_mul(*p, b);
  if (!v) return true;
  return *v >= a;
}

// ceil((a / b)^(1/q)) for a, b >= 1: the least m with m^q * b >= a.
uint64_t ceil_qth_root(u128 a, u128 b, uint64_t q) {
  if (a == 0) return 0;
  uint64_t hi = 1;
  while (!root_ge(hi, q, b, a)) {
    if (hi > (uint64_t{1} << 62)) throw_invalid("ratio arithmetic overflow");
    hi *= 2;
  }
  uint64_t lo = 0;  // root_ge(lo) is false (or lo == 0 trivially below m)
  while (hi - lo > 1) {
    uint64_t mid = lo + (hi - lo) / 2;
    if (root_ge(mid, q, b, a))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

uint64_t parse_uint(Cursor& cur) {
  if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
    throw_parse("ratio: expected a number at position " + std::to_string(cur.pos + 1) +
                " in '" + cur.s + "'");
  uint64_t v = 0;
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    uint64_t digit = static_cast<uint64_t>(cur.peek() - '0');
    if (v > (UINT64_MAX - digit) / 10) throw_parse("ratio: number too large in '" + cur.s + "'");
    v = v * 10 + digit;
    ++cur.pos;
  }
  return v;
}

Rational parse_rational(Cursor& cur) {
  uint64_t num = parse_uint(cur);
  if (cur.peek() == '.') throw_parse("ratio: decimals are not supported; use fractions like 1/2");
  uint64_t den = 1;
  if (cur.eat('/')) den = parse_uint(cur);
  return Rational(num, den);
}

}  // namespace

Rational::Rational(uint64_t n, uint64_t d) {
  if (d == 0) throw_invalid("rational with zero denominator");
  uint64_t g = std::gcd(n, d);
  if (n == 0) {
    num = 0;
    den = 1;
  } else {
    num = n / g;
    den = d / g;
  }
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

RatioSpec::RatioSpec(Rational c, Rational e) : c_(c), e_(e) {}

RatioSpec RatioSpec::parse(const std::string& text) {
  std::string trimmed;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
  if (trimmed.empty()) throw_parse("ratio: empty specification");

  Cursor cur{trimmed};
  Rational c(1, 1);
  Rational e(0, 1);
  bool saw_k = false;

  if (cur.peek() != 'k') {
    c = parse_rational(cur);
    if (cur.eat('*')) {
      if (cur.peek() != 'k') throw_parse("ratio: expected 'k' after '*' in '" + trimmed + "'");
    }
  }
  if (cur.eat('k')) {
    saw_k = true;
    e = Rational(1, 1);
    if (cur.eat('^')) {
      if (cur.eat('(')) {
        e = parse_rational(cur);
        if (!cur.eat(')')) throw_parse("ratio: missing ')' in '" + trimmed + "'");
      } else {
        e = Rational(parse_uint(cur), 1);
      }
    }
  }
  if (!cur.done())
    throw_parse("ratio: trailing characters at position " + std::to_string(cur.pos + 1) +
                " in '" + trimmed + "'");
  if (!saw_k && cur.s.find('k') != std::string::npos)
    throw_parse("ratio: malformed expression '" + trimmed + "'");
  return RatioSpec(c, e);
}

std::string RatioSpec::to_string() const {
  if (e_.num == 0) return c_.to_string();
  std::string s;
  if (!(c_.num == 1 && c_.den == 1)) s = c_.to_string() + "*";
  s += "k";
  if (!(e_.num == 1 && e_.den == 1)) {
    if (e_.is_integer())
      s += "^" + std::to_string(e_.num);
    else
      s += "^(" + e_.to_string() + ")";
  }
  return s;
}

bool RatioSpec::valid_for_max() const {
  // k / max(1, c*k^e) is unbounded exactly when e < 1 (or c = 0).
  if (c_.num == 0) return true;
  return e_.num < e_.den;
}

uint64_t RatioSpec::k_prime(uint32_t k) const {
  if (k == 0) throw_invalid("k must be positive");
  if (c_.num == 0) return k;  // rho == 1
  // ceil(c * k^(1+e)) with c = a/b, e = p/q:
  // the least m with m^q * b^q >= a^q * k^(q+p).
  uint64_t a = c_.num, b = c_.den, p = e_.num, q = e_.den;
  u128 lhs_b = pow_or_throw(b, q);
  u128 rhs = checked_mul(pow_or_throw(a, q), pow_or_throw(k, q + p))
                 .value_or(0);
  if (rhs == 0 && a != 0) throw_invalid("ratio arithmetic overflow");
  uint64_t ceil_ck = ceil_qth_root(rhs, lhs_b, q);
  return ceil_ck > k ? ceil_ck : k;
}

uint64_t RatioSpec::min_code_length(uint32_t k, uint64_t cap) const {
  if (k == 0) throw_invalid("k must be positive");
  if (!valid_for_max())
    throw_invalid("ratio '" + to_string() + "' is invalid for maximization: k/rho(k) is bounded");
  uint64_t a = c_.num, b = c_.den, p = e_.num, q = e_.den;
  for (uint64_t D = 1; D <= cap; ++D) {
    bool ok;
    if (a == 0) {
      ok = D >= k;
    } else {
      // c * D^e <= 1  <=>  a^q * D^p <= b^q
      bool rho_is_one = false;
      if (auto dp = checked_pow(D, p)) {
        auto lhs = checked_mul(pow_or_throw(a, q), *dp);
        rho_is_one = lhs.has_value() && *lhs <= pow_or_throw(b, q);
      }
      if (rho_is_one) {
        ok = D >= k;
      } else {
        // D / (c*D^e) >= k  <=>  b^q * D^(q-p) >= a^q * k^q
        u128 rhs = checked_mul(pow_or_throw(a, q), pow_or_throw(k, q)).value_or(0);
        if (rhs == 0) throw_invalid("ratio arithmetic overflow");
        auto dq = checked_pow(D, q - p);
        if (!dq) {
          ok = true;
        } else {
          auto l = checked_mul(pow_or_throw(b, q), *dq);
          ok = !l.has_value() || *l >= rhs;
        }
      }
    }
    if (ok) return D;
  }
  throw_invalid("no D <= " + std::to_string(cap) + " satisfies D/rho(D) >= " + std::to_string(k));
}

}  // namespace gapkit

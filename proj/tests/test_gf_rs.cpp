#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "error.hpp"
#include "gf.hpp"
#include "reed_solomon.hpp"
#include "testutil.hpp"

using namespace gapkit;

TEST_CASE("modulus table entries are irreducible") {
  for (uint32_t ell = 1; ell <= FieldSpec::kMaxEll; ++ell) {
    FieldSpec f(ell);
    CHECK(gf2_poly_irreducible(f.modulus(), ell));
    CHECK(f.q() == (uint32_t{1} << ell));
  }
  CHECK_FALSE(gf2_poly_irreducible(0b110, 2));    // x^2 + x = x(x+1)
  CHECK_FALSE(gf2_poly_irreducible(0b1001, 3));   // x^3 + 1 = (x+1)(x^2+x+1)
  CHECK_FALSE(gf2_poly_irreducible(0b10101, 4));  // (x^2+x+1)^2
  CHECK_THROWS_AS(FieldSpec(0), Error);
  CHECK_THROWS_AS(FieldSpec(9), Error);
}

TEST_CASE("characteristic-2 identities") {
  for (uint32_t ell : {2u, 3u, 4u}) {
    FieldSpec f(ell);
    for (uint32_t x = 0; x < f.q(); ++x) {
      CHECK(f.add(x, x) == 0);
      CHECK(f.mul(x, 1) == x);
      CHECK(f.mul(x, 0) == 0);
    }
  }
}

TEST_CASE("GF(4) worked values") {
  FieldSpec f(2);
  const uint32_t alpha = 0b10;
  CHECK(f.mul(alpha, alpha) == 0b11);  // alpha^2 = alpha + 1
  CHECK(f.inv(alpha) == 0b11);         // alpha * (alpha + 1) = 1
  CHECK(f.mul(alpha, 0b11) == 1);
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK_THROWS_AS(f.mul(4, 1), Error);
}

TEST_CASE("GF(4) multiplication matches the independent table") {
  FieldSpec f(2);
  for (uint32_t a = 0; a < 4; ++a)
    for (uint32_t b = 0; b < 4; ++b) CHECK(f.mul(a, b) == testutil::gf4_mul_table(a, b));
}

TEST_CASE("field axioms hold exhaustively on GF(4) and GF(8)") {
  for (uint32_t ell : {2u, 3u}) {
    FieldSpec f(ell);
    const uint32_t q = f.q();
    for (uint32_t a = 0; a < q; ++a) {
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (uint32_t c = 0; c < q; ++c) {
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("pow is iterated multiplication") {
  FieldSpec f(3);
  for (uint32_t a = 0; a < f.q(); ++a) {
    uint32_t acc = 1;
    for (uint32_t e = 0; e < 12; ++e) {
      CHECK(f.pow(a, e) == acc);
      acc = f.mul(acc, a);
    }
  }
}

TEST_CASE("encoding basics") {
  RSSpec spec(2, 2, 3);
  const std::vector<uint32_t> zero{0, 0};
  CHECK(rs_encode(spec, zero) == std::vector<uint32_t>{0, 0, 0});

  // k = 1: component i is alpha_i * m_1.
  RSSpec k1(3, 1, 5);
  const std::vector<uint32_t> m{5};
  auto cw = rs_encode(k1, m);
  FieldSpec f(3);
  for (uint32_t i = 1; i <= 5; ++i) CHECK(cw[i - 1] == f.mul(i, 5));
}

TEST_CASE("GF(4) codeword from the independent multiplication table") {
  // alphas are the words 1, 2, 3; component i = alpha_i*m1 + alpha_i^2*m2.
  RSSpec spec(2, 2, 3);
  const std::vector<uint32_t> m{1, 1};
  auto cw = rs_encode(spec, m);
  for (uint32_t i = 1; i <= 3; ++i) {
    const uint32_t a = i;
    const uint32_t a2 = testutil::gf4_mul_table(a, a);
    const uint32_t expected = testutil::gf4_mul_table(a, m[0]) ^ testutil::gf4_mul_table(a2, m[1]);
    CHECK(cw[i - 1] == expected);
  }
}

TEST_CASE("full codewords round-trip") {
  RSSpec spec(2, 3, 3);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<uint32_t> m{static_cast<uint32_t>(rng() % 4), static_cast<uint32_t>(rng() % 4),
                            static_cast<uint32_t>(rng() % 4)};
    auto cw = rs_encode(spec, m);
    std::vector<std::pair<uint32_t, uint32_t>> known;
    for (uint32_t i = 1; i <= 3; ++i) known.emplace_back(i, cw[i - 1]);
    CHECK(rs_recover(spec, known) == m);
  }
}

TEST_CASE("every erasure pattern recovers the message") {
  std::mt19937_64 rng(2024);
  for (uint32_t ell : {2u, 3u, 4u}) {
    const uint32_t q = uint32_t{1} << ell;
    for (uint32_t k = 1; k <= 3; ++k) {
      for (uint32_t D = k; D <= std::min(5u, q - 1); ++D) {
        RSSpec spec(ell, k, D);
        for (int trial = 0; trial < 10; ++trial) {
          std::vector<uint32_t> m(k);
          for (auto& s : m) s = static_cast<uint32_t>(rng() % q);
          auto cw = rs_encode(spec, m);
          // Every way of keeping exactly k positions.
          std::vector<uint32_t> keep(k);
          for (uint32_t i = 0; i < k; ++i) keep[i] = i;
          while (true) {
            std::vector<std::pair<uint32_t, uint32_t>> known;
            for (uint32_t i : keep) known.emplace_back(i + 1, cw[i]);
            CHECK(rs_recover(spec, known) == m);
            uint32_t i = k;
            bool advanced = false;
            while (i-- > 0) {
              if (keep[i] + (k - i) < D) {
                ++keep[i];
                for (uint32_t j = i + 1; j < k; ++j) keep[j] = keep[j - 1] + 1;
                advanced = true;
                break;
              }
            }
            if (!advanced) break;
          }
        }
      }
    }
  }
}

TEST_CASE("distinct messages never agree on k positions") {
  // Contrapositive of unique recovery, scanned exhaustively on GF(4), k = 2.
  RSSpec spec(2, 2, 3);
  std::vector<std::vector<uint32_t>> codewords;
  for (uint32_t m1 = 0; m1 < 4; ++m1)
    for (uint32_t m2 = 0; m2 < 4; ++m2)
      codewords.push_back(rs_encode(spec, std::vector<uint32_t>{m1, m2}));
  for (size_t a = 0; a < codewords.size(); ++a) {
    for (size_t b = a + 1; b < codewords.size(); ++b) {
      for (uint32_t i = 0; i < 3; ++i) {
        for (uint32_t j = i + 1; j < 3; ++j) {
          const bool agree =
              codewords[a][i] == codewords[b][i] && codewords[a][j] == codewords[b][j];
          CHECK_FALSE(agree);
        }
      }
    }
  }
}

TEST_CASE("every k-subset of evaluation rows is invertible") {
  // Gaussian elimination must always find pivots; check all row subsets by
  // running a recovery with arbitrary right-hand sides.
  for (uint32_t ell : {2u, 3u, 4u}) {
    const uint32_t q = uint32_t{1} << ell;
    for (uint32_t k = 1; k <= 3; ++k) {
      const uint32_t D = std::min(6u, q - 1);
      if (D < k) continue;
      RSSpec spec(ell, k, D);
      std::vector<uint32_t> keep(k);
      for (uint32_t i = 0; i < k; ++i) keep[i] = i;
      while (true) {
        std::vector<std::pair<uint32_t, uint32_t>> known;
        for (uint32_t i : keep) known.emplace_back(i + 1, (i * 2 + 1) % q);
        CHECK_NOTHROW(rs_recover(spec, known));
        uint32_t i = k;
        bool advanced = false;
        while (i-- > 0) {
          if (keep[i] + (k - i) < D) {
            ++keep[i];
            for (uint32_t j = i + 1; j < k; ++j) keep[j] = keep[j - 1] + 1;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    }
  }
}

TEST_CASE("recovery rejects bad inputs") {
  RSSpec spec(2, 2, 3);
  const std::vector<uint32_t> m{1, 2};
  auto cw = rs_encode(spec, m);

  std::vector<std::pair<uint32_t, uint32_t>> too_few{{1, cw[0]}};
  CHECK_THROWS_AS(rs_recover(spec, too_few), Error);

  std::vector<std::pair<uint32_t, uint32_t>> dup{{1, cw[0]}, {1, cw[0]}};
  CHECK_THROWS_AS(rs_recover(spec, dup), Error);

  std::vector<std::pair<uint32_t, uint32_t>> out_of_range{{1, cw[0]}, {4, cw[1]}};
  CHECK_THROWS_AS(rs_recover(spec, out_of_range), Error);

  // A corrupted extra position must be flagged, not silently ignored.
  std::vector<std::pair<uint32_t, uint32_t>> inconsistent{
      {1, cw[0]}, {2, cw[1]}, {3, cw[2] ^ 1}};
  CHECK_THROWS_AS(rs_recover(spec, inconsistent), Error);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(RSSpec(2, 2, 4), Error);  // D must stay below q
  CHECK_THROWS_AS(RSSpec(2, 3, 2), Error);  // k <= D
  CHECK_THROWS_AS(RSSpec(FieldSpec(2), 1, 2, {1, 1}), Error);  // distinct alphas
  CHECK_THROWS_AS(RSSpec(FieldSpec(2), 1, 2, {0, 1}), Error);  // nonzero alphas
}

#include <doctest.h>

#include "arxdp/adp_matrix.hpp"
#include "arxdp/adp_xr.hpp"
#include "arxdp/zero_tables.hpp"
#include "brute.hpp"

using namespace arxdp;

namespace {

OctalWord ow(unsigned n, std::uint64_t a, std::uint64_t b, std::uint64_t g) {
  return octal_word(brute::w(n, a), brute::w(n, b), brute::w(n, g));
}

}  // namespace

TEST_CASE("adp_xor zero decision") {
  CHECK_FALSE(adp_xor_zero(OctalWord::parse("5630")).is_zero);
  CHECK_FALSE(adp_xor_zero(OctalWord::parse("0000")).is_zero);
  for (unsigned n = 1; n <= 4; ++n) {
    const std::uint64_t m = brute::mask(n);
    for (std::uint64_t a = 0; a <= m; ++a)
      for (std::uint64_t b = 0; b <= m; ++b)
        for (std::uint64_t g = 0; g <= m; ++g) {
          const ZeroReport z = adp_xor_zero(ow(n, a, b, g));
          CHECK(z.is_zero == (brute::hits(brute::Op::xor_op, n, 0, a, b, g) == 0));
          CHECK(z.is_zero == z.matched.has_value());
        }
  }
}

TEST_CASE("cadp zero decision") {
  CHECK(cadp_zero(1, Word::from_value(3, 5), Word::from_value(3, 5), Word::zero(3)));
  CHECK_FALSE(cadp_zero(0, Word::zero(3), Word::zero(3), Word::zero(3)));
  for (unsigned n = 1; n <= 4; ++n) {
    const std::uint64_t m = brute::mask(n);
    for (std::uint64_t a = 0; a <= m; ++a)
      for (std::uint64_t b = 0; b <= m; ++b)
        for (std::uint64_t g = 0; g <= m; ++g)
          for (Bit c = 0; c < 2; ++c) {
            const Word wa = brute::w(n, a), wb = brute::w(n, b), wg = brute::w(n, g);
            CHECK(cadp_zero(c, wa, wb, wg) == cadp(c, wa, wb, wg).is_zero());
          }
  }
}

TEST_CASE("pair partial-sum zero patterns are sound and complete for n <= 5") {
  for (unsigned n = 1; n <= 5; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (3 * n);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint8_t> s(n);
      for (unsigned i = 0; i < n; ++i) s[i] = (code >> (3 * i)) & 7u;
      const OctalWord w(s);
      for (Bit a = 0; a < 2; ++a)
        for (Bit b = 0; b < 2; ++b) {
          const ZeroReport z = padp_zero(a, b, w);
          CHECK(z.is_zero == padp(a, b, w).is_zero());
          CHECK(z.is_zero == z.matched.has_value());
        }
    }
  }
}

TEST_CASE("pair partial-sum pattern ids and examples") {
  CHECK(padp_zero_patterns(0, 0).size() == 4);
  CHECK(padp_zero_patterns(0, 1).size() == 8);
  CHECK(padp_zero_patterns(1, 0).size() == 8);
  CHECK(padp_zero_patterns(1, 1).size() == 11);
  CHECK(padp_zero_patterns(0, 1)[3].id() == "T3:padp01:row4");
  CHECK(padp_zero_patterns(0, 1)[3].str() == "[5^5*]");
  const ZeroReport single = padp_zero(1, 1, OctalWord::parse("0"));
  CHECK(single.is_zero);
  CHECK(*single.matched == "T3:padp11:row2");
  const ZeroReport six = padp_zero(0, 0, OctalWord::parse("6537"));
  CHECK(six.is_zero);
  CHECK(*six.matched == "T3:padp00:row1");
  CHECK(padp_zero_patterns(0, 0)[1].match(OctalWord::parse("6537")));
  const ZeroReport row2 = padp_zero(0, 0, OctalWord::parse("6573"));
  CHECK(row2.is_zero);
  CHECK(*row2.matched == "T3:padp00:row2");
  CHECK(padp_zero(0, 0, Word::zero(3), Word::zero(3), Word::zero(3)).is_zero == false);
}

TEST_CASE("rotated-xor zero patterns are sound and complete for n <= 4") {
  for (unsigned n = 2; n <= 4; ++n) {
    const std::uint64_t m = brute::mask(n);
    for (unsigned r = 1; r < n; ++r) {
      const auto dist = brute::distribution(brute::Op::xr, n, r);
      for (std::uint64_t a = 0; a <= m; ++a)
        for (std::uint64_t b = 0; b <= m; ++b)
          for (std::uint64_t g = 0; g <= m; ++g) {
            const XrInstance inst(brute::w(n, a), brute::w(n, b), brute::w(n, g), r);
            const ZeroReport z = adp_xr_zero(inst);
            const bool zero = dist[((a << n) + b) * (m + 1) + g] == 0;
            CHECK(z.is_zero == zero);
            CHECK(z.is_zero == adp_xr(inst).is_zero());
            CHECK(z.is_zero == z.matched.has_value());
          }
    }
  }
}

TEST_CASE("rotated-xor zero examples and ids") {
  CHECK_FALSE(adp_xr_zero(XrInstance(Word::zero(5), Word::zero(5), Word::zero(5), 2)).is_zero);
  // gamma low part with gamma bits 0, low word ending in an odd-weight symbol.
  const XrInstance inst(Word::parse("0b00001", 5), Word::zero(5), Word::parse("0b00000", 5), 2);
  const ZeroReport z = adp_xr_zero(inst);
  REQUIRE(z.is_zero);
  CHECK(*z.matched == "T4:7.1");
  const auto& cols = xr_zero_columns();
  REQUIRE(cols.size() == 7);
  CHECK(cols[0].rows.size() == 14);
  CHECK(cols[0].rows[6].id() == "T4:1.7");
  CHECK(cols[3].mark.str() == "[.*d66*]");
}

TEST_CASE("gamma-complement partners within the rotated-xor table") {
  const auto flip = [](const OctalWord& w) {
    std::vector<std::uint8_t> s(w.symbols().begin(), w.symbols().end());
    for (auto& x : s) x ^= 1u;
    return OctalWord(s);
  };
  struct Partner {
    unsigned col, row, partner_col, partner_row;
  };
  std::vector<Partner> pairs;
  for (unsigned y = 3; y <= 8; ++y) pairs.push_back({1, y, 1, y + 6});
  for (unsigned y = 2; y <= 5; ++y) pairs.push_back({2, y, 2, y + 4});
  for (unsigned y = 2; y <= 5; ++y) pairs.push_back({3, y, 3, y + 4});
  pairs.push_back({4, 1, 4, 3});
  pairs.push_back({4, 2, 4, 4});
  pairs.push_back({5, 1, 5, 2});
  pairs.push_back({6, 1, 6, 2});
  const auto& cols = xr_zero_columns();
  for (const auto& pr : pairs) {
    const Pattern& p = cols[pr.col - 1].rows[pr.row - 1];
    const Pattern& q = cols[pr.partner_col - 1].rows[pr.partner_row - 1];
    for (unsigned k = 1; k <= 4; ++k) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (3 * k)); ++code) {
        std::vector<std::uint8_t> s(k);
        for (unsigned i = 0; i < k; ++i) s[i] = (code >> (3 * i)) & 7u;
        const OctalWord w(s);
        CHECK_MESSAGE(p.match(w) == q.match(flip(w)), p.id() << " vs " << q.id());
      }
    }
  }
}

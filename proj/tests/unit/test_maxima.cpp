#include <doctest.h>

#include "arxdp/adp_matrix.hpp"
#include "arxdp/adp_xr.hpp"
#include "arxdp/error.hpp"
#include "arxdp/maxima.hpp"
#include "brute.hpp"

using namespace arxdp;

namespace {

Dyadic brute_max(const Word& alpha, unsigned r) {
  const unsigned n = alpha.size();
  Dyadic best;
  for (std::uint64_t b = 0; b <= brute::mask(n); ++b)
    for (std::uint64_t g = 0; g <= brute::mask(n); ++g) {
      const Dyadic p = adp_xr(alpha, brute::w(n, b), brute::w(n, g), r);
      if (p > best) best = p;
    }
  return best;
}

Dyadic xor_max(const Word& alpha) {
  const unsigned n = alpha.size();
  Dyadic best;
  for (std::uint64_t b = 0; b <= brute::mask(n); ++b)
    for (std::uint64_t g = 0; g <= brute::mask(n); ++g) {
      const Dyadic p = adp_xor(alpha, brute::w(n, b), brute::w(n, g));
      if (p > best) best = p;
    }
  return best;
}

void check_attains(const MaxReport& rep, const Dyadic& best) {
  CHECK(rep.value == best);
  CHECK(adp_xr(rep.alpha, rep.witness_beta, rep.witness_gamma, rep.r) == best);
  if (rep.second_witness) {
    CHECK(adp_xr(rep.alpha, rep.second_witness->first, rep.second_witness->second, rep.r) == best);
  }
}

}  // namespace

TEST_CASE("one-bit left rotation maximum") {
  for (unsigned n = 2; n <= 5; ++n)
    for (std::uint64_t v = 0; v <= brute::mask(n); ++v) {
      const Word a = brute::w(n, v);
      const MaxReport rep = max_r1(a);
      CHECK(rep.case_tag == MaxCase::r1);
      CHECK(rep.witness_beta == a);
      CHECK(rep.witness_gamma.is_zero());
      check_attains(rep, brute_max(a, 1));
      CHECK(rep.value == adp_xor(a, a, Word::zero(n)));
      CHECK(rep.value == xor_max(a));
      const bool two = v != 0 && v != (std::uint64_t{1} << (n - 1));
      CHECK(rep.second_witness.has_value() == two);
    }
  CHECK(max_r1(Word::zero(4)).value == Dyadic::one());
  CHECK_THROWS_AS(max_r1(Word::zero(1)), InvalidRotation);
}

TEST_CASE("one-bit right rotation maximum, all three cases") {
  for (unsigned n = 3; n <= 5; ++n)
    for (std::uint64_t v = 0; v <= brute::mask(n); ++v) {
      const Word a = brute::w(n, v);
      const MaxReport rep = max_r_right(a);
      check_attains(rep, brute_max(a, n - 1));
      const MaxCase expect = (v & 1) == 0 ? MaxCase::r_right_case1
                             : (v & 2) == 0 ? MaxCase::r_right_case2
                                            : MaxCase::r_right_case3;
      CHECK(rep.case_tag == expect);
      if (expect == MaxCase::r_right_case1) {
        CHECK(rep.value == adp_xor(a, a, Word::zero(n)));
        CHECK(rep.value == xor_max(a));
      } else {
        CHECK(rep.witness_gamma == Word::msb(n));
      }
    }
  CHECK(max_r_right(Word::zero(5)).value == Dyadic::one());
}

TEST_CASE("two-bit words fall back to exhaustive search") {
  for (std::uint64_t v = 0; v < 4; ++v) {
    const MaxReport rep = max_r_right(brute::w(2, v));
    CHECK(rep.case_tag == MaxCase::exhaustive);
    CHECK(rep.value == brute_max(brute::w(2, v), 1));
  }
}

TEST_CASE("closed form refuses other rotations") {
  CHECK_THROWS_AS(max_closed_form(Word::zero(6), 3), std::domain_error);
  CHECK(max_closed_form(Word::zero(6), 1).case_tag == MaxCase::r1);
  CHECK(max_closed_form(Word::from_value(6, 3), 5).case_tag == MaxCase::r_right_case3);
}

TEST_CASE("exhaustive search: tie-break, enumeration and guard") {
  const Word a = Word::from_value(4, 6);
  const MaxReport rep = max_exhaustive(a, 2, FixedArg::first, true);
  REQUIRE(rep.all_witnesses.has_value());
  REQUIRE_FALSE(rep.all_witnesses->empty());
  CHECK(rep.all_witnesses->front() == WitnessPair(rep.witness_beta, rep.witness_gamma));
  for (const auto& [b, g] : *rep.all_witnesses) CHECK(adp_xr(a, b, g, 2) == rep.value);
  CHECK(rep.value == brute_max(a, 2));
  CHECK_THROWS_AS(max_exhaustive(Word::zero(13), 1), GuardExceeded);
}

TEST_CASE("fixing the second argument gives the same maximum") {
  for (unsigned n = 3; n <= 4; ++n)
    for (unsigned r = 1; r < n; ++r)
      for (std::uint64_t v = 0; v <= brute::mask(n); ++v) {
        const Word a = brute::w(n, v);
        const MaxReport first = max_exhaustive(a, r, FixedArg::first);
        const MaxReport second = max_exhaustive(a, r, FixedArg::second);
        CHECK(first.value == second.value);
        CHECK(adp_xr(second.witness_beta, a, second.witness_gamma, r) == second.value);
      }
}

TEST_CASE("pair partial sums are bounded by the diagonal") {
  for (unsigned n = 1; n <= 4; ++n) {
    const std::uint64_t m = brute::mask(n);
    for (std::uint64_t a = 0; a <= m; ++a) {
      const Word wa = brute::w(n, a), z = Word::zero(n);
      const Dyadic bound = padp(0, 0, wa, wa, z) + padp(1, 1, wa, wa, z);
      for (std::uint64_t b = 0; b <= m; ++b)
        for (std::uint64_t g = 0; g <= m; ++g)
          for (Bit x = 0; x < 2; ++x) {
            const Word wb = brute::w(n, b), wg = brute::w(n, g);
            CHECK(padp(x, 0, wa, wb, wg) + padp(x ^ 1u, 1, wa, wb, wg) <= bound);
          }
    }
  }
}

TEST_CASE("carry partial sums never exceed the diagonal adp_xor") {
  for (unsigned n = 1; n <= 4; ++n) {
    const std::uint64_t m = brute::mask(n);
    for (std::uint64_t a = 0; a <= m; ++a) {
      const Word wa = brute::w(n, a), z = Word::zero(n);
      const Dyadic diag = adp_xor(wa, wa, z);
      Dyadic best0;
      for (std::uint64_t b = 0; b <= m; ++b)
        for (std::uint64_t g = 0; g <= m; ++g)
          for (Bit c = 0; c < 2; ++c) {
            const Dyadic p = cadp(c, wa, brute::w(n, b), brute::w(n, g));
            CHECK(p <= diag);
            if (c == 0 && p > best0) best0 = p;
          }
      CHECK(best0 == diag);
    }
  }
}

TEST_CASE("complementing an even difference does not raise the diagonal") {
  for (unsigned n = 1; n <= 6; ++n)
    for (std::uint64_t a = 0; a <= brute::mask(n); a += 2) {
      const Word wa = brute::w(n, a), na = bnot(wa), z = Word::zero(n);
      CHECK(adp_xor(na, na, z) <= adp_xor(wa, wa, z));
    }
}

#include <doctest.h>

#include <random>

#include "arxdp/adp_matrix.hpp"
#include "arxdp/adp_xr.hpp"
#include "arxdp/error.hpp"
#include "brute.hpp"

using namespace arxdp;

TEST_CASE("instance split") {
  const XrInstance inst(Word::parse("0b110010", 6), Word::parse("0b011101", 6), Word::parse("0b101011", 6), 2);
  CHECK(inst.alpha_high().to_binary() == "0b11");
  CHECK(inst.alpha_low().to_binary() == "0b0010");
  CHECK(inst.beta_high().to_binary() == "0b01");
  CHECK(inst.gamma_high().to_binary() == "0b1010");
  CHECK(inst.gamma_low().to_binary() == "0b11");
  CHECK(inst.low_octal().size() == 4);
  CHECK(inst.high_octal().size() == 2);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(XrInstance(Word::zero(4), Word::zero(4), Word::zero(3), 1), LengthMismatch);
  CHECK_THROWS_AS(XrInstance(Word::zero(4), Word::zero(4), Word::zero(4), 0), InvalidRotation);
  CHECK_THROWS_AS(XrInstance(Word::zero(4), Word::zero(4), Word::zero(4), 4), InvalidRotation);
  CHECK_THROWS_AS(adp_rx(Word::zero(4), Word::zero(4), Word::zero(4), 5), InvalidRotation);
}

TEST_CASE("adp_xr and adp_rx equal exhaustive enumeration for n <= 4, every r") {
  for (unsigned n = 2; n <= 4; ++n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    for (unsigned r = 1; r < n; ++r) {
      const auto xr = brute::distribution(brute::Op::xr, n, r);
      const auto rx = brute::distribution(brute::Op::rx, n, r);
      for (std::uint64_t a = 0; a < size; ++a)
        for (std::uint64_t b = 0; b < size; ++b)
          for (std::uint64_t g = 0; g < size; ++g) {
            const std::size_t idx = (a * size + b) * size + g;
            const Word wa = brute::w(n, a), wb = brute::w(n, b), wg = brute::w(n, g);
            const Dyadic two = adp_xr(wa, wb, wg, r, XrMethod::two_term);
            CHECK(two == Dyadic(xr[idx], 2 * n));
            CHECK(adp_xr(wa, wb, wg, r, XrMethod::full_sum) == two);
            CHECK(adp_rx(wa, wb, wg, r) == Dyadic(rx[idx], 2 * n));
          }
    }
  }
}

TEST_CASE("adp_xr equals enumeration on random n = 7 triples") {
  std::mt19937_64 rng(21);
  const unsigned n = 7;
  for (int iter = 0; iter < 60; ++iter) {
    const unsigned r = 1 + rng() % (n - 1);
    const std::uint64_t a = rng() & brute::mask(n), b = rng() & brute::mask(n);
    // Half the samples use an output difference near the input one so that nonzero values are exercised.
    const std::uint64_t g = iter % 2 ? rng() & brute::mask(n) : brute::rotl((a ^ b), r, n);
    CHECK(adp_xr(brute::w(n, a), brute::w(n, b), brute::w(n, g), r, XrMethod::verified) ==
          brute::prob(brute::Op::xr, n, r, a, b, g));
  }
}

TEST_CASE("output distribution of adp_xr sums to one") {
  for (unsigned n = 2; n <= 5; ++n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    for (unsigned r = 1; r < n; ++r)
      for (std::uint64_t a = 0; a < size; a += 3)
        for (std::uint64_t b = 1; b < size; b += 5) {
          Dyadic total;
          for (std::uint64_t g = 0; g < size; ++g) total += adp_xr(brute::w(n, a), brute::w(n, b), brute::w(n, g), r);
          CHECK(total == Dyadic::one());
        }
  }
}

TEST_CASE("argument symmetries hold on every triple, n = 4") {
  const unsigned n = 4;
  const std::uint64_t size = 16, m = 15, h = 8;
  for (unsigned r = 1; r < n; ++r)
    for (std::uint64_t a = 0; a < size; ++a)
      for (std::uint64_t b = 0; b < size; ++b)
        for (std::uint64_t g = 0; g < size; ++g) {
          const Dyadic v = adp_xr(brute::w(n, a), brute::w(n, b), brute::w(n, g), r);
          CHECK(adp_xr(brute::w(n, b), brute::w(n, a), brute::w(n, g), r) == v);
          CHECK(adp_xr(brute::w(n, (a + h) & m), brute::w(n, (b + h) & m), brute::w(n, g), r) == v);
          for (unsigned signs = 1; signs < 8; ++signs) {
            const std::uint64_t sa = signs & 4 ? (0 - a) & m : a;
            const std::uint64_t sb = signs & 2 ? (0 - b) & m : b;
            const std::uint64_t sg = signs & 1 ? (0 - g) & m : g;
            CHECK(adp_xr(brute::w(n, sa), brute::w(n, sb), brute::w(n, sg), r) == v);
          }
        }
}

TEST_CASE("zero output difference reduces to adp_xor") {
  for (unsigned n = 2; n <= 6; ++n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    for (unsigned r = 1; r < n; ++r)
      for (std::uint64_t a = 0; a < size; ++a)
        for (std::uint64_t b = 0; b < size; b += 3) {
          const Word wa = brute::w(n, a), wb = brute::w(n, b), z = Word::zero(n);
          CHECK(adp_xr(wa, wb, z, r) == adp_xor(wa, wb, z));
        }
  }
}

TEST_CASE("large rotations evaluate exactly") {
  const unsigned n = 64;
  const Word a = Word::from_value(n, 0x0123456789abcdefULL);
  const Dyadic p = adp_xr(a, a, Word::zero(n), 13, XrMethod::verified);
  CHECK(p == adp_xor(a, a, Word::zero(n)));
  CHECK(adp_xr(Word::zero(n), Word::zero(n), Word::zero(n), 63) == Dyadic::one());
}

#include "arxdp/adp_recurrence.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

namespace arxdp {

namespace {

const Dyadic kOne = Dyadic::one();
const Dyadic kHalf(1, 1);
const Dyadic kQuarter(1, 2);
const Dyadic kZero{};

// Rows ordered by symbol 000, 001, ..., 111.
const std::array<OneBitRow, 8> kOneBit = {{
    {{{kOne, kZero}, {kZero, kZero}}, {kOne, kZero}},                   // 000
    {{{kZero, kZero}, {kZero, kZero}}, {kZero, kZero}},                 // 001
    {{{kZero, kZero}, {kZero, kZero}}, {kZero, kZero}},                 // 010
    {{{kHalf, kHalf}, {kZero, kZero}}, {kHalf, kHalf}},                 // 011
    {{{kZero, kZero}, {kZero, kZero}}, {kZero, kZero}},                 // 100
    {{{kHalf, kZero}, {kHalf, kZero}}, {kHalf, kHalf}},                 // 101
    {{{kQuarter, kQuarter}, {kQuarter, kQuarter}}, {kOne, kZero}},      // 110
    {{{kZero, kZero}, {kZero, kZero}}, {kZero, kZero}},                 // 111
}};

// Flag states: cadp uses c in {0,1}; padp uses 2a+b in {0..3}.
enum class Kind { carry, pair };

unsigned flag_shift(Kind kind, unsigned q) {
  // XOR applied to the flag state when the prefix is complemented by q.
  if (kind == Kind::carry) return q & 1u;
  return ((q >> 2) & 1u) << 1 | ((q >> 1) & 1u);
}

Dyadic base_value(Kind kind, unsigned symbol, unsigned flags) {
  const auto& row = kOneBit[symbol];
  if (kind == Kind::carry) return row.cadp[flags];
  return row.padp[flags >> 1][flags & 1u];
}

// table[len][mask][flags] is the value for the length-len prefix with roles
// complemented per mask (bit 2 alpha, bit 1 beta, bit 0 gamma).
Dyadic evaluate(Kind kind, const OctalWord& w, unsigned flags) {
  const unsigned n = w.size();
  if (n == 0) throw std::invalid_argument("recurrence requires n >= 1");
  const unsigned flag_states = kind == Kind::carry ? 2 : 4;

  std::vector<std::array<std::array<Dyadic, 4>, 8>> table(n + 1);
  for (unsigned mask = 0; mask < 8; ++mask) {
    for (unsigned f = 0; f < flag_states; ++f) table[1][mask][f] = base_value(kind, w[0] ^ mask, f);
  }
  for (unsigned len = 2; len <= n; ++len) {
    for (unsigned mask = 0; mask < 8; ++mask) {
      const unsigned p = w[len - 1] ^ mask;
      const unsigned wt = static_cast<unsigned>(std::popcount(p));
      for (unsigned f = 0; f < flag_states; ++f) {
        Dyadic acc;
        if (wt % 2 == 0) {
          for (unsigned q = 0; q < 8; ++q) {
            if ((q & ~p) != 0) continue;  // q must be below p
            acc += table[len - 1][mask ^ q][f ^ flag_shift(kind, q)];
          }
          acc = acc.halved(wt);
        }
        table[len][mask][f] = std::move(acc);
      }
    }
  }
  return table[n][0][flags];
}

void check_bit(Bit b) {
  if (b > 1) throw std::invalid_argument("flag must be 0 or 1");
}

}  // namespace

const OneBitRow& one_bit_values(unsigned symbol) { return kOneBit.at(symbol); }

Dyadic cadp_rec(Bit c, const OctalWord& w) {
  check_bit(c);
  return evaluate(Kind::carry, w, c);
}

Dyadic cadp_rec(Bit c, const Word& alpha, const Word& beta, const Word& gamma) {
  return cadp_rec(c, octal_word(alpha, beta, gamma));
}

Dyadic padp_rec(Bit a, Bit b, const OctalWord& w) {
  check_bit(a);
  check_bit(b);
  return evaluate(Kind::pair, w, 2 * a + b);
}

Dyadic padp_rec(Bit a, Bit b, const Word& alpha, const Word& beta, const Word& gamma) {
  return padp_rec(a, b, octal_word(alpha, beta, gamma));
}

}  // namespace arxdp

#pragma once

#include "arxdp/dyadic.hpp"
#include "arxdp/word.hpp"

namespace arxdp {

// cadp / padp by recursion on the least significant symbol, seeded from the
// one-bit values. Shares no code with the matrix engine; used as its cross-check.

Dyadic cadp_rec(Bit c, const OctalWord& w);
Dyadic cadp_rec(Bit c, const Word& alpha, const Word& beta, const Word& gamma);
Dyadic padp_rec(Bit a, Bit b, const OctalWord& w);
Dyadic padp_rec(Bit a, Bit b, const Word& alpha, const Word& beta, const Word& gamma);

/// One-bit values indexed by symbol 4a+2b+c: {padp00, padp01, padp10, padp11, cadp0, cadp1}.
struct OneBitRow {
  Dyadic padp[2][2];
  Dyadic cadp[2];
};
const OneBitRow& one_bit_values(unsigned symbol);

}  // namespace arxdp

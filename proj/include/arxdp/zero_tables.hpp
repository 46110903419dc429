#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arxdp/adp_xr.hpp"
#include "arxdp/pattern.hpp"
#include "arxdp/word.hpp"

namespace arxdp {

struct ZeroReport {
  bool is_zero = false;
  std::optional<std::string> matched;  // pattern id, present iff is_zero
};

/// Zero patterns of padp_{a,b}; ids "T3:padp<ab>:row<k>", row 1 being [.*d0*].
const std::vector<Pattern>& padp_zero_patterns(Bit a, Bit b);

struct XrZeroColumn {
  unsigned index;                 // 1..7
  Pattern mark;                   // applied to the high-part word (length r)
  std::vector<Pattern> rows;      // applied to the low-part word (length n-r); ids "T4:X.Y"
};

/// Zero patterns of adp_xr, column by column.
const std::vector<XrZeroColumn>& xr_zero_columns();

/// The single pattern [.*d0*] characterising adp_xor = 0.
const Pattern& xor_zero_pattern();

ZeroReport adp_xor_zero(const OctalWord& w);
bool cadp_zero(Bit c, const Word& alpha, const Word& beta, const Word& gamma);
ZeroReport padp_zero(Bit a, Bit b, const OctalWord& w);
ZeroReport padp_zero(Bit a, Bit b, const Word& alpha, const Word& beta, const Word& gamma);
ZeroReport adp_xr_zero(const XrInstance& inst);

}  // namespace arxdp

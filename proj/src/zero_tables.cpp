#include "arxdp/zero_tables.hpp"

#include <array>
#include <stdexcept>

namespace arxdp {

namespace {

struct PadpColumnText {
  const char* name;
  std::vector<const char*> rows;  // rows 2, 3, ...
};

const std::array<PadpColumnText, 4>& padp_text() {
  static const std::array<PadpColumnText, 4> text = {{
      {"padp00", {"[6^6*7.*]", "[7^7*6.*]", "[7^7*0g0*]"}},
      {"padp01", {"[4^4*5.*]", "[4^4*0b0*]", "[5^5*]", "[5^5*4.*]", "[5^5*1b0*]", "[5^5*2g0*]", "[b0*]"}},
      {"padp10", {"[2^2*3.*]", "[2^2*0a0*]", "[3^3*]", "[3^3*2.*]", "[3^3*1a0*]", "[3^3*4g0*]", "[a0*]"}},
      {"padp11",
       {"[0^0*]", "[0^0*1.*]", "[0^0*2a0*]", "[0^0*4b0*]", "[1^1*0.*]", "[1^1*3a0*]", "[1^1*5b0*]", "[1^1*6g0*]",
        "[a0*]", "[b0*]"}},
  }};
  return text;
}

constexpr const char* kXorZero = "[.*d0*]";

struct XrColumnText {
  const char* mark;
  std::vector<const char*> rows;
};

const std::array<XrColumnText, 7>& xr_text() {
  static const std::array<XrColumnText, 7> text = {{
      {"[.*d00*]",
       {"[a0*]", "[b0*]", "[0^0*]", "[0^0*1.*]", "[0^0*2a0*]", "[0^0*4b0*]", "[0^0*7]", "[0^0*7g1*1_7]", "[1^1*]",
        "[1^1*0.*]", "[1^1*3a0*]", "[1^1*5b0*]", "[1^1*6]", "[1^1*6g0*0_6]"}},
      {"[.*e22*]",
       {"[a0*]", "[2^2*]", "[2^2*3.*]", "[2^2*0a0*]", "[2^2*5g1*1_7]", "[3^3*]", "[3^3*2.*]", "[3^3*1a0*]",
        "[3^3*4g0*0_6]"}},
      {"[.*e44*]",
       {"[b0*]", "[4^4*]", "[4^4*5.*]", "[4^4*0b0*]", "[4^4*3g1*1_7]", "[5^5*]", "[5^5*4.*]", "[5^5*1b0*]",
        "[5^5*2g0*0_6]"}},
      {"[.*d66*]", {"[6^6*7.*]", "[6^6*1g1*1_7]", "[7^7*6.*]", "[7^7*0g0*0_6]"}},
      {"[.*d]", {"[0*]", "[1*]"}},
      {"[.*]", {"[.*d00*]", "[.*e11*]"}},
      {"[g0*]", {"[.*d]"}},
  }};
  return text;
}

ZeroReport first_match(const std::vector<Pattern>& patterns, const OctalWord& w) {
  for (const auto& p : patterns) {
    if (p.match(w)) return {true, p.id()};
  }
  return {};
}

}  // namespace

const std::vector<Pattern>& padp_zero_patterns(Bit a, Bit b) {
  static const std::array<std::vector<Pattern>, 4> tables = [] {
    std::array<std::vector<Pattern>, 4> out;
    for (unsigned col = 0; col < 4; ++col) {
      const auto& t = padp_text()[col];
      const std::string prefix = std::string("T3:") + t.name + ":row";
      out[col].push_back(Pattern::parse(kXorZero, prefix + "1"));
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        out[col].push_back(Pattern::parse(t.rows[i], prefix + std::to_string(i + 2)));
      }
    }
    return out;
  }();
  if (a > 1 || b > 1) throw std::invalid_argument("padp_zero_patterns: flags must be bits");
  return tables[2 * a + b];
}

const std::vector<XrZeroColumn>& xr_zero_columns() {
  static const std::vector<XrZeroColumn> columns = [] {
    std::vector<XrZeroColumn> out;
    for (unsigned x = 0; x < xr_text().size(); ++x) {
      const auto& t = xr_text()[x];
      const std::string col = "T4:" + std::to_string(x + 1);
      XrZeroColumn c{x + 1, Pattern::parse(t.mark, col + ".mark"), {}};
      for (std::size_t y = 0; y < t.rows.size(); ++y) {
        c.rows.push_back(Pattern::parse(t.rows[y], col + "." + std::to_string(y + 1)));
      }
      out.push_back(std::move(c));
    }
    return out;
  }();
  return columns;
}

const Pattern& xor_zero_pattern() {
  static const Pattern p = Pattern::parse(kXorZero, "adp_xor:[.*d0*]");
  return p;
}

ZeroReport adp_xor_zero(const OctalWord& w) {
  if (xor_zero_pattern().match(w)) return {true, xor_zero_pattern().id()};
  return {};
}

bool cadp_zero(Bit c, const Word& alpha, const Word& beta, const Word& gamma) {
  if (adp_xor_zero(octal_word(alpha, beta, gamma)).is_zero) return true;
  return (c & 1u) && gamma.is_zero();
}

ZeroReport padp_zero(Bit a, Bit b, const OctalWord& w) { return first_match(padp_zero_patterns(a, b), w); }

ZeroReport padp_zero(Bit a, Bit b, const Word& alpha, const Word& beta, const Word& gamma) {
  return padp_zero(a, b, octal_word(alpha, beta, gamma));
}

ZeroReport adp_xr_zero(const XrInstance& inst) {
  const OctalWord high = inst.high_octal();
  const OctalWord low = inst.low_octal();
  for (const auto& col : xr_zero_columns()) {
    if (!col.mark.match(high)) continue;
    ZeroReport rep = first_match(col.rows, low);
    if (rep.is_zero) return rep;
  }
  return {};
}

}  // namespace arxdp

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "arxdp/bigint.hpp"
#include "arxdp/word.hpp"

namespace arxdp {

/// One pattern element: a subset of the octal alphabet, optionally starred.
struct PatternItem {
  std::uint8_t set = 0;  // bit s set iff symbol s is accepted
  bool starred = false;
  std::string token;     // source spelling, e.g. "^6", "g0", "0_6"
};

/// Atom sets of the pattern alphabet.
namespace atoms {
inline constexpr std::uint8_t any = 0xFF;
inline constexpr std::uint8_t even = 0x69;  // e = {0,3,5,6}
inline constexpr std::uint8_t odd = 0x96;   // d = {1,2,4,7}
constexpr std::uint8_t literal(unsigned s) { return std::uint8_t(1u << s); }
constexpr std::uint8_t hat(unsigned t) { return std::uint8_t((1u << t) | (1u << (t ^ 3u)) | (1u << (t ^ 5u))); }
constexpr std::uint8_t alpha_bit(unsigned v) { return v ? 0xF0 : 0x0F; }
constexpr std::uint8_t beta_bit(unsigned v) { return v ? 0xCC : 0x33; }
constexpr std::uint8_t gamma_bit(unsigned v) { return v ? 0xAA : 0x55; }
}  // namespace atoms

/// A regular-expression-like pattern over octal symbols, matched against whole
/// words (symbol 0 = most significant position).
///
/// Grammar (whitespace ignored, brackets optional):
///   pattern := '[' item* ']'
///   item    := atom '*'?
///   atom    := '.' | 'e' | 'd' | digit | '^' digit
///            | 'a0' | 'a1' | 'b0' | 'b1' | 'g0' | 'g1' | '0_6' | '1_7'
/// with digit in 0..7, '^t' = {t, t^3, t^5}, aV/bV/gV the symbols whose
/// alpha/beta/gamma bit is V.
class Pattern {
 public:
  static constexpr unsigned kMaxItems = 63;

  /// Throws ParseError.
  static Pattern parse(std::string_view text, std::string id = {});

  const std::vector<PatternItem>& items() const { return items_; }
  const std::string& id() const { return id_; }
  const std::string& text() const { return text_; }
  /// Canonical spelling, e.g. "[6^6*7.*]".
  std::string str() const;

  bool match(const OctalWord& w) const;

  // Position-set automaton: state bit i means "at item i"; bit items().size() accepts.
  std::uint64_t initial_state() const;
  std::uint64_t step(std::uint64_t state, unsigned symbol) const;
  bool accepting(std::uint64_t state) const { return (state >> items_.size()) & 1u; }

 private:
  std::uint64_t closure(std::uint64_t state) const;

  std::vector<PatternItem> items_;
  std::string id_;
  std::string text_;
  std::uint64_t starred_ = 0;
  std::uint64_t accepts_[8] = {};
};

inline bool match(const Pattern& p, const OctalWord& w) { return p.match(w); }

/// Number of length-k words matching p.
BigInt count_pattern(const Pattern& p, unsigned k);

/// For each set S of patterns (bit i = patterns[i]), the number of length-k words
/// matched by exactly the patterns in S. Sets with zero words are omitted.
/// At most 64 patterns.
std::map<std::uint64_t, BigInt> match_profile(const std::vector<Pattern>& patterns, unsigned k);

/// Number of length-k words matching at least one pattern, via the joint automaton.
BigInt count_union(const std::vector<Pattern>& patterns, unsigned k);
/// Number of length-k words matching every pattern.
BigInt count_intersection(const std::vector<const Pattern*>& patterns, unsigned k);
/// Same as count_union, by inclusion-exclusion over intersections, skipping
/// supersets of empty intersections.
BigInt count_union_inclusion_exclusion(const std::vector<Pattern>& patterns, unsigned k);

}  // namespace arxdp

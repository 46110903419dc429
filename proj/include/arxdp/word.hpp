#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "arxdp/bigint.hpp"

namespace arxdp {

using Bit = unsigned;

/// An n-bit difference. Bit 0 is the most significant bit; arithmetic is
/// modulo 2^n on the integer x_0*2^(n-1) + ... + x_(n-1).
class Word {
 public:
  /// Throws std::invalid_argument when n == 0 or a bit is not 0/1.
  explicit Word(std::vector<std::uint8_t> bits);

  static Word zero(unsigned n);
  /// Low n bits of value; n may exceed 64 (high bits are then zero).
  static Word from_value(unsigned n, std::uint64_t value);
  static Word from_big(unsigned n, const BigInt& value);
  /// 2^(n-1), the word with only the most significant bit set.
  static Word msb(unsigned n);
  /// Accepts "0b0110" or "0x2f" (leftmost digit most significant). The value
  /// must fit in n bits; shorter literals are zero-extended.
  static Word parse(std::string_view text, unsigned n);

  unsigned size() const { return static_cast<unsigned>(bits_.size()); }
  Bit bit(unsigned i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  bool is_zero() const;

  /// Throws std::overflow_error for n > 64.
  std::uint64_t value() const;
  BigInt big_value() const;

  std::string to_binary() const;  // "0b" + n digits
  std::string to_hex() const;     // "0x" + ceil(n/4) digits

  /// Bits [start, start + len) in MSB-first order.
  Word slice(unsigned start, unsigned len) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

Word add(const Word& a, const Word& b);
Word sub(const Word& a, const Word& b);
Word neg(const Word& a);
Word bxor(const Word& a, const Word& b);
Word bnot(const Word& a);
/// a when flag is 0, its complement when flag is 1.
Word complement_if(const Word& a, Bit flag);
/// Cyclic left rotation: result_i = a_((i + r) mod n). Requires 1 <= r <= n-1.
Word rotl(const Word& a, unsigned r);
/// high occupies the most significant positions.
Word concat(const Word& high, const Word& low);

/// Throws InvalidRotation unless 1 <= r <= n-1.
void check_rotation(unsigned r, unsigned n);

/// Per-position packing of a difference triple: symbol_i = 4a_i + 2b_i + c_i.
class OctalWord {
 public:
  OctalWord() = default;
  explicit OctalWord(std::vector<std::uint8_t> symbols);

  static OctalWord from_triple(const Word& alpha, const Word& beta, const Word& gamma);
  /// Digits 0-7, most significant position first, e.g. "5630".
  static OctalWord parse(std::string_view digits);

  unsigned size() const { return static_cast<unsigned>(symbols_.size()); }
  std::uint8_t operator[](unsigned i) const { return symbols_[i]; }
  std::span<const std::uint8_t> symbols() const { return symbols_; }

  /// Inverse of from_triple; requires size() >= 1.
  std::tuple<Word, Word, Word> split() const;
  std::string str() const;

  friend bool operator==(const OctalWord&, const OctalWord&) = default;

 private:
  std::vector<std::uint8_t> symbols_;
};

inline OctalWord octal_word(const Word& alpha, const Word& beta, const Word& gamma) {
  return OctalWord::from_triple(alpha, beta, gamma);
}

}  // namespace arxdp

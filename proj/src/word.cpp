#include "arxdp/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "arxdp/error.hpp"

namespace arxdp {

namespace {

void require_same_size(const Word& a, const Word& b, const char* op) {
  if (a.size() != b.size()) {
    throw LengthMismatch(std::string(op) + ": operands have " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()) + " bits");
  }
}

int hex_digit(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

}  // namespace

Word::Word(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("Word: length must be at least 1");
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("Word: bits must be 0 or 1");
  }
}

Word Word::zero(unsigned n) { return Word(std::vector<std::uint8_t>(n, 0)); }

Word Word::from_value(unsigned n, std::uint64_t value) {
  std::vector<std::uint8_t> bits(n, 0);
  for (unsigned i = 0; i < n && i < 64; ++i) bits[n - 1 - i] = (value >> i) & 1u;
  return Word(std::move(bits));
}

Word Word::from_big(unsigned n, const BigInt& value) {
  if (value < 0) throw std::invalid_argument("Word::from_big: negative value");
  std::vector<std::uint8_t> bits(n, 0);
  for (unsigned i = 0; i < n; ++i) bits[n - 1 - i] = boost::multiprecision::bit_test(value, i) ? 1 : 0;
  return Word(std::move(bits));
}

Word Word::msb(unsigned n) {
  Word w = zero(n);
  w.bits_[0] = 1;
  return w;
}

Word Word::parse(std::string_view text, unsigned n) {
  if (n == 0) throw ParseError("word width must be at least 1");
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'b' && text[1] != 'x' && text[1] != 'B' && text[1] != 'X')) {
    throw ParseError("expected 0b... or 0x... literal, got '" + std::string(text) + "'");
  }
  const bool binary = text[1] == 'b' || text[1] == 'B';
  std::vector<std::uint8_t> lsb_first;
  for (auto it = text.rbegin(); it != text.rend() - 2; ++it) {
    if (*it == '_') continue;
    if (binary) {
      if (*it != '0' && *it != '1') throw ParseError("bad binary digit in '" + std::string(text) + "'");
      lsb_first.push_back(static_cast<std::uint8_t>(*it - '0'));
    } else {
      int d = hex_digit(*it);
      if (d < 0) throw ParseError("bad hex digit in '" + std::string(text) + "'");
      for (int k = 0; k < 4; ++k) lsb_first.push_back((d >> k) & 1);
    }
  }
  if (lsb_first.empty()) throw ParseError("empty literal '" + std::string(text) + "'");
  for (std::size_t i = n; i < lsb_first.size(); ++i) {
    if (lsb_first[i]) throw ParseError("'" + std::string(text) + "' does not fit in " + std::to_string(n) + " bits");
  }
  lsb_first.resize(n, 0);
  std::reverse(lsb_first.begin(), lsb_first.end());
  return Word(std::move(lsb_first));
}

bool Word::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b == 0; });
}

std::uint64_t Word::value() const {
  if (size() > 64) {
    if (std::any_of(bits_.begin(), bits_.end() - 64, [](auto b) { return b != 0; })) {
      throw std::overflow_error("Word::value: more than 64 significant bits");
    }
  }
  std::uint64_t v = 0;
  for (unsigned i = size() > 64 ? size() - 64 : 0; i < size(); ++i) v = (v << 1) | bits_[i];
  return v;
}

BigInt Word::big_value() const {
  BigInt v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

std::string Word::to_binary() const {
  std::string s = "0b";
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::string Word::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const unsigned digits = (size() + 3) / 4;
  std::string s(digits, '0');
  for (unsigned d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (unsigned k = 0; k < 4; ++k) {
      const unsigned pos = 4 * (digits - 1 - d) + k;
      if (pos < size() && bits_[size() - 1 - pos]) nibble |= 1u << k;
    }
    s[d] = kDigits[nibble];
  }
  return "0x" + s;
}

Word Word::slice(unsigned start, unsigned len) const {
  if (start + len > size()) throw std::out_of_range("Word::slice");
  return Word(std::vector<std::uint8_t>(bits_.begin() + start, bits_.begin() + start + len));
}

Word add(const Word& a, const Word& b) {
  require_same_size(a, b, "add");
  std::vector<std::uint8_t> out(a.size());
  unsigned carry = 0;
  for (unsigned i = a.size(); i-- > 0;) {
    const unsigned s = a.bit(i) + b.bit(i) + carry;
    out[i] = s & 1u;
    carry = s >> 1;
  }
  return Word(std::move(out));
}

Word neg(const Word& a) {
  // -a = ~a + 1
  std::vector<std::uint8_t> out(a.size());
  unsigned carry = 1;
  for (unsigned i = a.size(); i-- > 0;) {
    const unsigned s = (a.bit(i) ^ 1u) + carry;
    out[i] = s & 1u;
    carry = s >> 1;
  }
  return Word(std::move(out));
}

Word sub(const Word& a, const Word& b) {
  require_same_size(a, b, "sub");
  return add(a, neg(b));
}

Word bxor(const Word& a, const Word& b) {
  require_same_size(a, b, "xor");
  std::vector<std::uint8_t> out(a.size());
  for (unsigned i = 0; i < a.size(); ++i) out[i] = a.bit(i) ^ b.bit(i);
  return Word(std::move(out));
}

Word bnot(const Word& a) { return complement_if(a, 1); }

Word complement_if(const Word& a, Bit flag) {
  std::vector<std::uint8_t> out(a.bits().begin(), a.bits().end());
  if (flag & 1u) {
    for (auto& b : out) b ^= 1u;
  }
  return Word(std::move(out));
}

void check_rotation(unsigned r, unsigned n) {
  if (r < 1 || r + 1 > n) {
    throw InvalidRotation("rotation " + std::to_string(r) + " outside [1, " + std::to_string(n) +
                          "-1]");
  }
}

Word rotl(const Word& a, unsigned r) {
  check_rotation(r, a.size());
  const unsigned n = a.size();
  std::vector<std::uint8_t> out(n);
  for (unsigned i = 0; i < n; ++i) out[i] = a.bit((i + r) % n);
  return Word(std::move(out));
}

Word concat(const Word& high, const Word& low) {
  std::vector<std::uint8_t> out(high.bits().begin(), high.bits().end());
  out.insert(out.end(), low.bits().begin(), low.bits().end());
  return Word(std::move(out));
}

OctalWord::OctalWord(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
  for (auto s : symbols_) {
    if (s > 7) throw std::invalid_argument("OctalWord: symbols must be in 0..7");
  }
}

OctalWord OctalWord::from_triple(const Word& alpha, const Word& beta, const Word& gamma) {
  require_same_size(alpha, beta, "octal_word");
  require_same_size(alpha, gamma, "octal_word");
  std::vector<std::uint8_t> s(alpha.size());
  for (unsigned i = 0; i < alpha.size(); ++i) {
    s[i] = static_cast<std::uint8_t>(4 * alpha.bit(i) + 2 * beta.bit(i) + gamma.bit(i));
  }
  return OctalWord(std::move(s));
}

OctalWord OctalWord::parse(std::string_view digits) {
  std::vector<std::uint8_t> s;
  s.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '7') throw ParseError("octal word digits must be 0-7: '" + std::string(digits) + "'");
    s.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return OctalWord(std::move(s));
}

std::tuple<Word, Word, Word> OctalWord::split() const {
  std::vector<std::uint8_t> a(size()), b(size()), c(size());
  for (unsigned i = 0; i < size(); ++i) {
    a[i] = (symbols_[i] >> 2) & 1u;
    b[i] = (symbols_[i] >> 1) & 1u;
    c[i] = symbols_[i] & 1u;
  }
  return {Word(std::move(a)), Word(std::move(b)), Word(std::move(c))};
}

std::string OctalWord::str() const {
  std::string s;
  for (auto sym : symbols_) s.push_back(static_cast<char>('0' + sym));
  return s;
}

}  // namespace arxdp

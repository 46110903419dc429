#include "arxdp/pattern.hpp"

#include <cctype>

#include "arxdp/error.hpp"

namespace arxdp {

namespace {

bool is_digit07(char ch) { return ch >= '0' && ch <= '7'; }

}  // namespace

Pattern Pattern::parse(std::string_view text, std::string id) {
  Pattern p;
  p.id_ = std::move(id);
  p.text_ = std::string(text);

  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  std::string_view body = s;
  if (!body.empty() && body.front() == '[') {
    if (body.size() < 2 || body.back() != ']') throw ParseError("pattern: unbalanced '[' in '" + p.text_ + "'");
    body = body.substr(1, body.size() - 2);
  } else if (!body.empty() && body.back() == ']') {
    throw ParseError("pattern: unbalanced ']' in '" + p.text_ + "'");
  }

  const auto fail = [&](std::size_t pos, const std::string& what) {
    throw ParseError("pattern '" + p.text_ + "': " + what + " at offset " + std::to_string(pos));
  };

  std::size_t i = 0;
  while (i < body.size()) {
    PatternItem item;
    const std::size_t start = i;
    const char ch = body[i];
    if (ch == '.') {
      item.set = atoms::any;
      ++i;
    } else if (ch == 'e') {
      item.set = atoms::even;
      ++i;
    } else if (ch == 'd') {
      item.set = atoms::odd;
      ++i;
    } else if (ch == '^') {
      if (i + 1 >= body.size() || !is_digit07(body[i + 1])) fail(i, "'^' needs a digit 0-7");
      item.set = atoms::hat(static_cast<unsigned>(body[i + 1] - '0'));
      i += 2;
    } else if (ch == 'a' || ch == 'b' || ch == 'g') {
      if (i + 1 >= body.size() || (body[i + 1] != '0' && body[i + 1] != '1')) fail(i, "bit class needs 0 or 1");
      const unsigned v = static_cast<unsigned>(body[i + 1] - '0');
      item.set = ch == 'a' ? atoms::alpha_bit(v) : ch == 'b' ? atoms::beta_bit(v) : atoms::gamma_bit(v);
      i += 2;
    } else if (is_digit07(ch)) {
      if (i + 2 < body.size() && body[i + 1] == '_') {
        const std::string_view pair = body.substr(i, 3);
        if (pair == "0_6") {
          item.set = atoms::literal(0) | atoms::literal(6);
        } else if (pair == "1_7") {
          item.set = atoms::literal(1) | atoms::literal(7);
        } else {
          fail(i, "unknown pair class '" + std::string(pair) + "'");
        }
        i += 3;
      } else {
        item.set = atoms::literal(static_cast<unsigned>(ch - '0'));
        ++i;
      }
    } else {
      fail(i, std::string("unexpected '") + ch + "'");
    }
    item.token = std::string(body.substr(start, i - start));
    if (i < body.size() && body[i] == '*') {
      item.starred = true;
      ++i;
    }
    p.items_.push_back(std::move(item));
    if (p.items_.size() > kMaxItems) fail(start, "too many items");
  }

  for (std::size_t k = 0; k < p.items_.size(); ++k) {
    if (p.items_[k].starred) p.starred_ |= std::uint64_t{1} << k;
    for (unsigned sym = 0; sym < 8; ++sym) {
      if ((p.items_[k].set >> sym) & 1u) p.accepts_[sym] |= std::uint64_t{1} << k;
    }
  }
  return p;
}

std::string Pattern::str() const {
  std::string s = "[";
  for (const auto& item : items_) {
    s += item.token;
    if (item.starred) s += '*';
  }
  return s + "]";
}

std::uint64_t Pattern::closure(std::uint64_t state) const {
  for (;;) {
    const std::uint64_t next = state | ((state & starred_) << 1);
    if (next == state) return state;
    state = next;
  }
}

std::uint64_t Pattern::initial_state() const { return closure(1); }

std::uint64_t Pattern::step(std::uint64_t state, unsigned symbol) const {
  const std::uint64_t live = state & accepts_[symbol];
  return closure((live & starred_) | ((live & ~starred_) << 1));
}

bool Pattern::match(const OctalWord& w) const {
  std::uint64_t state = initial_state();
  for (auto sym : w.symbols()) {
    state = step(state, sym);
    if (state == 0) return false;
  }
  return accepting(state);
}

}  // namespace arxdp

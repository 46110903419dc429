#include "arxdp/impossible.hpp"

#include <algorithm>
#include <array>

#include "arxdp/adp_xr.hpp"
#include "arxdp/error.hpp"
#include "arxdp/zero_tables.hpp"

namespace arxdp {

namespace {

struct FlatTable {
  std::vector<Pattern> marks;
  std::vector<Pattern> rows;
  std::vector<unsigned> row_column;  // column index (0-based) of rows[i]
};

const FlatTable& flat_table() {
  static const FlatTable table = [] {
    FlatTable t;
    for (const auto& col : xr_zero_columns()) {
      t.marks.push_back(col.mark);
      for (const auto& row : col.rows) {
        t.rows.push_back(row);
        t.row_column.push_back(col.index - 1);
      }
    }
    return t;
  }();
  return table;
}

BigRational pow8(unsigned e) { return BigRational(pow_big(8, e)); }
BigRational pow_r(unsigned base, int e) {
  if (e >= 0) return BigRational(pow_big(base, static_cast<unsigned>(e)));
  return BigRational(1) / BigRational(pow_big(base, static_cast<unsigned>(-e)));
}

}  // namespace

BigInt count_impossible(unsigned n, unsigned r) {
  check_rotation(r, n);
  const FlatTable& t = flat_table();

  const auto mark_profile = match_profile(t.marks, r);
  // Collapse the row profile to "which columns have at least one matching row".
  std::array<BigInt, 128> by_columns{};
  for (const auto& [set, count] : match_profile(t.rows, n - r)) {
    unsigned cols = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if ((set >> i) & 1u) cols |= 1u << t.row_column[i];
    }
    by_columns[cols] += count;
  }

  BigInt total = 0;
  for (const auto& [marks, mcount] : mark_profile) {
    for (unsigned cols = 1; cols < 128; ++cols) {
      if ((marks & cols) != 0 && by_columns[cols] != 0) total += mcount * by_columns[cols];
    }
  }
  return total;
}

BigInt count_impossible_inclusion_exclusion(unsigned n, unsigned r) {
  check_rotation(r, n);
  const FlatTable& t = flat_table();
  const std::size_t m = t.rows.size();

  BigInt total = 0;
  std::vector<const Pattern*> marks, rows;
  std::vector<bool> used_mark(t.marks.size(), false);
  auto visit = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < m; ++i) {
      const unsigned col = t.row_column[i];
      const bool new_mark = !used_mark[col];
      if (new_mark) marks.push_back(&t.marks[col]);
      used_mark[col] = true;
      rows.push_back(&t.rows[i]);

      const BigInt cm = count_intersection(marks, r);
      const BigInt c = cm == 0 ? BigInt(0) : cm * count_intersection(rows, n - r);
      if (c != 0) {
        if (rows.size() % 2 == 1) {
          total += c;
        } else {
          total -= c;
        }
        self(self, i + 1);
      }

      rows.pop_back();
      if (new_mark) {
        marks.pop_back();
        used_mark[col] = false;
      }
    }
  };
  visit(visit, 0);
  return total;
}

BigInt count_impossible_bruteforce(unsigned n, unsigned r) {
  check_rotation(r, n);
  if (n > kBruteForceImpossibleBits) {
    throw GuardExceeded("count_impossible_bruteforce: n = " + std::to_string(n) + " exceeds limit " +
                        std::to_string(kBruteForceImpossibleBits));
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Word> words;
  for (std::uint64_t v = 0; v < size; ++v) words.push_back(Word::from_value(n, v));

  BigInt total = 0;
  for (const auto& a : words) {
    for (const auto& b : words) {
      for (const auto& g : words) {
        if (adp_xr_zero(XrInstance(a, b, g, r)).is_zero) ++total;
      }
    }
  }
  return total;
}

ImpossibleBounds impossible_bounds(unsigned n, unsigned r) {
  check_rotation(r, n);
  ImpossibleBounds b;
  b.lower = BigRational(1, 7) * pow8(n) - BigRational(1, 7) * pow8(r);

  std::vector<BigRational> uppers;
  if (r == 1) uppers.push_back(BigRational(5, 14) * pow8(n) - BigRational(6, 7));
  if (r == n - 1) uppers.push_back((BigRational(9, 28) + pow_r(2, -static_cast<int>(n))) * pow8(n) - BigRational(88, 7));
  if (r >= 2 && r + 2 <= n) {
    const unsigned k = n - r;
    const BigRational tail = BigRational(1, 5) * pow8(k) + 7 * pow_r(4, static_cast<int>(k)) -
                             BigRational(124, 5) * pow_r(3, static_cast<int>(k) - 2);
    uppers.push_back((BigRational(1, 7) + pow_r(2, -static_cast<int>(r + 1))) * pow8(n) -
                     BigRational(1, 7) * pow8(r) + BigRational(4, 7) * (pow8(r - 1) - 1) * tail);
  }
  b.upper = *std::min_element(uppers.begin(), uppers.end());
  return b;
}

BigInt count_xor_impossible(unsigned n) { return count_pattern(xor_zero_pattern(), n); }

}  // namespace arxdp

#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "arxdp/dyadic.hpp"
#include "arxdp/word.hpp"

namespace arxdp {

enum class MaxCase { r1, r_right_case1, r_right_case2, r_right_case3, exhaustive };

/// "r1", "r_n-1_case1", "r_n-1_case2", "r_n-1_case3", "exhaustive".
std::string_view case_name(MaxCase c);

/// Which input difference of (x ^ y) <<< r is held fixed.
enum class FixedArg { first, second };

using WitnessPair = std::pair<Word, Word>;  // (free input difference, output difference)

struct MaxReport {
  Word alpha;  // the fixed input difference
  unsigned r = 0;
  FixedArg fixed = FixedArg::first;
  Dyadic value;
  Word witness_beta;  // the free input difference
  Word witness_gamma;
  std::optional<WitnessPair> second_witness;
  std::optional<std::vector<WitnessPair>> all_witnesses;
  MaxCase case_tag = MaxCase::exhaustive;

  MaxReport(Word a, Word b, Word g) : alpha(std::move(a)), witness_beta(std::move(b)), witness_gamma(std::move(g)) {}
};

/// max over (beta, gamma) of adp_xr(alpha, beta -> gamma, 1). Requires n >= 2.
MaxReport max_r1(const Word& alpha);

/// max over (beta, gamma) of adp_xr(alpha, beta -> gamma, n - 1), split on the
/// two low bits of alpha. n = 2 is answered by exhaustive search.
MaxReport max_r_right(const Word& alpha);

/// Closed form for r in {1, n-1}; throws std::domain_error for other r.
MaxReport max_closed_form(const Word& alpha, unsigned r);

inline constexpr unsigned kMaxExhaustiveBits = 12;

/// Exhaustive maximum; ties go to the smallest free difference, then the
/// smallest gamma. With enumerate_all, every maximizing pair is listed.
/// Throws GuardExceeded for n > kMaxExhaustiveBits.
MaxReport max_exhaustive(const Word& alpha, unsigned r, FixedArg fixed = FixedArg::first,
                         bool enumerate_all = false);

}  // namespace arxdp

#include "arxdp/maxima.hpp"

#include <stdexcept>

#include "arxdp/adp_xr.hpp"
#include "arxdp/error.hpp"

namespace arxdp {

std::string_view case_name(MaxCase c) {
  switch (c) {
    case MaxCase::r1:
      return "r1";
    case MaxCase::r_right_case1:
      return "r_n-1_case1";
    case MaxCase::r_right_case2:
      return "r_n-1_case2";
    case MaxCase::r_right_case3:
      return "r_n-1_case3";
    case MaxCase::exhaustive:
      return "exhaustive";
  }
  return "unknown";
}

namespace {

MaxReport closed_report(const Word& alpha, unsigned r, Word beta, Word gamma, MaxCase tag) {
  MaxReport rep(alpha, std::move(beta), std::move(gamma));
  rep.r = r;
  rep.case_tag = tag;
  rep.value = adp_xr(alpha, rep.witness_beta, rep.witness_gamma, r);
  const Word other = neg(rep.witness_beta);
  if (other != rep.witness_beta) rep.second_witness = WitnessPair(other, rep.witness_gamma);
  return rep;
}

}  // namespace

MaxReport max_r1(const Word& alpha) {
  const unsigned n = alpha.size();
  if (n < 2) throw InvalidRotation("max_r1: needs n >= 2");
  return closed_report(alpha, 1, alpha, Word::zero(n), MaxCase::r1);
}

MaxReport max_r_right(const Word& alpha) {
  const unsigned n = alpha.size();
  if (n < 2) throw InvalidRotation("max_r_right: needs n >= 2");
  if (n == 2) return max_exhaustive(alpha, 1);

  const unsigned r = n - 1;
  if (alpha.bit(n - 1) == 0) return closed_report(alpha, r, alpha, Word::zero(n), MaxCase::r_right_case1);

  const Word prefix = alpha.slice(0, n - 2);
  const Word low00 = Word::zero(2);
  if (alpha.bit(n - 2) == 0) {
    return closed_report(alpha, r, concat(prefix, low00), Word::msb(n), MaxCase::r_right_case2);
  }
  return closed_report(alpha, r, concat(bnot(prefix), low00), Word::msb(n), MaxCase::r_right_case3);
}

MaxReport max_closed_form(const Word& alpha, unsigned r) {
  const unsigned n = alpha.size();
  check_rotation(r, n);
  if (r == 1) return max_r1(alpha);
  if (r == n - 1) return max_r_right(alpha);
  throw std::domain_error("no closed-form maximum for r = " + std::to_string(r) + " (only 1 and n-1); use exhaustive search");
}

MaxReport max_exhaustive(const Word& alpha, unsigned r, FixedArg fixed, bool enumerate_all) {
  const unsigned n = alpha.size();
  check_rotation(r, n);
  if (n > kMaxExhaustiveBits) {
    throw GuardExceeded("max_exhaustive: n = " + std::to_string(n) + " exceeds limit " +
                        std::to_string(kMaxExhaustiveBits));
  }
  const std::uint64_t size = std::uint64_t{1} << n;

  MaxReport rep(alpha, Word::zero(n), Word::zero(n));
  rep.r = r;
  rep.fixed = fixed;
  rep.case_tag = MaxCase::exhaustive;
  std::vector<WitnessPair> ties;
  bool first = true;
  for (std::uint64_t b = 0; b < size; ++b) {
    const Word free = Word::from_value(n, b);
    for (std::uint64_t g = 0; g < size; ++g) {
      const Word gamma = Word::from_value(n, g);
      const Dyadic p = fixed == FixedArg::first ? adp_xr(alpha, free, gamma, r) : adp_xr(free, alpha, gamma, r);
      if (first || p > rep.value) {
        first = false;
        rep.value = p;
        rep.witness_beta = free;
        rep.witness_gamma = gamma;
        ties.clear();
      }
      if (enumerate_all && p == rep.value) ties.emplace_back(free, gamma);
    }
  }
  if (enumerate_all) rep.all_witnesses = std::move(ties);
  return rep;
}

}  // namespace arxdp

#pragma once

#include "arxdp/bigint.hpp"

namespace arxdp {

/// N(n, r): the number of triples (alpha, beta, gamma) of n-bit differences with
/// adp_xr(alpha, beta -> gamma, r) = 0.

/// Exact for any n, by a joint automaton over all zero patterns. Throws InvalidRotation.
BigInt count_impossible(unsigned n, unsigned r);

/// Exact, by inclusion-exclusion over (column mark, row) pattern pairs.
BigInt count_impossible_inclusion_exclusion(unsigned n, unsigned r);

inline constexpr unsigned kBruteForceImpossibleBits = 7;
/// Enumerates all 8^n triples through adp_xr_zero. Throws GuardExceeded for n > 7.
BigInt count_impossible_bruteforce(unsigned n, unsigned r);

struct ImpossibleBounds {
  BigRational lower;
  BigRational upper;
};

/// Closed-form bracket lower <= N(n, r) <= upper; the tightest applicable
/// upper bound is returned. Throws InvalidRotation.
ImpossibleBounds impossible_bounds(unsigned n, unsigned r);

/// Exact count of triples with adp_xor = 0, which equals 4/7 (8^n - 1).
BigInt count_xor_impossible(unsigned n);

}  // namespace arxdp

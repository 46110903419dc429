#pragma once

#include "arxdp/bigint.hpp"
#include "arxdp/dyadic.hpp"
#include "arxdp/word.hpp"

namespace arxdp {

enum class OracleOp {
  xor_op,  ///< x ^ y
  xr,      ///< (x ^ y) <<< r
  rx,      ///< (x <<< r) ^ y
};

struct OracleFunction {
  OracleOp op = OracleOp::xor_op;
  unsigned r = 0;

  static OracleFunction xor_fn() { return {OracleOp::xor_op, 0}; }
  static OracleFunction xr(unsigned r) { return {OracleOp::xr, r}; }
  static OracleFunction rx(unsigned r) { return {OracleOp::rx, r}; }
};

struct OracleResult {
  BigInt hits;
  BigInt total;  // 4^n

  Dyadic prob() const;
};

/// Largest n accepted by oracle_adp (4^n pairs are enumerated).
inline constexpr unsigned kOracleMaxBits = 12;

/// Counts pairs (x, y) with f(x + alpha, y + beta) = f(x, y) + gamma (mod 2^n).
/// Throws GuardExceeded for n > kOracleMaxBits, InvalidRotation, LengthMismatch.
OracleResult oracle_adp(const OracleFunction& f, const Word& alpha, const Word& beta, const Word& gamma);

}  // namespace arxdp

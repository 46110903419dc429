#include "arxdp/simd/oracle_kernel.hpp"

namespace arxdp::simd {

std::uint64_t count_hits_scalar(const KernelArgs& args) {
  const unsigned n = args.n;
  const std::uint32_t mask = (1u << n) - 1u;
  // r == 0 degenerates to the identity since every operand is below 2^n.
  const auto rot = [&](std::uint32_t v) { return ((v << args.r) | (v >> (n - args.r))) & mask; };
  const std::uint32_t size = 1u << n;

  std::uint64_t hits = 0;
  for (std::uint32_t x = 0; x < size; ++x) {
    const std::uint32_t xa = (x + args.alpha) & mask;
    for (std::uint32_t y = 0; y < size; ++y) {
      const std::uint32_t yb = (y + args.beta) & mask;
      std::uint32_t lhs, rhs;
      if (args.op == OracleOp::rx) {
        lhs = rot(xa) ^ yb;
        rhs = ((rot(x) ^ y) + args.gamma) & mask;
      } else {
        lhs = rot(xa ^ yb);
        rhs = (rot(x ^ y) + args.gamma) & mask;
      }
      hits += lhs == rhs;
    }
  }
  return hits;
}

}  // namespace arxdp::simd

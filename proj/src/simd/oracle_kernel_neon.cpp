#include <stdexcept>

#include "arxdp/simd/oracle_kernel.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace arxdp::simd {

namespace {

inline uint32x4_t rot4(uint32x4_t v, int32x4_t left, int32x4_t right_neg, uint32x4_t mask) {
  return vandq_u32(vorrq_u32(vshlq_u32(v, left), vshlq_u32(v, right_neg)), mask);
}

}  // namespace

std::uint64_t count_hits_neon(const KernelArgs& args) {
  const unsigned n = args.n;
  if (n < 2) return count_hits_scalar(args);

  const std::uint32_t size = 1u << n;
  const std::uint32_t smask = size - 1u;
  const uint32x4_t mask = vdupq_n_u32(smask);
  const int32x4_t left = vdupq_n_s32(static_cast<int>(args.r));
  const int32x4_t right_neg = vdupq_n_s32(-static_cast<int>(n - args.r));
  const uint32x4_t beta = vdupq_n_u32(args.beta);
  const uint32x4_t gamma = vdupq_n_u32(args.gamma);
  const std::uint32_t lanes[4] = {0, 1, 2, 3};
  const uint32x4_t lane = vld1q_u32(lanes);
  const uint32x4_t step = vdupq_n_u32(4);
  const bool rx = args.op == OracleOp::rx;

  std::uint64_t hits = 0;
  for (std::uint32_t x = 0; x < size; ++x) {
    const uint32x4_t vx = vdupq_n_u32(x);
    const uint32x4_t vxa = vdupq_n_u32((x + args.alpha) & smask);
    const uint32x4_t rot_xa = rot4(vxa, left, right_neg, mask);
    const uint32x4_t rot_x = rot4(vx, left, right_neg, mask);
    uint32x4_t vy = lane;
    for (std::uint32_t y = 0; y < size; y += 4) {
      const uint32x4_t yb = vandq_u32(vaddq_u32(vy, beta), mask);
      uint32x4_t lhs, rhs;
      if (rx) {
        lhs = veorq_u32(rot_xa, yb);
        rhs = vandq_u32(vaddq_u32(veorq_u32(rot_x, vy), gamma), mask);
      } else {
        lhs = rot4(veorq_u32(vxa, yb), left, right_neg, mask);
        rhs = vandq_u32(vaddq_u32(rot4(veorq_u32(vx, vy), left, right_neg, mask), gamma), mask);
      }
      // Equal lanes are all-ones; shifting right by 31 leaves 1 per hit.
      hits += vaddvq_u32(vshrq_n_u32(vceqq_u32(lhs, rhs), 31));
      vy = vaddq_u32(vy, step);
    }
  }
  return hits;
}

}  // namespace arxdp::simd

#else

namespace arxdp::simd {

std::uint64_t count_hits_neon(const KernelArgs&) {
  throw std::runtime_error("NEON kernel not available on this architecture");
}

}  // namespace arxdp::simd

#endif

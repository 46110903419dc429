#include <stdexcept>

#include "arxdp/simd/oracle_kernel.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace arxdp::simd {

namespace {

__attribute__((target("avx2"))) inline __m256i rot8(__m256i v, __m128i left, __m128i right,
                                                    __m256i mask) {
  return _mm256_and_si256(_mm256_or_si256(_mm256_sll_epi32(v, left), _mm256_srl_epi32(v, right)), mask);
}

}  // namespace

__attribute__((target("avx2"))) std::uint64_t count_hits_avx2(const KernelArgs& args) {
  const unsigned n = args.n;
  if (n < 3) return count_hits_scalar(args);

  const std::uint32_t size = 1u << n;
  const std::uint32_t smask = size - 1u;
  const __m256i mask = _mm256_set1_epi32(static_cast<int>(smask));
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(args.r));
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(n - args.r));
  const __m256i beta = _mm256_set1_epi32(static_cast<int>(args.beta));
  const __m256i gamma = _mm256_set1_epi32(static_cast<int>(args.gamma));
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  const bool rx = args.op == OracleOp::rx;

  std::uint64_t hits = 0;
  for (std::uint32_t x = 0; x < size; ++x) {
    const __m256i vx = _mm256_set1_epi32(static_cast<int>(x));
    const __m256i vxa = _mm256_set1_epi32(static_cast<int>((x + args.alpha) & smask));
    // Loop-invariant rotations for the RX form.
    const __m256i rot_xa = rot8(vxa, left, right, mask);
    const __m256i rot_x = rot8(vx, left, right, mask);
    __m256i vy = lane;
    for (std::uint32_t y = 0; y < size; y += 8) {
      const __m256i yb = _mm256_and_si256(_mm256_add_epi32(vy, beta), mask);
      __m256i lhs, rhs;
      if (rx) {
        lhs = _mm256_xor_si256(rot_xa, yb);
        rhs = _mm256_and_si256(_mm256_add_epi32(_mm256_xor_si256(rot_x, vy), gamma), mask);
      } else {
        lhs = rot8(_mm256_xor_si256(vxa, yb), left, right, mask);
        rhs = _mm256_and_si256(
            _mm256_add_epi32(rot8(_mm256_xor_si256(vx, vy), left, right, mask), gamma), mask);
      }
      const int eq = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(lhs, rhs)));
      hits += static_cast<unsigned>(__builtin_popcount(static_cast<unsigned>(eq)));
      vy = _mm256_add_epi32(vy, step);
    }
  }
  return hits;
}

}  // namespace arxdp::simd

#else

namespace arxdp::simd {

std::uint64_t count_hits_avx2(const KernelArgs&) {
  throw std::runtime_error("AVX2 kernel not available on this architecture");
}

}  // namespace arxdp::simd

#endif

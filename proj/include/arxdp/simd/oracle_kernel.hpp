#pragma once

#include <cstdint>
#include <string_view>

#include "arxdp/oracle.hpp"

namespace arxdp::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);
/// Whether the running CPU (and this build) can execute the variant.
bool isa_supported(Isa isa);
/// Widest supported variant, unless ARXDP_FORCE_SCALAR is set in the environment.
Isa best_isa();

struct KernelArgs {
  unsigned n = 0;  // 1..kOracleMaxBits
  unsigned r = 0;  // 0 for xor_op
  OracleOp op = OracleOp::xor_op;
  std::uint32_t alpha = 0, beta = 0, gamma = 0;
};

// Number of (x, y) in [0, 2^n)^2 satisfying the differential. All variants
// return identical counts; the scalar one is the reference.
std::uint64_t count_hits_scalar(const KernelArgs& args);
std::uint64_t count_hits_avx2(const KernelArgs& args);
std::uint64_t count_hits_neon(const KernelArgs& args);

/// Throws std::runtime_error if isa is not supported.
std::uint64_t count_hits(Isa isa, const KernelArgs& args);
inline std::uint64_t count_hits(const KernelArgs& args) { return count_hits(best_isa(), args); }

}  // namespace arxdp::simd

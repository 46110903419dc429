#include <cstdlib>
#include <stdexcept>

#include "arxdp/simd/oracle_kernel.hpp"

namespace arxdp::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  static const Isa chosen = [] {
    if (std::getenv("ARXDP_FORCE_SCALAR") != nullptr) return Isa::scalar;
    if (isa_supported(Isa::avx2)) return Isa::avx2;
    if (isa_supported(Isa::neon)) return Isa::neon;
    return Isa::scalar;
  }();
  return chosen;
}

std::uint64_t count_hits(Isa isa, const KernelArgs& args) {
  if (!isa_supported(isa)) {
    throw std::runtime_error("oracle kernel variant not supported: " + std::string(isa_name(isa)));
  }
  switch (isa) {
    case Isa::avx2:
      return count_hits_avx2(args);
    case Isa::neon:
      return count_hits_neon(args);
    case Isa::scalar:
      break;
  }
  return count_hits_scalar(args);
}

}  // namespace arxdp::simd

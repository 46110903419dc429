#include "arxdp/oracle.hpp"

#include "arxdp/error.hpp"
#include "arxdp/simd/oracle_kernel.hpp"

namespace arxdp {

Dyadic OracleResult::prob() const {
  // total is 4^n, so log2(total) = msb(total).
  return Dyadic(hits, boost::multiprecision::msb(total));
}

OracleResult oracle_adp(const OracleFunction& f, const Word& alpha, const Word& beta, const Word& gamma) {
  const unsigned n = alpha.size();
  if (beta.size() != n || gamma.size() != n) throw LengthMismatch("oracle_adp: differences must have equal length");
  if (n > kOracleMaxBits) {
    throw GuardExceeded("oracle_adp: n = " + std::to_string(n) + " exceeds enumeration limit " +
                        std::to_string(kOracleMaxBits));
  }
  simd::KernelArgs args;
  args.n = n;
  args.op = f.op;
  if (f.op != OracleOp::xor_op) {
    check_rotation(f.r, n);
    args.r = f.r;
  }
  args.alpha = static_cast<std::uint32_t>(alpha.value());
  args.beta = static_cast<std::uint32_t>(beta.value());
  args.gamma = static_cast<std::uint32_t>(gamma.value());

  OracleResult result;
  result.hits = simd::count_hits(args);
  result.total = BigInt(1) << (2 * n);
  return result;
}

}  // namespace arxdp

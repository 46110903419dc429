#include <doctest.h>

#include <random>

#include "arxdp/error.hpp"
#include "arxdp/oracle.hpp"
#include "arxdp/simd/oracle_kernel.hpp"
#include "brute.hpp"

using namespace arxdp;

namespace {

brute::Op to_brute(OracleOp op) {
  switch (op) {
    case OracleOp::xr:
      return brute::Op::xr;
    case OracleOp::rx:
      return brute::Op::rx;
    default:
      return brute::Op::xor_op;
  }
}

}  // namespace

TEST_CASE("worked example counts 64 of 256 pairs") {
  const OracleResult res = oracle_adp(OracleFunction::xor_fn(), Word::parse("0b1100", 4), Word::parse("0b0110", 4),
                                      Word::parse("0b1010", 4));
  CHECK(res.hits == 64);
  CHECK(res.total == 256);
  CHECK(res.prob() == Dyadic(1, 2));
}

TEST_CASE("zero differences always hold") {
  for (unsigned n = 2; n <= 8; ++n) {
    const Word z = Word::zero(n);
    for (const auto f : {OracleFunction::xor_fn(), OracleFunction::xr(1), OracleFunction::rx(n - 1)}) {
      const OracleResult res = oracle_adp(f, z, z, z);
      CHECK(res.hits == res.total);
      CHECK(res.prob() == Dyadic::one());
    }
  }
}

TEST_CASE("oracle counts equal plain enumeration") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    const unsigned n = 2 + rng() % 6;
    const unsigned r = 1 + rng() % (n - 1);
    const OracleOp op = static_cast<OracleOp>(rng() % 3);
    const std::uint64_t a = rng() & brute::mask(n), b = rng() & brute::mask(n), g = rng() & brute::mask(n);
    const OracleFunction f{op, op == OracleOp::xor_op ? 0u : r};
    CHECK(oracle_adp(f, brute::w(n, a), brute::w(n, b), brute::w(n, g)).hits ==
          brute::hits(to_brute(op), n, f.r, a, b, g));
  }
}

TEST_CASE("guard and argument checks") {
  CHECK_THROWS_AS(oracle_adp(OracleFunction::xor_fn(), Word::zero(13), Word::zero(13), Word::zero(13)), GuardExceeded);
  CHECK_THROWS_AS(oracle_adp(OracleFunction::xr(4), Word::zero(4), Word::zero(4), Word::zero(4)), InvalidRotation);
  CHECK_THROWS_AS(oracle_adp(OracleFunction::xr(1), Word::zero(4), Word::zero(3), Word::zero(4)), LengthMismatch);
}

TEST_CASE("vector kernels agree with the scalar kernel") {
  std::vector<simd::Isa> variants;
  for (auto isa : {simd::Isa::avx2, simd::Isa::neon}) {
    if (simd::isa_supported(isa)) variants.push_back(isa);
  }
  MESSAGE("dispatch picks " << simd::isa_name(simd::best_isa()) << ", " << variants.size()
                            << " vector variant(s) available");
  CHECK(simd::isa_supported(simd::best_isa()));
  std::mt19937_64 rng(23);
  for (unsigned n = 1; n <= 10; ++n) {
    for (int iter = 0; iter < 30; ++iter) {
      simd::KernelArgs args;
      args.n = n;
      args.op = static_cast<OracleOp>(rng() % 3);
      args.r = (args.op == OracleOp::xor_op || n == 1) ? 0 : 1 + rng() % (n - 1);
      if (n == 1) args.op = OracleOp::xor_op;
      const std::uint32_t m = static_cast<std::uint32_t>(brute::mask(n));
      args.alpha = rng() & m;
      args.beta = rng() & m;
      args.gamma = iter % 3 == 0 ? 0 : static_cast<std::uint32_t>(rng() & m);
      const std::uint64_t ref = simd::count_hits_scalar(args);
      CHECK(ref == brute::hits(to_brute(args.op), n, args.r, args.alpha, args.beta, args.gamma));
      for (auto isa : variants) CHECK(simd::count_hits(isa, args) == ref);
      CHECK(simd::count_hits(args) == ref);
    }
  }
}

TEST_CASE("unsupported variants are refused") {
  for (auto isa : {simd::Isa::avx2, simd::Isa::neon}) {
    if (!simd::isa_supported(isa)) CHECK_THROWS_AS(simd::count_hits(isa, simd::KernelArgs{4, 0, OracleOp::xor_op, 0, 0, 0}), std::runtime_error);
  }
  CHECK(simd::isa_name(simd::Isa::scalar) == "scalar");
}

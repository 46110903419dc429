#pragma once

#include <array>
#include <cstdint>

#include "arxdp/dyadic.hpp"
#include "arxdp/word.hpp"

namespace arxdp {

/// An 8x8 matrix with entries in {0, 1/4, 1}, stored as quarters (4 * entry).
struct TransMatrix {
  std::array<std::array<std::uint8_t, 8>, 8> quarters{};

  Dyadic entry(unsigned i, unsigned j) const { return Dyadic(quarters[i][j], 2); }
  friend bool operator==(const TransMatrix&, const TransMatrix&) = default;
};

/// A_k for k in 0..7: (A_k)_{i,j} = (A_0)_{i^k, j^k}.
const TransMatrix& transition_matrix(unsigned k);

/// Column vector over Q^8 with a shared denominator 2^log2_den.
struct StateVec {
  std::array<BigInt, 8> num{};
  std::uint64_t log2_den = 0;

  Dyadic operator[](unsigned k) const { return Dyadic(num[k], log2_den); }
  static StateVec unit(unsigned k);
  friend bool operator==(const StateVec& a, const StateVec& b);
};

/// M * v.
StateVec apply(const TransMatrix& m, const StateVec& v);

/// A_{w_0} A_{w_1} ... A_{w_(n-1)} e_0^T, folded from the right.
StateVec state_vector(const OctalWord& w);

/// Row selectors as coordinate bitmasks: bit k selects coordinate k.
namespace rows {
inline constexpr std::uint8_t all = 0xFF;                                  // L
constexpr std::uint8_t carry(Bit c) { return c ? 0xAA : 0x55; }            // L_c
constexpr std::uint8_t pair(Bit a, Bit b) { return std::uint8_t(0x3u << (4 * a + 2 * b)); }  // L_{a,b}
constexpr std::uint8_t unit(unsigned k) { return std::uint8_t(1u << k); }  // e_k
}  // namespace rows

/// rows * v.
Dyadic select(std::uint8_t row_mask, const StateVec& v);
/// rows * A_{w_0} ... A_{w_(n-1)} e_0^T, without materialising big integers for n <= 31.
Dyadic select_product(std::uint8_t row_mask, const OctalWord& w);

Dyadic adp_xor(const OctalWord& w);
Dyadic adp_xor(const Word& alpha, const Word& beta, const Word& gamma);

/// True iff adp_xor is zero: the least significant nonzero symbol has odd weight.
bool adp_xor_is_zero_fast(const OctalWord& w);

Dyadic cadp(Bit c, const OctalWord& w);
Dyadic cadp(Bit c, const Word& alpha, const Word& beta, const Word& gamma);
Dyadic padp(Bit a, Bit b, const OctalWord& w);
Dyadic padp(Bit a, Bit b, const Word& alpha, const Word& beta, const Word& gamma);

/// T_k M T_k and T_k v, where T_k swaps coordinates i and i^k.
TransMatrix conjugate_involution(unsigned k, const TransMatrix& m);
StateVec conjugate_involution(unsigned k, const StateVec& v);

/// A permutation of the three roles (alpha, beta, gamma) of a symbol:
/// pi(x_0, x_1, x_2) = (x_{src[0]}, x_{src[1]}, x_{src[2]}) with x_0 the alpha bit.
struct RolePermutation {
  std::array<unsigned, 3> src{0, 1, 2};

  unsigned apply(unsigned symbol) const;
  unsigned apply_inverse(unsigned symbol) const;
  friend bool operator==(const RolePermutation&, const RolePermutation&) = default;
};

const std::array<RolePermutation, 6>& role_permutations();

/// S_pi M S_pi^-1 and S_pi v with (S_pi x)_i = x_{pi^-1(i)}.
TransMatrix conjugate_permutation(const RolePermutation& pi, const TransMatrix& m);
StateVec conjugate_permutation(const RolePermutation& pi, const StateVec& v);

}  // namespace arxdp

#include "arxdp/adp_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace arxdp {

namespace {

constexpr std::array<std::array<std::uint8_t, 8>, 8> kA0Quarters = {{
    {4, 0, 0, 1, 0, 1, 1, 0},
    {0, 0, 0, 1, 0, 1, 0, 0},
    {0, 0, 0, 1, 0, 0, 1, 0},
    {0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 1, 0},
    {0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0},
}};

std::array<TransMatrix, 8> build_matrices() {
  std::array<TransMatrix, 8> out{};
  for (unsigned k = 0; k < 8; ++k) {
    for (unsigned i = 0; i < 8; ++i) {
      for (unsigned j = 0; j < 8; ++j) out[k].quarters[i][j] = kA0Quarters[i ^ k][j ^ k];
    }
  }
  return out;
}

const std::array<TransMatrix, 8>& matrices() {
  static const std::array<TransMatrix, 8> m = build_matrices();
  return m;
}

// 4^n * (A_{w_0} ... A_{w_(n-1)} e_0^T). Every coordinate of the unscaled
// vector lies in [0, 1], so U = uint64_t is exact for n <= 31.
template <class U>
std::array<U, 8> fold_scaled(std::span<const std::uint8_t> symbols) {
  std::array<U, 8> v{};
  v[0] = 1;
  const auto& m = matrices();
  for (auto it = symbols.rbegin(); it != symbols.rend(); ++it) {
    const auto& q = m[*it].quarters;
    std::array<U, 8> next{};
    for (unsigned i = 0; i < 8; ++i) {
      U acc = 0;
      for (unsigned j = 0; j < 8; ++j) {
        if (q[i][j]) acc += U(q[i][j]) * v[j];
      }
      next[i] = std::move(acc);
    }
    v = std::move(next);
  }
  return v;
}

constexpr unsigned kMachineWordLimit = 31;

unsigned weight3(unsigned s) { return static_cast<unsigned>(std::popcount(s & 7u)); }

void check_bit(Bit b) {
  if (b > 1) throw std::invalid_argument("flag must be 0 or 1");
}

}  // namespace

const TransMatrix& transition_matrix(unsigned k) {
  if (k > 7) throw std::out_of_range("transition_matrix: index must be in 0..7");
  return matrices()[k];
}

StateVec StateVec::unit(unsigned k) {
  StateVec v;
  v.num[k] = 1;
  return v;
}

bool operator==(const StateVec& a, const StateVec& b) {
  for (unsigned k = 0; k < 8; ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

StateVec apply(const TransMatrix& m, const StateVec& v) {
  StateVec out;
  out.log2_den = v.log2_den + 2;
  for (unsigned i = 0; i < 8; ++i) {
    BigInt acc = 0;
    for (unsigned j = 0; j < 8; ++j) {
      if (m.quarters[i][j]) acc += m.quarters[i][j] * v.num[j];
    }
    out.num[i] = std::move(acc);
  }
  return out;
}

StateVec state_vector(const OctalWord& w) {
  StateVec out;
  out.log2_den = 2ull * w.size();
  if (w.size() <= kMachineWordLimit) {
    const auto v = fold_scaled<std::uint64_t>(w.symbols());
    for (unsigned k = 0; k < 8; ++k) out.num[k] = v[k];
  } else {
    out.num = fold_scaled<BigInt>(w.symbols());
  }
  return out;
}

Dyadic select(std::uint8_t row_mask, const StateVec& v) {
  BigInt acc = 0;
  for (unsigned k = 0; k < 8; ++k) {
    if (row_mask & (1u << k)) acc += v.num[k];
  }
  return Dyadic(std::move(acc), v.log2_den);
}

Dyadic select_product(std::uint8_t row_mask, const OctalWord& w) {
  if (w.size() <= kMachineWordLimit) {
    const auto v = fold_scaled<std::uint64_t>(w.symbols());
    std::uint64_t acc = 0;
    for (unsigned k = 0; k < 8; ++k) {
      if (row_mask & (1u << k)) acc += v[k];
    }
    return Dyadic(acc, 2ull * w.size());
  }
  return select(row_mask, state_vector(w));
}

Dyadic adp_xor(const OctalWord& w) { return select_product(rows::all, w); }

Dyadic adp_xor(const Word& alpha, const Word& beta, const Word& gamma) {
  return adp_xor(octal_word(alpha, beta, gamma));
}

bool adp_xor_is_zero_fast(const OctalWord& w) {
  for (unsigned i = w.size(); i-- > 0;) {
    if (w[i] != 0) return weight3(w[i]) % 2 == 1;
  }
  return false;
}

Dyadic cadp(Bit c, const OctalWord& w) {
  check_bit(c);
  return select_product(rows::carry(c), w);
}

Dyadic cadp(Bit c, const Word& alpha, const Word& beta, const Word& gamma) {
  return cadp(c, octal_word(alpha, beta, gamma));
}

Dyadic padp(Bit a, Bit b, const OctalWord& w) {
  check_bit(a);
  check_bit(b);
  return select_product(rows::pair(a, b), w);
}

Dyadic padp(Bit a, Bit b, const Word& alpha, const Word& beta, const Word& gamma) {
  return padp(a, b, octal_word(alpha, beta, gamma));
}

TransMatrix conjugate_involution(unsigned k, const TransMatrix& m) {
  TransMatrix out;
  for (unsigned i = 0; i < 8; ++i) {
    for (unsigned j = 0; j < 8; ++j) out.quarters[i][j] = m.quarters[i ^ k][j ^ k];
  }
  return out;
}

StateVec conjugate_involution(unsigned k, const StateVec& v) {
  StateVec out;
  out.log2_den = v.log2_den;
  for (unsigned i = 0; i < 8; ++i) out.num[i] = v.num[i ^ k];
  return out;
}

unsigned RolePermutation::apply(unsigned symbol) const {
  const unsigned x[3] = {(symbol >> 2) & 1u, (symbol >> 1) & 1u, symbol & 1u};
  return 4 * x[src[0]] + 2 * x[src[1]] + x[src[2]];
}

unsigned RolePermutation::apply_inverse(unsigned symbol) const {
  for (unsigned s = 0; s < 8; ++s) {
    if (apply(s) == symbol) return s;
  }
  throw std::logic_error("RolePermutation: not a permutation");
}

const std::array<RolePermutation, 6>& role_permutations() {
  static const std::array<RolePermutation, 6> all = {{
      {{0, 1, 2}},
      {{0, 2, 1}},
      {{1, 0, 2}},
      {{1, 2, 0}},
      {{2, 0, 1}},
      {{2, 1, 0}},
  }};
  return all;
}

TransMatrix conjugate_permutation(const RolePermutation& pi, const TransMatrix& m) {
  TransMatrix out;
  for (unsigned i = 0; i < 8; ++i) {
    for (unsigned j = 0; j < 8; ++j) {
      out.quarters[i][j] = m.quarters[pi.apply_inverse(i)][pi.apply_inverse(j)];
    }
  }
  return out;
}

StateVec conjugate_permutation(const RolePermutation& pi, const StateVec& v) {
  StateVec out;
  out.log2_den = v.log2_den;
  for (unsigned i = 0; i < 8; ++i) out.num[i] = v.num[pi.apply_inverse(i)];
  return out;
}

}  // namespace arxdp

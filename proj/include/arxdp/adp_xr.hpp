#pragma once

#include "arxdp/dyadic.hpp"
#include "arxdp/word.hpp"

namespace arxdp {

/// A differential (alpha -> gamma, beta) through (x ^ y) <<< r, with the split
/// used by the pair/carry decomposition:
///   alpha = alpha_high | alpha_low   (r high bits, n-r low bits), same for beta,
///   gamma = gamma_high | gamma_low   (n-r high bits, r low bits).
class XrInstance {
 public:
  /// Throws LengthMismatch or InvalidRotation.
  XrInstance(Word alpha, Word beta, Word gamma, unsigned r);

  unsigned n() const { return alpha_.size(); }
  unsigned r() const { return r_; }
  const Word& alpha() const { return alpha_; }
  const Word& beta() const { return beta_; }
  const Word& gamma() const { return gamma_; }

  Word alpha_high() const { return alpha_.slice(0, r_); }
  Word alpha_low() const { return alpha_.slice(r_, n() - r_); }
  Word beta_high() const { return beta_.slice(0, r_); }
  Word beta_low() const { return beta_.slice(r_, n() - r_); }
  Word gamma_high() const { return gamma_.slice(0, n() - r_); }
  Word gamma_low() const { return gamma_.slice(n() - r_, r_); }

  /// omega(alpha_low, beta_low, gamma_high), length n-r.
  OctalWord low_octal() const;
  /// omega(alpha_high, beta_high, gamma_low), length r.
  OctalWord high_octal() const;

 private:
  Word alpha_, beta_, gamma_;
  unsigned r_;
};

enum class XrMethod {
  two_term,  ///< two pair/carry products (default)
  full_sum,  ///< all eight (a, b, c) terms
  verified,  ///< both; throws std::logic_error if they differ
};

Dyadic adp_xr(const XrInstance& inst, XrMethod method = XrMethod::two_term);
Dyadic adp_xr(const Word& alpha, const Word& beta, const Word& gamma, unsigned r,
              XrMethod method = XrMethod::two_term);

/// Probability for (x <<< r) ^ y, via adp_rx(a, b -> c, r) = adp_xr(c, b -> a, n - r).
Dyadic adp_rx(const Word& alpha, const Word& beta, const Word& gamma, unsigned r);

}  // namespace arxdp

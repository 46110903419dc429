#include "arxdp/adp_xr.hpp"

#include <stdexcept>

#include "arxdp/adp_matrix.hpp"
#include "arxdp/error.hpp"

namespace arxdp {

namespace {

Dyadic full_sum(const XrInstance& inst) {
  const Word al = inst.alpha_low(), bl = inst.beta_low(), gh = inst.gamma_high();
  const Word ah = inst.alpha_high(), bh = inst.beta_high(), gl = inst.gamma_low();
  Dyadic total;
  for (Bit c = 0; c < 2; ++c) {
    const OctalWord low = octal_word(al, bl, complement_if(gh, c));
    for (Bit a = 0; a < 2; ++a) {
      for (Bit b = 0; b < 2; ++b) {
        const Dyadic p = padp(a, b, low);
        if (p.is_zero()) continue;
        total += p * cadp(c, complement_if(ah, a), complement_if(bh, b), gl);
      }
    }
  }
  return total;
}

Dyadic two_term(const XrInstance& inst) {
  const Word al = inst.alpha_low(), bl = inst.beta_low(), gh = inst.gamma_high();
  const Word ah = inst.alpha_high(), bh = inst.beta_high(), gl = inst.gamma_low();
  const unsigned lo = inst.n() - inst.r();
  const Bit a = al.bit(lo - 1) ^ bl.bit(lo - 1) ^ gh.bit(lo - 1);
  const Bit a_hi = ah.bit(inst.r() - 1) ^ bh.bit(inst.r() - 1) ^ gl.bit(inst.r() - 1);

  const OctalWord low = octal_word(al, bl, complement_if(gh, a));
  Dyadic total;
  const Dyadic p0 = padp(a_hi, 0, low);
  if (!p0.is_zero()) total += p0 * cadp(a, complement_if(ah, a_hi), bh, gl);
  const Dyadic p1 = padp(a_hi ^ 1u, 1, low);
  if (!p1.is_zero()) total += p1 * cadp(a, complement_if(bnot(ah), a_hi), bnot(bh), gl);
  return total;
}

}  // namespace

XrInstance::XrInstance(Word alpha, Word beta, Word gamma, unsigned r)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)), r_(r) {
  if (alpha_.size() != beta_.size() || alpha_.size() != gamma_.size()) {
    throw LengthMismatch("XrInstance: differences must have equal length");
  }
  check_rotation(r_, alpha_.size());
}

OctalWord XrInstance::low_octal() const { return octal_word(alpha_low(), beta_low(), gamma_high()); }

OctalWord XrInstance::high_octal() const { return octal_word(alpha_high(), beta_high(), gamma_low()); }

Dyadic adp_xr(const XrInstance& inst, XrMethod method) {
  switch (method) {
    case XrMethod::two_term:
      return two_term(inst);
    case XrMethod::full_sum:
      return full_sum(inst);
    case XrMethod::verified: {
      Dyadic fast = two_term(inst);
      if (fast != full_sum(inst)) {
        throw std::logic_error("adp_xr: two-term and full-sum forms disagree");
      }
      return fast;
    }
  }
  throw std::invalid_argument("adp_xr: unknown method");
}

Dyadic adp_xr(const Word& alpha, const Word& beta, const Word& gamma, unsigned r, XrMethod method) {
  return adp_xr(XrInstance(alpha, beta, gamma, r), method);
}

Dyadic adp_rx(const Word& alpha, const Word& beta, const Word& gamma, unsigned r) {
  check_rotation(r, alpha.size());
  return adp_xr(XrInstance(gamma, beta, alpha, alpha.size() - r));
}

}  // namespace arxdp

#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "arxdp/bigint.hpp"

namespace arxdp {

/// Exact nonnegative rational num / 2^log2_den. Reduction to lowest terms
/// is deferred to canonical(); comparisons and rendering are value-based.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt num, std::uint64_t log2_den);

  static Dyadic zero() { return {}; }
  static Dyadic one() { return Dyadic(1, 0); }

  const BigInt& numerator() const { return num_; }
  std::uint64_t log2_den() const { return log2_den_; }

  /// num odd, or num == 0 with log2_den == 0.
  Dyadic canonical() const;
  bool is_zero() const { return num_ == 0; }

  /// Numerator over 2^log2_den. Throws std::domain_error if the value is not
  /// representable on that scale.
  BigInt scaled_to(std::uint64_t log2_den) const;

  double to_double() const;

  /// Reduced form: "0", "1", "3/16".
  std::string str() const;
  /// Unreduced over 2^log2_den, e.g. "64/256".
  std::string scaled_str(std::uint64_t log2_den) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& other) { return *this = *this + other; }
  /// Divides by 2^k.
  Dyadic halved(std::uint64_t k) const { return Dyadic(num_, log2_den_ + k); }

  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  BigInt num_ = 0;
  std::uint64_t log2_den_ = 0;
};

}  // namespace arxdp

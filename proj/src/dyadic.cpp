#include "arxdp/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace arxdp {

namespace {

// Brings both operands to the larger denominator.
std::pair<BigInt, BigInt> aligned(const Dyadic& a, const Dyadic& b, std::uint64_t& den) {
  den = std::max(a.log2_den(), b.log2_den());
  BigInt x = a.numerator() << static_cast<unsigned>(den - a.log2_den());
  BigInt y = b.numerator() << static_cast<unsigned>(den - b.log2_den());
  return {std::move(x), std::move(y)};
}

}  // namespace

Dyadic::Dyadic(BigInt num, std::uint64_t log2_den) : num_(std::move(num)), log2_den_(log2_den) {
  if (num_ < 0) throw std::invalid_argument("Dyadic: negative numerator");
}

Dyadic Dyadic::canonical() const {
  if (num_ == 0) return {};
  const std::uint64_t tz = boost::multiprecision::lsb(num_);
  const std::uint64_t shift = std::min<std::uint64_t>(tz, log2_den_);
  return Dyadic(num_ >> static_cast<unsigned>(shift), log2_den_ - shift);
}

BigInt Dyadic::scaled_to(std::uint64_t log2_den) const {
  if (log2_den >= log2_den_) return num_ << static_cast<unsigned>(log2_den - log2_den_);
  const auto c = canonical();
  if (c.log2_den_ > log2_den) throw std::domain_error("Dyadic::scaled_to: value not representable");
  return c.num_ << static_cast<unsigned>(log2_den - c.log2_den_);
}

double Dyadic::to_double() const {
  const auto c = canonical();
  if (c.num_ == 0) return 0.0;
  // Keep 62 significant bits so huge numerators do not overflow the conversion.
  const std::uint64_t top = boost::multiprecision::msb(c.num_);
  const std::uint64_t drop = top > 62 ? top - 62 : 0;
  const double mantissa = BigInt(c.num_ >> static_cast<unsigned>(drop)).convert_to<double>();
  return std::ldexp(mantissa, static_cast<int>(drop) - static_cast<int>(c.log2_den_));
}

std::string Dyadic::str() const {
  const auto c = canonical();
  if (c.log2_den_ == 0) return c.num_.str();
  return c.num_.str() + "/" + (BigInt(1) << static_cast<unsigned>(c.log2_den_)).str();
}

std::string Dyadic::scaled_str(std::uint64_t log2_den) const {
  return scaled_to(log2_den).str() + "/" + (BigInt(1) << static_cast<unsigned>(log2_den)).str();
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  std::uint64_t den = 0;
  auto [x, y] = aligned(a, b, den);
  return Dyadic(x + y, den);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num_ * b.num_, a.log2_den_ + b.log2_den_);
}

bool operator==(const Dyadic& a, const Dyadic& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  std::uint64_t den = 0;
  auto [x, y] = aligned(a, b, den);
  if (x < y) return std::strong_ordering::less;
  if (y < x) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace arxdp

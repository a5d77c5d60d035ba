#include "locscale/rational.hpp"

#include <numeric>

#include "locscale/errors.hpp"
#include "locscale/supernatural.hpp"

namespace locscale {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw Error("rational arithmetic overflows 64 bits");
  return a * b;
}

}  // namespace

Rational::Rational(std::uint64_t numerator, std::uint64_t denominator) {
  if (numerator == 0 || denominator == 0) throw PreconditionError("rational parts must be positive");
  const std::uint64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-cancel first to keep intermediates small.
  const std::uint64_t g1 = std::gcd(a.num_, b.den_);
  const std::uint64_t g2 = std::gcd(b.num_, a.den_);
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) { return a * Rational(b.den_, b.num_); }

Rational p_part(const Rational& r, std::uint64_t p) {
  return Rational(p_part(r.numerator(), p), p_part(r.denominator(), p));
}

}  // namespace locscale

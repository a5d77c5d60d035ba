#pragma once

#include <cstdint>
#include <string>

namespace locscale {

/// A positive rational in lowest terms. Values of the modular function live here.
class Rational {
 public:
  constexpr Rational() = default;
  /// Throws PreconditionError if either part is zero.
  Rational(std::uint64_t numerator, std::uint64_t denominator = 1);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }

  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

 private:
  std::uint64_t num_ = 1;
  std::uint64_t den_ = 1;
};

/// The p-primary factor p^(v_p(num) - v_p(den)).
Rational p_part(const Rational& r, std::uint64_t p);

}  // namespace locscale

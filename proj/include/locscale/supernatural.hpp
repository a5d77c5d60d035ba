#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace locscale {

/// Exponent of a prime in a supernatural number: a natural or infinity.
class Exponent {
 public:
  constexpr Exponent() = default;
  constexpr explicit Exponent(std::uint64_t n) : value_(n) {}
  static constexpr Exponent infinity() {
    Exponent e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  /// Finite value; 0 for infinity (check is_infinite() first).
  constexpr std::uint64_t value() const noexcept { return infinite_ ? 0 : value_; }
  constexpr bool is_zero() const noexcept { return !infinite_ && value_ == 0; }

  friend constexpr Exponent operator+(Exponent a, Exponent b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Exponent(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Exponent a, Exponent b) {
    return a.infinite_ == b.infinite_ && a.value() == b.value();
  }
  friend constexpr std::strong_ordering operator<=>(Exponent a, Exponent b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

/**
 * A supernatural (Steinitz) number: a formal product of prime powers whose
 * exponents may be infinite. Absent primes have exponent 0; no stored
 * exponent is 0.
 *
 * Text form: factors "p" or "p^e" (e a natural or "inf") joined by '*',
 * primes ascending; the empty product is "1". Example: "2^3*5^inf*7".
 */
class Supernatural {
 public:
  /// The empty product, 1.
  Supernatural() = default;

  /// Factorises n by trial division. Throws PreconditionError for n == 0.
  static Supernatural from_natural(std::uint64_t n);
  /// Drops zero exponents; every key must be prime.
  static Supernatural from_exponents(const std::map<std::uint64_t, Exponent>& exps);
  /// p^e; p must be prime.
  static Supernatural prime_power(std::uint64_t p, Exponent e);
  /// Throws ParseError.
  static Supernatural parse(std::string_view text);

  Exponent exponent(std::uint64_t p) const;
  const std::map<std::uint64_t, Exponent>& exponents() const noexcept { return exps_; }

  bool is_one() const noexcept { return exps_.empty(); }
  bool is_finite() const noexcept;
  /// The natural number, when finite and representable in 64 bits.
  std::optional<std::uint64_t> to_natural() const;

  std::string to_string() const;

  friend bool operator==(const Supernatural&, const Supernatural&) = default;

 private:
  void set(std::uint64_t p, Exponent e);

  std::map<std::uint64_t, Exponent> exps_;
};

/// Exponent-wise sum.
Supernatural operator*(const Supernatural& a, const Supernatural& b);
/// Exponent-wise maximum.
Supernatural lcm(const Supernatural& a, const Supernatural& b);
Supernatural lcm(std::span<const Supernatural> values);
/// Exponent-wise <=.
bool divides(const Supernatural& a, const Supernatural& b);
/// Restriction to the prime p.
Supernatural p_part(const Supernatural& a, std::uint64_t p);

bool is_prime(std::uint64_t n);
/// Primes up to and including n, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);
/// Prime factorisation of n >= 1 as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorise(std::uint64_t n);
/// Largest e with p^e dividing n (n >= 1).
unsigned valuation(std::uint64_t n, std::uint64_t p);
/// p^valuation(n, p).
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

}  // namespace locscale

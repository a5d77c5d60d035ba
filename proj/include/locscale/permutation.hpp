#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace locscale {

/// A point of {1..k}. Points are 1-based throughout the public interface.
using Point = std::uint32_t;

/**
 * A permutation of {1..k}.
 *
 * Products follow the "right factor applies first" convention:
 * (p * q)(i) == p(q(i)).
 *
 * The text form is disjoint-cycle notation, e.g. "(1 2 3)(4 5)", with the
 * identity written "()". to_string() emits the canonical form: cycles sorted
 * by least element, least element first within each cycle, fixed points
 * omitted.
 */
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// From 1-based images: images[i-1] is the image of i.
  static Permutation from_images(std::vector<Point> images);

  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// Parses disjoint-cycle notation. Throws ParseError on malformed text,
  /// repeated points or points outside {1..degree}.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }

  /// Image of a 1-based point.
  Point operator()(Point i) const { return images_[i - 1] + 1; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  /// Integer power; negative exponents use the inverse.
  Permutation pow(std::int64_t exponent) const;

  /// Smallest moved point, or 0 for the identity.
  Point first_moved() const noexcept;

  /// Cycles of length >= 2 in canonical order.
  std::vector<std::vector<Point>> cycles() const;

  std::string to_string() const;

  /// 0-based images, for hashing and tight loops.
  std::span<const Point> raw() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;  // 0-based
};

/// p * q with q applied first. Throws PreconditionError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g h g^-1
Permutation conjugate(const Permutation& g, const Permutation& h);

/// g^-1 h^-1 g h
Permutation commutator(const Permutation& g, const Permutation& h);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace locscale

template <>
struct std::hash<locscale::Permutation> : locscale::PermutationHash {};

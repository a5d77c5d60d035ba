#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace locscale {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input: cycle notation, axis literals, group specs, files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (degree mismatch, invalid
/// axis, non-normal subgroup, failed hypothesis).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Refusal to enumerate a group whose order exceeds the enumeration bound.
class BoundError : public PreconditionError {
 public:
  BoundError(const std::string& what, std::uint64_t order, std::uint64_t bound)
      : PreconditionError(what + ": group order " + std::to_string(order) +
                          " exceeds enumeration bound " + std::to_string(bound)),
        order_(order),
        bound_(bound) {}

  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::uint64_t order_;
  std::uint64_t bound_;
};

}  // namespace locscale

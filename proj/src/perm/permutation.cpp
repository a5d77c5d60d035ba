#include "locscale/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "locscale/errors.hpp"

namespace locscale {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  const std::size_t k = images.size();
  std::vector<bool> seen(k, false);
  for (Point& x : images) {
    if (x < 1 || x > k) {
      throw PreconditionError("image " + std::to_string(x) + " outside {1.." + std::to_string(k) + "}");
    }
    if (seen[x - 1]) {
      throw PreconditionError("images are not a bijection: " + std::to_string(x) + " repeated");
    }
    seen[x - 1] = true;
    --x;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point x : cycle) {
      if (x < 1 || x > degree) {
        throw ParseError("point " + std::to_string(x) + " out of range for degree " +
                         std::to_string(degree));
      }
      if (used[x - 1]) {
        throw ParseError("point " + std::to_string(x) + " appears twice");
      }
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      p.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation text");
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw ParseError("expected '(' at offset " + std::to_string(pos) + " in \"" +
                       std::string(text) + "\"");
    }
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos == text.size()) throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("unexpected character '" + std::string(1, text[pos]) + "' in \"" +
                         std::string(text) + "\"");
      }
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > 1'000'000) throw ParseError("point value too large");
        ++pos;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& cycle : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
  return result;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

Point Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i + 1);
  }
  return 0;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<Point>(x + 1));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) os << ' ';
      os << cycle[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw PreconditionError("degree mismatch in compose: " + std::to_string(p.degree()) + " vs " +
                            std::to_string(q.degree()));
  }
  Permutation r;
  r.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < r.images_.size(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

Permutation conjugate(const Permutation& g, const Permutation& h) { return g * h * g.inverse(); }

Permutation commutator(const Permutation& g, const Permutation& h) {
  return g.inverse() * h.inverse() * g * h;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.raw()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace locscale

#include "locscale/stab_chain.hpp"

#include <algorithm>

#include "locscale/errors.hpp"

namespace locscale {

StabChain::StabChain(std::size_t degree, std::span<const Permutation> generators,
                     std::span<const Point> base_prefix)
    : degree_(degree) {
  std::vector<Permutation> strong;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw PreconditionError("generator degree does not match group degree");
    if (!g.is_identity()) strong.push_back(g);
  }
  for (Point b : base_prefix) {
    if (b < 1 || b > degree) throw PreconditionError("base point out of range");
    add_level(b);
  }
  // Every generator must move some base point.
  for (const auto& s : strong) {
    const auto b = base();
    const bool moves_base = std::any_of(b.begin(), b.end(), [&](Point x) { return s(x) != x; });
    if (!moves_base) add_level(s.first_moved());
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& s : strong) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i && fixes_prefix; ++j) fixes_prefix = s(levels_[j].base) == levels_[j].base;
      if (fixes_prefix) levels_[i].generators.push_back(s);
    }
    rebuild_orbit(levels_[i]);
  }

  // Holt's SCHREIERSIMS: verify levels bottom-up, restarting at the deepest
  // level that received a new strong generator.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    auto& level = levels_[static_cast<std::size_t>(i)];
    for (std::size_t oi = 0; !extended && oi < level.orbit.size(); ++oi) {
      const Point b = level.orbit[oi];
      const Permutation& ub = level.transversal[static_cast<std::size_t>(level.slot[b - 1])];
      for (std::size_t gi = 0; gi < level.generators.size(); ++gi) {
        const Permutation& x = level.generators[gi];
        const Point xb = x(b);
        const Permutation& uxb = level.transversal[static_cast<std::size_t>(level.slot[xb - 1])];
        Permutation schreier = uxb.inverse() * x * ub;
        if (schreier.is_identity()) continue;
        auto [residue, j] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) add_level(residue.first_moved());
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

void StabChain::add_level(Point base) {
  Level level;
  level.base = base;
  levels_.push_back(std::move(level));
  rebuild_orbit(levels_.back());
}

void StabChain::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base);
  level.slot.assign(degree_, -1);
  level.transversal.assign(1, Permutation(degree_));
  level.slot[level.base - 1] = 0;
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const Point b = level.orbit[head];
    for (const auto& g : level.generators) {
      const Point gb = g(b);
      if (level.slot[gb - 1] >= 0) continue;
      level.slot[gb - 1] = static_cast<int>(level.transversal.size());
      level.transversal.push_back(g * level.transversal[static_cast<std::size_t>(level.slot[b - 1])]);
      level.orbit.push_back(gb);
    }
  }
}

std::uint64_t StabChain::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels_) {
    const std::uint64_t len = level.orbit.size();
    if (result > UINT64_MAX / len) throw Error("group order overflows 64 bits");
    result *= len;
  }
  return result;
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation g, std::size_t first_level) const {
  for (std::size_t l = first_level; l < levels_.size(); ++l) {
    const auto& level = levels_[l];
    const Point b = g(level.base);
    const int s = level.slot[b - 1];
    if (s < 0) return {std::move(g), l};
    g = level.transversal[static_cast<std::size_t>(s)].inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return strip(g).first.is_identity();
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& level : levels_) b.push_back(level.base);
  return b;
}

}  // namespace locscale

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "locscale/permutation.hpp"

namespace locscale {

/**
 * Base and strong generating set built by deterministic Schreier-Sims.
 *
 * Base points are taken from `base_prefix` first, then as the least point
 * moved by each new strong generator, so with an empty prefix the base is an
 * ascending selection of 1..k that skips points fixed by the whole group.
 */
class StabChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;  // fix every earlier base point
    std::vector<Point> orbit;              // orbit of base, discovery order
    std::vector<int> slot;                 // point-1 -> index into transversal, -1 if absent
    std::vector<Permutation> transversal;  // transversal[slot[b-1]](base) == b
  };

  StabChain(std::size_t degree, std::span<const Permutation> generators,
            std::span<const Point> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  /// Product of the basic orbit lengths. Throws Error on 64-bit overflow.
  std::uint64_t order() const;

  bool contains(const Permutation& g) const;

  /// Sifts g from `first_level` on. Returns the residue and the level at
  /// which sifting stopped (levels().size() when it went through).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t first_level = 0) const;

  std::vector<Point> base() const;

 private:
  void add_level(Point base);
  void rebuild_orbit(Level& level) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace locscale

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locscale/permutation.hpp"
#include "locscale/stab_chain.hpp"

namespace locscale {

/// Operations that need every element refuse groups larger than this.
inline constexpr std::uint64_t kEnumerationBound = 200'000;

/**
 * A permutation group on {1..k} given by generators.
 *
 * Values are immutable. The stabiliser chain and the element list are
 * computed lazily, once, and shared between copies; concurrent readers are
 * safe.
 */
class PermGroup {
 public:
  /// Trivial group of degree 0.
  PermGroup();
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);
  static PermGroup symmetric(std::size_t degree);
  static PermGroup alternating(std::size_t degree);
  /// Generated by the k-cycle (1 2 ... k).
  static PermGroup cyclic(std::size_t degree);
  /// Symmetries of the k-gon with vertices 1..k, order 2k (k >= 3).
  static PermGroup dihedral(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const StabChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }
  bool is_trivial() const { return order() == 1; }

  /**
   * All elements, sorted lexicographically by images (the canonical element
   * order). Built by closing the generators under multiplication, without
   * the stabiliser chain. Throws BoundError if the order exceeds `bound`.
   */
  const std::vector<Permutation>& elements(std::uint64_t bound = kEnumerationBound) const;

  /// Throws BoundError naming `what` when order() > bound.
  void require_enumerable(const std::string& what, std::uint64_t bound = kEnumerationBound) const;

  std::string to_string() const;

 private:
  struct Cache;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

// Orbits and stabilisers.

/// Sorted orbit of i. Throws PreconditionError if i is out of range.
std::vector<Point> orbit(const PermGroup& g, Point i);

/// Some element t of G with t(a) == b, if one exists.
std::optional<Permutation> transporter(const PermGroup& g, Point a, Point b);

PermGroup point_stabiliser(const PermGroup& g, Point i);

/// Length of the orbit of j under the stabiliser of i.
std::size_t suborbit_size(const PermGroup& g, Point i, Point j);

/// All suborbit lengths at once: result[(i-1)*k + (j-1)] == |G_i . j|.
std::vector<std::size_t> suborbit_table(const PermGroup& g);

/// {f(c) : f in G, f(a) = b}, sorted; empty when b is not in the orbit of a.
std::vector<Point> transporter_images(const PermGroup& g, Point a, Point b, Point c);

// Subgroups.

/// Subgroup generated by the given elements, keeping only generators that
/// enlarge the group built so far.
PermGroup subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements);

PermGroup generated(std::span<const PermGroup> groups);
PermGroup conjugate_subgroup(const Permutation& g, const PermGroup& h);
bool is_subgroup(const PermGroup& h, const PermGroup& g);
bool same_group(const PermGroup& a, const PermGroup& b);
bool is_normal(const PermGroup& n, const PermGroup& g);
bool normalises(const Permutation& g, const PermGroup& h);

/// Brute force over the elements of G; requires H <= G.
PermGroup normaliser(const PermGroup& g, const PermGroup& h);
/// Brute force over the elements of the smaller group.
PermGroup intersect(const PermGroup& h, const PermGroup& k);

/// Smallest normal subgroup of G containing the given elements.
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> elements);
PermGroup normal_closure(const PermGroup& g, const PermGroup& h);
/// [H, K] for subgroups normalised by G, as a normal closure in G.
PermGroup commutator_subgroup(const PermGroup& g, const PermGroup& h, const PermGroup& k);
PermGroup derived_subgroup(const PermGroup& g);

std::vector<PermGroup> derived_series(const PermGroup& g);
std::vector<PermGroup> lower_central_series(const PermGroup& g);

// Structural predicates.

bool is_transitive(const PermGroup& g);
bool is_2transitive(const PermGroup& g);
bool is_soluble(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);
bool is_abelian(const PermGroup& g);

}  // namespace locscale

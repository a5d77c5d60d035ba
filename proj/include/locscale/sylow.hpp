#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "locscale/perm_group.hpp"
#include "locscale/supernatural.hpp"

namespace locscale {

using PrimeSet = std::set<std::uint64_t>;

/// One Sylow subgroup per prime dividing |parent|, pairwise permutable.
struct SylowBasis {
  PermGroup parent;
  std::map<std::uint64_t, PermGroup> members;  // ascending primes
};

/**
 * A Sylow p-subgroup of G, grown one factor of p at a time: scan the elements
 * of G for some g outside P, of p-power order, normalising P, with g^p in P,
 * and replace P by <P, g>.
 *
 * Elements are scanned in canonical order when `seed` is 0, otherwise in an
 * order shuffled by `seed`. Needs the element list of G (BoundError above the
 * enumeration bound). Returns the trivial group when p does not divide |G|.
 */
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, std::uint64_t seed = 0);

/**
 * Sylow p-subgroup of Sym(k), built directly: {1..k} is cut into blocks of
 * sizes p^i following the base-p digits of k (largest blocks first), and each
 * block of size p^m carries the iterated wreath product of m copies of C_p.
 */
PermGroup sylow_of_symmetric(std::size_t k, std::uint64_t p);

/// The intersection of all conjugates of a Sylow p-subgroup.
PermGroup p_core(const PermGroup& g, std::uint64_t p);

/// Largest normal subgroup whose order has prime factors only in pi.
PermGroup pi_core(const PermGroup& g, const PrimeSet& pi);

/// Subgroup generated by the p-cores for p dividing |G|.
PermGroup fitting(const PermGroup& g);

bool is_p_normal(const PermGroup& g, std::uint64_t p);

bool is_p_group(const PermGroup& g, std::uint64_t p);

/// All distinct conjugates of H in G, in the order their conjugating
/// elements first appear in the (seeded) element scan.
std::vector<PermGroup> conjugates(const PermGroup& g, const PermGroup& h, std::uint64_t seed = 0);

/// |<A, B>| == |A||B| / |A n B|.
bool permutable(const PermGroup& a, const PermGroup& b);

/**
 * Backtracking search for a Sylow basis: primes ascending, each member chosen
 * among conjugates of sylow_subgroup(G, p, seed). Throws PreconditionError if
 * G is not soluble.
 */
SylowBasis sylow_basis(const PermGroup& g, std::uint64_t seed = 0);

/// Checks both basis invariants against the given parent.
bool is_sylow_basis(const SylowBasis& basis);

/// Intersection of the normalisers of the basis members.
PermGroup basis_normaliser(const PermGroup& g, const SylowBasis& basis);

/// Some g with g B1 g^-1 == B2 member-wise, found by brute force.
std::optional<Permutation> conjugating_element(const SylowBasis& b1, const SylowBasis& b2);

/**
 * Whether basis_normaliser(U, B) * K == U as sets. Throws PreconditionError
 * (distinct from a false verdict) unless K is normal in U, U is soluble and
 * U/K is nilpotent.
 */
bool verify_hall_covering(const PermGroup& u, const SylowBasis& basis, const PermGroup& k);

/// O_P(G): the subgroup generated by O_pi(G) for pi in P.
PermGroup core_of_prime_sets(const PermGroup& g, const std::vector<PrimeSet>& sets);

/**
 * Whether O_P(U) n V == O_P(V). Throws PreconditionError if V is not normal in
 * U or the prime sets are not pairwise disjoint.
 */
bool core_commensurability_check(const PermGroup& u, const PermGroup& v, const std::vector<PrimeSet>& sets);

/// |G : H| as a supernatural number. Throws PreconditionError unless H <= G.
Supernatural index(const PermGroup& g, const PermGroup& h);

/// All normal subgroups of G, by closing normal closures of single elements
/// under joins. Brute force; meant for small groups.
std::vector<PermGroup> normal_subgroups(const PermGroup& g);

}  // namespace locscale

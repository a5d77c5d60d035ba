#include "locscale/sylow.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_set>

#include "locscale/errors.hpp"

namespace locscale {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_pi_number(std::uint64_t n, const PrimeSet& pi) {
  for (auto [q, e] : factorise(n)) {
    if (!pi.contains(q)) return false;
  }
  return true;
}

std::vector<std::size_t> scan_order(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

PermGroup with_generator(const PermGroup& h, const Permutation& x) {
  auto gens = h.generators();
  gens.push_back(x);
  return PermGroup(h.degree(), std::move(gens));
}

void add_block_generators(std::vector<Permutation>& gens, std::size_t k, std::uint64_t p, unsigned m,
                          Point offset) {
  if (m == 0) return;
  std::uint64_t sub = 1;
  for (unsigned i = 1; i < m; ++i) sub *= p;
  add_block_generators(gens, k, p, m - 1, offset);
  std::vector<std::vector<Point>> cycles;
  for (std::uint64_t t = 0; t < sub; ++t) {
    std::vector<Point> cycle;
    for (std::uint64_t r = 0; r < p; ++r) cycle.push_back(static_cast<Point>(offset + t + r * sub));
    cycles.push_back(std::move(cycle));
  }
  gens.push_back(Permutation::from_cycles(k, cycles));
}

}  // namespace

bool is_p_group(const PermGroup& g, std::uint64_t p) {
  require_prime(p);
  return is_power_of(g.order(), p);
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, std::uint64_t seed) {
  require_prime(p);
  const std::uint64_t target = p_part(g.order(), p);
  PermGroup sylow = PermGroup::trivial(g.degree());
  if (target == 1) return sylow;
  g.require_enumerable("sylow_subgroup");
  const auto& elements = g.elements();
  const auto order = scan_order(elements.size(), seed);
  while (sylow.order() < target) {
    bool grown = false;
    for (std::size_t idx : order) {
      const Permutation& x = elements[idx];
      if (sylow.contains(x)) continue;
      if (!is_power_of(x.order(), p)) continue;
      if (!sylow.contains(x.pow(static_cast<std::int64_t>(p)))) continue;
      if (!normalises(x, sylow)) continue;
      sylow = with_generator(sylow, x);
      grown = true;
      break;
    }
    if (!grown) throw Error("sylow_subgroup: no element extends the current p-subgroup");
  }
  return sylow;
}

PermGroup sylow_of_symmetric(std::size_t k, std::uint64_t p) {
  require_prime(p);
  if (k == 0) throw PreconditionError("sylow_of_symmetric needs k >= 1");
  std::vector<unsigned> digits;  // base-p digits of k, least significant first
  for (std::size_t n = k; n > 0; n /= p) digits.push_back(static_cast<unsigned>(n % p));
  std::vector<Permutation> gens;
  Point offset = 1;
  for (std::size_t m = digits.size(); m-- > 0;) {
    std::uint64_t block = 1;
    for (std::size_t i = 0; i < m; ++i) block *= p;
    for (unsigned d = 0; d < digits[m]; ++d) {
      add_block_generators(gens, k, p, static_cast<unsigned>(m), offset);
      offset += static_cast<Point>(block);
    }
  }
  return PermGroup(k, std::move(gens));
}

PermGroup p_core(const PermGroup& g, std::uint64_t p) {
  g.require_enumerable("p_core");
  PermGroup core = sylow_subgroup(g, p);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& s : g.generators()) {
      PermGroup next = intersect(core, conjugate_subgroup(s, core));
      if (next.order() < core.order()) {
        core = std::move(next);
        changed = true;
      }
    }
  }
  return core;
}

PermGroup pi_core(const PermGroup& g, const PrimeSet& pi) {
  for (auto q : pi) require_prime(q);
  g.require_enumerable("pi_core");
  // g lies in O_pi(G) exactly when its normal closure is a pi-group.
  PermGroup core = PermGroup::trivial(g.degree());
  for (const auto& x : g.elements()) {
    if (core.contains(x) || !is_pi_number(x.order(), pi)) continue;
    const Permutation single[] = {x};
    PermGroup closure = normal_closure(g, single);
    if (!is_pi_number(closure.order(), pi)) continue;
    const PermGroup parts[] = {core, closure};
    core = generated(parts);
  }
  return core;
}

PermGroup fitting(const PermGroup& g) {
  std::vector<PermGroup> cores{PermGroup::trivial(g.degree())};
  for (auto [p, e] : factorise(g.order())) cores.push_back(p_core(g, p));
  return generated(cores);
}

bool is_p_normal(const PermGroup& g, std::uint64_t p) {
  return p_core(g, p).order() == p_part(g.order(), p);
}

std::vector<PermGroup> conjugates(const PermGroup& g, const PermGroup& h, std::uint64_t seed) {
  g.require_enumerable("conjugates");
  const auto& elements = g.elements();
  std::vector<PermGroup> out;
  for (std::size_t idx : scan_order(elements.size(), seed)) {
    PermGroup c = conjugate_subgroup(elements[idx], h);
    const bool known = std::any_of(out.begin(), out.end(), [&](const PermGroup& o) { return same_group(o, c); });
    if (!known) out.push_back(std::move(c));
  }
  return out;
}

bool permutable(const PermGroup& a, const PermGroup& b) {
  const PermGroup pair[] = {a, b};
  const std::uint64_t joined = generated(pair).order();
  return joined * intersect(a, b).order() == a.order() * b.order();
}

SylowBasis sylow_basis(const PermGroup& g, std::uint64_t seed) {
  if (!is_soluble(g)) throw PreconditionError("sylow_basis: group is not soluble");
  g.require_enumerable("sylow_basis");
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<PermGroup>> candidates;
  for (auto [p, e] : factorise(g.order())) {
    primes.push_back(p);
    candidates.push_back(conjugates(g, sylow_subgroup(g, p, seed), seed));
  }
  std::vector<const PermGroup*> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == primes.size()) return true;
    for (const auto& cand : candidates[i]) {
      const bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const PermGroup* c) { return permutable(*c, cand); });
      if (!ok) continue;
      chosen.push_back(&cand);
      if (search(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(0)) throw Error("sylow_basis: backtracking found no basis in a soluble group");
  SylowBasis basis{g, {}};
  for (std::size_t i = 0; i < primes.size(); ++i) basis.members.emplace(primes[i], *chosen[i]);
  return basis;
}

bool is_sylow_basis(const SylowBasis& basis) {
  const auto& g = basis.parent;
  const auto factors = factorise(g.order());
  if (basis.members.size() != factors.size()) return false;
  for (auto [p, e] : factors) {
    const auto it = basis.members.find(p);
    if (it == basis.members.end()) return false;
    if (!is_subgroup(it->second, g) || it->second.order() != p_part(g.order(), p)) return false;
  }
  for (auto a = basis.members.begin(); a != basis.members.end(); ++a) {
    for (auto b = std::next(a); b != basis.members.end(); ++b) {
      if (!permutable(a->second, b->second)) return false;
    }
  }
  return true;
}

PermGroup basis_normaliser(const PermGroup& g, const SylowBasis& basis) {
  g.require_enumerable("basis_normaliser");
  std::vector<Permutation> members;
  for (const auto& x : g.elements()) {
    const bool ok = std::all_of(basis.members.begin(), basis.members.end(),
                                [&](const auto& kv) { return normalises(x, kv.second); });
    if (ok) members.push_back(x);
  }
  return subgroup_from_elements(g.degree(), members);
}

std::optional<Permutation> conjugating_element(const SylowBasis& b1, const SylowBasis& b2) {
  if (b1.members.size() != b2.members.size()) return std::nullopt;
  for (const auto& x : b1.parent.elements()) {
    bool ok = true;
    for (const auto& [p, member] : b1.members) {
      const auto it = b2.members.find(p);
      if (it == b2.members.end() || !same_group(conjugate_subgroup(x, member), it->second)) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  return std::nullopt;
}

bool verify_hall_covering(const PermGroup& u, const SylowBasis& basis, const PermGroup& k) {
  if (!is_normal(k, u)) throw PreconditionError("verify_hall_covering: K is not normal in U");
  if (!is_soluble(u)) throw PreconditionError("verify_hall_covering: U is not soluble");
  if (!is_subgroup(lower_central_series(u).back(), k)) {
    throw PreconditionError("verify_hall_covering: U/K is not nilpotent");
  }
  if (!same_group(basis.parent, u) || !is_sylow_basis(basis)) {
    throw PreconditionError("verify_hall_covering: B is not a Sylow basis of U");
  }
  const PermGroup n = basis_normaliser(u, basis);
  std::unordered_set<Permutation> product;
  for (const auto& x : n.elements()) {
    for (const auto& y : k.elements()) product.insert(x * y);
  }
  return product.size() == u.order();
}

PermGroup core_of_prime_sets(const PermGroup& g, const std::vector<PrimeSet>& sets) {
  std::vector<PermGroup> cores{PermGroup::trivial(g.degree())};
  for (const auto& pi : sets) cores.push_back(pi_core(g, pi));
  return generated(cores);
}

bool core_commensurability_check(const PermGroup& u, const PermGroup& v, const std::vector<PrimeSet>& sets) {
  if (!is_normal(v, u)) throw PreconditionError("core_commensurability_check: V is not normal in U");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      for (auto q : sets[i]) {
        if (sets[j].contains(q)) throw PreconditionError("core_commensurability_check: prime sets overlap");
      }
    }
  }
  return same_group(intersect(core_of_prime_sets(u, sets), v), core_of_prime_sets(v, sets));
}

Supernatural index(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(h, g)) throw PreconditionError("index: H is not a subgroup of G");
  return Supernatural::from_natural(g.order() / h.order());
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
  g.require_enumerable("normal_subgroups");
  auto known = [](const std::vector<PermGroup>& list, const PermGroup& h) {
    return std::any_of(list.begin(), list.end(), [&](const PermGroup& o) { return same_group(o, h); });
  };
  std::vector<PermGroup> closures;
  for (const auto& x : g.elements()) {
    const Permutation single[] = {x};
    PermGroup c = normal_closure(g, single);
    if (!known(closures, c)) closures.push_back(std::move(c));
  }
  std::vector<PermGroup> all = closures;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : closures) {
      const PermGroup pair[] = {all[i], c};
      PermGroup j = generated(pair);
      if (!known(all, j)) all.push_back(std::move(j));
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  return all;
}

}  // namespace locscale

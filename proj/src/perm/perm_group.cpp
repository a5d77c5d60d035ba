#include "locscale/perm_group.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "locscale/errors.hpp"

namespace locscale {

struct PermGroup::Cache {
  std::once_flag chain_once;
  std::unique_ptr<StabChain> chain;
  std::once_flag elements_once;
  std::vector<Permutation> elements;
};

PermGroup::PermGroup() : cache_(std::make_shared<Cache>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw PreconditionError("generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                              ", expected " + std::to_string(degree_));
    }
  }
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(Permutation::from_cycles(degree, {{1, 2}}));
    std::vector<Point> cycle(degree);
    for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<Point>(i + 1);
    if (degree >= 3) gens.push_back(Permutation::from_cycles(degree, {cycle}));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::alternating(std::size_t degree) {
  // 3-cycles (1 2 i) generate Alt(k).
  std::vector<Permutation> gens;
  for (std::size_t i = 3; i <= degree; ++i) {
    gens.push_back(Permutation::from_cycles(degree, {{1, 2, static_cast<Point>(i)}}));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<Point> cycle(degree);
    for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<Point>(i + 1);
    gens.push_back(Permutation::from_cycles(degree, {cycle}));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::dihedral(std::size_t degree) {
  if (degree < 3) throw PreconditionError("dihedral group needs degree >= 3");
  std::vector<Point> rotation(degree);
  for (std::size_t i = 0; i < degree; ++i) rotation[i] = static_cast<Point>(i + 1);
  // Reflection i -> k+1-i.
  std::vector<std::vector<Point>> reflection;
  for (Point i = 1; i < degree + 1 - i; ++i) reflection.push_back({i, static_cast<Point>(degree + 1 - i)});
  return PermGroup(degree, {Permutation::from_cycles(degree, {rotation}), Permutation::from_cycles(degree, reflection)});
}

const StabChain& PermGroup::chain() const {
  std::call_once(cache_->chain_once, [this] {
    cache_->chain = std::make_unique<StabChain>(degree_, generators_);
  });
  return *cache_->chain;
}

void PermGroup::require_enumerable(const std::string& what, std::uint64_t bound) const {
  const std::uint64_t n = order();
  if (n > bound) throw BoundError(what, n, bound);
}

const std::vector<Permutation>& PermGroup::elements(std::uint64_t bound) const {
  require_enumerable("element enumeration", bound);
  std::call_once(cache_->elements_once, [this] {
    std::unordered_set<Permutation> seen;
    std::vector<Permutation> queue{Permutation(degree_)};
    seen.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& g : generators_) {
        Permutation next = g * queue[head];
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
    std::sort(queue.begin(), queue.end());
    cache_->elements = std::move(queue);
  });
  return cache_->elements;
}

std::string PermGroup::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ", ";
    os << generators_[i].to_string();
  }
  os << "> on " << degree_ << " points";
  return os.str();
}

namespace {

void check_point(const PermGroup& g, Point i) {
  if (i < 1 || i > g.degree()) {
    throw PreconditionError("point " + std::to_string(i) + " out of range for degree " +
                            std::to_string(g.degree()));
  }
}

std::size_t series_cap(std::size_t degree) {
  // k * log2(k!)
  double log2_factorial = 0;
  for (std::size_t i = 2; i <= degree; ++i) log2_factorial += std::log2(static_cast<double>(i));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(degree * log2_factorial)));
}

}  // namespace

std::vector<Point> orbit(const PermGroup& g, Point i) {
  check_point(g, i);
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{i};
  seen[i - 1] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : g.generators()) {
      const Point y = s(out[head]);
      if (!seen[y - 1]) {
        seen[y - 1] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Permutation> transporter(const PermGroup& g, Point a, Point b) {
  check_point(g, a);
  check_point(g, b);
  std::vector<std::optional<Permutation>> word(g.degree());
  word[a - 1] = Permutation(g.degree());
  std::vector<Point> queue{a};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Point x = queue[head];
    if (x == b) return word[x - 1];
    for (const auto& s : g.generators()) {
      const Point y = s(x);
      if (!word[y - 1]) {
        word[y - 1] = s * *word[x - 1];
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

PermGroup point_stabiliser(const PermGroup& g, Point i) {
  check_point(g, i);
  const Point prefix[] = {i};
  StabChain chain(g.degree(), g.generators(), prefix);
  if (chain.levels().size() < 2) return PermGroup::trivial(g.degree());
  return PermGroup(g.degree(), chain.levels()[1].generators);
}

std::size_t suborbit_size(const PermGroup& g, Point i, Point j) {
  check_point(g, j);
  return orbit(point_stabiliser(g, i), j).size();
}

std::vector<std::size_t> suborbit_table(const PermGroup& g) {
  const std::size_t k = g.degree();
  std::vector<std::size_t> table(k * k, 1);
  for (Point i = 1; i <= k; ++i) {
    const PermGroup stab = point_stabiliser(g, i);
    std::vector<bool> done(k, false);
    for (Point j = 1; j <= k; ++j) {
      if (done[j - 1]) continue;
      const auto orb = orbit(stab, j);
      for (Point x : orb) {
        done[x - 1] = true;
        table[(i - 1) * k + (x - 1)] = orb.size();
      }
    }
  }
  return table;
}

std::vector<Point> transporter_images(const PermGroup& g, Point a, Point b, Point c) {
  check_point(g, c);
  const auto t = transporter(g, a, b);
  if (!t) return {};
  std::vector<Point> out;
  for (Point x : orbit(point_stabiliser(g, a), c)) out.push_back((*t)(x));
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  StabChain chain(degree, gens);
  for (const auto& e : elements) {
    if (chain.contains(e)) continue;
    gens.push_back(e);
    chain = StabChain(degree, gens);
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup generated(std::span<const PermGroup> groups) {
  if (groups.empty()) return PermGroup();
  const std::size_t k = groups.front().degree();
  std::vector<Permutation> gens;
  for (const auto& h : groups) {
    if (h.degree() != k) throw PreconditionError("degree mismatch in generated()");
    gens.insert(gens.end(), h.generators().begin(), h.generators().end());
  }
  return subgroup_from_elements(k, gens);
}

PermGroup conjugate_subgroup(const Permutation& g, const PermGroup& h) {
  if (g.degree() != h.degree()) throw PreconditionError("degree mismatch in conjugate_subgroup()");
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const auto& x : h.generators()) gens.push_back(conjugate(g, x));
  return PermGroup(h.degree(), std::move(gens));
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& x) { return g.contains(x); });
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

bool normalises(const Permutation& g, const PermGroup& h) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& x) { return h.contains(conjugate(g, x)); });
}

bool is_normal(const PermGroup& n, const PermGroup& g) {
  if (!is_subgroup(n, g)) return false;
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](const Permutation& x) { return normalises(x, n); });
}

PermGroup normaliser(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(h, g)) throw PreconditionError("normaliser: H is not a subgroup of G");
  g.require_enumerable("normaliser");
  std::vector<Permutation> members;
  for (const auto& x : g.elements()) {
    if (normalises(x, h)) members.push_back(x);
  }
  return subgroup_from_elements(g.degree(), members);
}

PermGroup intersect(const PermGroup& h, const PermGroup& k) {
  if (h.degree() != k.degree()) throw PreconditionError("degree mismatch in intersect()");
  const bool h_smaller = h.order() <= k.order();
  const PermGroup& small = h_smaller ? h : k;
  const PermGroup& large = h_smaller ? k : h;
  small.require_enumerable("intersect");
  std::vector<Permutation> members;
  for (const auto& x : small.elements()) {
    if (large.contains(x)) members.push_back(x);
  }
  return subgroup_from_elements(h.degree(), members);
}

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  StabChain chain(g.degree(), gens);
  auto add = [&](const Permutation& x) {
    if (chain.contains(x)) return false;
    gens.push_back(x);
    chain = StabChain(g.degree(), gens);
    return true;
  };
  for (const auto& e : elements) add(e);
  // Close under conjugation by the generators of G.
  for (std::size_t head = 0; head < gens.size(); ++head) {
    for (const auto& s : g.generators()) add(conjugate(s, gens[head]));
  }
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& h) { return normal_closure(g, h.generators()); }

PermGroup commutator_subgroup(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  std::vector<Permutation> comms;
  for (const auto& x : h.generators()) {
    for (const auto& y : k.generators()) comms.push_back(commutator(x, y));
  }
  return normal_closure(g, comms);
}

PermGroup derived_subgroup(const PermGroup& g) { return commutator_subgroup(g, g, g); }

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  const std::size_t cap = series_cap(g.degree());
  for (std::size_t step = 0; step < cap; ++step) {
    const PermGroup& last = series.back();
    if (last.is_trivial()) break;
    PermGroup next = derived_subgroup(last);
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<PermGroup> lower_central_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  const std::size_t cap = series_cap(g.degree());
  for (std::size_t step = 0; step < cap; ++step) {
    const PermGroup& last = series.back();
    if (last.is_trivial()) break;
    PermGroup next = commutator_subgroup(g, last, g);
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_transitive(const PermGroup& g) {
  if (g.degree() == 0) return true;
  return orbit(g, 1).size() == g.degree();
}

bool is_2transitive(const PermGroup& g) {
  if (g.degree() < 2 || !is_transitive(g)) return false;
  const auto stab = point_stabiliser(g, 1);
  return orbit(stab, 2).size() == g.degree() - 1;
}

bool is_soluble(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

bool is_nilpotent(const PermGroup& g) { return lower_central_series(g).back().is_trivial(); }

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

}  // namespace locscale

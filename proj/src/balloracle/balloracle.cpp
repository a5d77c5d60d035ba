#include "locscale/balloracle.hpp"

#include <map>
#include <tuple>

#include "locscale/errors.hpp"

namespace locscale::oracle {

namespace {

// {f(c) : f in F, f(a) = b} by scanning the elements of F.
class TransporterTable {
 public:
  explicit TransporterTable(const PermGroup& f) : elements_(f.elements()) {}

  const std::vector<Point>& images(Point a, Point b, Point c) {
    const auto key = std::make_tuple(a, b, c);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::set<Point> out;
    for (const auto& f : elements_) {
      if (f(a) == b) out.insert(f(c));
    }
    return memo_.emplace(key, std::vector<Point>(out.begin(), out.end())).first->second;
  }

 private:
  const std::vector<Permutation>& elements_;
  std::map<std::tuple<Point, Point, Point>, std::vector<Point>> memo_;
};

void check_depth(const AxisData& a, std::size_t m, std::size_t depth_cap) {
  require_valid(a);
  if (m < 1) throw PreconditionError("orbit_count needs m >= 1");
  if (m * a.length() > depth_cap) {
    throw PreconditionError("orbit_count depth " + std::to_string(m * a.length()) + " exceeds cap " +
                            std::to_string(depth_cap));
  }
}

}  // namespace

std::vector<Point> extended_word(const AxisData& a, std::size_t m) {
  const Permutation untwist = a.twist.inverse();
  std::vector<Point> d(a.word);
  d.reserve(m * a.length());
  for (std::size_t i = a.length(); i < m * a.length(); ++i) d.push_back(untwist(d[i - a.length()]));
  return d;
}

std::uint64_t orbit_count(const AxisData& a, std::size_t m, std::size_t depth_cap) {
  check_depth(a, m, depth_cap);
  const auto d = extended_word(a, m);
  const Point root = a.seam_colour();
  TransporterTable transporters(a.group);
  // Number of distinct image prefixes b_1..b_i, keyed by b_i.
  std::map<Point, std::uint64_t> frontier;
  for (Point b : transporters.images(root, root, d[0])) frontier[b] += 1;
  for (std::size_t i = 1; i < d.size(); ++i) {
    std::map<Point, std::uint64_t> next;
    for (const auto& [b, count] : frontier) {
      for (Point nb : transporters.images(d[i - 1], b, d[i])) next[nb] += count;
    }
    frontier = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& [b, count] : frontier) total += count;
  return total;
}

std::set<std::vector<Point>> orbit_images(const AxisData& a, std::size_t m, std::size_t depth_cap) {
  check_depth(a, m, depth_cap);
  const auto d = extended_word(a, m);
  const Point root = a.seam_colour();
  TransporterTable transporters(a.group);
  std::vector<WalkState> frontier;
  for (Point b : transporters.images(root, root, d[0])) frontier.push_back(WalkState{1, {b}});
  for (std::size_t i = 1; i < d.size(); ++i) {
    std::vector<WalkState> next;
    for (const auto& state : frontier) {
      for (Point nb : transporters.images(d[i - 1], state.images.back(), d[i])) {
        WalkState grown = state;
        grown.depth += 1;
        grown.images.push_back(nb);
        next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  std::set<std::vector<Point>> out;
  for (auto& state : frontier) out.insert(std::move(state.images));
  return out;
}

bool exhaustive_applicable(const AxisData& a) {
  return a.group.order() <= kExhaustiveGroupCap && a.length() <= kExhaustiveLengthCap;
}

std::set<std::vector<Point>> exhaustive_images(const AxisData& a) {
  require_valid(a);
  if (!exhaustive_applicable(a)) {
    throw PreconditionError("exhaustive oracle needs |F| <= " + std::to_string(kExhaustiveGroupCap) + " and n <= " +
                            std::to_string(kExhaustiveLengthCap));
  }
  const auto& elements = a.group.elements();
  const std::size_t n = a.length();
  const Point root = a.seam_colour();
  std::set<std::vector<Point>> out;
  std::vector<std::size_t> pick(n, 0);  // odometer over F^n
  std::vector<Point> images(n);
  for (;;) {
    bool ok = elements[pick[0]](root) == root;
    for (std::size_t i = 0; ok && i < n; ++i) {
      const Permutation& f = elements[pick[i]];
      // f_i carries the edge back to the parent onto the image edge chosen one step earlier.
      if (i > 0 && f(a.word[i - 1]) != images[i - 1]) ok = false;
      images[i] = f(a.word[i]);
    }
    if (ok) out.insert(images);
    std::size_t pos = 0;
    while (pos < n && ++pick[pos] == elements.size()) pick[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

std::uint64_t exhaustive_orbit_count(const AxisData& a) { return exhaustive_images(a).size(); }

}  // namespace locscale::oracle

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "locscale/bmtree.hpp"

namespace locscale::oracle {

inline constexpr std::size_t kDepthCap = 12;
inline constexpr std::uint64_t kExhaustiveGroupCap = 100;
inline constexpr std::size_t kExhaustiveLengthCap = 3;

/// A partial image of the path [v, x^-m v] under the edge-path stabiliser U.
struct WalkState {
  std::size_t depth = 0;
  std::vector<Point> images;  // b_1..b_depth
};

/// d_1..d_{mn}: the colours of [v, x^-m v], with d_{i+n} = twist^-1(d_i).
std::vector<Point> extended_word(const AxisData& a, std::size_t m);

/**
 * Size of the orbit of x^-m v under U, the stabiliser of v and xv, counted
 * as the number of image colour sequences b_1..b_{mn} reachable step by step
 * through transporter sets:
 *
 *   b_1     in {f(d_1)     : f in F, f(c_0) = c_0}
 *   b_{i+1} in {f(d_{i+1}) : f in F, f(d_i) = b_i}
 *
 * Transporter sets come from scanning the elements of F; suborbit lengths
 * are never used. Throws PreconditionError when m * n exceeds `depth_cap`.
 */
std::uint64_t orbit_count(const AxisData& a, std::size_t m = 1, std::size_t depth_cap = kDepthCap);

/// The image sequences counted by orbit_count, listed explicitly.
std::set<std::vector<Point>> orbit_images(const AxisData& a, std::size_t m = 1, std::size_t depth_cap = kDepthCap);

/**
 * Enumerates every tuple (f_0, ..., f_{n-1}) in F^n of local actions along
 * the path, keeps those with f_0(c_0) = c_0 and f_i(c_i) = f_{i-1}(c_i), and
 * collects the distinct images (f_0(c_1), ..., f_{n-1}(c_n)).
 * Requires |F| <= 100 and n <= 3.
 */
std::set<std::vector<Point>> exhaustive_images(const AxisData& a);

std::uint64_t exhaustive_orbit_count(const AxisData& a);

/// Whether exhaustive_orbit_count is defined for this axis.
bool exhaustive_applicable(const AxisData& a);

}  // namespace locscale::oracle

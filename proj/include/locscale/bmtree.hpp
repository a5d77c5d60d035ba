#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locscale/perm_group.hpp"
#include "locscale/rational.hpp"

namespace locscale {

/**
 * A hyperbolic element x of the universal group U(F) on the k-regular tree,
 * described by its translation axis.
 *
 * `word` is the colour sequence c_1..c_n of the edges on [v, x^-1 v] for a
 * vertex v on the axis, and `twist` is the local action of x at every axis
 * vertex. The colour c_0 of the edge from v towards xv is derived as
 * twist(c_n). A valid axis has consecutive colours distinct, c_0 != c_1 and
 * twist in F.
 */
struct AxisData {
  PermGroup group;
  Permutation twist;
  std::vector<Point> word;

  /// c_0 = twist(c_n).
  Point seam_colour() const { return twist(word.back()); }
  std::size_t length() const noexcept { return word.size(); }

  /// Axis literal: "twist=(1 2 3); word=1,4,2" or "twist=id; word=1,2".
  static AxisData parse(std::string_view text, const PermGroup& group);
  std::string to_string() const;
};

/// Every violated invariant, one message each. Empty means valid.
std::vector<std::string> validate_axis(const AxisData& a);

/// Throws PreconditionError listing the violations of an invalid axis.
void require_valid(const AxisData& a);

/// Product over i of |F_{c_{i-1}} . c_i|.
std::uint64_t scale(const AxisData& a);

/// Same formula with a precomputed suborbit table of the group.
std::uint64_t scale(const AxisData& a, const std::vector<std::size_t>& suborbits);

/// Axis of x^-1: (twist^-1, (twist(c_n), ..., twist(c_1))).
AxisData inverse_axis(const AxisData& a);

/// scale(a) / scale(inverse_axis(a)).
Rational modular(const AxisData& a);

/**
 * The Sylow p-subgroup F(p) used for localisation: sylow_of_symmetric(k, p)
 * when F is the full symmetric group, sylow_subgroup(F, p) otherwise.
 */
PermGroup designated_sylow(const PermGroup& f, std::uint64_t p);

/// The same axis over F(p). Throws PreconditionError if the twist is not in F(p).
AxisData localize(const AxisData& a, std::uint64_t p);

/// scale(localize(a, p)).
std::uint64_t localized_scale(const AxisData& a, std::uint64_t p);

/// Modular function of the axis over F(p).
Rational localized_modular(const AxisData& a, std::uint64_t p);

/// Product of localized_scale over primes p <= k. Requires the identity twist.
std::uint64_t aggregate_scale(const AxisData& a);

/// Alternating axis (id, (j, i)); scale |F_i.j| |F_j.i|.
AxisData build_alternating(const PermGroup& f, Point i, Point j);
/// One-step axis (tau, (j)); scale |F_{tau(j)}.j|. Requires tau in F, tau(j) != j.
AxisData build_tau_cycle(const PermGroup& f, const Permutation& tau, Point j);

enum class SpectrumMode { values, exponents };

struct SpectrumOptions {
  SpectrumMode mode = SpectrumMode::values;
  std::uint64_t prime = 0;  // exponent mode only
  std::size_t max_len = 8;
  /// Largest value kept (values mode) or largest exponent kept (exponent mode).
  std::uint64_t cap = 0;    // 0 selects the mode's default
};

inline constexpr std::uint64_t kDefaultValueCap = 1'000'000;
inline constexpr std::uint64_t kDefaultExponentCap = 12;
inline constexpr std::size_t kDefaultMaxLen = 8;

/// Achieved scale values (or p-exponents of scale values) up to a word length bound.
struct ScaleSpectrum {
  SpectrumMode mode = SpectrumMode::values;
  std::optional<std::uint64_t> prime;
  std::size_t max_len = 0;
  std::uint64_t cap = 0;
  bool truncated = false;  // some value exceeded the cap and was dropped
  std::vector<std::uint64_t> entries;  // sorted, distinct

  bool contains(std::uint64_t v) const;
};

/**
 * Scales of every valid axis over F with word length <= max_len, plus the
 * elliptic value 1 (exponent 0).
 *
 * Dynamic programming over the digraph on colours with an edge a -> b for
 * a != b weighted |F_a . b|. States are (start colour c_1, current colour,
 * accumulated value); a word is closed by every seam colour c_0 in the
 * F-orbit of c_n with c_0 != c_1, contributing the factor |F_{c_0} . c_1|.
 */
ScaleSpectrum scale_spectrum(const PermGroup& f, SpectrumOptions options);

/// The part of the spectrum whose words start with `start_colour`.
ScaleSpectrum scale_spectrum_from(const PermGroup& f, SpectrumOptions options, Point start_colour);

/// Possible shapes of the exponent set realised by U(F(p)) for F = Sym(k).
enum class ExponentSet { zero_only, even_naturals, naturals_minus_one, all_naturals };

struct SymScalePrediction {
  std::size_t k = 0;
  std::uint64_t prime = 0;
  ExponentSet localized;  // exponents e with p^e a scale value over F(p)
  unsigned step = 0;      // p-exponents of scales over Sym(k) are the multiples of step

  bool localized_contains(std::uint64_t e) const;
  bool ambient_contains(std::uint64_t e) const;
  /// "T = N0 \ {1}; S = {0}" style rendering.
  std::string to_string() const;
};

/// Closed-form exponent sets for F = Sym(k). Requires k >= 3 and p prime.
SymScalePrediction symscale_case(std::size_t k, std::uint64_t p);

std::string to_string(ExponentSet s);
std::string to_string(SpectrumMode m);

}  // namespace locscale

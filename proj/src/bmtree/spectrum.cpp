#include <algorithm>
#include <set>

#include "locscale/bmtree.hpp"
#include "locscale/errors.hpp"
#include "locscale/supernatural.hpp"

namespace locscale {

namespace {

SpectrumOptions resolved(SpectrumOptions options) {
  if (options.max_len < 1) throw PreconditionError("spectrum needs max_len >= 1");
  if (options.mode == SpectrumMode::exponents && !is_prime(options.prime)) {
    throw PreconditionError("exponent spectrum needs a prime, got " + std::to_string(options.prime));
  }
  if (options.cap == 0) {
    options.cap = options.mode == SpectrumMode::values ? kDefaultValueCap : kDefaultExponentCap;
  }
  return options;
}

ScaleSpectrum empty_report(const SpectrumOptions& options) {
  ScaleSpectrum s;
  s.mode = options.mode;
  if (options.mode == SpectrumMode::exponents) s.prime = options.prime;
  s.max_len = options.max_len;
  s.cap = options.cap;
  return s;
}

// Values mode multiplies suborbit lengths; exponent mode adds their p-adic valuations.
struct Walker {
  std::size_t k;
  SpectrumOptions options;
  std::vector<std::uint64_t> weight;  // weight[(a-1)*k + (b-1)]
  std::vector<std::vector<Point>> orbits;  // orbits[c-1] = F-orbit of c

  Walker(const PermGroup& f, const SpectrumOptions& opts) : k(f.degree()), options(opts) {
    const auto table = suborbit_table(f);
    weight.resize(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      weight[i] = options.mode == SpectrumMode::values ? table[i] : valuation(table[i], options.prime);
    }
    orbits.resize(k);
    for (Point c = 1; c <= k; ++c) orbits[c - 1] = orbit(f, c);
  }

  std::uint64_t w(Point a, Point b) const { return weight[(a - 1) * k + (b - 1)]; }

  // Combined value, or nullopt past the cap.
  std::optional<std::uint64_t> combine(std::uint64_t acc, std::uint64_t factor) const {
    if (options.mode == SpectrumMode::values) {
      if (factor != 0 && acc > options.cap / factor) return std::nullopt;
      return acc * factor;
    }
    if (acc + factor > options.cap) return std::nullopt;
    return acc + factor;
  }

  std::uint64_t unit() const { return options.mode == SpectrumMode::values ? 1 : 0; }
};

void walk_from(const Walker& walker, Point start, std::set<std::uint64_t>& found, bool& truncated) {
  const std::size_t k = walker.k;
  // Accumulated values of c_1 -> ... -> c_len, indexed by the current colour c_len.
  std::vector<std::set<std::uint64_t>> current(k);
  current[start - 1].insert(walker.unit());
  for (std::size_t len = 1; len <= walker.options.max_len; ++len) {
    for (Point last = 1; last <= k; ++last) {
      for (std::uint64_t acc : current[last - 1]) {
        for (Point seam : walker.orbits[last - 1]) {
          if (seam == start) continue;
          if (auto v = walker.combine(acc, walker.w(seam, start))) {
            found.insert(*v);
          } else {
            truncated = true;
          }
        }
      }
    }
    if (len == walker.options.max_len) break;
    std::vector<std::set<std::uint64_t>> next(k);
    for (Point a = 1; a <= k; ++a) {
      for (std::uint64_t acc : current[a - 1]) {
        for (Point b = 1; b <= k; ++b) {
          if (b == a) continue;
          if (auto v = walker.combine(acc, walker.w(a, b))) {
            next[b - 1].insert(*v);
          } else {
            truncated = true;
          }
        }
      }
    }
    current = std::move(next);
  }
}

}  // namespace

bool ScaleSpectrum::contains(std::uint64_t v) const { return std::binary_search(entries.begin(), entries.end(), v); }

ScaleSpectrum scale_spectrum_from(const PermGroup& f, SpectrumOptions options, Point start_colour) {
  options = resolved(options);
  if (start_colour < 1 || start_colour > f.degree()) throw PreconditionError("start colour out of range");
  const Walker walker(f, options);
  std::set<std::uint64_t> found;
  ScaleSpectrum report = empty_report(options);
  walk_from(walker, start_colour, found, report.truncated);
  report.entries.assign(found.begin(), found.end());
  return report;
}

ScaleSpectrum scale_spectrum(const PermGroup& f, SpectrumOptions options) {
  options = resolved(options);
  const Walker walker(f, options);
  std::set<std::uint64_t> found{walker.unit()};  // elliptic elements
  ScaleSpectrum report = empty_report(options);
  for (Point start = 1; start <= f.degree(); ++start) walk_from(walker, start, found, report.truncated);
  report.entries.assign(found.begin(), found.end());
  return report;
}

std::string to_string(SpectrumMode m) { return m == SpectrumMode::values ? "values" : "exponents"; }

}  // namespace locscale

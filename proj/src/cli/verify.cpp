#include "locscale/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "locscale/balloracle.hpp"
#include "locscale/errors.hpp"
#include "locscale/supernatural.hpp"
#include "locscale/sylow.hpp"

namespace locscale::verify {

namespace {

constexpr std::uint64_t kSeed = 0x5ca1e5eedULL;

template <typename Range>
std::string set_text(const Range& values) {
  std::string out = "{";
  bool first = true;
  for (auto v : values) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::vector<std::uint64_t> values_spectrum(const PermGroup& f, std::size_t max_len) {
  SpectrumOptions o;
  o.mode = SpectrumMode::values;
  o.max_len = max_len;
  return scale_spectrum(f, o).entries;
}

std::vector<std::uint64_t> exponent_spectrum(const PermGroup& f, std::uint64_t p, std::size_t max_len) {
  SpectrumOptions o;
  o.mode = SpectrumMode::exponents;
  o.prime = p;
  o.max_len = max_len;
  return scale_spectrum(f, o).entries;
}

bool contains(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Tracks the first counterexample and a running count.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = describe();
  }
  bool passed() const { return failed == 0 && checked > 0; }
  std::string summary() const {
    std::string out = std::to_string(checked - failed) + "/" + std::to_string(checked) + " checks hold";
    if (failed) out += "; first failure: " + first;
    return out;
  }
};

std::vector<PermGroup> sweep_groups(std::size_t k) {
  std::vector<PermGroup> out{PermGroup::symmetric(k), PermGroup::alternating(k)};
  for (auto& c : cyclic_subgroups(k)) out.push_back(std::move(c));
  return out;
}

std::vector<PermGroup> random_pool(std::size_t k) {
  return {PermGroup::symmetric(k),     PermGroup::alternating(k), PermGroup::cyclic(k),
          PermGroup::dihedral(k),      sylow_of_symmetric(k, 2),  sylow_of_symmetric(k, 3),
          PermGroup::trivial(k)};
}

std::string axis_text(const AxisData& a) {
  return "F=<" + a.group.to_string() + "> " + a.to_string();
}

// Spectrum values for Sym(k), k = 3, 4, 5, are exactly the powers of k-1.
CriterionResult c01() {
  CriterionResult r;
  r.passed = true;
  for (std::size_t k = 3; k <= 5; ++k) {
    const auto got = values_spectrum(PermGroup::symmetric(k), 6);
    std::vector<std::uint64_t> expected;
    for (unsigned n = 0; n <= 6 && ipow(k - 1, n) <= kDefaultValueCap; ++n) expected.push_back(ipow(k - 1, n));
    const bool ok = got == expected;
    r.passed = r.passed && ok;
    r.detail += "k=" + std::to_string(k) + (ok ? " ok " : " got " + set_text(got) + " want ") + set_text(expected) + "; ";
  }
  return r;
}

CriterionResult c02() {
  CriterionResult r;
  r.passed = true;
  for (std::size_t k : {4, 5}) {
    const auto got = exponent_spectrum(sylow_of_symmetric(k, 5), 5, 8);
    const bool ok = got == std::vector<std::uint64_t>{0};
    r.passed = r.passed && ok;
    r.detail += "sylow:5:sym:" + std::to_string(k) + " -> " + set_text(got) + "; ";
  }
  return r;
}

CriterionResult c03() {
  CriterionResult r;
  const auto got = exponent_spectrum(sylow_of_symmetric(6, 3), 3, 8);
  r.passed = got == std::vector<std::uint64_t>{0, 2, 4, 6, 8};
  r.detail = "sylow:3:sym:6 L=8 -> " + set_text(got) + " (want {0, 2, 4, 6, 8})";
  return r;
}

CriterionResult c04() {
  CriterionResult r;
  const auto got = exponent_spectrum(sylow_of_symmetric(15, 5), 5, 6);
  r.passed = !contains(got, 1);
  for (std::uint64_t e : {0, 2, 3, 4, 5, 6}) r.passed = r.passed && contains(got, e);
  r.detail = "sylow:5:sym:15 L=6 -> " + set_text(got) + " (want {0, 2, 3, 4, 5, 6} without 1)";
  return r;
}

CriterionResult c05() {
  CriterionResult r;
  r.passed = true;
  for (std::size_t k : {4, 9}) {
    const auto got = exponent_spectrum(sylow_of_symmetric(k, 3), 3, 6);
    bool ok = true;
    for (std::uint64_t e : {0, 1, 2, 3}) ok = ok && contains(got, e);
    r.passed = r.passed && ok;
    r.detail += "sylow:3:sym:" + std::to_string(k) + " L=6 -> " + set_text(got) + "; ";
  }
  return r;
}

// p-parts of the Sym(k) spectrum are p^(step n) for every n whose value fits under the cap.
CriterionResult c06() {
  CriterionResult r;
  r.passed = true;
  for (std::size_t k : {7, 5}) {
    const std::uint64_t p = 3;
    const auto values = values_spectrum(PermGroup::symmetric(k), kDefaultMaxLen);
    std::set<std::uint64_t> got;
    for (auto v : values) got.insert(valuation(v, p));
    const unsigned step = symscale_case(k, p).step;
    std::set<std::uint64_t> expected;
    for (unsigned n = 0; n <= kDefaultMaxLen && ipow(k - 1, n) <= kDefaultValueCap; ++n) expected.insert(step * n);
    const bool ok = got == expected;
    r.passed = r.passed && ok;
    r.detail += "sym:" + std::to_string(k) + " 3-exponents " + set_text(got) + (ok ? "" : " want " + set_text(expected)) +
                " step " + std::to_string(step) + "; ";
  }
  return r;
}

CriterionResult c07() {
  CriterionResult r;
  const auto values = values_spectrum(PermGroup::symmetric(5), 6);
  bool powers_of_four = true;
  for (auto v : values) {
    std::uint64_t x = v;
    while (x % 4 == 0) x /= 4;
    powers_of_four = powers_of_four && x == 1 && v % 3 != 0;
  }
  const auto local = exponent_spectrum(sylow_of_symmetric(5, 3), 3, 6);
  r.passed = powers_of_four && contains(local, 1);
  r.detail = "sym:5 values " + set_text(values) + "; sylow:3:sym:5 exponents " + set_text(local);
  return r;
}

void oracle_checks(const AxisData& a, Tally& t, std::size_t max_m) {
  const std::uint64_t s = scale(a);
  const std::uint64_t oc = oracle::orbit_count(a);
  t.check(oc == s, [&] { return axis_text(a) + ": scale " + std::to_string(s) + " orbit " + std::to_string(oc); });
  if (oracle::exhaustive_applicable(a)) {
    const std::uint64_t ex = oracle::exhaustive_orbit_count(a);
    t.check(ex == s, [&] { return axis_text(a) + ": scale " + std::to_string(s) + " exhaustive " + std::to_string(ex); });
  }
  for (std::size_t m = 2; m <= max_m && m * a.length() <= oracle::kDepthCap; ++m) {
    const std::uint64_t om = oracle::orbit_count(a, m);
    t.check(om == ipow(s, static_cast<unsigned>(m)), [&] {
      return axis_text(a) + ": m=" + std::to_string(m) + " orbit " + std::to_string(om) + " vs scale^m";
    });
  }
}

CriterionResult c08() {
  Tally t;
  for (std::size_t k : {3, 4}) {
    for (const auto& f : sweep_groups(k)) {
      for (const auto& a : all_axes(f, 3)) oracle_checks(a, t, 3);
    }
  }
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = pick(rng, 3, 5);
    const auto pool = random_pool(k);
    const auto a = random_axis(pool[pick(rng, 0, pool.size() - 1)], 4, rng);
    oracle_checks(a, t, 3);
  }
  CriterionResult r;
  r.passed = t.passed();
  r.detail = t.summary();
  return r;
}

void sandwich_check(const AxisData& a, std::uint64_t p, Tally& t) {
  const std::uint64_t s = scale(a);
  const std::uint64_t sp = p_part(s, p);
  const std::uint64_t local = localized_scale(a, p);
  t.check(sp <= local && local <= s, [&] {
    return axis_text(a) + " p=" + std::to_string(p) + ": p-part " + std::to_string(sp) + ", localized " +
           std::to_string(local) + ", scale " + std::to_string(s);
  });
}

CriterionResult c09() {
  Tally t;
  for (std::size_t k : {3, 4}) {
    const auto sym = PermGroup::symmetric(k);
    for (auto p : primes_up_to(k)) {
      const auto fp = sylow_of_symmetric(k, p);
      for (const auto& local : all_axes(fp, 3)) {
        sandwich_check(AxisData{sym, local.twist, local.word}, p, t);
      }
    }
  }
  std::mt19937_64 rng(kSeed + 9);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = pick(rng, 3, 5);
    const auto primes = primes_up_to(k);
    const std::uint64_t p = primes[pick(rng, 0, primes.size() - 1)];
    const auto local = random_axis(sylow_of_symmetric(k, p), 4, rng);
    sandwich_check(AxisData{PermGroup::symmetric(k), local.twist, local.word}, p, t);
  }
  CriterionResult r;
  r.passed = t.passed();
  r.detail = t.summary();
  return r;
}

void modular_checks(const AxisData& a, Tally& t) {
  const Rational delta = modular(a);
  std::set<std::uint64_t> primes;
  for (auto [q, e] : factorise(delta.numerator())) primes.insert(q);
  for (auto [q, e] : factorise(delta.denominator())) primes.insert(q);
  for (auto q : primes_up_to(a.group.degree())) primes.insert(q);
  Rational product;
  for (auto q : primes) product = product * p_part(delta, q);
  t.check(product == delta, [&] { return axis_text(a) + ": product of p-parts " + product.to_string(); });
  for (auto q : primes_up_to(a.group.degree())) {
    Rational local;
    try {
      local = localized_modular(a, q);
    } catch (const PreconditionError&) {
      continue;  // twist outside F(q)
    }
    const Rational part = p_part(delta, q);
    t.check(part == local, [&] {
      return axis_text(a) + " p=" + std::to_string(q) + ": p-part " + part.to_string() + ", localized " +
             local.to_string();
    });
  }
}

CriterionResult c10() {
  Tally t;
  for (std::size_t k : {3, 4}) {
    for (const auto& f : sweep_groups(k)) {
      for (const auto& a : all_axes(f, 3)) modular_checks(a, t);
    }
  }
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = pick(rng, 3, 5);
    const auto pool = random_pool(k);
    modular_checks(random_axis(pool[pick(rng, 0, pool.size() - 1)], 4, rng), t);
  }
  CriterionResult r;
  r.passed = t.passed();
  r.detail = t.summary();
  return r;
}

CriterionResult c11() {
  Tally t;
  std::mt19937_64 rng(kSeed + 11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = pick(rng, 4, 6);
    const auto sym = PermGroup::symmetric(k);
    AxisData a{sym, Permutation(k), {}};
    do {
      const std::size_t n = pick(rng, 2, 5);
      a.word.clear();
      while (a.word.size() < n) {
        const Point c = static_cast<Point>(pick(rng, 1, k));
        if (a.word.empty() || a.word.back() != c) a.word.push_back(c);
      }
    } while (!validate_axis(a).empty());
    const std::uint64_t s = scale(a);
    const std::uint64_t agg = aggregate_scale(a);
    t.check(agg % s == 0, [&] {
      return axis_text(a) + ": scale " + std::to_string(s) + " aggregate " + std::to_string(agg);
    });
  }
  CriterionResult r;
  r.passed = t.passed();
  r.detail = t.summary();
  return r;
}

bool conjugate_in(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  for (const auto& x : g.elements()) {
    if (same_group(conjugate_subgroup(x, a), b)) return true;
  }
  return false;
}

bool is_pi_group(const PermGroup& h, const PrimeSet& pi) {
  for (auto [q, e] : factorise(h.order())) {
    if (!pi.count(q)) return false;
  }
  return true;
}

CriterionResult c12() {
  Tally t;
  const std::vector<std::vector<PrimeSet>> families{{{2}}, {{3}}, {{2}, {3}}, {{2, 3}}};
  for (const auto& [name, g] : sylow_corpus()) {
    const auto primes = factorise(g.order());
    const auto normals = normal_subgroups(g);

    for (auto [p, e] : primes) {
      std::vector<PermGroup> sylows;
      for (std::uint64_t seed = 0; seed < 4; ++seed) sylows.push_back(sylow_subgroup(g, p, seed));
      for (std::size_t i = 0; i < sylows.size(); ++i) {
        t.check(sylows[i].order() == ipow(p, e) && is_subgroup(sylows[i], g),
                [&] { return name + ": Sylow " + std::to_string(p) + "-subgroup has order " + std::to_string(sylows[i].order()); });
        t.check(conjugate_in(g, sylows[0], sylows[i]),
                [&] { return name + ": two Sylow " + std::to_string(p) + "-subgroups not conjugate"; });
      }
      const auto core = p_core(g, p);
      t.check(same_group(core, pi_core(g, {p})), [&] { return name + ": p_core and pi_core({p}) differ"; });
    }

    // O_pi(G) against the largest normal pi-subgroup in the list of normal subgroups.
    std::vector<PrimeSet> prime_sets;
    for (auto [p, e] : primes) prime_sets.push_back({p});
    if (primes.size() > 1) {
      PrimeSet all;
      for (auto [p, e] : primes) all.insert(p);
      prime_sets.push_back(all);
    }
    for (const auto& pi : prime_sets) {
      const auto core = pi_core(g, pi);
      PermGroup largest = PermGroup::trivial(g.degree());
      for (const auto& n : normals) {
        if (is_pi_group(n, pi) && n.order() > largest.order()) largest = n;
      }
      t.check(is_normal(core, g) && is_pi_group(core, pi) && same_group(core, largest),
              [&] { return name + ": pi_core " + set_text(pi) + " has order " + std::to_string(core.order()); });
    }

    std::vector<SylowBasis> bases;
    for (std::uint64_t seed = 0; seed < 4; ++seed) bases.push_back(sylow_basis(g, seed));
    for (const auto& b : bases) {
      t.check(is_sylow_basis(b), [&] { return name + ": invalid Sylow basis"; });
      t.check(conjugating_element(bases[0], b).has_value(), [&] { return name + ": Sylow bases not conjugate"; });
    }

    std::size_t covered = 0;
    for (const auto& k : normals) {
      bool verdict = false;
      try {
        verdict = verify_hall_covering(g, bases[0], k);
      } catch (const PreconditionError&) {
        continue;  // U/K not nilpotent
      }
      ++covered;
      t.check(verdict, [&] { return name + ": N(B)K != U for K of order " + std::to_string(k.order()); });
    }
    t.check(covered > 0, [&] { return name + ": no normal subgroup with nilpotent quotient"; });

    for (const auto& v : normals) {
      for (const auto& family : families) {
        t.check(core_commensurability_check(g, v, family),
                [&] { return name + ": core commensurability fails for V of order " + std::to_string(v.order()); });
      }
    }
  }

  // The named instance: Sym(4) with K = Alt(4).
  const auto s4 = PermGroup::symmetric(4);
  t.check(verify_hall_covering(s4, sylow_basis(s4), PermGroup::alternating(4)),
          [] { return std::string("Sym(4), K = Alt(4): N(B)K != U"); });

  CriterionResult r;
  r.passed = t.passed();
  r.detail = t.summary();
  return r;
}

// Every p-exponent of a Sym(k) scale is realised over F(p) at a longer word length.
CriterionResult c13() {
  Tally t;
  constexpr std::size_t kLength = 5;
  constexpr std::uint64_t kTwistOrderCap = 8;
  std::string lengths;
  for (std::size_t k = 4; k <= 6; ++k) {
    const auto values = values_spectrum(PermGroup::symmetric(k), kLength);
    for (std::uint64_t p : {2, 3, 5}) {
      const auto fp = sylow_of_symmetric(k, p);
      std::uint64_t twist_order = 1;
      for (const auto& x : fp.elements()) twist_order = std::max(twist_order, x.order());
      const std::size_t longer = kLength * std::min(twist_order, kTwistOrderCap);
      const auto local = exponent_spectrum(fp, p, longer);
      lengths += "(" + std::to_string(k) + "," + std::to_string(p) + ")L'=" + std::to_string(longer) + " ";
      for (auto v : values) {
        const std::uint64_t e = valuation(v, p);
        t.check(contains(local, e), [&] {
          return "k=" + std::to_string(k) + " p=" + std::to_string(p) + ": exponent " + std::to_string(e) +
                 " missing from " + set_text(local);
        });
      }
    }
  }
  CriterionResult r;
  r.passed = t.passed();
  r.detail = t.summary() + "; " + lengths;
  return r;
}

struct Entry {
  const char* id;
  const char* title;
  const char* suite;
  CriterionResult (*run)();
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"c01", "Sym(k) spectra are the powers of k-1", "spectrum", c01},
      {"c02", "F(5) of Sym(4), Sym(5) has exponent spectrum {0}", "spectrum", c02},
      {"c03", "F(3) of Sym(6) has only even exponents", "spectrum", c03},
      {"c04", "F(5) of Sym(15) realises every exponent but 1", "spectrum", c04},
      {"c05", "F(3) of Sym(4), Sym(9) realises 0..3", "spectrum", c05},
      {"c06", "Sym(k) p-exponents are multiples of v_p(k-1)", "spectrum", c06},
      {"c07", "Sym(5) scales are prime to 3, F(3) still sees 3", "spectrum", c07},
      {"c08", "scale formula matches both orbit oracles", "oracle", c08},
      {"c09", "p-part of scale <= localized scale <= scale", "localisation", c09},
      {"c10", "modular function splits into local factors", "localisation", c10},
      {"c11", "scale divides aggregate scale", "localisation", c11},
      {"c12", "Sylow, core, basis and covering battery", "sylow", c12},
      {"c13", "ambient p-exponents appear locally at longer length", "localisation", c13},
  };
  return entries;
}

const Entry& lookup(std::string_view id) {
  for (const auto& e : registry()) {
    if (id == e.id) return e;
  }
  throw ParseError("unknown criterion \"" + std::string(id) + "\"");
}

}  // namespace

std::vector<std::string> criterion_ids() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.emplace_back(e.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::string criterion_title(std::string_view id) { return lookup(id).title; }

std::vector<std::string> suite_members(std::string_view suite) {
  std::vector<std::string> out;
  for (const auto& e : registry()) {
    if (suite == "all" || suite == e.suite || suite == e.id) out.emplace_back(e.id);
  }
  if (out.empty()) throw ParseError("unknown suite \"" + std::string(suite) + "\"");
  std::sort(out.begin(), out.end());
  return out;
}

CriterionResult run_criterion(std::string_view id) {
  const auto& e = lookup(id);
  CriterionResult r;
  try {
    r = e.run();
  } catch (const Error& err) {
    r.passed = false;
    r.detail = std::string("error: ") + err.what();
  }
  r.id = e.id;
  r.title = e.title;
  return r;
}

std::vector<CriterionResult> run_suite(std::string_view suite) {
  std::vector<CriterionResult> out;
  for (const auto& id : suite_members(suite)) out.push_back(run_criterion(id));
  return out;
}

std::vector<NamedGroup> sylow_corpus() {
  auto gens = [](std::size_t k, std::initializer_list<const char*> cycles) {
    std::vector<Permutation> out;
    for (const char* c : cycles) out.push_back(Permutation::parse(c, k));
    return PermGroup(k, std::move(out));
  };
  return {
      {"Sym(3)", PermGroup::symmetric(3)},
      {"Sym(4)", PermGroup::symmetric(4)},
      {"Alt(4)", PermGroup::alternating(4)},
      {"C6", PermGroup::cyclic(6)},
      {"D8", PermGroup::dihedral(4)},
      {"D12", PermGroup::dihedral(6)},
      {"Sym(3)xC3", gens(6, {"(1 2 3)", "(1 2)", "(4 5 6)"})},
      {"Q8", gens(8, {"(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"})},
      {"V4", gens(4, {"(1 2)(3 4)", "(1 3)(2 4)"})},
  };
}

std::vector<PermGroup> cyclic_subgroups(std::size_t k) {
  std::vector<PermGroup> out;
  // Partitions of k into parts, largest first.
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> walk =
      [&](std::size_t left, std::size_t max_part, std::vector<std::size_t>& parts) {
        if (left == 0) {
          std::vector<std::vector<Point>> cycles;
          Point next = 1;
          for (auto len : parts) {
            std::vector<Point> cycle;
            for (std::size_t i = 0; i < len; ++i) cycle.push_back(next++);
            if (len > 1) cycles.push_back(std::move(cycle));
          }
          out.emplace_back(k, std::vector<Permutation>{Permutation::from_cycles(k, cycles)});
          return;
        }
        for (std::size_t part = std::min(left, max_part); part >= 1; --part) {
          parts.push_back(part);
          walk(left - part, part, parts);
          parts.pop_back();
        }
      };
  std::vector<std::size_t> parts;
  walk(k, k, parts);
  return out;
}

std::vector<AxisData> all_axes(const PermGroup& f, std::size_t max_len) {
  const std::size_t k = f.degree();
  std::vector<AxisData> out;
  std::vector<std::vector<Point>> words;
  std::vector<std::vector<Point>> layer{{}};
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<std::vector<Point>> next;
    for (const auto& w : layer) {
      for (Point c = 1; c <= k; ++c) {
        if (!w.empty() && w.back() == c) continue;
        auto grown = w;
        grown.push_back(c);
        next.push_back(std::move(grown));
      }
    }
    layer = std::move(next);
    words.insert(words.end(), layer.begin(), layer.end());
  }
  for (const auto& twist : f.elements()) {
    for (const auto& w : words) {
      AxisData a{f, twist, w};
      if (validate_axis(a).empty()) out.push_back(std::move(a));
    }
  }
  return out;
}

AxisData random_axis(const PermGroup& f, std::size_t max_len, std::mt19937_64& rng) {
  const auto& elements = f.elements();
  const std::size_t k = f.degree();
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    AxisData a{f, elements[pick(rng, 0, elements.size() - 1)], {}};
    const std::size_t n = pick(rng, 1, max_len);
    while (a.word.size() < n) {
      const Point c = static_cast<Point>(pick(rng, 1, k));
      if (a.word.empty() || a.word.back() != c) a.word.push_back(c);
    }
    if (validate_axis(a).empty()) return a;
  }
  throw PreconditionError("no valid axis found over <" + f.to_string() + ">");
}

}  // namespace locscale::verify

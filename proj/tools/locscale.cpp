// Command-line front end: scales, spectra, localisation and the verification battery.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "locscale/balloracle.hpp"
#include "locscale/errors.hpp"
#include "locscale/group_spec.hpp"
#include "locscale/report.hpp"
#include "locscale/sylow.hpp"
#include "locscale/verify.hpp"

using namespace locscale;

namespace {

constexpr int kExitPrecondition = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerification = 3;

struct Options {
  bool json = false;
  std::string group;
  std::string axis;
  std::uint64_t prime = 0;
  std::size_t max_len = kDefaultMaxLen;
  std::uint64_t cap = 0;
  std::size_t k = 0;
  std::size_t m = 1;
  std::uint64_t seed = 0;
  std::string suite = "all";
};

void emit(const Options& o, const report::Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

std::string braces(const std::vector<std::uint64_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "}";
}

std::string generator_list(const PermGroup& g) {
  std::string out = "<";
  const auto gens = report::generator_strings(g);
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i];
  return out + ">";
}

struct Resolved {
  std::string name;
  PermGroup group;
};

Resolved resolve_group(const Options& o) {
  const auto spec = GroupSpec::parse(o.group);
  return {spec.to_string(), spec.resolve()};
}

AxisData resolve_axis(const Options& o, const PermGroup& g) {
  auto a = AxisData::parse(o.axis, g);
  require_valid(a);
  return a;
}

int run_axis_command(const std::string& name, const Options& o) {
  const auto [group_name, g] = resolve_group(o);
  const auto a = resolve_axis(o, g);
  if (name == "scale") {
    const auto s = scale(a);
    emit(o, report::axis_quantity(group_name, a, "scale", s, "product of suborbit lengths |F_{c_{i-1}} . c_i|"),
         std::to_string(s));
  } else if (name == "inverse") {
    const auto inv = inverse_axis(a);
    emit(o, report::axis_quantity(group_name, a, "inverse", inv.to_string(), "axis of x^-1"), inv.to_string());
  } else if (name == "modular") {
    const auto d = modular(a);
    emit(o, report::axis_quantity(group_name, a, "modular", d.to_string(), "scale(x) / scale(x^-1)"), d.to_string());
  } else if (name == "localscale") {
    const auto s = localized_scale(a, o.prime);
    auto j = report::axis_quantity(group_name, a, "localized_scale", s, "scale of the same axis over F(p)");
    j["prime"] = o.prime;
    emit(o, j, std::to_string(s));
  } else if (name == "aggregate") {
    const auto s = aggregate_scale(a);
    emit(o, report::axis_quantity(group_name, a, "aggregate_scale", s, "product over p <= k of localized scales"),
         std::to_string(s));
  } else if (name == "oracle") {
    const auto formula = scale(a);
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < o.m; ++i) power *= formula;
    const auto orbit = oracle::orbit_count(a, o.m);
    std::optional<std::uint64_t> exhaustive;
    if (o.m == 1 && oracle::exhaustive_applicable(a)) exhaustive = oracle::exhaustive_orbit_count(a);
    std::string text = "formula=" + std::to_string(power) + " orbit_count=" + std::to_string(orbit) +
                       " exhaustive=" + (exhaustive ? std::to_string(*exhaustive) : std::string("n/a"));
    emit(o, report::oracle(group_name, a, o.m, power, orbit, exhaustive), text);
  }
  return 0;
}

int run_spectrum(const Options& o) {
  const auto [group_name, g] = resolve_group(o);
  SpectrumOptions so;
  so.max_len = o.max_len;
  so.cap = o.cap;
  if (o.prime) {
    so.mode = SpectrumMode::exponents;
    so.prime = o.prime;
  }
  const auto s = scale_spectrum(g, so);
  std::string text = braces(s.entries);
  if (s.truncated) text += " (truncated at cap " + std::to_string(s.cap) + ")";
  emit(o, report::spectrum(group_name, s), text);
  return 0;
}

int run_sylow(const Options& o) {
  const auto [group_name, g] = resolve_group(o);
  const auto p = sylow_subgroup(g, o.prime, o.seed);
  emit(o, report::subgroup(group_name, o.prime, p), "order " + std::to_string(p.order()) + ": " + generator_list(p));
  return 0;
}

int run_basis(const Options& o) {
  const auto [group_name, g] = resolve_group(o);
  const auto b = sylow_basis(g, o.seed);
  std::string text;
  for (const auto& [p, h] : b.members) {
    if (!text.empty()) text += "\n";
    text += "p=" + std::to_string(p) + " order " + std::to_string(h.order()) + ": " + generator_list(h);
  }
  emit(o, report::basis(group_name, b), text);
  return 0;
}

int run_verify(const Options& o) {
  const auto results = verify::run_suite(o.suite);
  bool all = true;
  std::string text;
  for (const auto& r : results) {
    all = all && r.passed;
    if (!text.empty()) text += "\n";
    text += (r.passed ? "PASS " : "FAIL ") + r.id + "  " + r.title + "  [" + r.detail + "]";
  }
  emit(o, report::verification(results), text);
  return all ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scales of hyperbolic elements in universal groups of regular trees"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print a JSON report instead of text");

  auto group_opt = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "Group spec: sym:k, alt:k, cyclic:k, dihedral:k, trivial:k, sylow:p:<spec>, "
                                        "file:<path>, gens:k:<perm>;...")
        ->required();
  };
  auto axis_opt = [&](CLI::App* sub) {
    group_opt(sub);
    sub->add_option("--axis", o.axis, "Axis literal, e.g. \"twist=(1 2); word=1,3\"")->required();
  };

  std::vector<std::pair<std::string, CLI::App*>> axis_commands;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"scale", "Scale of the element with the given axis"},
           {"inverse", "Axis of the inverse element"},
           {"modular", "Modular function value"},
           {"localscale", "Scale over the Sylow subgroup F(p)"},
           {"aggregate", "Product of localized scales over p <= k"},
           {"oracle", "Scale formula next to the orbit-count oracles"}}) {
    auto* sub = app.add_subcommand(name, help);
    axis_opt(sub);
    if (name == "localscale") sub->add_option("--prime", o.prime, "Prime p")->required();
    if (name == "oracle") sub->add_option("--m", o.m, "Power of the element")->check(CLI::PositiveNumber);
    axis_commands.emplace_back(name, sub);
  }

  auto* spectrum = app.add_subcommand("spectrum", "Scale values (or p-exponents with --prime) up to a word length");
  group_opt(spectrum);
  spectrum->add_option("--max-len", o.max_len, "Largest axis word length")->check(CLI::PositiveNumber);
  spectrum->add_option("--cap", o.cap, "Largest value (or exponent) kept; 0 selects the default");
  spectrum->add_option("--prime", o.prime, "Report p-exponents instead of values");

  auto* predict = app.add_subcommand("predict", "Closed-form exponent sets for Sym(k)");
  predict->add_option("--k", o.k, "Degree k >= 3")->required();
  predict->add_option("--prime", o.prime, "Prime p")->required();

  auto* sylow = app.add_subcommand("sylow", "A Sylow p-subgroup");
  group_opt(sylow);
  sylow->add_option("--prime", o.prime, "Prime p")->required();
  sylow->add_option("--seed", o.seed, "Element scan seed (0 = canonical order)");

  auto* basis = app.add_subcommand("basis", "A Sylow basis of a soluble group");
  group_opt(basis);
  basis->add_option("--seed", o.seed, "Element scan seed (0 = canonical order)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification battery");
  verify_cmd->add_option("--suite", o.suite, "all, spectrum, oracle, localisation, sylow, or a criterion id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    for (const auto& [name, sub] : axis_commands) {
      if (sub->parsed()) return run_axis_command(name, o);
    }
    if (spectrum->parsed()) return run_spectrum(o);
    if (predict->parsed()) {
      const auto p = symscale_case(o.k, o.prime);
      emit(o, report::prediction(p), p.to_string());
      return 0;
    }
    if (sylow->parsed()) return run_sylow(o);
    if (basis->parsed()) return run_basis(o);
    if (verify_cmd->parsed()) return run_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}

#include <algorithm>
#include <cctype>
#include <sstream>

#include "locscale/bmtree.hpp"
#include "locscale/errors.hpp"
#include "locscale/supernatural.hpp"
#include "locscale/sylow.hpp"

namespace locscale {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Point> parse_word(std::string_view text) {
  std::vector<Point> word;
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (item.empty() || item.size() > 6 ||
        !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("bad colour \"" + std::string(item) + "\" in axis word");
    }
    word.push_back(static_cast<Point>(std::stoul(std::string(item))));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return word;
}

std::uint64_t checked_product(std::uint64_t acc, std::uint64_t factor) {
  if (factor != 0 && acc > UINT64_MAX / factor) throw Error("scale overflows 64 bits");
  return acc * factor;
}

bool is_full_symmetric(const PermGroup& f) {
  std::uint64_t factorial = 1;
  for (std::uint64_t i = 2; i <= f.degree(); ++i) {
    if (factorial > UINT64_MAX / i) return false;
    factorial *= i;
  }
  return f.order() == factorial;
}

}  // namespace

AxisData AxisData::parse(std::string_view text, const PermGroup& group) {
  std::optional<Permutation> twist;
  std::optional<std::vector<Point>> word;
  while (!trim(text).empty()) {
    const auto semi = text.find(';');
    const auto part = trim(text.substr(0, semi));
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) throw ParseError("axis field without '=': \"" + std::string(part) + "\"");
    const auto key = trim(part.substr(0, eq));
    const auto value = trim(part.substr(eq + 1));
    if (key == "twist") {
      if (twist) throw ParseError("twist given twice");
      twist = value == "id" ? Permutation(group.degree()) : Permutation::parse(value, group.degree());
    } else if (key == "word") {
      if (word) throw ParseError("word given twice");
      word = parse_word(value);
    } else {
      throw ParseError("unknown axis field \"" + std::string(key) + "\"");
    }
    if (semi == std::string_view::npos) break;
    text = text.substr(semi + 1);
  }
  if (!word) throw ParseError("axis literal has no word");
  return AxisData{group, twist.value_or(Permutation(group.degree())), std::move(*word)};
}

std::string AxisData::to_string() const {
  std::ostringstream os;
  os << "twist=" << (twist.is_identity() ? std::string("id") : twist.to_string()) << "; word=";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ',';
    os << word[i];
  }
  return os.str();
}

std::vector<std::string> validate_axis(const AxisData& a) {
  std::vector<std::string> problems;
  const std::size_t k = a.group.degree();
  if (a.word.empty()) {
    problems.emplace_back("word is empty");
    return problems;
  }
  bool colours_ok = true;
  for (std::size_t i = 0; i < a.word.size(); ++i) {
    if (a.word[i] < 1 || a.word[i] > k) {
      problems.push_back("colour " + std::to_string(a.word[i]) + " at position " + std::to_string(i + 1) +
                         " is outside {1.." + std::to_string(k) + "}");
      colours_ok = false;
    }
  }
  for (std::size_t i = 0; i + 1 < a.word.size(); ++i) {
    if (a.word[i] == a.word[i + 1]) {
      problems.push_back("consecutive equal colours at positions " + std::to_string(i + 1) + " and " +
                         std::to_string(i + 2));
    }
  }
  if (a.twist.degree() != k) {
    problems.push_back("twist has degree " + std::to_string(a.twist.degree()) + ", expected " + std::to_string(k));
    return problems;
  }
  if (colours_ok && a.seam_colour() == a.word.front()) {
    problems.push_back("seam colour twist(c_n) = " + std::to_string(a.seam_colour()) + " equals c_1");
  }
  if (!a.group.contains(a.twist)) problems.push_back("twist " + a.twist.to_string() + " is not in the group");
  return problems;
}

void require_valid(const AxisData& a) {
  const auto problems = validate_axis(a);
  if (problems.empty()) return;
  std::string msg = "invalid axis:";
  for (const auto& p : problems) msg += " " + p + ";";
  msg.pop_back();
  throw PreconditionError(msg);
}

std::uint64_t scale(const AxisData& a, const std::vector<std::size_t>& suborbits) {
  require_valid(a);
  const std::size_t k = a.group.degree();
  std::uint64_t s = 1;
  Point prev = a.seam_colour();
  for (Point c : a.word) {
    s = checked_product(s, suborbits[(prev - 1) * k + (c - 1)]);
    prev = c;
  }
  return s;
}

std::uint64_t scale(const AxisData& a) {
  require_valid(a);
  std::uint64_t s = 1;
  Point prev = a.seam_colour();
  for (Point c : a.word) {
    s = checked_product(s, suborbit_size(a.group, prev, c));
    prev = c;
  }
  return s;
}

AxisData inverse_axis(const AxisData& a) {
  require_valid(a);
  std::vector<Point> word;
  word.reserve(a.word.size());
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) word.push_back(a.twist(*it));
  return AxisData{a.group, a.twist.inverse(), std::move(word)};
}

Rational modular(const AxisData& a) { return Rational(scale(a), scale(inverse_axis(a))); }

PermGroup designated_sylow(const PermGroup& f, std::uint64_t p) {
  if (is_full_symmetric(f)) return sylow_of_symmetric(f.degree(), p);
  return sylow_subgroup(f, p);
}

AxisData localize(const AxisData& a, std::uint64_t p) {
  require_valid(a);
  AxisData local{designated_sylow(a.group, p), a.twist, a.word};
  if (!local.group.contains(a.twist)) {
    throw PreconditionError("twist " + a.twist.to_string() + " is not in the Sylow " + std::to_string(p) +
                            "-subgroup " + local.group.to_string());
  }
  require_valid(local);
  return local;
}

std::uint64_t localized_scale(const AxisData& a, std::uint64_t p) { return scale(localize(a, p)); }

Rational localized_modular(const AxisData& a, std::uint64_t p) { return modular(localize(a, p)); }

std::uint64_t aggregate_scale(const AxisData& a) {
  require_valid(a);
  if (!a.twist.is_identity()) {
    throw PreconditionError("aggregate_scale needs a colour-preserving axis (identity twist), got twist " +
                            a.twist.to_string());
  }
  std::uint64_t total = 1;
  for (std::uint64_t p : primes_up_to(a.group.degree())) total = checked_product(total, localized_scale(a, p));
  return total;
}

AxisData build_alternating(const PermGroup& f, Point i, Point j) {
  if (i == j) throw PreconditionError("build_alternating needs distinct colours");
  AxisData a{f, Permutation(f.degree()), {j, i}};
  require_valid(a);
  return a;
}

AxisData build_tau_cycle(const PermGroup& f, const Permutation& tau, Point j) {
  if (tau.degree() != f.degree() || !f.contains(tau)) {
    throw PreconditionError("build_tau_cycle: tau is not in F");
  }
  if (j < 1 || j > f.degree()) throw PreconditionError("build_tau_cycle: colour out of range");
  if (tau(j) == j) throw PreconditionError("build_tau_cycle: tau fixes j, the seam would repeat c_1");
  AxisData a{f, tau, {j}};
  require_valid(a);
  return a;
}

}  // namespace locscale

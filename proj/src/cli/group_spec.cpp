#include "locscale/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

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

std::uint64_t parse_count(std::string_view s, const char* what) {
  s = trim(s);
  if (s.empty() || s.size() > 6 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(std::string("expected ") + what + ", got \"" + std::string(s) + "\"");
  }
  return std::stoull(std::string(s));
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("group spec needs a ':' (e.g. sym:4), got \"" + std::string(text) + "\"");
  const auto head = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  GroupSpec spec;
  if (head == "sym" || head == "alt" || head == "cyclic" || head == "dihedral" || head == "trivial") {
    spec.degree_ = parse_count(rest, "a degree");
    if (spec.degree_ < 1) throw ParseError("degree must be at least 1");
    if (head == "sym") spec.kind_ = Kind::symmetric;
    if (head == "alt") spec.kind_ = Kind::alternating;
    if (head == "cyclic") spec.kind_ = Kind::cyclic;
    if (head == "trivial") spec.kind_ = Kind::trivial;
    if (head == "dihedral") {
      spec.kind_ = Kind::dihedral;
      if (spec.degree_ < 3) throw ParseError("dihedral needs degree >= 3");
    }
    return spec;
  }
  if (head == "sylow") {
    const auto colon2 = rest.find(':');
    if (colon2 == std::string_view::npos) throw ParseError("sylow spec is sylow:p:<spec>");
    spec.kind_ = Kind::sylow;
    spec.prime_ = parse_count(rest.substr(0, colon2), "a prime");
    if (!is_prime(spec.prime_)) throw ParseError(std::to_string(spec.prime_) + " is not prime");
    spec.inner_ = std::make_shared<const GroupSpec>(parse(rest.substr(colon2 + 1)));
    spec.degree_ = spec.inner_->degree_;
    return spec;
  }
  if (head == "file") {
    spec.kind_ = Kind::file;
    spec.path_ = std::string(trim(rest));
    if (spec.path_.empty()) throw ParseError("file spec needs a path");
    return spec;
  }
  if (head == "gens") {
    const auto colon2 = rest.find(':');
    if (colon2 == std::string_view::npos) throw ParseError("generator spec is gens:k:<perm>;<perm>...");
    spec.kind_ = Kind::generators;
    spec.degree_ = parse_count(rest.substr(0, colon2), "a degree");
    auto list = rest.substr(colon2 + 1);
    while (!trim(list).empty()) {
      const auto semi = list.find(';');
      const auto item = trim(list.substr(0, semi));
      if (!item.empty()) spec.generators_.push_back(Permutation::parse(item, spec.degree_));
      if (semi == std::string_view::npos) break;
      list = list.substr(semi + 1);
    }
    return spec;
  }
  throw ParseError("unknown group kind \"" + std::string(head) + "\"");
}

std::string GroupSpec::to_string() const {
  switch (kind_) {
    case Kind::symmetric:
      return "sym:" + std::to_string(degree_);
    case Kind::alternating:
      return "alt:" + std::to_string(degree_);
    case Kind::cyclic:
      return "cyclic:" + std::to_string(degree_);
    case Kind::dihedral:
      return "dihedral:" + std::to_string(degree_);
    case Kind::trivial:
      return "trivial:" + std::to_string(degree_);
    case Kind::sylow:
      return "sylow:" + std::to_string(prime_) + ":" + inner_->to_string();
    case Kind::file:
      return "file:" + path_;
    case Kind::generators: {
      std::string out = "gens:" + std::to_string(degree_) + ":";
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) out += ";";
        out += generators_[i].to_string();
      }
      return out;
    }
  }
  return {};
}

PermGroup GroupSpec::resolve() const {
  switch (kind_) {
    case Kind::symmetric:
      return PermGroup::symmetric(degree_);
    case Kind::alternating:
      return PermGroup::alternating(degree_);
    case Kind::cyclic:
      return PermGroup::cyclic(degree_);
    case Kind::dihedral:
      return PermGroup::dihedral(degree_);
    case Kind::trivial:
      return PermGroup::trivial(degree_);
    case Kind::sylow:
      if (inner_->kind_ == Kind::symmetric) return sylow_of_symmetric(inner_->degree_, prime_);
      return sylow_subgroup(inner_->resolve(), prime_);
    case Kind::file:
      return parse_group_file(path_);
    case Kind::generators:
      return PermGroup(degree_, generators_);
  }
  return PermGroup();
}

PermGroup parse_group_text(std::string_view content) {
  std::istringstream in{std::string(content)};
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      if (!degree) {
        if (t.substr(0, 6) != "degree") throw ParseError("first line must be \"degree k\"");
        degree = parse_count(t.substr(6), "a degree");
        continue;
      }
      gens.push_back(Permutation::parse(t, *degree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!degree) throw ParseError("group file has no \"degree k\" line");
  return PermGroup(*degree, std::move(gens));
}

PermGroup parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_group_text(buffer.str());
}

}  // namespace locscale

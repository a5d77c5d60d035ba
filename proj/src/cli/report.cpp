#include "locscale/report.hpp"

namespace locscale::report {

std::vector<std::string> generator_strings(const PermGroup& g) {
  std::vector<std::string> out;
  for (const auto& x : g.generators()) out.push_back(x.to_string());
  return out;
}

Json spectrum(const std::string& group, const ScaleSpectrum& s) {
  Json j;
  j["group"] = group;
  j["mode"] = to_string(s.mode);
  if (s.mode == SpectrumMode::exponents && s.prime) j["prime"] = *s.prime;
  j["max_len"] = s.max_len;
  j["cap"] = s.cap;
  j["truncated"] = s.truncated;
  j["entries"] = s.entries;
  j["reference"] = s.mode == SpectrumMode::values
                       ? "scales of hyperbolic elements of U(F) with axis word length <= max_len"
                       : "p-exponents of scales of hyperbolic elements of U(F) with axis word length <= max_len";
  return j;
}

Json axis_quantity(const std::string& group, const AxisData& a, const std::string& quantity, const Json& value,
                   const std::string& reference) {
  Json j;
  j["group"] = group;
  j["axis"] = a.to_string();
  j[quantity] = value;
  j["reference"] = reference;
  return j;
}

Json prediction(const SymScalePrediction& p) {
  Json j;
  j["k"] = p.k;
  j["prime"] = p.prime;
  j["localized"] = to_string(p.localized);
  j["step"] = p.step;
  j["text"] = p.to_string();
  j["reference"] = "exponent sets of scales over the Sylow subgroup of Sym(k) and over Sym(k)";
  return j;
}

Json subgroup(const std::string& group, std::uint64_t prime, const PermGroup& h) {
  Json j;
  j["group"] = group;
  j["prime"] = prime;
  j["order"] = h.order();
  j["generators"] = generator_strings(h);
  return j;
}

Json basis(const std::string& group, const SylowBasis& b) {
  Json j;
  j["group"] = group;
  j["order"] = b.parent.order();
  Json members = Json::array();
  for (const auto& [p, h] : b.members) {
    Json m;
    m["prime"] = p;
    m["order"] = h.order();
    m["generators"] = generator_strings(h);
    members.push_back(m);
  }
  j["members"] = members;
  return j;
}

Json oracle(const std::string& group, const AxisData& a, std::size_t m, std::uint64_t formula, std::uint64_t orbit,
            const std::optional<std::uint64_t>& exhaustive) {
  Json j;
  j["group"] = group;
  j["axis"] = a.to_string();
  j["m"] = m;
  j["formula"] = formula;
  j["orbit_count"] = orbit;
  j["exhaustive"] = exhaustive ? Json(*exhaustive) : Json(nullptr);
  j["agree"] = orbit == formula && (!exhaustive || *exhaustive == formula);
  j["reference"] = "orbit of x^-m v under the stabiliser of v and xv against scale^m";
  return j;
}

Json verification(const std::vector<verify::CriterionResult>& results) {
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    list.push_back(j);
    all = all && r.passed;
  }
  Json out;
  out["passed"] = all;
  out["criteria"] = list;
  return out;
}

}  // namespace locscale::report

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "locscale/bmtree.hpp"
#include "locscale/sylow.hpp"
#include "locscale/verify.hpp"

namespace locscale::report {

using Json = nlohmann::ordered_json;

/// Fields: group, mode, prime (exponent mode only), max_len, cap, truncated, entries, reference.
Json spectrum(const std::string& group, const ScaleSpectrum& s);

/// Fields: group, axis, <quantity>, reference. `value` is a number or a string.
Json axis_quantity(const std::string& group, const AxisData& a, const std::string& quantity, const Json& value,
                   const std::string& reference);

Json prediction(const SymScalePrediction& p);

Json subgroup(const std::string& group, std::uint64_t prime, const PermGroup& h);

Json basis(const std::string& group, const SylowBasis& b);

Json oracle(const std::string& group, const AxisData& a, std::size_t m, std::uint64_t formula,
            std::uint64_t orbit, const std::optional<std::uint64_t>& exhaustive);

Json verification(const std::vector<verify::CriterionResult>& results);

std::vector<std::string> generator_strings(const PermGroup& g);

}  // namespace locscale::report

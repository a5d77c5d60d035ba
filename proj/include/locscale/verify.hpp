#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "locscale/bmtree.hpp"

namespace locscale::verify {

struct CriterionResult {
  std::string id;  // "c01".."c13"
  std::string title;
  bool passed = false;
  std::string detail;
};

/// Ids of every criterion, sorted.
std::vector<std::string> criterion_ids();

std::string criterion_title(std::string_view id);

/// Criterion ids of a suite: "all", "spectrum", "oracle", "localisation",
/// "sylow", or a single id. Throws ParseError for anything else.
std::vector<std::string> suite_members(std::string_view suite);

/// Throws ParseError for an unknown id.
CriterionResult run_criterion(std::string_view id);

std::vector<CriterionResult> run_suite(std::string_view suite);

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// Small soluble groups used by the Sylow battery.
std::vector<NamedGroup> sylow_corpus();

/// Cyclic subgroups of Sym(k), one per cycle type.
std::vector<PermGroup> cyclic_subgroups(std::size_t k);

/// Every valid axis over F with word length 1..max_len.
std::vector<AxisData> all_axes(const PermGroup& f, std::size_t max_len);

/// A uniformly drawn valid axis over F: twist from F, word length in
/// [1, max_len]. Retries until the seam condition holds.
AxisData random_axis(const PermGroup& f, std::size_t max_len, std::mt19937_64& rng);

}  // namespace locscale::verify

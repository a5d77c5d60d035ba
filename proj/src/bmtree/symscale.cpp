#include "locscale/bmtree.hpp"
#include "locscale/errors.hpp"
#include "locscale/supernatural.hpp"

namespace locscale {

SymScalePrediction symscale_case(std::size_t k, std::uint64_t p) {
  if (k < 3) throw PreconditionError("symscale_case needs k >= 3");
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  SymScalePrediction out;
  out.k = k;
  out.prime = p;
  out.step = valuation(k - 1, p);
  if (k <= p) {
    // F(p) is trivial or regular: every suborbit is a point.
    out.localized = ExponentSet::zero_only;
  } else if (p > 2 && k == 2 * p) {
    out.localized = ExponentSet::even_naturals;
  } else if (p > 3 && k % p == 0 && k / p >= 3 && k / p < p) {
    out.localized = ExponentSet::naturals_minus_one;
  } else {
    out.localized = ExponentSet::all_naturals;
  }
  return out;
}

bool SymScalePrediction::localized_contains(std::uint64_t e) const {
  switch (localized) {
    case ExponentSet::zero_only:
      return e == 0;
    case ExponentSet::even_naturals:
      return e % 2 == 0;
    case ExponentSet::naturals_minus_one:
      return e != 1;
    case ExponentSet::all_naturals:
      return true;
  }
  return false;
}

bool SymScalePrediction::ambient_contains(std::uint64_t e) const {
  if (step == 0) return e == 0;
  return e % step == 0;
}

std::string to_string(ExponentSet s) {
  switch (s) {
    case ExponentSet::zero_only:
      return "{0}";
    case ExponentSet::even_naturals:
      return "2N0";
    case ExponentSet::naturals_minus_one:
      return "N0 \\ {1}";
    case ExponentSet::all_naturals:
      return "N0";
  }
  return "?";
}

std::string SymScalePrediction::to_string() const {
  std::string ambient;
  if (step == 0) {
    ambient = "{0}";
  } else if (step == 1) {
    ambient = "N0";
  } else {
    ambient = std::to_string(step) + "N0";
  }
  return "T = " + locscale::to_string(localized) + "; S = " + ambient;
}

}  // namespace locscale

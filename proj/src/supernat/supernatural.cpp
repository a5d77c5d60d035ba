#include "locscale/supernatural.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "locscale/errors.hpp"

namespace locscale {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorise(std::uint64_t n) {
  if (n == 0) throw PreconditionError("cannot factorise 0");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1U);
  return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw PreconditionError("valuation of 0 is infinite");
  if (p < 2) throw PreconditionError("valuation needs p >= 2");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  for (unsigned e = valuation(n, p); e > 0; --e) r *= p;
  return r;
}

void Supernatural::set(std::uint64_t p, Exponent e) {
  if (e.is_zero()) {
    exps_.erase(p);
  } else {
    exps_[p] = e;
  }
}

Supernatural Supernatural::from_natural(std::uint64_t n) {
  if (n == 0) throw PreconditionError("0 is not a supernatural number");
  Supernatural s;
  for (auto [p, e] : factorise(n)) s.set(p, Exponent(e));
  return s;
}

Supernatural Supernatural::prime_power(std::uint64_t p, Exponent e) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  Supernatural s;
  s.set(p, e);
  return s;
}

Supernatural Supernatural::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_nat = [](std::string_view s) -> std::uint64_t {
    if (s.empty() || s.size() > 18 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("expected a natural number, got \"" + std::string(s) + "\"");
    }
    return std::stoull(std::string(s));
  };
  text = trim(text);
  if (text == "1") return {};
  Supernatural s;
  std::uint64_t last_prime = 0;
  while (true) {
    const auto star = text.find('*');
    const auto factor = trim(text.substr(0, star));
    const auto caret = factor.find('^');
    const std::uint64_t p = parse_nat(trim(factor.substr(0, caret)));
    if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");
    if (p <= last_prime) throw ParseError("primes must be strictly ascending");
    last_prime = p;
    Exponent e(1);
    if (caret != std::string_view::npos) {
      const auto exp_text = trim(factor.substr(caret + 1));
      e = exp_text == "inf" ? Exponent::infinity() : Exponent(parse_nat(exp_text));
      if (e.is_zero()) throw ParseError("zero exponents are not written");
    }
    s.set(p, e);
    if (star == std::string_view::npos) break;
    text = text.substr(star + 1);
  }
  return s;
}

Exponent Supernatural::exponent(std::uint64_t p) const {
  const auto it = exps_.find(p);
  return it == exps_.end() ? Exponent(0) : it->second;
}

bool Supernatural::is_finite() const noexcept {
  return std::none_of(exps_.begin(), exps_.end(), [](const auto& kv) { return kv.second.is_infinite(); });
}

std::optional<std::uint64_t> Supernatural::to_natural() const {
  if (!is_finite()) return std::nullopt;
  std::uint64_t r = 1;
  for (const auto& [p, e] : exps_) {
    for (std::uint64_t i = 0; i < e.value(); ++i) {
      if (r > UINT64_MAX / p) return std::nullopt;
      r *= p;
    }
  }
  return r;
}

std::string Supernatural::to_string() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : exps_) {
    if (!first) os << '*';
    first = false;
    os << p;
    if (e != Exponent(1)) os << '^' << e.to_string();
  }
  return os.str();
}

Supernatural Supernatural::from_exponents(const std::map<std::uint64_t, Exponent>& exps) {
  Supernatural s;
  for (const auto& [p, e] : exps) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    s.set(p, e);
  }
  return s;
}

Supernatural operator*(const Supernatural& a, const Supernatural& b) {
  std::map<std::uint64_t, Exponent> sum = a.exponents();
  for (const auto& [p, e] : b.exponents()) sum[p] = sum[p] + e;
  return Supernatural::from_exponents(sum);
}

Supernatural lcm(const Supernatural& a, const Supernatural& b) {
  std::map<std::uint64_t, Exponent> m = a.exponents();
  for (const auto& [p, e] : b.exponents()) m[p] = std::max(m[p], e);
  return Supernatural::from_exponents(m);
}

Supernatural lcm(std::span<const Supernatural> values) {
  Supernatural r;
  for (const auto& v : values) r = lcm(r, v);
  return r;
}

bool divides(const Supernatural& a, const Supernatural& b) {
  return std::all_of(a.exponents().begin(), a.exponents().end(),
                     [&](const auto& kv) { return kv.second <= b.exponent(kv.first); });
}

Supernatural p_part(const Supernatural& a, std::uint64_t p) {
  const Exponent e = a.exponent(p);
  if (e.is_zero()) return {};
  return Supernatural::prime_power(p, e);
}

}  // namespace locscale

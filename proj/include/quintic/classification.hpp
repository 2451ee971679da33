/**
 * @file classification.hpp
 * @brief Sorting a 5th-power-free radicand n into the three shapes for which
 *        Q(⁵√n, ζ₅) can have a 5-class group of type (5,5) with all classes ambiguous:
 *
 *   Case1  n = pᵉ,    p ≡ 1 (mod 25),                                   n ≡ ±1, ±7 (mod 25)
 *   Case2  n = pᵉq,   p ≡ 1 (mod 5), p ≢ 1 (mod 25), q ≡ ±2 (mod 5),
 *                     q ≢ ±7 (mod 25),                                  n ≡ ±1, ±7 (mod 25)
 *   Case3  n = 5ᵉp,   p ≡ 1 (mod 5), p ≢ 1 (mod 25),                    n ≢ ±1, ±7 (mod 25)
 *
 * with e ∈ {1,…,4}. Anything else is NoMatch.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quintic/errors.hpp"

namespace quintic {

enum class RadicandVariant { Case1_PePrime25, Case2_PeQ, Case3_5eP, NoMatch };

inline const char* to_string(RadicandVariant v) {
  switch (v) {
    case RadicandVariant::Case1_PePrime25: return "Case1_PePrime25";
    case RadicandVariant::Case2_PeQ: return "Case2_PeQ";
    case RadicandVariant::Case3_5eP: return "Case3_5eP";
    case RadicandVariant::NoMatch: return "NoMatch";
  }
  return "?";
}

inline RadicandVariant variant_from_string(std::string_view s) {
  for (auto v : {RadicandVariant::Case1_PePrime25, RadicandVariant::Case2_PeQ, RadicandVariant::Case3_5eP,
                 RadicandVariant::NoMatch}) {
    if (s == to_string(v)) return v;
  }
  throw InputError("unknown radicand variant '" + std::string(s) + "'");
}

struct RadicandClass {
  RadicandVariant variant = RadicandVariant::NoMatch;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> q;
  /// Exponent of p (Case1, Case2) or of 5 (Case3).
  std::optional<int> e;
  int residue_mod_25 = 0;

  bool applicable() const { return variant != RadicandVariant::NoMatch; }

  /// Rebuilds n from (p, q, e); only meaningful when applicable().
  std::uint64_t reconstruct() const {
    auto ipow = [](std::uint64_t b, int k) {
      std::uint64_t r = 1;
      for (int i = 0; i < k; ++i) r *= b;
      return r;
    };
    switch (variant) {
      case RadicandVariant::Case1_PePrime25: return ipow(*p, *e);
      case RadicandVariant::Case2_PeQ: return ipow(*p, *e) * *q;
      case RadicandVariant::Case3_5eP: return ipow(5, *e) * *p;
      case RadicandVariant::NoMatch: break;
    }
    return 0;
  }

  friend bool operator==(const RadicandClass&, const RadicandClass&) = default;
};

/// Trial divisors are tried up to this bound; a cofactor left above bound² is rejected.
inline constexpr std::uint64_t kTrialDivisionBound = 10'000'000;

struct PrimePower {
  std::uint64_t prime;
  int exponent;
};

inline std::vector<PrimePower> factor_by_trial_division(std::uint64_t n) {
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t d) {
    if (n % d != 0) return;
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.push_back({d, k});
  };
  strip(2);
  std::uint64_t d = 3;
  for (; d * d <= n; d += 2) {
    if (d > kTrialDivisionBound)
      throw FactorizationBoundExceeded("cannot factor " + std::to_string(n) + " within the trial-division bound");
    strip(d);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

/// {±1, ±7} mod 25.
inline bool is_pm1_pm7_mod25(std::uint64_t x) {
  const auto r = x % 25;
  return r == 1 || r == 7 || r == 18 || r == 24;
}

inline RadicandClass classify_radicand(std::uint64_t n) {
  if (n <= 1) throw InputError("radicand must be > 1");
  const auto factors = factor_by_trial_division(n);
  for (const auto& f : factors) {
    if (f.exponent >= 5)
      throw NotFifthPowerFree(std::to_string(n) + " is divisible by " + std::to_string(f.prime) + "^5");
  }

  RadicandClass out;
  out.residue_mod_25 = static_cast<int>(n % 25);
  const bool residue_ok = is_pm1_pm7_mod25(n);

  auto is_p = [](const PrimePower& f) { return f.prime % 5 == 1; };
  auto is_q = [](const PrimePower& f) { return f.prime % 5 == 2 || f.prime % 5 == 3; };

  if (factors.size() == 1) {
    const auto& f = factors[0];
    if (is_p(f) && f.prime % 25 == 1 && residue_ok) {
      out.variant = RadicandVariant::Case1_PePrime25;
      out.p = f.prime;
      out.e = f.exponent;
    }
    return out;
  }
  if (factors.size() != 2) return out;

  // factors are sorted ascending, so 5 (if present) comes first among {5, p}
  const auto& a = factors[0];
  const auto& b = factors[1];
  if (a.prime == 5 || b.prime == 5) {
    const auto& five = a.prime == 5 ? a : b;
    const auto& other = a.prime == 5 ? b : a;
    if (is_p(other) && other.exponent == 1 && other.prime % 25 != 1 && !residue_ok) {
      out.variant = RadicandVariant::Case3_5eP;
      out.p = other.prime;
      out.e = five.exponent;
    }
    return out;
  }
  for (const auto& [pp, qq] : {std::pair{a, b}, std::pair{b, a}}) {
    if (is_p(pp) && pp.prime % 25 != 1 && is_q(qq) && qq.exponent == 1 && qq.prime % 25 != 7 &&
        qq.prime % 25 != 18 && residue_ok) {
      out.variant = RadicandVariant::Case2_PeQ;
      out.p = pp.prime;
      out.q = qq.prime;
      out.e = pp.exponent;
      return out;
    }
  }
  return out;
}

}  // namespace quintic

/**
 * @file primes.hpp
 * @brief Rational primes in Z[ζ₅]: factorization, conjugate labeling, residue maps and
 *        normalization of associates by unit search.
 *
 * Labeling convention for p ≡ 1 (mod 5): r is the smallest root of Φ₅ modulo p,
 * π₁ = gcd(p, ζ − r) and π_{1+j} = τʲ(π₁). Hence π₃ = τ²(π₁) and π₄ = τ²(π₂) exactly,
 * and π_{1+j} is the kernel of the evaluation ζ ↦ r^(3ʲ) (3 = 2⁻¹ mod 5).
 */
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quintic/cyclotomic.hpp"
#include "quintic/detail/modular.hpp"
#include "quintic/errors.hpp"

namespace quintic {

enum class PrimeKind { Split, Inert, Lambda };

inline const char* to_string(PrimeKind k) {
  switch (k) {
    case PrimeKind::Split: return "split";
    case PrimeKind::Inert: return "inert";
    case PrimeKind::Lambda: return "lambda";
  }
  return "?";
}

struct PrimeElement {
  CycInt value;
  PrimeKind kind = PrimeKind::Split;
  /// 1..4 for split factors, 5 for an inert rational prime, 0 for λ.
  int label = 0;
  std::uint64_t rational_below = 0;
  /// Image of ζ in Z[ζ]/(value) ≅ F_p; split primes only.
  std::optional<std::uint64_t> root;

  friend bool operator==(const PrimeElement&, const PrimeElement&) = default;
};

struct SplittingData {
  std::vector<PrimeElement> factors;
  /// Smallest root of Φ₅ mod p (split case only).
  std::optional<std::uint64_t> root;
};

/// Roots of Φ₅ = X⁴+X³+X²+X+1 modulo p ≡ 1 (mod 5), ascending.
inline std::vector<std::uint64_t> fifth_roots_of_unity(std::uint64_t p) {
  const std::uint64_t g = detail::smallest_primitive_root(p);
  const std::uint64_t h = detail::powmod(g, (p - 1) / 5, p);
  std::vector<std::uint64_t> roots;
  std::uint64_t x = h;
  for (int i = 0; i < 4; ++i) {
    roots.push_back(x);
    x = detail::mulmod(x, h, p);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline PrimeElement lambda_prime() {
  return PrimeElement{CycInt::lambda(), PrimeKind::Lambda, 0, 5, std::nullopt};
}

inline SplittingData factor_rational_prime(std::uint64_t p) {
  if (!detail::is_prime(p)) throw InputError("factor_rational_prime: " + std::to_string(p) + " is not prime");
  if (p == 5) return SplittingData{{lambda_prime()}, std::nullopt};
  switch (p % 5) {
    case 2:
    case 3:
      return SplittingData{{PrimeElement{CycInt(static_cast<long>(p)), PrimeKind::Inert, 5, p, std::nullopt}},
                           std::nullopt};
    case 4:
      throw UnsupportedPrime("factor_rational_prime: " + std::to_string(p) +
                             " = 4 (mod 5) splits into two primes of degree 2");
    default:
      break;
  }
  const std::uint64_t r = fifth_roots_of_unity(p).front();
  const CycInt pi1 = gcd(CycInt(Integer(static_cast<unsigned long>(p))),
                         CycInt::zeta(1) - CycInt(Integer(static_cast<unsigned long>(r))));
  SplittingData out;
  out.root = r;
  std::uint64_t root_j = r;
  for (int j = 0; j < 4; ++j) {
    out.factors.push_back(PrimeElement{galois_apply(pi1, j), PrimeKind::Split, j + 1, p, root_j});
    root_j = detail::powmod(root_j, 3, p);
  }
  return out;
}

/// Evaluation ζ ↦ r realizing Z[ζ]/(π) ≅ F_p.
inline std::uint64_t residue_field_reduce(const CycInt& x, const PrimeElement& pi) {
  if (pi.kind != PrimeKind::Split || !pi.root)
    throw UnsupportedOperation("residue_field_reduce: prime is not split");
  const std::uint64_t p = pi.rational_below;
  const std::uint64_t r = *pi.root;
  std::uint64_t acc = 0;
  std::uint64_t rp = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::uint64_t ci = mpz_fdiv_ui(x[i].get_mpz_t(), p);
    acc = (acc + detail::mulmod(ci, rp, p)) % p;
    rp = detail::mulmod(rp, r, p);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Units and associate normalization
// ---------------------------------------------------------------------------

/// u = sign·ζᵃ·(1+ζ)ᵗ. ζ and 1+ζ generate the unit group modulo ±1.
struct Unit {
  int sign = 1;
  int zeta_power = 0;
  int one_plus_zeta_power = 0;
  CycInt value = CycInt(1);

  friend bool operator==(const Unit&, const Unit&) = default;
};

inline constexpr int kUnitSearchBound = 8;

inline CycInt unit_value(int sign, int a, int t) {
  static const CycInt one_plus_zeta = CycInt(1) + CycInt::zeta(1);
  static const CycInt inverse = conjugate_cofactor(one_plus_zeta);  // N(1+ζ) = 1
  CycInt v = CycInt::zeta(a) * pow(t >= 0 ? one_plus_zeta : inverse, static_cast<unsigned long>(t >= 0 ? t : -t));
  return sign > 0 ? v : -v;
}

/// Units in search order: ζ exponent a ascending, then t = 0, 1, −1, 2, −2, …, then sign +, −.
inline const std::vector<Unit>& unit_search_order() {
  static const std::vector<Unit> units = [] {
    std::vector<Unit> out;
    for (int a = 0; a < 5; ++a) {
      for (int m = 0; m <= 2 * kUnitSearchBound; ++m) {
        const int t = (m % 2 == 1) ? (m + 1) / 2 : -(m / 2);
        for (int sign : {1, -1}) out.push_back(Unit{sign, a, t, unit_value(sign, a, t)});
      }
    }
    return out;
  }();
  return units;
}

/// Residue keys (λ-digit vectors) of the image of the full unit group in (Z[ζ]/λᵏ)*.
inline std::set<std::vector<int>> unit_image_mod_lambda_pow(int k) {
  const std::array<CycInt, 3> gens{CycInt(-1), CycInt::zeta(1), CycInt(1) + CycInt::zeta(1)};
  std::set<std::vector<int>> seen{lambda_expand(CycInt(1), k).digits};
  std::vector<CycInt> frontier{CycInt(1)};
  while (!frontier.empty()) {
    std::vector<CycInt> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        CycInt y = reduce_mod_lambda_pow(x * g, k);
        if (seen.insert(lambda_expand(y, k).digits).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Whether some unit u (unbounded) gives u·x ≡ t (mod λᵏ) for a t in targets.
inline bool associate_congruence_possible(const CycInt& x, int k, const std::vector<CycInt>& targets) {
  std::set<std::vector<int>> wanted;
  for (const auto& t : targets) wanted.insert(lambda_expand(t, k).digits);
  for (const auto& key : unit_image_mod_lambda_pow(k)) {
    const CycInt u = reassemble(LambdaExpansion{key});
    if (wanted.count(lambda_expand(u * x, k).digits)) return true;
  }
  return false;
}

enum class SearchFailure {
  /// No unit whatsoever satisfies the congruence (checked on the whole unit image mod λᵏ).
  Impossible,
  /// A unit exists but lies outside the bounded search window.
  BoundExhausted,
};

inline const char* to_string(SearchFailure f) {
  return f == SearchFailure::Impossible ? "impossible" : "bound-exhausted";
}

struct AssociateWitness {
  Unit unit;
  CycInt normalized;
  CycInt target;
};

struct AssociateSearch {
  std::optional<AssociateWitness> witness;
  SearchFailure failure = SearchFailure::Impossible;

  bool found() const { return witness.has_value(); }
};

/// First unit u in unit_search_order() with u·x ≡ t (mod λᵏ) for some t in targets.
inline AssociateSearch search_associate(const CycInt& x, int k, const std::vector<CycInt>& targets) {
  for (const auto& u : unit_search_order()) {
    const CycInt candidate = u.value * x;
    for (const auto& t : targets) {
      if (congruent_mod_lambda_pow(candidate, t, k)) return AssociateSearch{AssociateWitness{u, candidate, t}, {}};
    }
  }
  AssociateSearch out;
  out.failure = associate_congruence_possible(x, k, targets) ? SearchFailure::BoundExhausted : SearchFailure::Impossible;
  return out;
}

inline AssociateSearch normalize_associate(const PrimeElement& pi, int k, const std::vector<CycInt>& targets) {
  if (pi.kind != PrimeKind::Split) throw UnsupportedOperation("normalize_associate: prime is not split");
  if (k < 1 || k > 5) throw InputError("normalize_associate: k must lie in 1..5");
  if (targets.empty()) throw InputError("normalize_associate: empty target set");
  return search_associate(pi.value, k, targets);
}

/// {±1, ±7} as rational residues; modulo λ⁵ these are exactly the classes ±1, ±7 (mod 25).
inline std::vector<CycInt> plus_minus_one_seven() { return {CycInt(1), CycInt(7), CycInt(18), CycInt(24)}; }

/// Applies a unit to a split prime, keeping its labeling data.
inline PrimeElement with_unit(const PrimeElement& pi, const CycInt& unit) {
  PrimeElement out = pi;
  out.value = unit * pi.value;
  return out;
}

}  // namespace quintic

/**
 * @file symbols.hpp
 * @brief Quintic power residue symbol and the splitting behaviour of primes of Z[ζ₅]
 *        in Kummer extensions Q(ζ₅)(⁵√θ).
 */
#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "quintic/cyclotomic.hpp"
#include "quintic/detail/modular.hpp"
#include "quintic/errors.hpp"
#include "quintic/primes.hpp"

namespace quintic {

/// (a/π)₅ = ζʲ, stored as j ∈ {0..4}. j = 0 iff a is a 5th power modulo π.
struct SymbolValue {
  int exponent = 0;

  bool is_trivial() const { return exponent == 0; }
  friend bool operator==(const SymbolValue&, const SymbolValue&) = default;
};

enum class DecompositionType { Split, Inert, Ramified };

inline const char* to_string(DecompositionType d) {
  switch (d) {
    case DecompositionType::Split: return "split";
    case DecompositionType::Inert: return "inert";
    case DecompositionType::Ramified: return "ramified";
  }
  return "?";
}

/// a^((p−1)/5) in F_p matched against the images rʲ of ζʲ.
inline SymbolValue quintic_symbol(const CycInt& a, const PrimeElement& pi) {
  if (pi.kind != PrimeKind::Split) throw UnsupportedOperation("quintic_symbol: only split primes are supported");
  const std::uint64_t p = pi.rational_below;
  const std::uint64_t s = residue_field_reduce(a, pi);
  if (s == 0) throw UndefinedSymbol("quintic_symbol: the prime divides the argument");
  const std::uint64_t t = detail::powmod(s, (p - 1) / 5, p);
  std::uint64_t rj = 1;
  for (int j = 0; j < 5; ++j) {
    if (rj == t) return SymbolValue{j};
    rj = detail::mulmod(rj, *pi.root, p);
  }
  throw std::logic_error("quintic_symbol: power is not a 5th root of unity");
}

/// Largest v with πᵛ | x together with x/πᵛ (x ≠ 0).
inline std::pair<int, CycInt> split_off_prime(CycInt x, const PrimeElement& pi) {
  if (x.is_zero()) throw InputError("valuation of zero");
  int v = 0;
  if (pi.kind == PrimeKind::Lambda) {
    while (residue_mod_lambda(x) == 0) {
      x = divide_by_lambda(x);
      ++v;
    }
    return {v, x};
  }
  while (auto q = exact_divide(x, pi.value)) {
    x = std::move(*q);
    ++v;
  }
  return {v, x};
}

namespace detail {

/// x^e in (Z/m)[ζ]/Φ₅, coordinates kept in [0, m).
inline CycInt pow_mod(CycInt base, Integer e, const Integer& m) {
  auto reduce = [&m](const CycInt& x) {
    CycInt::Coeffs c;
    for (std::size_t i = 0; i < 4; ++i) mpz_fdiv_r(c[i].get_mpz_t(), x[i].get_mpz_t(), m.get_mpz_t());
    return CycInt(std::move(c));
  };
  CycInt result(1);
  base = reduce(base);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = reduce(result * base);
    e >>= 1;
    if (e > 0) base = reduce(base * base);
  }
  return result;
}

/// For inert q the residue ring Z[ζ]/(q) is F_{q⁴}; θ is a 5th power iff θ^((q⁴−1)/5) = 1.
inline bool is_fifth_power_mod_inert(const CycInt& theta, std::uint64_t q) {
  const Integer qq(static_cast<unsigned long>(q));
  Integer order = qq * qq * qq * qq - 1;
  return pow_mod(theta, order / 5, qq) == CycInt(1);
}

}  // namespace detail

/// How the prime `at` of Q(ζ₅) behaves in Q(ζ₅)(⁵√θ).
///
/// Away from λ: ramified iff v_π(θ) ≢ 0 (mod 5), otherwise split iff the π-free part of θ
/// is a 5th power modulo π. At λ (which divides 1 − ζ exactly once): split iff X⁵ ≡ θ
/// (mod λ⁶) is solvable, inert iff it is solvable mod λ⁵ but not mod λ⁶, ramified otherwise.
inline DecompositionType decomposition_type(const CycInt& theta, const PrimeElement& at) {
  if (theta.is_zero()) throw InputError("decomposition_type: θ = 0");
  auto [v, rest] = split_off_prime(theta, at);
  if (v >= 5) throw InputError("decomposition_type: θ is divisible by the 5th power of the prime");
  if (v != 0) return DecompositionType::Ramified;

  switch (at.kind) {
    case PrimeKind::Split:
      return quintic_symbol(rest, at).is_trivial() ? DecompositionType::Split : DecompositionType::Inert;
    case PrimeKind::Inert:
      return detail::is_fifth_power_mod_inert(rest, at.rational_below) ? DecompositionType::Split
                                                                       : DecompositionType::Inert;
    case PrimeKind::Lambda:
      if (fifth_power_solvable_mod_lambda(rest, 6)) return DecompositionType::Split;
      if (fifth_power_solvable_mod_lambda(rest, 5)) return DecompositionType::Inert;
      return DecompositionType::Ramified;
  }
  throw std::logic_error("decomposition_type: unknown prime kind");
}

}  // namespace quintic

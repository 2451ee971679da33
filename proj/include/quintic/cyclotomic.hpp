/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the ring of integers Z[ζ] of Q(ζ), ζ a primitive 5th root of unity.
 *
 * Elements are stored in the power basis {1, ζ, ζ², ζ³}; ζ⁴ is eliminated through
 * ζ⁴ = −1 − ζ − ζ² − ζ³. Coordinates are GMP integers, so no operation overflows.
 *
 * Besides the ring operations this header provides
 * - the Galois action τʲ : ζ ↦ ζ^(2ʲ) (τ generates Gal(Q(ζ)/Q), τ² is complex conjugation),
 * - the absolute norm, Euclidean division and gcd (Z[ζ] is norm-Euclidean),
 * - λ-adic digit expansions and congruences modulo powers of λ = 1 − ζ,
 * - a brute-force test for solvability of X⁵ ≡ θ (mod λᵏ).
 *
 * Every function is pure; values are immutable once built and may be shared across threads.
 */
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quintic/errors.hpp"

namespace quintic {

using Integer = mpz_class;

class CycInt {
 public:
  using Coeffs = std::array<Integer, 4>;

  CycInt() : c_{0, 0, 0, 0} {}
  CycInt(long value) : c_{value, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  CycInt(const Integer& value) : c_{value, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  CycInt(Integer c0, Integer c1, Integer c2, Integer c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
  explicit CycInt(Coeffs coeffs) : c_(std::move(coeffs)) {}

  /// ζ^k for any integer k (negative exponents allowed).
  static CycInt zeta(long k = 1) {
    long e = ((k % 5) + 5) % 5;
    return from_five(five_basis(e));
  }

  /// λ = 1 − ζ, the unique prime above 5.
  static CycInt lambda() { return CycInt(1, -1, 0, 0); }

  const Integer& operator[](std::size_t i) const { return c_[i]; }
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  friend bool operator==(const CycInt& a, const CycInt& b) { return a.c_ == b.c_; }

  CycInt operator-() const { return CycInt(-c_[0], -c_[1], -c_[2], -c_[3]); }

  CycInt& operator+=(const CycInt& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycInt& operator-=(const CycInt& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycInt& operator*=(const Integer& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  CycInt& operator*=(const CycInt& o) {
    *this = *this * o;
    return *this;
  }

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const Integer& s) { return a *= s; }
  friend CycInt operator*(const Integer& s, CycInt a) { return a *= s; }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    // Multiply modulo x⁵ − 1, then fold ζ⁴ back onto the basis.
    std::array<Integer, 5> d{0, 0, 0, 0, 0};
    Integer t;
    for (std::size_t i = 0; i < 4; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < 4; ++j) {
        if (b.c_[j] == 0) continue;
        mpz_mul(t.get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        d[(i + j) % 5] += t;
      }
    }
    return from_five(std::move(d));
  }

  /// Builds an element from coordinates on {1, ζ, ζ², ζ³, ζ⁴}.
  static CycInt from_five(std::array<Integer, 5> d) {
    return CycInt(d[0] - d[4], d[1] - d[4], d[2] - d[4], d[3] - d[4]);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(' << c_[0] << ", " << c_[1] << ", " << c_[2] << ", " << c_[3] << ')';
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const CycInt& x) { return os << x.to_string(); }

 private:
  static std::array<Integer, 5> five_basis(long e) {
    std::array<Integer, 5> d{0, 0, 0, 0, 0};
    d[static_cast<std::size_t>(e)] = 1;
    return d;
  }

  Coeffs c_;
};

inline CycInt pow(CycInt base, unsigned long exp) {
  CycInt result(1);
  while (exp > 0) {
    if (exp & 1UL) result *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  return result;
}

/// τʲ(x): the automorphism ζ ↦ ζ^(2ʲ). j is taken modulo 4.
inline CycInt galois_apply(const CycInt& x, int j) {
  static constexpr int kPow2[4] = {1, 2, 4, 3};
  const int m = kPow2[((j % 4) + 4) % 4];
  std::array<Integer, 5> d{0, 0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) d[static_cast<std::size_t>((i * m) % 5)] += x[static_cast<std::size_t>(i)];
  return CycInt::from_five(std::move(d));
}

/// Product of the three non-trivial conjugates: norm(x) / x.
inline CycInt conjugate_cofactor(const CycInt& x) {
  return galois_apply(x, 1) * galois_apply(x, 2) * galois_apply(x, 3);
}

/// Absolute norm N(x) = Π τʲ(x). Always ≥ 0 since Q(ζ) is totally complex.
inline Integer norm(const CycInt& x) {
  CycInt n = x * conjugate_cofactor(x);
  return n[0];
}

inline bool is_unit(const CycInt& x) { return norm(x) == 1; }

/// Quotient a / b when it lies in Z[ζ], std::nullopt otherwise.
inline std::optional<CycInt> exact_divide(const CycInt& a, const CycInt& b) {
  if (b.is_zero()) throw DivisionByZero("exact_divide: division by zero");
  const Integer n = norm(b);
  CycInt num = a * conjugate_cofactor(b);
  CycInt::Coeffs q;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!mpz_divisible_p(num[i].get_mpz_t(), n.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i].get_mpz_t(), num[i].get_mpz_t(), n.get_mpz_t());
  }
  return CycInt(std::move(q));
}

/// Euclidean division: a = q·b + r with N(r) < N(b).
///
/// q is the coordinate-wise nearest-integer rounding of a·b⁻¹. If that remainder is not
/// small enough, the 81 neighbours q + {−1,0,1}⁴ are tried and the smallest remainder is kept.
inline std::pair<CycInt, CycInt> euclid_divmod(const CycInt& a, const CycInt& b) {
  if (b.is_zero()) throw DivisionByZero("euclid_divmod: division by zero");
  const Integer n = norm(b);
  const CycInt num = a * conjugate_cofactor(b);
  CycInt::Coeffs qc;
  const Integer two_n = 2 * n;
  for (std::size_t i = 0; i < 4; ++i) {
    Integer t = 2 * num[i] + n;
    mpz_fdiv_q(qc[i].get_mpz_t(), t.get_mpz_t(), two_n.get_mpz_t());
  }
  CycInt q(qc);
  CycInt r = a - q * b;
  if (norm(r) < n) return {std::move(q), std::move(r)};

  std::optional<std::pair<CycInt, CycInt>> best;
  Integer best_norm = n;
  for (int o = 0; o < 81; ++o) {
    int k = o;
    CycInt::Coeffs shifted = qc;
    for (std::size_t i = 0; i < 4; ++i) {
      shifted[i] += (k % 3) - 1;
      k /= 3;
    }
    CycInt cq(shifted);
    CycInt cr = a - cq * b;
    Integer cn = norm(cr);
    if (cn < best_norm) {
      best_norm = cn;
      best = std::make_pair(std::move(cq), std::move(cr));
    }
  }
  if (!best) throw std::logic_error("euclid_divmod: no remainder below N(b) among rounding neighbours");
  return *std::move(best);
}

/// A greatest common divisor, determined up to a unit (no associate normalization).
inline CycInt gcd(CycInt a, CycInt b) {
  if (a.is_zero() && b.is_zero()) throw InputError("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    CycInt r = euclid_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// ---------------------------------------------------------------------------
// λ-adic machinery
// ---------------------------------------------------------------------------

/// x ≡ Σ digits[i]·λⁱ (mod λᵏ) with every digit in {0,…,4}; k = digits.size().
struct LambdaExpansion {
  std::vector<int> digits;

  bool is_zero() const {
    for (int d : digits)
      if (d != 0) return false;
    return true;
  }
  friend bool operator==(const LambdaExpansion&, const LambdaExpansion&) = default;
};

/// Image of x in Z[ζ]/(λ) ≅ F₅: since ζ ≡ 1 (mod λ), this is c0 + c1 + c2 + c3 mod 5.
inline int residue_mod_lambda(const CycInt& x) {
  Integer s = x[0] + x[1] + x[2] + x[3];
  return static_cast<int>(mpz_fdiv_ui(s.get_mpz_t(), 5));
}

/// (x − residue)/λ, exact because the residue has been subtracted.
inline CycInt divide_by_lambda(const CycInt& x) {
  // 1/λ = τ(λ)τ²(λ)τ³(λ)/5
  static const CycInt cofactor = conjugate_cofactor(CycInt::lambda());
  CycInt num = x * cofactor;
  CycInt::Coeffs q;
  for (std::size_t i = 0; i < 4; ++i) mpz_divexact_ui(q[i].get_mpz_t(), num[i].get_mpz_t(), 5);
  return CycInt(std::move(q));
}

inline LambdaExpansion lambda_expand(CycInt x, int k) {
  if (k < 1) throw InputError("lambda_expand: length must be >= 1");
  LambdaExpansion out;
  out.digits.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const int d = residue_mod_lambda(x);
    out.digits.push_back(d);
    if (i + 1 < k) {
      x -= CycInt(d);
      x = divide_by_lambda(x);
    }
  }
  return out;
}

/// Σ dᵢλⁱ: the canonical small representative of an expansion.
inline CycInt reassemble(const LambdaExpansion& e) {
  CycInt acc;
  CycInt lp(1);
  const CycInt lam = CycInt::lambda();
  for (int d : e.digits) {
    if (d != 0) acc += lp * Integer(d);
    lp *= lam;
  }
  return acc;
}

/// True iff λᵏ divides x. Uses (λ⁴) = (5): strip 5^(k/4) coordinate-wise, then up to three λ's.
inline bool divisible_by_lambda_pow(const CycInt& x, int k) {
  if (k <= 0 || x.is_zero()) return true;
  const int q = k / 4;
  const int r = k % 4;
  CycInt y = x;
  if (q > 0) {
    Integer five_q;
    mpz_ui_pow_ui(five_q.get_mpz_t(), 5, static_cast<unsigned long>(q));
    CycInt::Coeffs c;
    for (std::size_t i = 0; i < 4; ++i) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), five_q.get_mpz_t())) return false;
      mpz_divexact(c[i].get_mpz_t(), y[i].get_mpz_t(), five_q.get_mpz_t());
    }
    y = CycInt(std::move(c));
  }
  for (int i = 0; i < r; ++i) {
    if (residue_mod_lambda(y) != 0) return false;
    y = divide_by_lambda(y);
  }
  return true;
}

/// v_λ(x); x must be non-zero.
inline int lambda_valuation(CycInt x) {
  if (x.is_zero()) throw InputError("lambda_valuation of zero");
  int v = 0;
  while (residue_mod_lambda(x) == 0) {
    x = divide_by_lambda(x);
    ++v;
  }
  return v;
}

inline bool congruent_mod_lambda_pow(const CycInt& x, const CycInt& y, int k) {
  if (k < 1) throw InputError("congruent_mod_lambda_pow: power must be >= 1");
  return divisible_by_lambda_pow(x - y, k);
}

/// Canonical representative of x modulo λᵏ.
inline CycInt reduce_mod_lambda_pow(const CycInt& x, int k) { return reassemble(lambda_expand(x, k)); }

/// Whether X⁵ ≡ θ (mod λᵏ) has a solution, by trying all 5ᵏ residues Σ dᵢλⁱ.
inline bool fifth_power_solvable_mod_lambda(const CycInt& theta, int k) {
  if (k < 1 || k > 8) throw InputError("fifth_power_solvable_mod_lambda: k must lie in 1..8");
  if (residue_mod_lambda(theta) == 0) throw InputError("fifth_power_solvable_mod_lambda: λ divides θ");

  const auto len = static_cast<std::size_t>(k);
  std::vector<CycInt> lambda_pows;
  lambda_pows.reserve(len);
  CycInt lp(1);
  for (std::size_t i = 0; i < len; ++i) {
    lambda_pows.push_back(lp);
    lp *= CycInt::lambda();
  }
  std::vector<long> digits(len, 0);
  while (true) {
    CycInt x;
    for (std::size_t i = 0; i < len; ++i)
      if (digits[i] != 0) x += lambda_pows[i] * Integer(digits[i]);
    CycInt x2 = x * x;
    if (divisible_by_lambda_pow(x2 * x2 * x - theta, k)) return true;
    std::size_t pos = 0;
    while (pos < len && ++digits[pos] == 5) {
      digits[pos] = 0;
      ++pos;
    }
    if (pos == len) return false;
  }
}

}  // namespace quintic

/**
 * @file capitulation.hpp
 * @brief Formal description of the Hilbert 5-class field of k = Q(⁵√n, ζ₅) when its 5-class group
 *        C is of type (5,5) and every class is ambiguous, and of the capitulation of C in the six
 *        unramified cyclic quintic extensions K₁…K₆ of k.
 *
 * Everything here is symbolic. A radical word π₁ᵃ π₃ᵇ wᶜ names the extension k(⁵√(π₁ᵃπ₃ᵇwᶜ));
 * a class word [P₁ᵃ P₃ᵇ P_wᶜ] names an ideal class of k, with P_i⁵ = π_i O_k. The auxiliary base w is
 * the inert prime π₅ = q (Case 2) or λ = 1 − ζ₅ (Case 3) and is absent in Case 1. Its exponent is
 * always a multiple of h₁, so words store that multiple: `w = 2` stands for w^(2h₁). This keeps all
 * results valid whether h₁ is a concrete value in {1,…,4} or left symbolic.
 *
 * Exponents live in F₅. Two radical words give the same extension iff one is a non-zero multiple of
 * the other; likewise two class words generate the same subgroup.
 *
 * Subgroup ordering: C = ⟨A⟩ × ⟨X⟩ with A spanning the τ²-fixed part and X the τ²-inverted part,
 * H₁ = ⟨A⟩, H₆ = ⟨X⟩, H_j = ⟨A·X^(j−1)⟩ for j = 2…5. K_j is the extension attached to H_j.
 */
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quintic/classification.hpp"
#include "quintic/cyclotomic.hpp"
#include "quintic/errors.hpp"
#include "quintic/primes.hpp"
#include "quintic/symbols.hpp"

namespace quintic {

enum class WBase { None, Pi5, Lambda };

inline const char* to_string(WBase b) {
  switch (b) {
    case WBase::None: return "none";
    case WBase::Pi5: return "pi5";
    case WBase::Lambda: return "lambda";
  }
  return "?";
}

inline WBase w_base_for(RadicandVariant v) {
  switch (v) {
    case RadicandVariant::Case2_PeQ: return WBase::Pi5;
    case RadicandVariant::Case3_5eP: return WBase::Lambda;
    default: return WBase::None;
  }
}

/// The exponent h₁ ∈ {1,…,4} of w in the first Hilbert class field generator, or a placeholder.
class H1 {
 public:
  static H1 symbolic() { return H1(std::nullopt); }
  static H1 exact(int h) {
    if (h < 1 || h > 4) throw InputError("h1 must lie in 1..4");
    return H1(h);
  }
  bool is_symbolic() const { return !value_; }
  int value() const { return *value_; }
  const std::optional<int>& optional() const { return value_; }

  friend bool operator==(const H1&, const H1&) = default;

 private:
  explicit H1(std::optional<int> v) : value_(v) {}
  std::optional<int> value_;
};

namespace detail {

inline int mod5(int x) { return ((x % 5) + 5) % 5; }

inline int inverse_mod5(int x) {
  static constexpr int kInv[5] = {0, 1, 3, 2, 4};
  return kInv[mod5(x)];
}

/// Exponent vector (π₁, π₃, w in units of h₁) over F₅, shared by radical and class words.
struct F5Vector {
  int pi1 = 0;
  int pi3 = 0;
  int w = 0;

  bool is_zero() const { return pi1 == 0 && pi3 == 0 && w == 0; }
  F5Vector scaled(int c) const { return {mod5(pi1 * c), mod5(pi3 * c), mod5(w * c)}; }
  F5Vector plus(const F5Vector& o) const { return {mod5(pi1 + o.pi1), mod5(pi3 + o.pi3), mod5(w + o.w)}; }
  F5Vector swapped() const { return {pi3, pi1, w}; }

  bool proportional(const F5Vector& o) const {
    for (int c = 1; c < 5; ++c)
      if (scaled(c) == o) return true;
    return false;
  }
  bool tau2_stable() const { return proportional(swapped()); }

  /// Presentation: scale w to 1·h₁ unless the word is τ²-stable or w-free, in which case the first
  /// non-zero of (π₁, π₃) becomes 1.
  F5Vector canonical() const {
    if (is_zero()) return *this;
    if (w != 0 && !tau2_stable()) return scaled(inverse_mod5(w));
    if (pi1 != 0) return scaled(inverse_mod5(pi1));
    if (pi3 != 0) return scaled(inverse_mod5(pi3));
    return scaled(inverse_mod5(w));
  }

  friend bool operator==(const F5Vector&, const F5Vector&) = default;
};

inline std::string power(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

inline std::string render(const F5Vector& v, const char* p1, const char* p3, const std::string& w_name,
                          const H1& h1) {
  std::vector<std::string> parts;
  if (v.pi1) parts.push_back(power(p1, v.pi1));
  if (v.pi3) parts.push_back(power(p3, v.pi3));
  if (v.w) {
    if (h1.is_symbolic()) {
      parts.push_back(w_name + "^(" + (v.w == 1 ? std::string() : std::to_string(v.w)) + "h1)");
    } else {
      const int e = mod5(v.w * h1.value());
      if (e) parts.push_back(power(w_name, e));
    }
  }
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

}  // namespace detail

/// π₁ᵃ π₃ᵇ w^(c·h₁) as the radicand of an unramified quintic extension of k.
struct RadicalWord {
  detail::F5Vector exponents;
  WBase base = WBase::None;

  static RadicalWord make(int pi1, int pi3, int w_multiple, WBase base) {
    return RadicalWord{{detail::mod5(pi1), detail::mod5(pi3), detail::mod5(w_multiple)}, base};
  }

  int w_exponent(const H1& h1) const {
    if (h1.is_symbolic()) throw EngineError("w exponent requested with symbolic h1");
    return detail::mod5(exponents.w * h1.value());
  }

  RadicalWord canonical() const { return RadicalWord{exponents.canonical(), base}; }

  /// Same extension of k.
  bool equivalent(const RadicalWord& o) const { return base == o.base && exponents.proportional(o.exponents); }

  std::string to_string(const H1& h1 = H1::symbolic()) const {
    const std::string w = base == WBase::Lambda ? "lambda" : "pi5";
    return detail::render(exponents, "pi1", "pi3", w, h1);
  }

  friend bool operator==(const RadicalWord&, const RadicalWord&) = default;
};

/// [P₁ᵃ P₃ᵇ P_w^(c·h₁)], an ideal class of k.
struct ClassWord {
  detail::F5Vector exponents;
  WBase base = WBase::None;

  static ClassWord make(int p1, int p3, int w_multiple, WBase base) {
    return ClassWord{{detail::mod5(p1), detail::mod5(p3), detail::mod5(w_multiple)}, base};
  }
  static ClassWord of(const RadicalWord& r) { return ClassWord{r.exponents, r.base}; }

  /// Same cyclic subgroup of C.
  bool generates_same(const ClassWord& o) const { return base == o.base && exponents.proportional(o.exponents); }

  std::string to_string(const H1& h1 = H1::symbolic()) const {
    const std::string w = base == WBase::Lambda ? "I" : "P5";
    return "[" + detail::render(exponents, "P1", "P3", w, h1) + "]";
  }

  friend bool operator==(const ClassWord&, const ClassWord&) = default;
};

enum class Character { Plus, Minus, Mixed };

inline const char* to_string(Character c) {
  switch (c) {
    case Character::Plus: return "plus";
    case Character::Minus: return "minus";
    case Character::Mixed: return "mixed";
  }
  return "?";
}

struct SubgroupDescriptor {
  int label = 0;  // j of H_j
  ClassWord generator;
  Character character = Character::Mixed;
  /// Generator as A^alpha · X^beta.
  std::array<int, 2> coordinates{0, 0};
  /// Whether ⟨generator⟩ is the subgroup the ordering H_j = ⟨A·X^(j−1)⟩ prescribes for label j.
  bool matches_ordering = true;

  friend bool operator==(const SubgroupDescriptor&, const SubgroupDescriptor&) = default;
};

struct ExtensionDescriptor {
  int label = 0;  // j of K_j
  std::vector<RadicalWord> candidates;
  bool resolved = false;

  friend bool operator==(const ExtensionDescriptor&, const ExtensionDescriptor&) = default;
};

/// (i₁,…,i₆): i_j ≠ 0 means only H_{i_j} capitulates in K_j, i_j = 0 means all of C does.
using CapitulationType = std::array<int, 6>;

struct GuaranteedCapitulation {
  RadicalWord extension;
  ClassWord capitulating_class;
  int subgroup = 0;  // label of ⟨capitulating_class⟩

  friend bool operator==(const GuaranteedCapitulation&, const GuaranteedCapitulation&) = default;
};

// ---------------------------------------------------------------------------

namespace detail {

inline void require_applicable(const RadicandClass& cls, const std::optional<H1>& h1) {
  if (!cls.applicable()) throw EngineError("radicand matches none of the three forms");
  if (cls.variant != RadicandVariant::Case1_PePrime25 && !h1)
    throw EngineError("h1 is required for " + std::string(to_string(cls.variant)));
}

}  // namespace detail

inline std::pair<RadicalWord, RadicalWord> hilbert_class_field_generators(const RadicandClass& cls,
                                                                         const std::optional<H1>& h1) {
  detail::require_applicable(cls, h1);
  const WBase b = w_base_for(cls.variant);
  if (cls.variant == RadicandVariant::Case1_PePrime25)
    return {RadicalWord::make(1, 0, 0, b), RadicalWord::make(0, 1, 0, b)};
  // x₂ = π₁π₃⁴ is the fixed choice of the second generator
  return {RadicalWord::make(1, 0, 1, b), RadicalWord::make(1, 4, 0, b)};
}

// ---------------------------------------------------------------------------
// h₁
// ---------------------------------------------------------------------------

struct H1Witness {
  int h1 = 0;
  Unit unit;
  /// u·π₁·w^h₁
  CycInt value;
  /// Rational residue r ∈ {1, 7, 18, 24} with value ≡ r (mod λ⁵).
  CycInt target;
};

struct H1Search {
  std::optional<H1Witness> witness;
  SearchFailure failure = SearchFailure::Impossible;

  bool found() const { return witness.has_value(); }
};

/// Smallest h ∈ {1,…,4}, then first unit in search order, with u·π₁·wʰ ≡ ±1, ±7 (mod λ⁵).
/// On failure reports Impossible only if no unit at all works for any h.
inline H1Search find_h1(const PrimeElement& pi1, const PrimeElement& w) {
  if (pi1.kind != PrimeKind::Split) throw UnsupportedOperation("find_h1: pi1 must be split");
  if (w.kind == PrimeKind::Split) throw UnsupportedOperation("find_h1: w must be inert or lambda");
  const auto targets = plus_minus_one_seven();
  bool any_possible = false;
  CycInt wh(1);
  for (int h = 1; h <= 4; ++h) {
    wh = wh * w.value;
    const CycInt x = pi1.value * wh;
    auto s = search_associate(x, 5, targets);
    if (s.found()) return H1Search{H1Witness{h, s.witness->unit, s.witness->normalized, s.witness->target}, {}};
    any_possible = any_possible || s.failure == SearchFailure::BoundExhausted;
  }
  H1Search out;
  out.failure = any_possible ? SearchFailure::BoundExhausted : SearchFailure::Impossible;
  return out;
}

/// Recomputes the witness congruence from scratch.
inline bool verify_h1_witness(const H1Witness& wit, const PrimeElement& pi1, const PrimeElement& w) {
  if (wit.h1 < 1 || wit.h1 > 4) return false;
  const CycInt value = wit.unit.value * pi1.value * pow(w.value, static_cast<unsigned long>(wit.h1));
  if (!(value == wit.value)) return false;
  const auto targets = plus_minus_one_seven();
  if (std::find(targets.begin(), targets.end(), wit.target) == targets.end()) return false;
  return congruent_mod_lambda_pow(value, wit.target, 5);
}

/// Projective classes of x₁, x₂, x₁x₂, x₁x₂², x₁x₂³, x₁x₂⁴ in presentation form.
inline std::vector<RadicalWord> six_extensions(const RadicalWord& x1, const RadicalWord& x2) {
  if (x1.base != x2.base) throw EngineError("six_extensions: generators over different bases");
  if (x1.exponents.is_zero() || x2.exponents.is_zero() || x1.equivalent(x2))
    throw EngineError("six_extensions: generators are not independent");
  std::vector<RadicalWord> out{x1.canonical(), x2.canonical()};
  detail::F5Vector acc = x1.exponents;
  for (int j = 1; j <= 4; ++j) {
    acc = acc.plus(x2.exponents);
    out.push_back(RadicalWord{acc, x1.base}.canonical());
  }
  return out;
}

inline RadicalWord tau2_orbit(const RadicalWord& word) {
  return RadicalWord{word.exponents.swapped(), word.base}.canonical();
}

/// The generators A (τ²-fixed) and X (τ²-inverted) of C.
inline std::pair<ClassWord, ClassWord> class_group_generators(const RadicandClass& cls) {
  const WBase b = w_base_for(cls.variant);
  if (cls.variant == RadicandVariant::Case1_PePrime25) return {ClassWord::make(1, 1, 0, b), ClassWord::make(1, 4, 0, b)};
  return {ClassWord::make(1, 1, 2, b), ClassWord::make(1, 4, 0, b)};
}

/// Coordinates (α, β) with c = A^α X^β, or nullopt if c is outside ⟨A, X⟩.
inline std::optional<std::array<int, 2>> coordinates_in_basis(const ClassWord& c, const RadicandClass& cls) {
  const auto [A, X] = class_group_generators(cls);
  for (int alpha = 0; alpha < 5; ++alpha)
    for (int beta = 0; beta < 5; ++beta)
      if (A.exponents.scaled(alpha).plus(X.exponents.scaled(beta)) == c.exponents) return std::array{alpha, beta};
  return std::nullopt;
}

inline Character character_of(const ClassWord& c) {
  const auto s = c.exponents.swapped();
  if (s == c.exponents) return Character::Plus;
  if (s == c.exponents.scaled(4)) return Character::Minus;
  return Character::Mixed;
}

/// H₁…H₆ with the generator words.
///
/// For Cases 2 and 3 the generators listed for H₃ and H₄ lie in ⟨A·X³⟩ and ⟨A·X²⟩ respectively,
/// i.e. they are exchanged relative to the ordering; `matches_ordering` records this.
inline std::vector<SubgroupDescriptor> subgroup_table(const RadicandClass& cls, const std::optional<H1>& h1) {
  detail::require_applicable(cls, h1);
  const WBase b = w_base_for(cls.variant);
  std::vector<ClassWord> gens;
  if (cls.variant == RadicandVariant::Case1_PePrime25) {
    gens = {ClassWord::make(1, 1, 0, b), ClassWord::make(1, 0, 0, b), ClassWord::make(1, 3, 0, b),
            ClassWord::make(1, 2, 0, b), ClassWord::make(0, 1, 0, b), ClassWord::make(1, 4, 0, b)};
  } else {
    gens = {ClassWord::make(1, 1, 2, b), ClassWord::make(1, 0, 1, b), ClassWord::make(2, 4, 1, b),
            ClassWord::make(4, 2, 1, b), ClassWord::make(0, 1, 1, b), ClassWord::make(1, 4, 0, b)};
  }
  std::vector<SubgroupDescriptor> out;
  for (int j = 1; j <= 6; ++j) {
    const auto& g = gens[static_cast<std::size_t>(j - 1)];
    const auto coords = coordinates_in_basis(g, cls);
    if (!coords) throw std::logic_error("subgroup generator outside <A, X>");
    const detail::F5Vector actual{(*coords)[0], (*coords)[1], 0};
    const detail::F5Vector expected = j == 1 ? detail::F5Vector{1, 0, 0}
                                      : j == 6 ? detail::F5Vector{0, 1, 0}
                                               : detail::F5Vector{1, j - 1, 0};
    out.push_back(SubgroupDescriptor{j, g, character_of(g), *coords, actual.proportional(expected)});
  }
  return out;
}

/// Label of the H_j in `table` generated by c, or 0 if c generates none of them.
inline int subgroup_index(const ClassWord& c, const std::vector<SubgroupDescriptor>& table) {
  for (const auto& h : table)
    if (h.generator.generates_same(c)) return h.label;
  return 0;
}

/// K₁…K₆ as radical words. Unresolved entries keep both admissible candidates in order.
inline std::vector<ExtensionDescriptor> correspondence(const RadicandClass& cls, const SymbolValue& symbol_pi1_pi3,
                                                       const std::optional<H1>& h1) {
  detail::require_applicable(cls, h1);
  const WBase b = w_base_for(cls.variant);
  auto w = [b](int a, int c, int m) { return RadicalWord::make(a, c, m, b); };
  if (cls.variant == RadicandVariant::Case1_PePrime25) {
    RadicalWord k2 = w(0, 1, 0), k5 = w(1, 0, 0);
    if (!symbol_pi1_pi3.is_trivial()) std::swap(k2, k5);
    return {
        {1, {w(1, 1, 0), w(1, 4, 0)}, false}, {2, {k2}, true},
        {3, {w(1, 2, 0), w(1, 3, 0)}, false}, {4, {w(1, 3, 0), w(1, 2, 0)}, false},
        {5, {k5}, true},                      {6, {w(1, 4, 0), w(1, 1, 0)}, false},
    };
  }
  return {
      {1, {w(1, 4, 0), w(1, 1, 2)}, false}, {2, {w(1, 0, 1), w(0, 1, 1)}, false},
      {3, {w(2, 4, 1), w(4, 2, 1)}, false}, {4, {w(4, 2, 1), w(2, 4, 1)}, false},
      {5, {w(0, 1, 1), w(1, 0, 1)}, false}, {6, {w(1, 1, 2), w(1, 4, 0)}, false},
  };
}

/// For each of the six extensions k(⁵√x): the class whose 5th power is x O_k, which becomes
/// principal (generated by ⁵√x) there.
inline std::vector<GuaranteedCapitulation> guaranteed_capitulations(const RadicandClass& cls,
                                                                    const std::optional<H1>& h1) {
  const auto [x1, x2] = hilbert_class_field_generators(cls, h1);
  const auto table = subgroup_table(cls, h1);
  std::vector<GuaranteedCapitulation> out;
  for (const auto& word : six_extensions(x1, x2)) {
    const auto c = ClassWord::of(word);
    out.push_back(GuaranteedCapitulation{word, c, subgroup_index(c, table)});
  }
  return out;
}

/// Permutation induced by τ² on the descriptors: result[j−1] = label of the descriptor whose
/// candidate list is the τ²-image of K_j's list, or 0 if there is none.
inline std::array<int, 6> induced_tau2_permutation(const std::vector<ExtensionDescriptor>& ks) {
  std::array<int, 6> perm{0, 0, 0, 0, 0, 0};
  for (std::size_t j = 0; j < ks.size() && j < 6; ++j) {
    std::vector<RadicalWord> image;
    for (const auto& c : ks[j].candidates) image.push_back(tau2_orbit(c));
    for (const auto& other : ks) {
      if (other.candidates.size() != image.size()) continue;
      bool same = true;
      for (std::size_t i = 0; i < image.size(); ++i) same = same && image[i].equivalent(other.candidates[i]);
      if (same) {
        perm[j] = other.label;
        break;
      }
    }
  }
  return perm;
}

// ---------------------------------------------------------------------------
// Possible capitulation types
// ---------------------------------------------------------------------------

/// Which of the two τ²-stable candidates is K₆.
enum class K6Choice {
  /// K₆ = k(⁵√(π₁π₃⁴)), the X-word.
  Pi1Pi3Fourth,
  /// K₆ = k(⁵√(π₁π₃)) in Case 1, k(⁵√(π₁π₃w^(2h₁))) in Cases 2/3, the A-word.
  Symmetric,
};

inline const char* to_string(K6Choice c) { return c == K6Choice::Pi1Pi3Fourth ? "pi1*pi3^4" : "symmetric"; }

inline RadicalWord k6_word(const RadicandClass& cls, K6Choice c) {
  const WBase b = w_base_for(cls.variant);
  if (c == K6Choice::Pi1Pi3Fourth) return RadicalWord::make(1, 4, 0, b);
  return cls.variant == RadicandVariant::Case1_PePrime25 ? RadicalWord::make(1, 1, 0, b) : RadicalWord::make(1, 1, 2, b);
}

namespace detail {

inline std::vector<CapitulationType> case1_base_types() {
  return {
      {0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 5, 0}, {1, 2, 0, 0, 5, 0},
      {0, 0, 3, 4, 0, 0}, {0, 0, 4, 3, 0, 0}, {1, 0, 3, 4, 0, 0}, {1, 0, 4, 3, 0, 0},
      {0, 2, 3, 4, 5, 0}, {0, 2, 4, 3, 5, 0}, {1, 2, 3, 4, 5, 0}, {1, 2, 4, 3, 5, 0},
  };
}

inline std::vector<CapitulationType> case2_base_types() {
  return {
      {0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
      {0, 5, 0, 0, 2, 0}, {0, 2, 0, 0, 5, 0},
      {1, 5, 0, 0, 2, 0}, {1, 2, 0, 0, 5, 0},
      {0, 5, 4, 3, 2, 0}, {0, 2, 4, 3, 5, 0},
      {1, 5, 4, 3, 2, 0}, {1, 2, 4, 3, 5, 0},
      {0, 5, 3, 4, 2, 0}, {0, 2, 3, 4, 5, 0},
      {1, 5, 3, 4, 2, 0}, {1, 2, 3, 4, 5, 0},
      {0, 0, 3, 4, 0, 0}, {0, 0, 4, 3, 0, 0},
      {1, 0, 3, 4, 0, 0}, {1, 0, 4, 3, 0, 0},
  };
}

/// K₁ and K₆ exchange roles: a non-zero i₁ becomes 6, i₆ ranges over {0, 1}.
inline std::vector<CapitulationType> exchange_k1_k6(const std::vector<CapitulationType>& base) {
  std::vector<CapitulationType> out;
  for (auto t : base) {
    if (t[0] == 1) t[0] = 6;
    for (int i6 : {0, 1}) {
      t[5] = i6;
      out.push_back(t);
    }
  }
  return out;
}

inline std::vector<CapitulationType> swap_values_2_5(std::vector<CapitulationType> types) {
  for (auto& t : types)
    for (auto& v : t) v = v == 2 ? 5 : v == 5 ? 2 : v;
  return types;
}

}  // namespace detail

inline std::vector<CapitulationType> possible_types(const RadicandClass& cls, const SymbolValue& symbol_pi1_pi3,
                                                    K6Choice k6) {
  if (!cls.applicable()) throw EngineError("radicand matches none of the three forms");
  if (cls.variant == RadicandVariant::Case1_PePrime25) {
    auto types = detail::case1_base_types();
    if (k6 == K6Choice::Symmetric) types = detail::exchange_k1_k6(types);
    if (!symbol_pi1_pi3.is_trivial()) types = detail::swap_values_2_5(std::move(types));
    return types;
  }
  auto types = detail::case2_base_types();
  if (k6 == K6Choice::Symmetric) types = detail::exchange_k1_k6(types);
  return types;
}

/// Positions j (1-based) where a resolved K_j and its guaranteed capitulating class disagree with t:
/// i_j must be 0 or the label of the subgroup generated by the class word of K_j's radicand.
inline std::vector<int> witness_conflicts(const CapitulationType& t, const std::vector<ExtensionDescriptor>& ks,
                                          const std::vector<SubgroupDescriptor>& table) {
  std::vector<int> out;
  for (const auto& k : ks) {
    if (!k.resolved || k.candidates.size() != 1) continue;
    const int idx = subgroup_index(ClassWord::of(k.candidates.front()), table);
    const int v = t[static_cast<std::size_t>(k.label - 1)];
    if (v != 0 && v != idx) out.push_back(k.label);
  }
  return out;
}

inline bool pair_parity_holds(const CapitulationType& t) {
  return ((t[1] == 0) == (t[4] == 0)) && ((t[2] == 0) == (t[3] == 0));
}

inline std::string to_string(const CapitulationType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace quintic

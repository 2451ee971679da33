#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "quintic/capitulation.hpp"

using namespace quintic;

namespace {

const RadicandClass kCase1 = classify_radicand(151);
const RadicandClass kCase2 = classify_radicand(93);
const RadicandClass kCase3 = classify_radicand(55);
const std::optional<H1> kSym = H1::symbolic();

RadicalWord rw(int a, int b, int w, WBase base) { return RadicalWord::make(a, b, w, base); }
ClassWord cw(int a, int b, int w, WBase base) { return ClassWord::make(a, b, w, base); }

bool contains(const std::vector<CapitulationType>& ts, CapitulationType t) {
  return std::find(ts.begin(), ts.end(), t) != ts.end();
}

}  // namespace

TEST(Words, ProjectiveEquality) {
  EXPECT_TRUE(rw(1, 3, 0, WBase::None).equivalent(rw(2, 1, 0, WBase::None)));
  EXPECT_FALSE(rw(1, 3, 0, WBase::None).equivalent(rw(1, 2, 0, WBase::None)));
  EXPECT_FALSE(rw(1, 0, 1, WBase::Pi5).equivalent(rw(1, 0, 1, WBase::Lambda)));
  EXPECT_EQ(rw(6, -1, 0, WBase::None), rw(1, 4, 0, WBase::None));
}

TEST(Words, Rendering) {
  EXPECT_EQ(rw(1, 1, 2, WBase::Pi5).to_string(), "pi1*pi3*pi5^(2h1)");
  EXPECT_EQ(rw(0, 1, 1, WBase::Lambda).to_string(), "pi3*lambda^(h1)");
  EXPECT_EQ(rw(1, 0, 1, WBase::Pi5).to_string(H1::exact(4)), "pi1*pi5^4");
  EXPECT_EQ(rw(1, 1, 2, WBase::Pi5).to_string(H1::exact(4)), "pi1*pi3*pi5^3");
  EXPECT_EQ(cw(1, 4, 0, WBase::None).to_string(), "[P1*P3^4]");
  EXPECT_EQ(cw(0, 1, 1, WBase::Lambda).to_string(), "[P3*I^(h1)]");
  EXPECT_EQ(rw(1, 0, 1, WBase::Pi5).w_exponent(H1::exact(3)), 3);
  EXPECT_THROW(rw(1, 0, 1, WBase::Pi5).w_exponent(H1::symbolic()), EngineError);
  EXPECT_THROW(H1::exact(0), InputError);
  EXPECT_THROW(H1::exact(5), InputError);
}

TEST(Generators, AllCases) {
  auto [a, b] = hilbert_class_field_generators(kCase1, std::nullopt);
  EXPECT_EQ(a, rw(1, 0, 0, WBase::None));
  EXPECT_EQ(b, rw(0, 1, 0, WBase::None));
  std::tie(a, b) = hilbert_class_field_generators(kCase2, kSym);
  EXPECT_EQ(a, rw(1, 0, 1, WBase::Pi5));
  EXPECT_EQ(b, rw(1, 4, 0, WBase::Pi5));
  std::tie(a, b) = hilbert_class_field_generators(kCase3, H1::exact(2));
  EXPECT_EQ(a, rw(1, 0, 1, WBase::Lambda));
  EXPECT_EQ(a.to_string(H1::exact(2)), "pi1*lambda^2");
}

TEST(Generators, Preconditions) {
  EXPECT_THROW(hilbert_class_field_generators(kCase2, std::nullopt), EngineError);
  EXPECT_THROW(hilbert_class_field_generators(kCase3, std::nullopt), EngineError);
  EXPECT_THROW(hilbert_class_field_generators(classify_radicand(2111), kSym), EngineError);
  EXPECT_THROW(subgroup_table(kCase2, std::nullopt), EngineError);
  EXPECT_THROW(correspondence(kCase3, SymbolValue{0}, std::nullopt), EngineError);
}

TEST(SixExtensions, CaseOne) {
  const auto [x1, x2] = hilbert_class_field_generators(kCase1, std::nullopt);
  const auto six = six_extensions(x1, x2);
  const std::vector<RadicalWord> expected{rw(1, 0, 0, WBase::None), rw(0, 1, 0, WBase::None), rw(1, 1, 0, WBase::None),
                                          rw(1, 2, 0, WBase::None), rw(1, 3, 0, WBase::None), rw(1, 4, 0, WBase::None)};
  EXPECT_EQ(six, expected);
}

TEST(SixExtensions, CaseTwo) {
  const auto [x1, x2] = hilbert_class_field_generators(kCase2, kSym);
  const auto six = six_extensions(x1, x2);
  const std::vector<RadicalWord> expected{rw(1, 0, 1, WBase::Pi5), rw(1, 4, 0, WBase::Pi5), rw(2, 4, 1, WBase::Pi5),
                                          rw(1, 1, 2, WBase::Pi5), rw(4, 2, 1, WBase::Pi5), rw(0, 1, 1, WBase::Pi5)};
  EXPECT_EQ(six, expected);
}

TEST(SixExtensions, PairwiseDistinctAndContainGenerators) {
  for (const auto& cls : {kCase1, kCase2, kCase3}) {
    const auto [x1, x2] = hilbert_class_field_generators(cls, kSym);
    const auto six = six_extensions(x1, x2);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j) EXPECT_FALSE(six[i].equivalent(six[j]));
    EXPECT_TRUE(six[0].equivalent(x1));
    EXPECT_TRUE(six[1].equivalent(x2));
  }
  EXPECT_THROW(six_extensions(rw(1, 2, 0, WBase::None), rw(2, 4, 0, WBase::None)), EngineError);
  EXPECT_THROW(six_extensions(rw(1, 0, 0, WBase::None), rw(1, 0, 1, WBase::Pi5)), EngineError);
}

TEST(Tau2, Orbits) {
  EXPECT_EQ(tau2_orbit(rw(1, 0, 0, WBase::None)), rw(0, 1, 0, WBase::None));
  EXPECT_EQ(tau2_orbit(rw(1, 1, 0, WBase::None)), rw(1, 1, 0, WBase::None));
  EXPECT_TRUE(tau2_orbit(rw(1, 4, 0, WBase::None)).equivalent(rw(1, 4, 0, WBase::None)));
  EXPECT_EQ(tau2_orbit(rw(2, 4, 1, WBase::Pi5)), rw(4, 2, 1, WBase::Pi5));
  EXPECT_EQ(tau2_orbit(rw(1, 1, 2, WBase::Pi5)), rw(1, 1, 2, WBase::Pi5));
}

TEST(Tau2, InducedPermutationOnDescriptors) {
  const std::array<int, 6> expected{1, 5, 4, 3, 2, 6};
  for (const auto& cls : {kCase1, kCase2, kCase3})
    for (int s = 0; s < 5; ++s) EXPECT_EQ(induced_tau2_permutation(correspondence(cls, SymbolValue{s}, kSym)), expected);
}

TEST(Tau2, InducedPermutationOnSixWords) {
  for (const auto& cls : {kCase1, kCase2, kCase3}) {
    const auto caps = guaranteed_capitulations(cls, kSym);
    const auto table = subgroup_table(cls, kSym);
    std::array<int, 7> perm{};
    for (const auto& g : caps) perm[g.subgroup] = subgroup_index(ClassWord::of(tau2_orbit(g.extension)), table);
    EXPECT_EQ(perm, (std::array<int, 7>{0, 1, 5, 4, 3, 2, 6}));
  }
}

TEST(Subgroups, CaseOne) {
  const auto t = subgroup_table(kCase1, std::nullopt);
  ASSERT_EQ(t.size(), 6u);
  EXPECT_EQ(t[0].generator, cw(1, 1, 0, WBase::None));
  EXPECT_EQ(t[1].generator, cw(1, 0, 0, WBase::None));
  EXPECT_EQ(t[2].generator, cw(1, 3, 0, WBase::None));
  EXPECT_EQ(t[3].generator, cw(1, 2, 0, WBase::None));
  EXPECT_EQ(t[4].generator, cw(0, 1, 0, WBase::None));
  EXPECT_EQ(t[5].generator, cw(1, 4, 0, WBase::None));
  for (const auto& s : t) EXPECT_TRUE(s.matches_ordering) << s.label;
}

TEST(Subgroups, CaseTwoWordsAndOrdering) {
  const auto t = subgroup_table(kCase2, kSym);
  EXPECT_EQ(t[1].generator, cw(1, 0, 1, WBase::Pi5));
  EXPECT_EQ(t[2].generator, cw(2, 4, 1, WBase::Pi5));
  EXPECT_EQ(t[3].generator, cw(4, 2, 1, WBase::Pi5));
  EXPECT_EQ(t[4].generator, cw(0, 1, 1, WBase::Pi5));
  // the H3 and H4 words sit in <A·X³> and <A·X²>
  EXPECT_TRUE(t[0].matches_ordering);
  EXPECT_TRUE(t[1].matches_ordering);
  EXPECT_FALSE(t[2].matches_ordering);
  EXPECT_FALSE(t[3].matches_ordering);
  EXPECT_TRUE(t[4].matches_ordering);
  EXPECT_TRUE(t[5].matches_ordering);
  EXPECT_EQ(t[2].coordinates, (std::array<int, 2>{3, 4}));
  EXPECT_EQ(t[3].coordinates, (std::array<int, 2>{3, 1}));
}

TEST(Subgroups, CharactersAndCoordinates) {
  for (const auto& cls : {kCase1, kCase2, kCase3}) {
    const auto t = subgroup_table(cls, kSym);
    EXPECT_EQ(t[0].character, Character::Plus);
    EXPECT_EQ(t[5].character, Character::Minus);
    for (int j = 1; j < 5; ++j) EXPECT_EQ(t[j].character, Character::Mixed);
    const auto [A, X] = class_group_generators(cls);
    for (const auto& s : t) {
      const auto c = coordinates_in_basis(s.generator, cls);
      ASSERT_TRUE(c.has_value());
      EXPECT_EQ(A.exponents.scaled((*c)[0]).plus(X.exponents.scaled((*c)[1])), s.generator.exponents);
    }
  }
  EXPECT_FALSE(coordinates_in_basis(cw(1, 0, 0, WBase::Pi5), kCase2).has_value());
}

TEST(Correspondence, CaseOne) {
  const auto k = correspondence(kCase1, SymbolValue{0}, std::nullopt);
  EXPECT_TRUE(k[1].resolved);
  EXPECT_EQ(k[1].candidates, std::vector<RadicalWord>{rw(0, 1, 0, WBase::None)});
  EXPECT_EQ(k[4].candidates, std::vector<RadicalWord>{rw(1, 0, 0, WBase::None)});
  EXPECT_FALSE(k[0].resolved);
  EXPECT_EQ(k[0].candidates.size(), 2u);
  const auto swapped = correspondence(kCase1, SymbolValue{2}, std::nullopt);
  EXPECT_EQ(swapped[1].candidates, std::vector<RadicalWord>{rw(1, 0, 0, WBase::None)});
  EXPECT_EQ(swapped[4].candidates, std::vector<RadicalWord>{rw(0, 1, 0, WBase::None)});
}

TEST(Correspondence, CaseTwo) {
  const auto k = correspondence(kCase2, SymbolValue{0}, kSym);
  for (const auto& d : k) {
    EXPECT_FALSE(d.resolved);
    EXPECT_EQ(d.candidates.size(), 2u);
  }
  EXPECT_EQ(k[0].candidates, (std::vector<RadicalWord>{rw(1, 4, 0, WBase::Pi5), rw(1, 1, 2, WBase::Pi5)}));
  EXPECT_EQ(k[1].candidates, (std::vector<RadicalWord>{rw(1, 0, 1, WBase::Pi5), rw(0, 1, 1, WBase::Pi5)}));
  EXPECT_EQ(correspondence(kCase2, SymbolValue{3}, kSym), k);
}

TEST(Correspondence, CaseThreeIsCaseTwoWithLambda) {
  const auto two = correspondence(kCase2, SymbolValue{0}, kSym);
  const auto three = correspondence(kCase3, SymbolValue{0}, kSym);
  ASSERT_EQ(two.size(), three.size());
  for (std::size_t j = 0; j < two.size(); ++j) {
    ASSERT_EQ(two[j].candidates.size(), three[j].candidates.size());
    for (std::size_t i = 0; i < two[j].candidates.size(); ++i) {
      EXPECT_EQ(two[j].candidates[i].exponents, three[j].candidates[i].exponents);
      EXPECT_EQ(three[j].candidates[i].base, WBase::Lambda);
    }
  }
}

TEST(Capitulations, Witnesses) {
  const auto one = guaranteed_capitulations(kCase1, std::nullopt);
  ASSERT_EQ(one.size(), 6u);
  for (const auto& g : one) EXPECT_EQ(g.capitulating_class.exponents, g.extension.exponents);
  EXPECT_EQ(one[0].capitulating_class, cw(1, 0, 0, WBase::None));
  EXPECT_EQ(one[0].subgroup, 2);
  EXPECT_EQ(one[1].subgroup, 5);
  EXPECT_EQ(one[3].capitulating_class, cw(1, 2, 0, WBase::None));
  EXPECT_EQ(one[3].subgroup, 4);
  const auto two = guaranteed_capitulations(kCase2, kSym);
  EXPECT_EQ(two[5].extension, rw(0, 1, 1, WBase::Pi5));
  EXPECT_EQ(two[5].capitulating_class, cw(0, 1, 1, WBase::Pi5));
  EXPECT_EQ(two[5].subgroup, 5);
  std::set<int> labels;
  for (const auto& g : two) labels.insert(g.subgroup);
  EXPECT_EQ(labels, (std::set<int>{1, 2, 3, 4, 5, 6}));
}

TEST(Types, CaseOneFirstList) {
  const auto t = possible_types(kCase1, SymbolValue{0}, K6Choice::Pi1Pi3Fourth);
  EXPECT_EQ(t.size(), 12u);
  EXPECT_TRUE(contains(t, {1, 2, 3, 4, 5, 0}));
  EXPECT_TRUE(contains(t, {0, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(contains(t, {0, 2, 4, 3, 5, 0}));
  EXPECT_EQ(std::set<CapitulationType>(t.begin(), t.end()).size(), t.size());
}

TEST(Types, CaseOneSecondList) {
  const auto first = possible_types(kCase1, SymbolValue{0}, K6Choice::Pi1Pi3Fourth);
  const auto t = possible_types(kCase1, SymbolValue{0}, K6Choice::Symmetric);
  EXPECT_EQ(t.size(), 24u);
  for (const auto& x : t) {
    EXPECT_TRUE(x[0] == 0 || x[0] == 6);
    EXPECT_TRUE(x[5] == 0 || x[5] == 1);
  }
  EXPECT_TRUE(contains(t, {6, 2, 3, 4, 5, 1}));
  EXPECT_EQ(std::set<CapitulationType>(t.begin(), t.end()).size(), t.size());
  EXPECT_NE(first, t);
}

TEST(Types, CaseOneNonTrivialSymbolSwapsTwoAndFive) {
  for (auto k6 : {K6Choice::Pi1Pi3Fourth, K6Choice::Symmetric}) {
    const auto base = possible_types(kCase1, SymbolValue{0}, k6);
    const auto t = possible_types(kCase1, SymbolValue{1}, k6);
    ASSERT_EQ(base.size(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      CapitulationType s = base[i];
      std::swap(s[1], s[4]);
      EXPECT_EQ(t[i], s);
    }
  }
  EXPECT_TRUE(contains(possible_types(kCase1, SymbolValue{4}, K6Choice::Pi1Pi3Fourth), {1, 5, 3, 4, 2, 0}));
}

TEST(Types, CaseTwoLists) {
  const auto t = possible_types(kCase2, SymbolValue{0}, K6Choice::Pi1Pi3Fourth);
  EXPECT_EQ(t.size(), 18u);
  EXPECT_TRUE(contains(t, {1, 5, 4, 3, 2, 0}));
  EXPECT_TRUE(contains(t, {0, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(contains(t, {1, 0, 4, 3, 0, 0}));
  const auto alt = possible_types(kCase2, SymbolValue{0}, K6Choice::Symmetric);
  EXPECT_EQ(alt.size(), 36u);
  for (const auto& x : alt) EXPECT_TRUE(x[5] == 0 || x[5] == 1);
  // the symbol plays no role outside Case 1
  EXPECT_EQ(possible_types(kCase2, SymbolValue{3}, K6Choice::Pi1Pi3Fourth), t);
}

TEST(Types, CaseThreeEqualsCaseTwo) {
  for (auto k6 : {K6Choice::Pi1Pi3Fourth, K6Choice::Symmetric})
    EXPECT_EQ(possible_types(kCase3, SymbolValue{0}, k6), possible_types(kCase2, SymbolValue{0}, k6));
}

TEST(Types, PairParityAndRange) {
  for (const auto& cls : {kCase1, kCase2, kCase3})
    for (int s = 0; s < 5; ++s)
      for (auto k6 : {K6Choice::Pi1Pi3Fourth, K6Choice::Symmetric})
        for (const auto& t : possible_types(cls, SymbolValue{s}, k6)) {
          EXPECT_TRUE(pair_parity_holds(t)) << to_string(t);
          for (int v : t) EXPECT_TRUE(v >= 0 && v <= 6);
        }
}

TEST(Types, ResolvedSlotsVersusWitnesses) {
  // Case 2/3: nothing is resolved, so nothing can conflict
  for (const auto& cls : {kCase2, kCase3}) {
    const auto ks = correspondence(cls, SymbolValue{0}, kSym);
    const auto table = subgroup_table(cls, kSym);
    for (auto k6 : {K6Choice::Pi1Pi3Fourth, K6Choice::Symmetric})
      for (const auto& t : possible_types(cls, SymbolValue{0}, k6)) EXPECT_TRUE(witness_conflicts(t, ks, table).empty());
  }
  // Case 1: the listed types put i₂ = 2 next to K₂ = k(⁵√π₃), whose own class [P₃] spans H₅.
  // Pin exactly where the two readings part ways.
  for (int s : {0, 1}) {
    const auto ks = correspondence(kCase1, SymbolValue{s}, std::nullopt);
    const auto table = subgroup_table(kCase1, std::nullopt);
    for (auto k6 : {K6Choice::Pi1Pi3Fourth, K6Choice::Symmetric})
      for (const auto& t : possible_types(kCase1, SymbolValue{s}, k6)) {
        const auto bad = witness_conflicts(t, ks, table);
        if (t[1] == 0) {
          EXPECT_TRUE(bad.empty()) << to_string(t);
        } else {
          EXPECT_EQ(bad, (std::vector<int>{2, 5})) << to_string(t);
        }
      }
  }
}

TEST(Types, K6Words) {
  EXPECT_EQ(k6_word(kCase1, K6Choice::Pi1Pi3Fourth), rw(1, 4, 0, WBase::None));
  EXPECT_EQ(k6_word(kCase1, K6Choice::Symmetric), rw(1, 1, 0, WBase::None));
  EXPECT_EQ(k6_word(kCase2, K6Choice::Symmetric), rw(1, 1, 2, WBase::Pi5));
  EXPECT_THROW(possible_types(classify_radicand(2), SymbolValue{0}, K6Choice::Symmetric), EngineError);
}

TEST(FindH1, PositiveControl843) {
  const auto pi1 = factor_rational_prime(281).factors[0];
  const auto w = factor_rational_prime(3).factors[0];
  const auto s = find_h1(pi1, w);
  ASSERT_TRUE(s.found());
  EXPECT_EQ(s.witness->h1, 4);
  EXPECT_EQ(s.witness->unit.sign, 1);
  EXPECT_EQ(s.witness->unit.zeta_power, 4);
  EXPECT_EQ(s.witness->unit.one_plus_zeta_power, -2);
  EXPECT_EQ(s.witness->target, CycInt(7));
  EXPECT_TRUE(verify_h1_witness(*s.witness, pi1, w));
  EXPECT_TRUE(oracle::in_lambda_pow(oracle::from(s.witness->value - s.witness->target), 5));
  auto tampered = *s.witness;
  tampered.h1 = 3;
  EXPECT_FALSE(verify_h1_witness(tampered, pi1, w));
}

TEST(FindH1, TableOneCaseTwoRowsHaveNoWitness) {
  for (std::uint64_t n : {93u, 382u, 943u, 1457u, 6943u, 8507u, 12707u}) {
    const auto c = classify_radicand(n);
    const auto s = find_h1(factor_rational_prime(*c.p).factors[0], factor_rational_prime(*c.q).factors[0]);
    EXPECT_FALSE(s.found()) << n;
    EXPECT_EQ(s.failure, SearchFailure::Impossible) << n;
  }
}

TEST(FindH1, LambdaNeverWorks) {
  // λ | u·π₁·λʰ while every target is prime to λ
  for (std::uint64_t p : {11u, 131u, 71u}) {
    const auto s = find_h1(factor_rational_prime(p).factors[0], lambda_prime());
    EXPECT_FALSE(s.found());
    EXPECT_EQ(s.failure, SearchFailure::Impossible);
  }
}

TEST(FindH1, Preconditions) {
  const auto pi = factor_rational_prime(11).factors[0];
  EXPECT_THROW(find_h1(factor_rational_prime(3).factors[0], lambda_prime()), UnsupportedOperation);
  EXPECT_THROW(find_h1(pi, factor_rational_prime(31).factors[0]), UnsupportedOperation);
}

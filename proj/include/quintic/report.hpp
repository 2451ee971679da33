/**
 * @file report.hpp
 * @brief End-to-end pipeline for a single radicand: classify, factor, normalize, h₁, symbol, engine.
 *        Renders as text or JSON; JSON round-trips losslessly.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quintic/capitulation.hpp"
#include "quintic/classification.hpp"
#include "quintic/cyclotomic.hpp"
#include "quintic/primes.hpp"
#include "quintic/symbols.hpp"

namespace quintic {

struct PrimeRecord {
  std::string label;
  std::uint64_t rational_prime = 0;
  PrimeKind kind = PrimeKind::Split;
  CycInt value;
  std::optional<std::uint64_t> root;

  friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

/// Case 1: π₁ replaced by an associate ≡ 1 (mod λᵏ) for the largest k ≤ 5 that admits one.
struct NormalizationRecord {
  int k = 0;
  std::optional<Unit> unit;
  std::optional<SearchFailure> failure_at_5;

  friend bool operator==(const NormalizationRecord&, const NormalizationRecord&) = default;
};

struct H1Record {
  std::optional<int> value;
  std::optional<Unit> unit;
  std::optional<CycInt> product;
  std::optional<CycInt> target;
  bool verified = false;
  std::optional<SearchFailure> failure;

  friend bool operator==(const H1Record&, const H1Record&) = default;
};

struct TypeList {
  K6Choice k6 = K6Choice::Pi1Pi3Fourth;
  RadicalWord k6_word;
  std::vector<CapitulationType> types;

  friend bool operator==(const TypeList&, const TypeList&) = default;
};

struct Report {
  std::uint64_t n = 0;
  RadicandClass classification;
  std::vector<PrimeRecord> primes;
  std::optional<NormalizationRecord> normalization;
  std::optional<H1Record> h1;
  std::optional<SymbolValue> symbol_pi1_pi3;
  std::vector<RadicalWord> generators;
  std::vector<RadicalWord> six_extensions;
  std::vector<SubgroupDescriptor> subgroups;
  std::vector<ExtensionDescriptor> extensions;
  std::vector<GuaranteedCapitulation> capitulations;
  std::vector<TypeList> possible_types;
  std::vector<std::string> notes;

  bool applicable() const { return classification.applicable(); }
  H1 effective_h1() const {
    return h1 && h1->value ? H1::exact(*h1->value) : H1::symbolic();
  }

  friend bool operator==(const Report&, const Report&) = default;
};

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

namespace detail {

inline std::string unit_to_string(const Unit& u) {
  std::string s = u.sign < 0 ? "-" : "";
  s += "zeta^" + std::to_string(u.zeta_power) + "*(1+zeta)^" + std::to_string(u.one_plus_zeta_power);
  return s;
}

inline std::vector<PrimeRecord> split_records(const CycInt& pi1, std::uint64_t p, std::uint64_t r) {
  std::vector<PrimeRecord> out;
  std::uint64_t root = r;
  for (int j = 0; j < 4; ++j) {
    out.push_back(PrimeRecord{"pi" + std::to_string(j + 1), p, PrimeKind::Split, galois_apply(pi1, j), root});
    root = powmod(root, 3, p);
  }
  return out;
}

inline PrimeElement as_element(const PrimeRecord& r, int label) {
  return PrimeElement{r.value, r.kind, label, r.rational_prime, r.root};
}

}  // namespace detail

inline Report run_report(std::uint64_t n) {
  Report rep;
  rep.n = n;
  rep.classification = classify_radicand(n);
  if (!rep.applicable()) {
    rep.notes.push_back("n matches none of the three radicand forms; nothing further is computed");
    return rep;
  }
  const auto& cls = rep.classification;
  const std::uint64_t p = *cls.p;
  const auto split = factor_rational_prime(p);
  const PrimeElement raw_pi1 = split.factors.front();
  rep.notes.push_back("root of Phi_5 mod " + std::to_string(p) + ": r = " + std::to_string(*split.root) +
                      "; pi1 = gcd(p, zeta - r), pi_{1+j} = tau^j(pi1)");

  CycInt pi1 = raw_pi1.value;
  std::optional<PrimeElement> w;

  if (cls.variant == RadicandVariant::Case1_PePrime25) {
    NormalizationRecord norm;
    const auto at5 = normalize_associate(raw_pi1, 5, {CycInt(1)});
    if (!at5.found()) norm.failure_at_5 = at5.failure;
    for (int k = 5; k >= 1; --k) {
      const auto s = k == 5 ? at5 : normalize_associate(raw_pi1, k, {CycInt(1)});
      if (s.found()) {
        norm.k = k;
        norm.unit = s.witness->unit;
        pi1 = s.witness->normalized;
        break;
      }
    }
    rep.notes.push_back(norm.failure_at_5
                            ? "no associate of pi1 is 1 mod lambda^5 (" + std::string(to_string(*norm.failure_at_5)) +
                                  "); using an associate 1 mod lambda^" + std::to_string(norm.k) +
                                  ", so the symbol below depends on this choice"
                            : "pi1 normalized to 1 mod lambda^5");
    rep.normalization = norm;
  } else {
    if (cls.variant == RadicandVariant::Case2_PeQ) {
      w = factor_rational_prime(*cls.q).factors.front();
    } else {
      w = lambda_prime();
    }
    H1Record rec;
    const auto s = find_h1(raw_pi1, *w);
    if (s.found()) {
      rec.value = s.witness->h1;
      rec.unit = s.witness->unit;
      rec.product = s.witness->value;
      rec.target = s.witness->target;
      rec.verified = verify_h1_witness(*s.witness, raw_pi1, *w);
      pi1 = s.witness->unit.value * raw_pi1.value;
      rep.notes.push_back("h1 = " + std::to_string(*rec.value) + " with unit " + detail::unit_to_string(*rec.unit));
    } else {
      rec.failure = s.failure;
      rep.notes.push_back(std::string("no h1 in 1..4 satisfies the congruence mod lambda^5 (") +
                          to_string(s.failure) + "); h1 is kept symbolic below");
    }
    rep.h1 = rec;
  }

  rep.primes = detail::split_records(pi1, p, *split.root);
  if (w) {
    rep.primes.push_back(PrimeRecord{w->kind == PrimeKind::Lambda ? "lambda" : "pi5", w->rational_below, w->kind,
                                     w->value, std::nullopt});
  }
  const auto pi3 = detail::as_element(rep.primes[2], 3);
  rep.symbol_pi1_pi3 = quintic_symbol(pi1, pi3);

  const std::optional<H1> h1 = rep.effective_h1();
  const auto [x1, x2] = hilbert_class_field_generators(cls, h1);
  rep.generators = {x1, x2};
  rep.six_extensions = six_extensions(x1, x2);
  rep.subgroups = subgroup_table(cls, h1);
  rep.extensions = correspondence(cls, *rep.symbol_pi1_pi3, h1);
  rep.capitulations = guaranteed_capitulations(cls, h1);
  for (auto c : {K6Choice::Pi1Pi3Fourth, K6Choice::Symmetric})
    rep.possible_types.push_back(TypeList{c, k6_word(cls, c), possible_types(cls, *rep.symbol_pi1_pi3, c)});

  for (const auto& s : rep.subgroups) {
    if (!s.matches_ordering)
      rep.notes.push_back("H" + std::to_string(s.label) + " generator lies in <A*X^" + std::to_string(s.coordinates[1] *
                          detail::inverse_mod5(s.coordinates[0]) % 5) + ">, not in the subgroup its label names");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace detail {

using nlohmann::json;

inline json cyc_to_json(const CycInt& x) {
  json a = json::array();
  for (std::size_t i = 0; i < 4; ++i) a.push_back(x[i].get_str());
  return a;
}

inline CycInt cyc_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw FixtureError("cyclotomic integer must be an array of 4 decimal strings");
  CycInt::Coeffs c;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_string() || c[i].set_str(j[i].get<std::string>(), 10) != 0)
      throw FixtureError("bad cyclotomic coordinate");
  }
  return CycInt(std::move(c));
}

inline json unit_to_json(const Unit& u) {
  return {{"sign", u.sign}, {"zeta_power", u.zeta_power}, {"one_plus_zeta_power", u.one_plus_zeta_power}};
}

inline Unit unit_from_json(const json& j) {
  Unit u;
  u.sign = j.at("sign").get<int>();
  u.zeta_power = j.at("zeta_power").get<int>();
  u.one_plus_zeta_power = j.at("one_plus_zeta_power").get<int>();
  u.value = unit_value(u.sign, u.zeta_power, u.one_plus_zeta_power);
  return u;
}

inline WBase wbase_from_string(const std::string& s) {
  for (auto b : {WBase::None, WBase::Pi5, WBase::Lambda})
    if (s == to_string(b)) return b;
  throw FixtureError("unknown base '" + s + "'");
}

inline json vec_to_json(const F5Vector& v, WBase b, std::string text) {
  return {{"pi1", v.pi1}, {"pi3", v.pi3}, {"w", v.w}, {"base", to_string(b)}, {"text", std::move(text)}};
}

inline F5Vector vec_from_json(const json& j) {
  return {mod5(j.at("pi1").get<int>()), mod5(j.at("pi3").get<int>()), mod5(j.at("w").get<int>())};
}

inline json word_to_json(const RadicalWord& w) { return vec_to_json(w.exponents, w.base, w.to_string()); }
inline RadicalWord word_from_json(const json& j) {
  return RadicalWord{vec_from_json(j), wbase_from_string(j.at("base").get<std::string>())};
}
inline json class_to_json(const ClassWord& w) { return vec_to_json(w.exponents, w.base, w.to_string()); }
inline ClassWord class_from_json(const json& j) {
  return ClassWord{vec_from_json(j), wbase_from_string(j.at("base").get<std::string>())};
}

template <class T, class F>
json opt(const std::optional<T>& v, F f) {
  return v ? json(f(*v)) : json(nullptr);
}

template <class T, class F>
std::optional<T> opt_from(const json& j, const char* key, F f) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return f(j.at(key));
}

inline SearchFailure failure_from_string(const std::string& s) {
  if (s == to_string(SearchFailure::Impossible)) return SearchFailure::Impossible;
  if (s == to_string(SearchFailure::BoundExhausted)) return SearchFailure::BoundExhausted;
  throw FixtureError("unknown search failure '" + s + "'");
}

inline PrimeKind kind_from_string(const std::string& s) {
  for (auto k : {PrimeKind::Split, PrimeKind::Inert, PrimeKind::Lambda})
    if (s == to_string(k)) return k;
  throw FixtureError("unknown prime kind '" + s + "'");
}

inline Character character_from_string(const std::string& s) {
  for (auto c : {Character::Plus, Character::Minus, Character::Mixed})
    if (s == to_string(c)) return c;
  throw FixtureError("unknown character '" + s + "'");
}

inline K6Choice k6_from_string(const std::string& s) {
  for (auto c : {K6Choice::Pi1Pi3Fourth, K6Choice::Symmetric})
    if (s == to_string(c)) return c;
  throw FixtureError("unknown K6 choice '" + s + "'");
}

}  // namespace detail

inline nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  using namespace detail;
  const auto& c = r.classification;
  json j;
  j["n"] = r.n;
  j["classification"] = {{"variant", to_string(c.variant)},
                         {"p", opt(c.p, [](auto v) { return v; })},
                         {"q", opt(c.q, [](auto v) { return v; })},
                         {"e", opt(c.e, [](auto v) { return v; })},
                         {"residue_mod_25", c.residue_mod_25}};
  j["applicable"] = r.applicable();

  json primes = json::array();
  for (const auto& p : r.primes)
    primes.push_back({{"label", p.label},
                      {"rational_prime", p.rational_prime},
                      {"kind", to_string(p.kind)},
                      {"value", cyc_to_json(p.value)},
                      {"root", opt(p.root, [](auto v) { return v; })}});
  j["primes"] = primes;

  j["normalization"] = opt(r.normalization, [](const NormalizationRecord& n) {
    return json{{"k", n.k},
                {"unit", opt(n.unit, unit_to_json)},
                {"failure_at_5", opt(n.failure_at_5, [](auto f) { return std::string(to_string(f)); })}};
  });
  j["h1"] = opt(r.h1, [](const H1Record& h) {
    return json{{"value", opt(h.value, [](int v) { return v; })},
                {"unit", opt(h.unit, unit_to_json)},
                {"product", opt(h.product, cyc_to_json)},
                {"target", opt(h.target, cyc_to_json)},
                {"verified", h.verified},
                {"failure", opt(h.failure, [](auto f) { return std::string(to_string(f)); })}};
  });
  j["symbol_pi1_pi3"] = opt(r.symbol_pi1_pi3, [](const SymbolValue& s) { return s.exponent; });

  auto words = [](const std::vector<RadicalWord>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(word_to_json(w));
    return a;
  };
  j["generators"] = words(r.generators);
  j["six_extensions"] = words(r.six_extensions);

  json subs = json::array();
  for (const auto& s : r.subgroups)
    subs.push_back({{"label", s.label},
                    {"generator", class_to_json(s.generator)},
                    {"character", to_string(s.character)},
                    {"coordinates", s.coordinates},
                    {"matches_ordering", s.matches_ordering}});
  j["subgroups"] = subs;

  json exts = json::array();
  for (const auto& e : r.extensions)
    exts.push_back({{"label", e.label}, {"candidates", words(e.candidates)}, {"resolved", e.resolved}});
  j["extensions"] = exts;

  json caps = json::array();
  for (const auto& g : r.capitulations)
    caps.push_back({{"extension", word_to_json(g.extension)},
                    {"class", class_to_json(g.capitulating_class)},
                    {"subgroup", g.subgroup}});
  j["guaranteed_capitulations"] = caps;

  json types = json::array();
  for (const auto& t : r.possible_types)
    types.push_back({{"k6", to_string(t.k6)}, {"k6_word", word_to_json(t.k6_word)}, {"types", t.types}});
  j["possible_types"] = types;
  j["notes"] = r.notes;
  return j;
}

inline Report report_from_json(const nlohmann::json& j) {
  using nlohmann::json;
  using namespace detail;
  try {
    Report r;
    r.n = j.at("n").get<std::uint64_t>();
    const auto& c = j.at("classification");
    r.classification.variant = variant_from_string(c.at("variant").get<std::string>());
    r.classification.p = opt_from<std::uint64_t>(c, "p", [](const json& v) { return v.get<std::uint64_t>(); });
    r.classification.q = opt_from<std::uint64_t>(c, "q", [](const json& v) { return v.get<std::uint64_t>(); });
    r.classification.e = opt_from<int>(c, "e", [](const json& v) { return v.get<int>(); });
    r.classification.residue_mod_25 = c.at("residue_mod_25").get<int>();

    for (const auto& p : j.at("primes"))
      r.primes.push_back(PrimeRecord{p.at("label").get<std::string>(), p.at("rational_prime").get<std::uint64_t>(),
                                     kind_from_string(p.at("kind").get<std::string>()), cyc_from_json(p.at("value")),
                                     opt_from<std::uint64_t>(p, "root", [](const json& v) { return v.get<std::uint64_t>(); })});

    r.normalization = opt_from<NormalizationRecord>(j, "normalization", [](const json& n) {
      NormalizationRecord out;
      out.k = n.at("k").get<int>();
      out.unit = opt_from<Unit>(n, "unit", unit_from_json);
      out.failure_at_5 = opt_from<SearchFailure>(n, "failure_at_5",
                                                 [](const json& v) { return failure_from_string(v.get<std::string>()); });
      return out;
    });
    r.h1 = opt_from<H1Record>(j, "h1", [](const json& h) {
      H1Record out;
      out.value = opt_from<int>(h, "value", [](const json& v) { return v.get<int>(); });
      out.unit = opt_from<Unit>(h, "unit", unit_from_json);
      out.product = opt_from<CycInt>(h, "product", cyc_from_json);
      out.target = opt_from<CycInt>(h, "target", cyc_from_json);
      out.verified = h.at("verified").get<bool>();
      out.failure = opt_from<SearchFailure>(h, "failure",
                                            [](const json& v) { return failure_from_string(v.get<std::string>()); });
      return out;
    });
    r.symbol_pi1_pi3 = opt_from<SymbolValue>(j, "symbol_pi1_pi3", [](const json& v) { return SymbolValue{v.get<int>()}; });

    for (const auto& w : j.at("generators")) r.generators.push_back(word_from_json(w));
    for (const auto& w : j.at("six_extensions")) r.six_extensions.push_back(word_from_json(w));
    for (const auto& s : j.at("subgroups"))
      r.subgroups.push_back(SubgroupDescriptor{s.at("label").get<int>(), class_from_json(s.at("generator")),
                                               character_from_string(s.at("character").get<std::string>()),
                                               s.at("coordinates").get<std::array<int, 2>>(),
                                               s.at("matches_ordering").get<bool>()});
    for (const auto& e : j.at("extensions")) {
      ExtensionDescriptor d{e.at("label").get<int>(), {}, e.at("resolved").get<bool>()};
      for (const auto& w : e.at("candidates")) d.candidates.push_back(word_from_json(w));
      r.extensions.push_back(std::move(d));
    }
    for (const auto& g : j.at("guaranteed_capitulations"))
      r.capitulations.push_back(GuaranteedCapitulation{word_from_json(g.at("extension")), class_from_json(g.at("class")),
                                                       g.at("subgroup").get<int>()});
    for (const auto& t : j.at("possible_types"))
      r.possible_types.push_back(TypeList{k6_from_string(t.at("k6").get<std::string>()), word_from_json(t.at("k6_word")),
                                          t.at("types").get<std::vector<CapitulationType>>()});
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(std::string("malformed report JSON: ") + e.what());
  } catch (const InputError& e) {
    throw FixtureError(std::string("malformed report JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

inline std::string render_text(const Report& r, bool explain = false) {
  std::ostringstream out;
  const auto& c = r.classification;
  const H1 h1 = r.effective_h1();
  auto field = [&](const RadicalWord& w) { return "k((" + w.to_string(h1) + ")^(1/5))"; };
  auto why = [&](const char* text) {
    if (explain) out << "    why: " << text << "\n";
  };

  out << "n = " << r.n << "\n";
  out << "variant: " << to_string(c.variant);
  if (c.p) out << "  p = " << *c.p;
  if (c.q) out << "  q = " << *c.q;
  if (c.e) out << "  e = " << *c.e;
  out << "  n mod 25 = " << c.residue_mod_25 << "\n";
  if (!r.applicable()) {
    why("Only three radicand shapes are covered; every other n is reported and skipped.");
    for (const auto& note : r.notes) out << "note: " << note << "\n";
    return out.str();
  }

  out << "primes:\n";
  for (const auto& p : r.primes) {
    out << "  " << p.label << " = " << p.value << "  (" << to_string(p.kind) << " over " << p.rational_prime;
    if (p.root) out << ", zeta -> " << *p.root;
    out << ")\n";
  }
  why("Labels follow the Galois action tau: zeta -> zeta^2, so pi3 is the image of pi1 under tau^2.");

  if (r.normalization) {
    const auto& n = *r.normalization;
    out << "normalization: pi1 = 1 mod lambda^" << n.k;
    if (n.unit) out << " via unit " << detail::unit_to_string(*n.unit);
    if (n.failure_at_5) out << "  (lambda^5: " << to_string(*n.failure_at_5) << ")";
    out << "\n";
    why("The symbol (pi1/pi3)_5 is only meaningful for a fixed choice of associate of pi1.");
  }
  if (r.h1) {
    const auto& h = *r.h1;
    if (h.value) {
      out << "h1 = " << *h.value << "  unit " << detail::unit_to_string(*h.unit) << "  u*pi1*w^h1 = " << *h.product
          << " = " << *h.target << " mod lambda^5" << (h.verified ? "  [verified]" : "  [NOT verified]") << "\n";
    } else {
      out << "h1: not found (" << to_string(*h.failure) << "); kept symbolic\n";
    }
    why("h1 fixes the w-exponent in the first generator of the Hilbert 5-class field.");
  }
  if (r.symbol_pi1_pi3) out << "symbol (pi1/pi3)_5 = zeta^" << r.symbol_pi1_pi3->exponent << "\n";

  out << "Hilbert 5-class field: k((" << r.generators[0].to_string(h1) << ")^(1/5), ("
      << r.generators[1].to_string(h1) << ")^(1/5))\n";
  out << "six unramified quintic extensions:\n";
  for (const auto& w : r.six_extensions) out << "  " << field(w) << "\n";
  why("These are the radicands of the six cyclic subextensions, one per point of the projective line over F5.");

  out << "subgroups:\n";
  for (const auto& s : r.subgroups) {
    out << "  H" << s.label << " = <" << s.generator.to_string(h1) << ">  " << to_string(s.character) << "  A^"
        << s.coordinates[0] << "*X^" << s.coordinates[1] << (s.matches_ordering ? "" : "  (off-ordering)") << "\n";
  }
  why("A generates the tau^2-fixed part and X the tau^2-inverted part of the class group.");

  out << "extensions:\n";
  for (const auto& e : r.extensions) {
    out << "  K" << e.label << " = ";
    for (std::size_t i = 0; i < e.candidates.size(); ++i)
      out << (i ? " or " : "") << field(e.candidates[i]);
    out << (e.resolved ? "" : "  [unresolved]") << "\n";
  }
  why("Unresolved entries need class-group data beyond this tool; both candidates are kept.");

  out << "guaranteed capitulations:\n";
  for (const auto& g : r.capitulations)
    out << "  " << g.capitulating_class.to_string(h1) << " in " << field(g.extension) << "  (H" << g.subgroup << ")\n";
  why("The ideal class whose fifth power is generated by x becomes principal once the fifth root of x is adjoined.");

  for (const auto& t : r.possible_types) {
    out << "possible types with K6 = " << field(t.k6_word) << ": " << t.types.size() << "\n";
    for (const auto& ty : t.types) out << "  " << to_string(ty) << "\n";
  }
  why("Entry j is 0 when every class capitulates in K_j, otherwise the index of the one capitulating subgroup.");

  for (const auto& note : r.notes) out << "note: " << note << "\n";
  return out.str();
}

}  // namespace quintic

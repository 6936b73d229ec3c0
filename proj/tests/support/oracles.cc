#include "oracles.h"

#include <cmath>
#include <deque>
#include <functional>

namespace oracle {

namespace {

const char* const kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
const char* const kSubClass = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
const char* const kSameAs = "http://www.w3.org/2002/07/owl#sameAs";

Term Ex(const std::string& local) { return Term::Iri("http://example.org/" + local); }

}  // namespace

TripleSet ToSet(const std::vector<Triple>& triples) {
  return TripleSet(triples.begin(), triples.end());
}

TripleSet ToSet(const oge::TripleStore& store) { return ToSet(store.Triples()); }

TripleSet LinearMatch(const std::vector<Triple>& triples,
                      const std::optional<Term>& s, const std::optional<Term>& p,
                      const std::optional<Term>& o) {
  TripleSet out;
  for (const Triple& t : triples) {
    if (s && t.subject != *s) continue;
    if (p && t.predicate != *p) continue;
    if (o && t.object != *o) continue;
    out.insert(t);
  }
  return out;
}

std::set<oge::Binding> BruteForceBgp(const std::vector<Triple>& triples,
                                     const std::vector<oge::TriplePattern>& patterns) {
  std::set<oge::Binding> out;
  // Unifies one position; false on conflict.
  auto unify = [](const oge::PatternTerm& pt, const Term& value, oge::Binding& b) {
    if (const auto* v = std::get_if<oge::Variable>(&pt)) {
      auto [it, fresh] = b.emplace(v->name, value);
      return fresh || it->second == value;
    }
    return std::get<Term>(pt) == value;
  };
  std::function<void(std::size_t, oge::Binding)> assign =
      [&](std::size_t i, oge::Binding b) {
        if (i == patterns.size()) {
          out.insert(b);
          return;
        }
        for (const Triple& t : triples) {
          oge::Binding next = b;
          if (unify(patterns[i].subject, t.subject, next) &&
              unify(patterns[i].predicate, t.predicate, next) &&
              unify(patterns[i].object, t.object, next)) {
            assign(i + 1, std::move(next));
          }
        }
      };
  assign(0, {});
  return out;
}

TripleSet NaiveClosure(TripleSet triples, const oge::RuleSet& rules) {
  const Term type = Term::Iri(kRdfType);
  const Term sub = Term::Iri(kSubClass);
  const Term same = Term::Iri(kSameAs);
  auto transitive = [&](const Term& p) {
    for (const Term& t : rules.transitive_predicates) {
      if (t == p) return true;
    }
    return false;
  };
  while (true) {
    TripleSet added;
    auto emit = [&](const Term& s, const Term& p, const Term& o) {
      if (s.is_literal()) return;
      Triple t{s, p, o};
      if (!triples.contains(t)) added.insert(t);
    };
    for (const Triple& a : triples) {
      if (rules.sameas_closure && a.predicate == same && a.subject != a.object) {
        emit(a.object, same, a.subject);
      }
      for (const auto& [p, q] : rules.inverse_pairs) {
        if (a.predicate == p) emit(a.object, q, a.subject);
        if (a.predicate == q) emit(a.object, p, a.subject);
      }
      for (const Triple& b : triples) {
        bool chain = a.object == b.subject;
        if (rules.subclass_transitivity && chain && a.predicate == sub &&
            b.predicate == sub && a.subject.is_iri() && a.object.is_iri() &&
            b.object.is_iri()) {
          emit(a.subject, sub, b.object);
        }
        if (rules.type_inheritance && chain && a.predicate == type &&
            b.predicate == sub && a.object.is_iri() && b.object.is_iri()) {
          emit(a.subject, type, b.object);
        }
        if (rules.sameas_closure && chain && a.predicate == same &&
            b.predicate == same && a.subject != b.object) {
          emit(a.subject, same, b.object);
        }
        if (rules.sameas_propagation && a.predicate == same && b.predicate != same) {
          if (b.subject == a.subject) emit(a.object, b.predicate, b.object);
          if (b.object == a.subject) emit(b.subject, b.predicate, a.object);
        }
        if (chain && a.predicate == b.predicate && transitive(a.predicate)) {
          emit(a.subject, a.predicate, b.object);
        }
      }
    }
    if (added.empty()) return triples;
    triples.insert(added.begin(), added.end());
  }
}

std::vector<std::set<Term>> BfsSameAsComponents(const std::vector<Triple>& triples) {
  const Term same = Term::Iri(kSameAs);
  std::map<Term, std::vector<Term>> adj;
  for (const Triple& t : triples) {
    if (t.predicate != same) continue;
    adj[t.subject].push_back(t.object);
    adj[t.object].push_back(t.subject);
  }
  std::set<Term> seen;
  std::vector<std::set<Term>> out;
  for (const auto& [start, _] : adj) {
    if (seen.contains(start)) continue;
    std::set<Term> component{start};
    std::deque<Term> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      Term x = queue.front();
      queue.pop_front();
      for (const Term& y : adj[x]) {
        if (seen.insert(y).second) {
          component.insert(y);
          queue.push_back(y);
        }
      }
    }
    out.push_back(std::move(component));
  }
  return out;
}

double CentralAngleMeters(double lat1, double lon1, double lat2, double lon2) {
  constexpr double kRadius = 6371008.8;
  const double d = M_PI / 180.0;
  auto vec = [d](double lat, double lon) {
    return std::array<double, 3>{std::cos(lat * d) * std::cos(lon * d),
                                 std::cos(lat * d) * std::sin(lon * d),
                                 std::sin(lat * d)};
  };
  auto a = vec(lat1, lon1);
  auto b = vec(lat2, lon2);
  std::array<double, 3> c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                          a[0] * b[1] - a[1] * b[0]};
  double cross = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
  double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  return kRadius * std::atan2(cross, dot);
}

std::vector<Term> Generator::ReasonerTerms(std::size_t universe) {
  // Mostly IRIs, plus blanks and one literal once the universe allows.
  std::vector<Term> out;
  std::size_t iris = universe >= 4 ? universe - 3 : universe;
  for (std::size_t i = 0; i < iris; ++i) out.push_back(Ex("e" + std::to_string(i)));
  for (std::size_t i = iris; i + 1 < universe; ++i) {
    out.push_back(Term::Blank("b" + std::to_string(i)));
  }
  if (universe >= 4) out.push_back(Term::Literal("v"));
  return out;
}

std::vector<Term> Generator::ReasonerPredicates() {
  return {Term::Iri(kRdfType), Term::Iri(kSubClass), Term::Iri(kSameAs),
          Ex("t"),             Ex("p"),              Ex("q"),
          Ex("r")};
}

std::vector<Triple> Generator::ReasonerStore(std::size_t max_size,
                                             std::size_t universe) {
  auto terms = ReasonerTerms(universe);
  auto preds = ReasonerPredicates();
  std::size_t n = Below(max_size + 1);
  std::vector<Triple> out;
  while (out.size() < n) {
    const Term& s = terms[Below(terms.size())];
    if (s.is_literal()) continue;
    // Class-shaped predicates are drawn more often so the rules interact.
    const Term& p = Coin(0.6) ? preds[Below(3)] : preds[Below(preds.size())];
    out.push_back({s, p, terms[Below(terms.size())]});
  }
  return out;
}

oge::RuleSet Generator::RandomRules() {
  oge::RuleSet r = oge::RuleSet::None();
  r.subclass_transitivity = Coin(0.8);
  r.type_inheritance = Coin(0.8);
  r.sameas_closure = Coin(0.8);
  r.sameas_propagation = r.sameas_closure && Coin(0.7);
  if (Coin(0.7)) r.transitive_predicates.push_back(Ex("t"));
  if (Coin(0.2)) r.transitive_predicates.push_back(Ex("r"));
  if (Coin(0.6)) r.inverse_pairs.emplace_back(Ex("p"), Ex("q"));
  if (Coin(0.2)) r.inverse_pairs.emplace_back(Ex("r"), Ex("r"));
  return r;
}

std::vector<Term> Generator::MatchTerms() {
  return {Ex("a"),
          Ex("b"),
          Ex("c"),
          Ex("d"),
          Ex("e"),
          Term::Iri("urn:x:f"),
          Term::Blank("n1"),
          Term::Blank("n2"),
          Term::Literal("a"),
          Term::Literal("a", "es"),
          Term::Literal("1", {}, "http://www.w3.org/2001/XMLSchema#integer")};
}

std::vector<Triple> Generator::MatchStore(std::size_t max_size) {
  auto terms = MatchTerms();
  std::vector<Term> preds{Ex("p"), Ex("q"), Ex("a"), Term::Iri(kRdfType)};
  std::size_t n = Below(max_size + 1);
  std::vector<Triple> out;
  while (out.size() < n) {
    const Term& s = terms[Below(terms.size())];
    if (s.is_literal()) continue;
    out.push_back({s, preds[Below(preds.size())], terms[Below(terms.size())]});
  }
  return out;
}

std::optional<Term> Generator::MaybeTerm(const std::vector<Term>& pool,
                                         double p_wild) {
  if (Coin(p_wild)) return std::nullopt;
  return pool[Below(pool.size())];
}

std::vector<oge::TriplePattern> Generator::Patterns(std::size_t max_patterns) {
  auto terms = MatchTerms();
  std::vector<Term> preds{Ex("p"), Ex("q"), Ex("a"), Term::Iri(kRdfType), Ex("zz")};
  const std::vector<std::string> vars{"x", "y", "z", "w"};
  auto pick = [&](const std::vector<Term>& pool) -> oge::PatternTerm {
    if (Coin(0.55)) return oge::Var(vars[Below(vars.size())]);
    return pool[Below(pool.size())];
  };
  std::size_t n = 1 + Below(max_patterns);
  std::vector<oge::TriplePattern> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({pick(terms), pick(preds), pick(terms)});
  }
  return out;
}

std::string Generator::AwkwardString() {
  static const std::vector<std::string> kPieces = {
      "a",  "Z",  "0",    " ",  "\"",    "\\", "\n",     "\r", "\t",  "\x01",
      "\x7f", "#", ".",   "é",  "😀",    " ", "'''", "\"\"\"", "<",  ">",
      "@",  "^^", "_:x",  "ñ",  "\x1f",  "\b", "\f",     "€"};
  std::string s;
  std::size_t n = Below(9);
  for (std::size_t i = 0; i < n; ++i) s += kPieces[Below(kPieces.size())];
  return s;
}

std::vector<Triple> Generator::SyntaxStore(std::size_t max_size) {
  static const std::string kIriChars =
      "abcXYZ019-._~%/?#&=:@!$'()*+,;";
  static const std::vector<std::string> kLangs = {"es", "en-GB", "pt-BR",
                                                  "zh-Hant-TW", "x-private1"};
  static const std::vector<std::string> kTypes = {
      "http://www.w3.org/2001/XMLSchema#integer",
      "http://www.w3.org/2001/XMLSchema#string", "http://example.org/dt"};
  auto iri = [&] {
    std::string s = Coin(0.7) ? "http://example.org/" : "urn:x:";
    std::size_t n = Below(8);
    for (std::size_t i = 0; i < n; ++i) {
      if (Coin(0.1)) {
        s += Coin() ? "é" : "😀";
      } else {
        s += kIriChars[Below(kIriChars.size())];
      }
    }
    return Term::Iri(s);
  };
  auto blank = [&] {
    static const std::string kLabelChars = "abZ09_-";
    std::string s(1, "bxQ_"[Below(4)]);
    std::size_t n = Below(5);
    for (std::size_t i = 0; i < n; ++i) s += kLabelChars[Below(kLabelChars.size())];
    return Term::Blank(s);
  };
  auto literal = [&] {
    switch (Below(3)) {
      case 0:
        return Term::Literal(AwkwardString());
      case 1:
        return Term::Literal(AwkwardString(), kLangs[Below(kLangs.size())]);
      default:
        return Term::Literal(AwkwardString(), {}, kTypes[Below(kTypes.size())]);
    }
  };
  std::size_t n = Below(max_size + 1);
  std::vector<Triple> out;
  for (std::size_t i = 0; i < n; ++i) {
    Term s = Coin(0.8) ? iri() : blank();
    std::size_t k = Below(10);
    Term o = k < 4 ? iri() : k < 6 ? blank() : literal();
    out.push_back({s, iri(), o});
  }
  return out;
}

}  // namespace oracle

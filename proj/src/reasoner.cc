#include "oge/reasoner.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "oge/vocab.h"

namespace oge {

void RuleSet::Validate() const {
  if (sameas_propagation && !sameas_closure) {
    throw ConfigError(
        "sameAs property propagation requires sameAs closure to be enabled");
  }
  for (const Term& p : transitive_predicates) {
    if (!p.is_iri()) throw ConfigError("transitive predicate must be an IRI");
  }
  for (const auto& [p, q] : inverse_pairs) {
    if (!p.is_iri() || !q.is_iri()) {
      throw ConfigError("inverse pair members must be IRIs");
    }
  }
}

RuleSet RuleSet::Default() {
  RuleSet r;
  r.transitive_predicates = {Term::Iri(vocab::Ege("hasDivision"))};
  r.inverse_pairs = {{Term::Iri(vocab::Ege("hasDivision")),
                      Term::Iri(vocab::Ege("unitOf"))}};
  return r;
}

RuleSet RuleSet::None() {
  RuleSet r;
  r.subclass_transitivity = false;
  r.type_inheritance = false;
  r.sameas_closure = false;
  r.sameas_propagation = false;
  return r;
}

namespace {

class Materializer {
 public:
  Materializer(const TripleStore& input, const RuleSet& rules)
      : store_(input), rules_(rules) {
    type_ = store_.Intern(Term::Iri(vocab::kType));
    subclass_ = store_.Intern(Term::Iri(vocab::kSubClassOf));
    sameas_ = store_.Intern(Term::Iri(vocab::kSameAs));
    for (const Term& p : rules.transitive_predicates) {
      transitive_.insert(store_.Intern(p));
    }
    for (const auto& [p, q] : rules.inverse_pairs) {
      TermId pid = store_.Intern(p);
      TermId qid = store_.Intern(q);
      inverse_[pid].push_back(qid);
      inverse_[qid].push_back(pid);
    }
  }

  TripleStore Run() && {
    std::vector<IdTriple> delta(store_.spo_index().begin(),
                                store_.spo_index().end());
    while (!delta.empty()) {
      pending_.clear();
      for (const IdTriple& t : delta) Fire(t);
      delta.clear();
      for (const IdTriple& t : pending_) {
        if (store_.InsertIds(t, Origin::kInferred)) delta.push_back(t);
      }
    }
    store_.set_materialized(true);
    return std::move(store_);
  }

 private:
  bool IsIri(TermId id) const { return store_.Decode(id).is_iri(); }
  bool IsLiteral(TermId id) const { return store_.Decode(id).is_literal(); }

  void Emit(TermId s, TermId p, TermId o) {
    if (IsLiteral(s)) return;
    IdTriple t{s, p, o};
    if (!store_.ContainsIds(t)) pending_.push_back(t);
  }

  template <typename Fn>
  void Scan(std::optional<TermId> s, std::optional<TermId> p,
            std::optional<TermId> o, Fn fn) {
    store_.ForEachMatch(s, p, o, [&fn](const IdTriple& t) {
      fn(t);
      return true;
    });
  }

  void Fire(const IdTriple& t) {
    const TermId s = t[0], p = t[1], o = t[2];

    if (rules_.subclass_transitivity && p == subclass_ && IsIri(s) &&
        IsIri(o)) {
      Scan(o, subclass_, std::nullopt, [&](const IdTriple& u) {
        if (IsIri(u[2])) Emit(s, subclass_, u[2]);
      });
      Scan(std::nullopt, subclass_, s, [&](const IdTriple& u) {
        if (IsIri(u[0])) Emit(u[0], subclass_, o);
      });
    }

    if (rules_.type_inheritance) {
      if (p == type_ && IsIri(o)) {
        Scan(o, subclass_, std::nullopt, [&](const IdTriple& u) {
          if (IsIri(u[2])) Emit(s, type_, u[2]);
        });
      }
      if (p == subclass_ && IsIri(s) && IsIri(o)) {
        Scan(std::nullopt, type_, s,
             [&](const IdTriple& u) { Emit(u[0], type_, o); });
      }
    }

    if (rules_.sameas_closure && p == sameas_) {
      if (s != o) Emit(o, sameas_, s);
      Scan(o, sameas_, std::nullopt, [&](const IdTriple& u) {
        if (u[2] != s) Emit(s, sameas_, u[2]);
      });
      Scan(std::nullopt, sameas_, s, [&](const IdTriple& u) {
        if (u[0] != o) Emit(u[0], sameas_, o);
      });
    }

    if (rules_.sameas_propagation) {
      if (p == sameas_) {
        Scan(s, std::nullopt, std::nullopt, [&](const IdTriple& u) {
          if (u[1] != sameas_) Emit(o, u[1], u[2]);
        });
        Scan(std::nullopt, std::nullopt, s, [&](const IdTriple& u) {
          if (u[1] != sameas_) Emit(u[0], u[1], o);
        });
      } else {
        Scan(s, sameas_, std::nullopt,
             [&](const IdTriple& u) { Emit(u[2], p, o); });
        Scan(o, sameas_, std::nullopt,
             [&](const IdTriple& u) { Emit(s, p, u[2]); });
      }
    }

    if (transitive_.contains(p)) {
      Scan(o, p, std::nullopt, [&](const IdTriple& u) { Emit(s, p, u[2]); });
      Scan(std::nullopt, p, s, [&](const IdTriple& u) { Emit(u[0], p, o); });
    }

    if (auto it = inverse_.find(p); it != inverse_.end()) {
      for (TermId q : it->second) Emit(o, q, s);
    }
  }

  TripleStore store_;
  const RuleSet& rules_;
  TermId type_ = 0, subclass_ = 0, sameas_ = 0;
  std::unordered_set<TermId> transitive_;
  std::unordered_map<TermId, std::vector<TermId>> inverse_;
  std::vector<IdTriple> pending_;
};

}  // namespace

TripleStore Materialize(const TripleStore& store, const RuleSet& rules) {
  rules.Validate();
  return Materializer(store, rules).Run();
}

const Term& Partition::Representative(const Term& t) const {
  auto it = rep_.find(t);
  return it == rep_.end() ? t : it->second;
}

std::map<Term, std::vector<Term>> Partition::Classes() const {
  std::map<Term, std::vector<Term>> out;
  for (const auto& [term, rep] : rep_) out[rep].push_back(term);
  return out;
}

Partition SameAsPartition(const TripleStore& store) {
  Partition result;
  auto sameas = store.Encode(Term::Iri(vocab::kSameAs));
  if (!sameas) return result;

  std::unordered_map<TermId, TermId> parent;
  auto find = [&parent](TermId x) {
    TermId root = x;
    while (parent[root] != root) root = parent[root];
    while (parent[x] != root) {
      TermId next = parent[x];
      parent[x] = root;
      x = next;
    }
    return root;
  };
  auto add = [&parent](TermId x) { parent.try_emplace(x, x); };
  store.ForEachMatch(std::nullopt, sameas, std::nullopt,
                     [&](const IdTriple& t) {
                       add(t[0]);
                       add(t[2]);
                       TermId a = find(t[0]);
                       TermId b = find(t[2]);
                       if (a != b) parent[a] = b;
                       return true;
                     });

  std::map<TermId, std::vector<TermId>> groups;
  for (const auto& entry : parent) groups[find(entry.first)].push_back(entry.first);
  for (const auto& [root, members] : groups) {
    if (members.size() < 2) continue;
    const Term* best = nullptr;
    std::string best_key;
    for (TermId m : members) {
      std::string key = store.Decode(m).ToNTriples();
      if (!best || key < best_key) {
        best = &store.Decode(m);
        best_key = std::move(key);
      }
    }
    for (TermId m : members) result.rep_.emplace(store.Decode(m), *best);
  }
  return result;
}

namespace {

const std::vector<std::string>& UnitClassIris() {
  static const std::vector<std::string> kClasses = {
      vocab::Ege("UnidadAdministrativa"), vocab::Ege("Gobernacion"),
      vocab::Ege("Vicegobernacion"),      vocab::Ege("Ministerio"),
      vocab::Ege("Subsecretaria"),        vocab::Ege("DireccionGeneral"),
      vocab::Ege("Direccion"),            vocab::Ege("Departamento")};
  return kClasses;
}

}  // namespace

std::vector<Term> Ancestors(const TripleStore& store, const Term& unit) {
  auto start = store.Encode(unit);
  auto type = store.Encode(Term::Iri(vocab::kType));
  if (!start || !type) return {};
  auto has_division = store.Encode(Term::Iri(vocab::Ege("hasDivision")));
  auto unit_of = store.Encode(Term::Iri(vocab::Ege("unitOf")));

  std::vector<TermId> unit_classes;
  for (const std::string& c : UnitClassIris()) {
    if (auto id = store.Encode(Term::Iri(c))) unit_classes.push_back(*id);
  }
  auto is_unit = [&](TermId id) {
    for (TermId c : unit_classes) {
      if (store.ContainsIds({id, *type, c})) return true;
    }
    return false;
  };
  auto parents = [&](TermId child) {
    std::vector<TermId> out;
    if (has_division) {
      store.ForEachMatch(std::nullopt, has_division, child,
                         [&out](const IdTriple& t) {
                           out.push_back(t[0]);
                           return true;
                         });
    }
    if (unit_of) {
      store.ForEachMatch(child, unit_of, std::nullopt,
                         [&out](const IdTriple& t) {
                           out.push_back(t[2]);
                           return true;
                         });
    }
    return out;
  };
  // Strict ancestors of `from` that are units.
  auto walk = [&](TermId from) {
    std::set<TermId> seen;
    std::deque<TermId> queue{from};
    while (!queue.empty()) {
      TermId x = queue.front();
      queue.pop_front();
      for (TermId p : parents(x)) {
        if (seen.insert(p).second) queue.push_back(p);
      }
    }
    seen.erase(from);
    std::vector<TermId> units;
    for (TermId id : seen) {
      if (is_unit(id)) units.push_back(id);
    }
    return units;
  };

  std::vector<std::pair<std::size_t, Term>> ranked;
  for (TermId u : walk(*start)) {
    ranked.emplace_back(walk(u).size(), store.Decode(u));
  }
  // The immediate parent has the most ancestors of its own.
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second.value() < b.second.value();
  });
  std::vector<Term> out;
  out.reserve(ranked.size());
  for (auto& [depth, term] : ranked) out.push_back(std::move(term));
  return out;
}

}  // namespace oge

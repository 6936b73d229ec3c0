#ifndef OGE_REASONER_H_
#define OGE_REASONER_H_

#include <map>
#include <utility>
#include <vector>

#include "oge/term.h"
#include "oge/triple_store.h"

namespace oge {

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Rule families applied by Materialize.
//
//   subclass_transitivity  (A subClassOf B), (B subClassOf C) => (A subClassOf C)
//   type_inheritance       (x type A), (A subClassOf B) => (x type B)
//   sameas_closure         sameAs symmetric and transitive, never reflexive
//   sameas_propagation     subject and object positions copied across sameAs
//   transitive_predicates  (a p b), (b p c) => (a p c)
//   inverse_pairs          (a p b) <=> (b q a)
//
// The two class-level rules only fire on IRI classes.
struct RuleSet {
  bool subclass_transitivity = true;
  bool type_inheritance = true;
  bool sameas_closure = true;
  bool sameas_propagation = true;
  std::vector<Term> transitive_predicates;
  std::vector<std::pair<Term, Term>> inverse_pairs;

  // Throws ConfigError when propagation is enabled without closure, or when
  // a declared predicate is not an IRI.
  void Validate() const;

  // All rules on, with ege:hasDivision transitive and ege:unitOf its inverse.
  static RuleSet Default();
  static RuleSet None();
};

// Least fixpoint of `store` under `rules`. Input triples keep their origin;
// derived triples are marked Origin::kInferred. The result is flagged
// materialized.
TripleStore Materialize(const TripleStore& store, const RuleSet& rules);

// sameAs equivalence classes: connected components of the undirected graph of
// sameAs triples. The representative is the member with the least N-Triples
// rendering.
class Partition {
 public:
  // A term without sameAs edges represents itself.
  const Term& Representative(const Term& t) const;
  bool SameClass(const Term& a, const Term& b) const {
    return Representative(a) == Representative(b);
  }
  // Classes with at least two members, keyed by representative.
  std::map<Term, std::vector<Term>> Classes() const;

 private:
  friend Partition SameAsPartition(const TripleStore& store);
  std::map<Term, Term> rep_;
};

Partition SameAsPartition(const TripleStore& store);

// Administrative units u with (u hasDivision+ unit), immediate parent first
// and root last. Only terms typed with an administrative-unit class (one of
// the seven level classes or ege:UnidadAdministrativa) are units. Works on
// raw or materialized stores; an unknown term yields an empty list.
std::vector<Term> Ancestors(const TripleStore& store, const Term& unit);

}  // namespace oge

#endif  // OGE_REASONER_H_

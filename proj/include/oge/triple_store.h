#ifndef OGE_TRIPLE_STORE_H_
#define OGE_TRIPLE_STORE_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "oge/term.h"

namespace oge {

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  std::string ToNTriples() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) =
      default;
};

// Raised for triples whose subject is a literal or whose predicate is not an
// IRI. The message names the offending position.
class TripleError : public Error {
 public:
  using Error::Error;
};

// Throws TripleError if `t` is malformed.
void CheckTriple(const Triple& t);

using TermId = std::uint32_t;
using IdTriple = std::array<TermId, 3>;  // subject, predicate, object

// Whether a triple was loaded from data or derived by the reasoner.
enum class Origin : unsigned char { kAsserted, kInferred };

// The three index orderings kept by TripleStore.
enum class IndexOrder : unsigned char { kSpo, kPos, kOsp };

// Indexed in-memory set of triples.
//
// Terms are interned in a dictionary; triples are stored as id triples in
// three sorted orderings so that every combination of bound positions is a
// contiguous range in at least one index. Mutation requires exclusive access;
// const member functions may run concurrently.
class TripleStore {
 public:
  TripleStore() = default;

  // Returns true iff `t` was not already present. Throws TripleError for a
  // malformed triple. Re-inserting an inferred triple as asserted upgrades
  // its origin but still returns false.
  bool Insert(const Triple& t, Origin origin = Origin::kAsserted);
  bool Remove(const Triple& t);

  // Inserts every triple of `other`, keeping its per-triple origin.
  void InsertAll(const TripleStore& other);

  bool Contains(const Triple& t) const;
  std::size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }

  // Triples agreeing with every bound position, in index order.
  std::vector<Triple> Match(const std::optional<Term>& s,
                            const std::optional<Term>& p,
                            const std::optional<Term>& o) const;
  // Same result set, answered from an explicitly chosen index (a full scan of
  // that index when the bound positions are not one of its prefixes).
  std::vector<Triple> MatchWith(IndexOrder index, const std::optional<Term>& s,
                                const std::optional<Term>& p,
                                const std::optional<Term>& o) const;

  // Id-level scan; `fn` returns false to stop early.
  void ForEachMatch(std::optional<TermId> s, std::optional<TermId> p,
                    std::optional<TermId> o,
                    const std::function<bool(const IdTriple&)>& fn) const;
  bool ContainsIds(const IdTriple& t) const { return spo_.contains(t); }
  std::size_t CountMatches(std::optional<TermId> s, std::optional<TermId> p,
                           std::optional<TermId> o) const;

  // Dictionary access. Encode never allocates a new id.
  std::optional<TermId> Encode(const Term& t) const;
  const Term& Decode(TermId id) const { return terms_.at(id); }
  std::size_t dictionary_size() const { return terms_.size(); }
  Triple DecodeTriple(const IdTriple& t) const;

  // Id-level insertion for callers that already hold interned ids.
  TermId Intern(const Term& t);
  bool InsertIds(const IdTriple& t, Origin origin = Origin::kAsserted);

  std::optional<Origin> OriginOf(const Triple& t) const;
  bool IsInferred(const IdTriple& t) const { return inferred_.contains(t); }

  // All triples in subject-predicate-object id order.
  std::vector<Triple> Triples() const;
  const std::set<IdTriple>& spo_index() const { return spo_; }

  // Set by the reasoner on a closed store; cleared by any later mutation.
  bool materialized() const { return materialized_; }
  void set_materialized(bool value) { materialized_ = value; }

  // Set equality of the triples, ignoring origin and dictionary layout.
  bool SameTriples(const TripleStore& other) const;

 private:
  const std::set<IdTriple>& IndexFor(IndexOrder order) const;
  void ScanIndex(IndexOrder order, std::optional<TermId> s,
                 std::optional<TermId> p, std::optional<TermId> o,
                 const std::function<bool(const IdTriple&)>& fn) const;

  std::vector<Term> terms_;
  std::unordered_map<Term, TermId> ids_;
  // Keys are permuted into index order: spo_ {s,p,o}, pos_ {p,o,s},
  // osp_ {o,s,p}.
  std::set<IdTriple> spo_;
  std::set<IdTriple> pos_;
  std::set<IdTriple> osp_;
  std::set<IdTriple> inferred_;  // subset of spo_
  bool materialized_ = false;
};

}  // namespace oge

#endif  // OGE_TRIPLE_STORE_H_

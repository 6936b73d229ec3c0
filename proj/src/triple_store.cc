#include "oge/triple_store.h"

#include <limits>

namespace oge {

namespace {

constexpr TermId kMaxId = std::numeric_limits<TermId>::max();

IdTriple ToKey(IndexOrder order, const IdTriple& spo) {
  switch (order) {
    case IndexOrder::kSpo: return spo;
    case IndexOrder::kPos: return {spo[1], spo[2], spo[0]};
    case IndexOrder::kOsp: return {spo[2], spo[0], spo[1]};
  }
  return spo;
}

IdTriple FromKey(IndexOrder order, const IdTriple& key) {
  switch (order) {
    case IndexOrder::kSpo: return key;
    case IndexOrder::kPos: return {key[2], key[0], key[1]};
    case IndexOrder::kOsp: return {key[1], key[2], key[0]};
  }
  return key;
}

IndexOrder ChooseIndex(bool s, bool p, bool o) {
  if (s && !p && o) return IndexOrder::kOsp;
  if (s) return IndexOrder::kSpo;
  if (p) return IndexOrder::kPos;
  if (o) return IndexOrder::kOsp;
  return IndexOrder::kSpo;
}

}  // namespace

std::string Triple::ToNTriples() const {
  return subject.ToNTriples() + " " + predicate.ToNTriples() + " " +
         object.ToNTriples() + " .";
}

void CheckTriple(const Triple& t) {
  if (t.subject.is_literal()) throw TripleError("literal subject");
  if (!t.predicate.is_iri()) {
    throw TripleError(t.predicate.is_literal() ? "literal predicate"
                                               : "blank node predicate");
  }
}

TermId TripleStore::Intern(const Term& t) {
  auto it = ids_.find(t);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<TermId>(terms_.size());
  terms_.push_back(t);
  ids_.emplace(t, id);
  return id;
}

std::optional<TermId> TripleStore::Encode(const Term& t) const {
  auto it = ids_.find(t);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Triple TripleStore::DecodeTriple(const IdTriple& t) const {
  return Triple{terms_[t[0]], terms_[t[1]], terms_[t[2]]};
}

bool TripleStore::InsertIds(const IdTriple& t, Origin origin) {
  bool fresh = spo_.insert(t).second;
  if (fresh) {
    pos_.insert(ToKey(IndexOrder::kPos, t));
    osp_.insert(ToKey(IndexOrder::kOsp, t));
    if (origin == Origin::kInferred) inferred_.insert(t);
    materialized_ = false;
  } else if (origin == Origin::kAsserted) {
    inferred_.erase(t);
  }
  return fresh;
}

bool TripleStore::Insert(const Triple& t, Origin origin) {
  CheckTriple(t);
  return InsertIds({Intern(t.subject), Intern(t.predicate), Intern(t.object)},
                   origin);
}

void TripleStore::InsertAll(const TripleStore& other) {
  for (const IdTriple& t : other.spo_) {
    IdTriple local{Intern(other.terms_[t[0]]), Intern(other.terms_[t[1]]),
                   Intern(other.terms_[t[2]])};
    InsertIds(local, other.IsInferred(t) ? Origin::kInferred
                                         : Origin::kAsserted);
  }
}

bool TripleStore::Remove(const Triple& t) {
  auto s = Encode(t.subject);
  auto p = Encode(t.predicate);
  auto o = Encode(t.object);
  if (!s || !p || !o) return false;
  IdTriple key{*s, *p, *o};
  if (spo_.erase(key) == 0) return false;
  pos_.erase(ToKey(IndexOrder::kPos, key));
  osp_.erase(ToKey(IndexOrder::kOsp, key));
  inferred_.erase(key);
  materialized_ = false;
  return true;
}

bool TripleStore::Contains(const Triple& t) const {
  auto s = Encode(t.subject);
  auto p = Encode(t.predicate);
  auto o = Encode(t.object);
  return s && p && o && spo_.contains({*s, *p, *o});
}

std::optional<Origin> TripleStore::OriginOf(const Triple& t) const {
  auto s = Encode(t.subject);
  auto p = Encode(t.predicate);
  auto o = Encode(t.object);
  if (!s || !p || !o || !spo_.contains({*s, *p, *o})) return std::nullopt;
  return inferred_.contains({*s, *p, *o}) ? Origin::kInferred
                                          : Origin::kAsserted;
}

const std::set<IdTriple>& TripleStore::IndexFor(IndexOrder order) const {
  switch (order) {
    case IndexOrder::kSpo: return spo_;
    case IndexOrder::kPos: return pos_;
    case IndexOrder::kOsp: return osp_;
  }
  return spo_;
}

void TripleStore::ScanIndex(
    IndexOrder order, std::optional<TermId> s, std::optional<TermId> p,
    std::optional<TermId> o,
    const std::function<bool(const IdTriple&)>& fn) const {
  const std::set<IdTriple>& index = IndexFor(order);
  std::array<std::optional<TermId>, 3> bound_spo{s, p, o};
  std::array<std::optional<TermId>, 3> bound_key;
  switch (order) {
    case IndexOrder::kSpo: bound_key = {s, p, o}; break;
    case IndexOrder::kPos: bound_key = {p, o, s}; break;
    case IndexOrder::kOsp: bound_key = {o, s, p}; break;
  }
  IdTriple lo{0, 0, 0};
  IdTriple hi{kMaxId, kMaxId, kMaxId};
  for (int i = 0; i < 3 && bound_key[i]; ++i) {
    lo[i] = hi[i] = *bound_key[i];
  }
  for (auto it = index.lower_bound(lo); it != index.end() && *it <= hi; ++it) {
    IdTriple spo = FromKey(order, *it);
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      if (bound_spo[i] && spo[i] != *bound_spo[i]) {
        ok = false;
        break;
      }
    }
    if (ok && !fn(spo)) return;
  }
}

void TripleStore::ForEachMatch(
    std::optional<TermId> s, std::optional<TermId> p, std::optional<TermId> o,
    const std::function<bool(const IdTriple&)>& fn) const {
  ScanIndex(ChooseIndex(s.has_value(), p.has_value(), o.has_value()), s, p, o,
            fn);
}

std::size_t TripleStore::CountMatches(std::optional<TermId> s,
                                      std::optional<TermId> p,
                                      std::optional<TermId> o) const {
  std::size_t n = 0;
  ForEachMatch(s, p, o, [&n](const IdTriple&) {
    ++n;
    return true;
  });
  return n;
}

std::vector<Triple> TripleStore::MatchWith(IndexOrder index,
                                           const std::optional<Term>& s,
                                           const std::optional<Term>& p,
                                           const std::optional<Term>& o) const {
  std::vector<Triple> out;
  std::optional<TermId> sid, pid, oid;
  // A bound term absent from the dictionary cannot match anything.
  if (s && !(sid = Encode(*s))) return out;
  if (p && !(pid = Encode(*p))) return out;
  if (o && !(oid = Encode(*o))) return out;
  ScanIndex(index, sid, pid, oid, [&](const IdTriple& t) {
    out.push_back(DecodeTriple(t));
    return true;
  });
  return out;
}

std::vector<Triple> TripleStore::Match(const std::optional<Term>& s,
                                       const std::optional<Term>& p,
                                       const std::optional<Term>& o) const {
  return MatchWith(ChooseIndex(s.has_value(), p.has_value(), o.has_value()), s,
                   p, o);
}

std::vector<Triple> TripleStore::Triples() const {
  std::vector<Triple> out;
  out.reserve(spo_.size());
  for (const IdTriple& t : spo_) out.push_back(DecodeTriple(t));
  return out;
}

bool TripleStore::SameTriples(const TripleStore& other) const {
  if (size() != other.size()) return false;
  for (const IdTriple& t : spo_) {
    if (!other.Contains(DecodeTriple(t))) return false;
  }
  return true;
}

}  // namespace oge

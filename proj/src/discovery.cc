#include "oge/discovery.h"

#include <algorithm>
#include <deque>
#include <map>

#include "oge/vocab.h"

namespace oge {

namespace {

bool TermLess(const Term& a, const Term& b) {
  if (a.value() != b.value()) return a.value() < b.value();
  return a < b;
}

std::vector<TermId> PredicateIds(const TripleStore& store,
                                 std::initializer_list<std::string> iris) {
  std::vector<TermId> out;
  for (const std::string& iri : iris) {
    if (auto id = store.Encode(Term::Iri(iri))) out.push_back(*id);
  }
  return out;
}

// Neighbors over `predicates` in both directions, literals excluded.
std::vector<TermId> Neighbors(const TripleStore& store, TermId node,
                              const std::vector<TermId>& predicates,
                              bool asserted_only) {
  std::vector<TermId> out;
  for (TermId p : predicates) {
    store.ForEachMatch(node, p, std::nullopt, [&](const IdTriple& t) {
      if (asserted_only && store.IsInferred(t)) return true;
      if (!store.Decode(t[2]).is_literal()) out.push_back(t[2]);
      return true;
    });
    store.ForEachMatch(std::nullopt, p, node, [&](const IdTriple& t) {
      if (!asserted_only || !store.IsInferred(t)) out.push_back(t[0]);
      return true;
    });
  }
  return out;
}

std::optional<std::vector<Term>> ShortestPath(
    const TripleStore& store, const Term& from, const Term& to,
    const std::vector<TermId>& predicates, bool asserted_only = false) {
  if (from == to) return std::vector<Term>{from};
  auto src = store.Encode(from);
  auto dst = store.Encode(to);
  if (!src || !dst) return std::nullopt;

  // Distances to `dst`, then a greedy walk from `src` that always takes the
  // least neighbor one step closer: that yields the least sequence among all
  // shortest paths.
  std::map<TermId, std::size_t> dist{{*dst, 0}};
  std::deque<TermId> queue{*dst};
  while (!queue.empty() && !dist.contains(*src)) {
    TermId x = queue.front();
    queue.pop_front();
    for (TermId y : Neighbors(store, x, predicates, asserted_only)) {
      if (dist.emplace(y, dist[x] + 1).second) queue.push_back(y);
    }
  }
  auto it = dist.find(*src);
  if (it == dist.end()) return std::nullopt;

  std::vector<Term> path{from};
  TermId cur = *src;
  for (std::size_t d = it->second; d > 0; --d) {
    std::optional<TermId> best;
    for (TermId y : Neighbors(store, cur, predicates, asserted_only)) {
      auto dy = dist.find(y);
      if (dy == dist.end() || dy->second != d - 1) continue;
      if (!best || TermLess(store.Decode(y), store.Decode(*best))) best = y;
    }
    cur = *best;
    path.push_back(store.Decode(cur));
  }
  return path;
}

}  // namespace

std::optional<std::vector<Term>> Explain(const TripleStore& store,
                                         const Term& from, const Term& to) {
  return ShortestPath(store, from, to,
                      PredicateIds(store, {vocab::Ege("offersTramite"),
                                           vocab::Ege("linkedTo"),
                                           vocab::kSameAs}));
}

std::set<Term> LinkedComponent(const TripleStore& store, const Term& start,
                               const NamespaceTable& table) {
  std::set<Term> out{start};
  auto sid = store.Encode(start);
  if (!sid) return out;
  auto predicates =
      PredicateIds(store, {vocab::Ege("linkedTo"), vocab::kSameAs});
  std::set<TermId> seen{*sid};
  std::deque<TermId> queue{*sid};
  while (!queue.empty()) {
    TermId x = queue.front();
    queue.pop_front();
    for (TermId y : Neighbors(store, x, predicates, false)) {
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  for (TermId id : seen) {
    const Term& t = store.Decode(id);
    if (table.Find(t)) out.insert(t);
  }
  return out;
}

FindResult FindOffices(const TripleStore& store, const Term& tramite,
                       const QueryOrigin& origin, std::size_t k,
                       const NamespaceTable& table) {
  const Term type = Term::Iri(vocab::kType);
  if (!store.Contains({tramite, type, Term::Iri(vocab::Ege("Tramite"))})) {
    throw DiscoveryError(DiscoveryError::Code::kNoSuchTramite,
                         "no such tramite: " + tramite.ToNTriples());
  }

  std::optional<GeoPoint> from;
  if (const auto* point = std::get_if<GeoPoint>(&origin)) {
    from = *point;
  } else {
    const Term& place = std::get<Term>(origin);
    try {
      if (auto resolved = ResolveCoordinates(store, place)) {
        from = resolved->point;
      }
    } catch (const DataError& e) {
      throw DiscoveryError(DiscoveryError::Code::kOriginNotGeolocated,
                           std::string("origin not geolocated: ") + e.what());
    }
    if (!from) {
      throw DiscoveryError(DiscoveryError::Code::kOriginNotGeolocated,
                           "origin not geolocated: " + place.ToNTriples());
    }
  }

  std::set<Term, decltype(&TermLess)> offices(&TermLess);
  auto consider = [&](const Term& t) {
    if (table.Find(t) == DatasetLabel::kI) offices.insert(t);
  };
  for (const Triple& t :
       store.Match(std::nullopt, Term::Iri(vocab::Ege("offersTramite")), tramite)) {
    consider(t.subject);
  }
  const Term linked = Term::Iri(vocab::Ege("linkedTo"));
  for (const Triple& t : store.Match(tramite, linked, std::nullopt)) {
    consider(t.object);
  }
  for (const Triple& t : store.Match(std::nullopt, linked, tramite)) {
    consider(t.subject);
  }

  FindResult result;
  std::vector<GeoCandidate> candidates;
  std::map<Term, Term> bearer_of;
  for (const Term& office : offices) {
    try {
      if (auto resolved = ResolveCoordinates(store, office)) {
        candidates.push_back({office, resolved->point});
        bearer_of.emplace(office, resolved->bearer);
      } else {
        result.warnings.push_back("office without coordinates: " + office.value());
      }
    } catch (const DataError& e) {
      result.warnings.push_back(e.what());
    }
  }

  auto sameas = PredicateIds(store, {vocab::kSameAs});
  for (RankedCandidate& r : Nearest(candidates, *from, k)) {
    std::vector<Term> path = Explain(store, tramite, r.term).value();
    // Prefer the chain of asserted links over shortcuts added by the closure.
    auto tail = ShortestPath(store, r.term, bearer_of.at(r.term), sameas, true);
    if (!tail) tail = ShortestPath(store, r.term, bearer_of.at(r.term), sameas);
    path.insert(path.end(), tail->begin() + 1, tail->end());
    result.offices.push_back(
        {std::move(r.term), r.point, r.distance_m, std::move(path)});
  }
  return result;
}

}  // namespace oge

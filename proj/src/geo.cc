#include "oge/geo.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>

#include "oge/vocab.h"

namespace oge {

GeoPoint::GeoPoint(double latitude, double longitude)
    : latitude_(latitude), longitude_(longitude) {
  if (!std::isfinite(latitude) || latitude < -90.0 || latitude > 90.0) {
    throw Error("latitude out of range: " + std::to_string(latitude));
  }
  if (!std::isfinite(longitude) || longitude < -180.0 || longitude > 180.0) {
    throw Error("longitude out of range: " + std::to_string(longitude));
  }
  if (longitude_ == -180.0) longitude_ = 180.0;
}

double Haversine(const GeoPoint& a, const GeoPoint& b) {
  // Evaluate in a canonical argument order so d(a,b) == d(b,a) bit for bit.
  const GeoPoint* p = &a;
  const GeoPoint* q = &b;
  if (std::pair(q->latitude(), q->longitude()) <
      std::pair(p->latitude(), p->longitude())) {
    std::swap(p, q);
  }
  constexpr double kRad = std::numbers::pi / 180.0;
  double phi1 = p->latitude() * kRad;
  double phi2 = q->latitude() * kRad;
  double dphi = (q->latitude() - p->latitude()) * kRad;
  double dlambda = (q->longitude() - p->longitude()) * kRad;
  double s1 = std::sin(dphi / 2);
  double s2 = std::sin(dlambda / 2);
  double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusMeters * std::asin(std::sqrt(h));
}

std::vector<RankedCandidate> Nearest(std::span<const GeoCandidate> candidates,
                                     const GeoPoint& origin, std::size_t k) {
  std::vector<RankedCandidate> ranked;
  ranked.reserve(candidates.size());
  for (const GeoCandidate& c : candidates) {
    ranked.push_back({c.term, c.point, Haversine(origin, c.point)});
  }
  auto less = [](const RankedCandidate& x, const RankedCandidate& y) {
    if (x.distance_m != y.distance_m) return x.distance_m < y.distance_m;
    return x.term.value() < y.term.value();
  };
  k = std::min(k, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<long>(k),
                    ranked.end(), less);
  ranked.erase(ranked.begin() + static_cast<long>(k), ranked.end());
  return ranked;
}

namespace {

std::optional<double> ParseDegrees(const Term& t) {
  if (!t.is_literal()) return std::nullopt;
  const std::string& s = t.value();
  double v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

// Least object (by N-Triples rendering) of (subject, predicate, ?).
std::optional<Term> LeastObject(const TripleStore& store, TermId subject,
                                TermId predicate, bool asserted_only) {
  std::optional<Term> best;
  store.ForEachMatch(subject, predicate, std::nullopt,
                     [&](const IdTriple& t) {
                       if (asserted_only && store.IsInferred(t)) return true;
                       const Term& o = store.Decode(t[2]);
                       if (!best || o.ToNTriples() < best->ToNTriples()) {
                         best = o;
                       }
                       return true;
                     });
  return best;
}

}  // namespace

std::optional<ResolvedPoint> ResolveCoordinates(const TripleStore& store,
                                                const Term& subject) {
  auto start = store.Encode(subject);
  if (!start) return std::nullopt;
  auto sameas = store.Encode(Term::Iri(vocab::kSameAs));
  auto lat = store.Encode(Term::Iri(vocab::Ege("lat")));
  auto lon = store.Encode(Term::Iri(vocab::Ege("long")));
  if (!lat || !lon) return std::nullopt;

  std::set<TermId> members{*start};
  std::deque<TermId> queue{*start};
  while (sameas && !queue.empty()) {
    TermId x = queue.front();
    queue.pop_front();
    auto visit = [&](TermId y) {
      if (members.insert(y).second) queue.push_back(y);
    };
    store.ForEachMatch(x, sameas, std::nullopt, [&](const IdTriple& t) {
      visit(t[2]);
      return true;
    });
    store.ForEachMatch(std::nullopt, sameas, x, [&](const IdTriple& t) {
      visit(t[0]);
      return true;
    });
  }

  // After materialization every member carries the coordinates; prefer the
  // members that carry them as asserted data.
  auto has = [&](TermId m, TermId property, bool asserted_only) {
    bool found = false;
    store.ForEachMatch(m, property, std::nullopt, [&](const IdTriple& t) {
      found = !asserted_only || !store.IsInferred(t);
      return !found;
    });
    return found;
  };
  std::optional<TermId> bearer;
  std::string bearer_key;
  bool asserted_bearer = false;
  for (bool asserted_only : {true, false}) {
    for (TermId m : members) {
      if (!has(m, *lat, asserted_only) || !has(m, *lon, asserted_only)) continue;
      std::string key = store.Decode(m).ToNTriples();
      if (!bearer || key < bearer_key) {
        bearer = m;
        bearer_key = std::move(key);
      }
    }
    if (bearer) {
      asserted_bearer = asserted_only;
      break;
    }
  }
  if (!bearer) return std::nullopt;

  const Term& who = store.Decode(*bearer);
  auto lat_value = ParseDegrees(*LeastObject(store, *bearer, *lat, asserted_bearer));
  auto lon_value = ParseDegrees(*LeastObject(store, *bearer, *lon, asserted_bearer));
  if (!lat_value || !lon_value) {
    throw DataError("malformed coordinate literal on " + who.value());
  }
  try {
    return ResolvedPoint{GeoPoint(*lat_value, *lon_value), who};
  } catch (const Error& e) {
    throw DataError("coordinates out of range on " + who.value() + ": " +
                    e.what());
  }
}

}  // namespace oge

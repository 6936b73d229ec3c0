#ifndef OGE_DISCOVERY_H_
#define OGE_DISCOVERY_H_

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "oge/geo.h"
#include "oge/link_graph.h"
#include "oge/triple_store.h"

namespace oge {

struct OfficeResult {
  Term office;
  GeoPoint point;
  double distance_m = 0;
  // From the trámite to the coordinate-bearing node; consecutive terms share
  // a triple.
  std::vector<Term> path;
};

struct FindResult {
  std::vector<OfficeResult> offices;
  // Offering offices left out because they have no usable coordinates.
  std::vector<std::string> warnings;
};

class DiscoveryError : public Error {
 public:
  enum class Code { kNoSuchTramite, kOriginNotGeolocated };
  DiscoveryError(Code code, const std::string& message)
      : Error(message), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// A place IRI to geolocate, or raw coordinates.
using QueryOrigin = std::variant<Term, GeoPoint>;

// Offices offering `tramite` (via ege:offersTramite, or an ege:linkedTo link
// to an infrastructure IRI), geolocated through sameAs and ranked by distance
// from `origin`. Only IRIs of the infrastructure dataset count as offices.
// Expects a materialized store.
FindResult FindOffices(const TripleStore& store, const Term& tramite,
                       const QueryOrigin& origin, std::size_t k,
                       const NamespaceTable& table = NamespaceTable::Default());

// Labeled instances reachable from `start` over ege:linkedTo and owl:sameAs
// in either direction; always contains `start`.
std::set<Term> LinkedComponent(
    const TripleStore& store, const Term& start,
    const NamespaceTable& table = NamespaceTable::Default());

// Fewest-edge path over offersTramite, linkedTo and sameAs (undirected); ties
// go to the lexicographically least IRI sequence.
std::optional<std::vector<Term>> Explain(const TripleStore& store,
                                         const Term& from, const Term& to);

}  // namespace oge

#endif  // OGE_DISCOVERY_H_

#ifndef OGE_GEO_H_
#define OGE_GEO_H_

#include <optional>
#include <span>
#include <vector>

#include "oge/term.h"
#include "oge/triple_store.h"

namespace oge {

// IUGG mean Earth radius in meters.
inline constexpr double kEarthRadiusMeters = 6371008.8;

// WGS84 latitude/longitude in decimal degrees. Latitude lies in [-90, 90],
// longitude in (-180, 180]; -180 is stored as 180.
class GeoPoint {
 public:
  // Throws oge::Error when a coordinate is out of range or not finite.
  GeoPoint(double latitude, double longitude);

  double latitude() const { return latitude_; }
  double longitude() const { return longitude_; }

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;

 private:
  double latitude_;
  double longitude_;
};

// Great-circle distance in meters on the mean-radius sphere.
double Haversine(const GeoPoint& a, const GeoPoint& b);

struct GeoCandidate {
  Term term;
  GeoPoint point;
};

struct RankedCandidate {
  Term term;
  GeoPoint point;
  double distance_m;
};

// The `k` candidates closest to `origin`, by ascending distance and then IRI.
std::vector<RankedCandidate> Nearest(std::span<const GeoCandidate> candidates,
                                     const GeoPoint& origin, std::size_t k);

// Coordinates with the term that carries them.
struct ResolvedPoint {
  GeoPoint point;
  Term bearer;
};

// Raised for coordinate literals that do not parse or are out of range.
class DataError : public Error {
 public:
  using Error::Error;
};

// Looks for ege:lat / ege:long on `subject` and on every term connected to it
// through sameAs edges; the least bearing term (by N-Triples rendering)
// wins, where terms carrying asserted coordinates are preferred over terms
// that only received them by inference. Returns nullopt when no term carries
// both properties.
std::optional<ResolvedPoint> ResolveCoordinates(const TripleStore& store,
                                                const Term& subject);

}  // namespace oge

#endif  // OGE_GEO_H_

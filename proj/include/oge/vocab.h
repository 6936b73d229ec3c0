#ifndef OGE_VOCAB_H_
#define OGE_VOCAB_H_

#include <string>

namespace oge::vocab {

inline constexpr char kRdf[] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr char kRdfs[] = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr char kOwl[] = "http://www.w3.org/2002/07/owl#";
inline constexpr char kXsd[] = "http://www.w3.org/2001/XMLSchema#";
inline constexpr char kOrg[] = "http://www.w3.org/ns/org#";

// OGE namespaces. `kEge` holds the T-Box, `kUnit` the organizational A-Box;
// the remaining ones are the seven linked datasets.
inline constexpr char kEge[] = "http://ege.example/ege#";
inline constexpr char kUnit[] = "http://ege.example/org/";
inline constexpr char kTys[] = "http://ege.example/tys/";
inline constexpr char kTer[] = "http://ege.example/ter/";
inline constexpr char kInfra[] = "http://ege.example/infra/";
inline constexpr char kOsm[] = "http://www.openstreetmap.org/node/";
inline constexpr char kLgd[] = "http://linkedgeodata.org/triplify/node";
inline constexpr char kGn[] = "http://sws.geonames.org/";
inline constexpr char kFoaf[] = "http://xmlns.com/foaf/0.1/";

inline std::string Rdf(const char* local) { return std::string(kRdf) + local; }
inline std::string Rdfs(const char* local) { return std::string(kRdfs) + local; }
inline std::string Owl(const char* local) { return std::string(kOwl) + local; }
inline std::string Xsd(const char* local) { return std::string(kXsd) + local; }
inline std::string Ege(const char* local) { return std::string(kEge) + local; }

inline const std::string kType = Rdf("type");
inline const std::string kSubClassOf = Rdfs("subClassOf");
inline const std::string kSameAs = Owl("sameAs");

}  // namespace oge::vocab

#endif  // OGE_VOCAB_H_

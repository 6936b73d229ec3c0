#ifndef OGE_JSON_API_H_
#define OGE_JSON_API_H_

#include <string_view>
#include <vector>

#include <json.hpp>

#include "oge/bgp.h"
#include "oge/discovery.h"
#include "oge/rdf_io.h"

namespace oge {

// "?name" is a variable; "<iri>", "_:label" and N-Triples literals are read
// as written; otherwise a prefixed name or a bare absolute IRI.
PatternTerm ParsePatternTerm(std::string_view text, const PrefixMap& prefixes);

// As ParsePatternTerm but rejects variables.
Term ParseTermArg(std::string_view text, const PrefixMap& prefixes);

// {"patterns":[[s,p,o],...]}; throws oge::Error when malformed.
std::vector<TriplePattern> ParsePatternsJson(const nlohmann::json& doc,
                                             const PrefixMap& prefixes);

// IRIs as bare strings, literals and blank nodes in N-Triples form.
std::string TermToJsonString(const Term& term);

nlohmann::json OfficeResultToJson(const OfficeResult& r);
nlohmann::json OfficeResultsToJson(const std::vector<OfficeResult>& results);

// One object per binding keyed by variable name (without '?').
nlohmann::json BindingToJson(const Binding& b);

nlohmann::json TermsToJson(const std::vector<Term>& terms);

}  // namespace oge

#endif  // OGE_JSON_API_H_

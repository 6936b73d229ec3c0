#include "oge/json_api.h"

#include "oge/config.h"

namespace oge {

PatternTerm ParsePatternTerm(std::string_view text, const PrefixMap& prefixes) {
  if (!text.empty() && text.front() == '?') return Var(std::string(text.substr(1)));
  if (!text.empty() && (text.front() == '"' || text.starts_with("_:"))) {
    // Reuse the N-Triples object grammar on a throwaway statement.
    std::string line = "<urn:x:s> <urn:x:p> " + std::string(text) + " .";
    ParseOptions opts;
    opts.rename_blanks = false;
    std::vector<Triple> parsed;
    try {
      parsed = ParseNTriples(line, opts);
    } catch (const ParseError&) {
      throw Error("malformed term: " + std::string(text));
    }
    if (parsed.size() != 1) throw Error("malformed term: " + std::string(text));
    return parsed[0].object;
  }
  return ParseIriArg(text, prefixes);
}

Term ParseTermArg(std::string_view text, const PrefixMap& prefixes) {
  PatternTerm t = ParsePatternTerm(text, prefixes);
  if (std::holds_alternative<Variable>(t)) {
    throw Error("variable not allowed here: " + std::string(text));
  }
  return std::get<Term>(t);
}

std::vector<TriplePattern> ParsePatternsJson(const nlohmann::json& doc,
                                             const PrefixMap& prefixes) {
  if (!doc.is_object() || !doc.contains("patterns") ||
      !doc["patterns"].is_array()) {
    throw Error("expected {\"patterns\": [[s, p, o], ...]}");
  }
  std::vector<TriplePattern> out;
  for (const auto& p : doc["patterns"]) {
    if (!p.is_array() || p.size() != 3 || !p[0].is_string() ||
        !p[1].is_string() || !p[2].is_string()) {
      throw Error("each pattern must be an array of three strings");
    }
    out.push_back({ParsePatternTerm(p[0].get<std::string>(), prefixes),
                   ParsePatternTerm(p[1].get<std::string>(), prefixes),
                   ParsePatternTerm(p[2].get<std::string>(), prefixes)});
  }
  return out;
}

std::string TermToJsonString(const Term& term) {
  return term.is_iri() ? term.value() : term.ToNTriples();
}

nlohmann::json TermsToJson(const std::vector<Term>& terms) {
  nlohmann::json out = nlohmann::json::array();
  for (const Term& t : terms) out.push_back(TermToJsonString(t));
  return out;
}

nlohmann::json OfficeResultToJson(const OfficeResult& r) {
  return {{"office", TermToJsonString(r.office)},
          {"lat", r.point.latitude()},
          {"lon", r.point.longitude()},
          {"distance_m", r.distance_m},
          {"path", TermsToJson(r.path)}};
}

nlohmann::json OfficeResultsToJson(const std::vector<OfficeResult>& results) {
  nlohmann::json out = nlohmann::json::array();
  for (const OfficeResult& r : results) out.push_back(OfficeResultToJson(r));
  return out;
}

nlohmann::json BindingToJson(const Binding& b) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, term] : b) out[name] = TermToJsonString(term);
  return out;
}

}  // namespace oge

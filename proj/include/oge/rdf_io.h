#ifndef OGE_RDF_IO_H_
#define OGE_RDF_IO_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oge/triple_store.h"

namespace oge {

// Prefix label (possibly empty) to namespace IRI.
class PrefixMap {
 public:
  // Replaces any previous binding of `prefix`.
  void Define(std::string prefix, std::string ns) {
    map_[std::move(prefix)] = std::move(ns);
  }
  std::optional<std::string> Namespace(const std::string& prefix) const;
  // "p:local" -> namespace(p) + local; nullopt if p is unbound or `pname`
  // has no ':'.
  std::optional<std::string> Expand(std::string_view pname) const;
  const std::map<std::string, std::string>& entries() const { return map_; }

  // rdf, rdfs, owl, xsd, org, ege, the organizational namespace and the
  // seven dataset prefixes.
  static PrefixMap Standard();

 private:
  std::map<std::string, std::string> map_;
};

struct ParseDiagnostic {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in code points
  std::string message;

  std::string ToString() const;
};

class ParseError : public Error {
 public:
  explicit ParseError(ParseDiagnostic d, const std::string& source = {})
      : Error(source.empty() ? d.ToString() : source + ":" + d.ToString()),
        diagnostic_(std::move(d)) {}
  const ParseDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

struct ParseOptions {
  // Blank node labels are suffixed with "_<scope>" so that labels from
  // different documents never collide. An empty scope draws a fresh one.
  bool rename_blanks = true;
  std::string blank_scope;
};

// Both parsers throw ParseError on the first syntax error and return triples
// in document order.
std::vector<Triple> ParseNTriples(std::string_view text,
                                  const ParseOptions& options = {});
std::vector<Triple> ParseTurtle(std::string_view text,
                                const ParseOptions& options = {});

// Canonical N-Triples: one line per distinct triple, sorted by the byte order
// of the rendered line.
std::string SerializeNTriples(const std::vector<Triple>& triples);
std::string SerializeNTriples(const TripleStore& store);

// Dispatches on the ".nt" / ".ttl" extension. Throws oge::Error for unreadable
// files or unknown extensions, ParseError (message prefixed with the path)
// for syntax errors.
std::vector<Triple> ParseFile(const std::string& path,
                              const ParseOptions& options = {});

std::string ReadFileOrThrow(const std::string& path);

// RFC 3986 reference resolution.
std::string ResolveIri(std::string_view base, std::string_view reference);

}  // namespace oge

#endif  // OGE_RDF_IO_H_

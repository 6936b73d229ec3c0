#ifndef OGE_CONFIG_H_
#define OGE_CONFIG_H_

#include <string>
#include <string_view>
#include <vector>

#include "oge/link_graph.h"
#include "oge/rdf_io.h"
#include "oge/reasoner.h"
#include "oge/schema.h"

namespace oge {

// Runtime configuration. The file format is UTF-8 "key = value" lines grouped
// under [section] headers; '#' starts a comment line. Sections:
//
//   [data]        path = <file>            (repeatable, relative to the file)
//   [namespaces]  <prefix> = <namespace-IRI> <S|T|O|L|I|G|F>
//   [rules]       subclass_transitivity | type_inheritance | sameas_closure |
//                 sameas_propagation = true|false
//                 transitive = <iri>       (repeatable; replaces the default)
//                 inverse = <iri> <iri>    (repeatable; replaces the default)
//   [fixture]     seed | ministerios | subsecretarias | direcciones_generales |
//                 direcciones | departamentos | offices | tramites = <n>
//   [http]        bind = <host>:<port>
//
// IRIs may be written as <...>, as prefixed names, or bare.
struct Config {
  std::vector<std::string> data_paths;
  NamespaceTable namespace_table = NamespaceTable::Default();
  RuleSet rules = RuleSet::Default();
  FixtureSpec fixture;
  std::string http_bind = "127.0.0.1:8080";

  // Standard prefixes plus every namespace of the table.
  PrefixMap Prefixes() const;
};

// Throws ConfigError naming the line for malformed input or missing data
// paths. `base_dir` anchors relative data paths.
Config ParseConfig(std::string_view text, const std::string& base_dir = ".");
Config LoadConfig(const std::string& path);

// "<iri>", a prefixed name bound in `prefixes`, or a bare absolute IRI.
// Throws oge::Error otherwise.
Term ParseIriArg(std::string_view text, const PrefixMap& prefixes);

// host:port split; throws ConfigError on a malformed value.
std::pair<std::string, int> SplitHostPort(const std::string& bind);

}  // namespace oge

#endif  // OGE_CONFIG_H_

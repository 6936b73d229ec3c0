#ifndef OGE_LINK_GRAPH_H_
#define OGE_LINK_GRAPH_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oge/term.h"
#include "oge/triple_store.h"

namespace oge {

// Labels of the seven interlinked datasets.
enum class DatasetLabel : unsigned char {
  kS,  // Trámites y Servicios
  kT,  // Territorio
  kO,  // OSM
  kL,  // LinkedGeoData
  kI,  // Infraestructura
  kG,  // GeoNames
  kF,  // Personas
};

inline constexpr DatasetLabel kAllDatasetLabels[] = {
    DatasetLabel::kS, DatasetLabel::kT, DatasetLabel::kO, DatasetLabel::kL,
    DatasetLabel::kI, DatasetLabel::kG, DatasetLabel::kF};

char LabelLetter(DatasetLabel label);
std::string_view LabelDisplayName(DatasetLabel label);
std::optional<DatasetLabel> LabelFromLetter(char letter);

class LabelError : public Error {
 public:
  using Error::Error;
};

struct NamespaceEntry {
  std::string prefix;
  std::string ns;
  DatasetLabel label;
};

// Namespace IRI to dataset label, resolved by longest matching prefix.
class NamespaceTable {
 public:
  NamespaceTable() = default;
  explicit NamespaceTable(std::vector<NamespaceEntry> entries);

  // tys: ter: osm: lgd: infra: gn: foaf: mapped to S T O L I G F.
  static NamespaceTable Default();

  void Add(NamespaceEntry entry);
  std::optional<DatasetLabel> Find(const Term& iri) const;
  // Throws LabelError("unlabelable IRI ...") when no namespace matches.
  DatasetLabel Label(const Term& iri) const;
  const std::vector<NamespaceEntry>& entries() const { return entries_; }

 private:
  std::vector<NamespaceEntry> entries_;
};

using LabelEdge = std::pair<DatasetLabel, DatasetLabel>;  // first <= second
using InstanceEdge = std::pair<Term, Term>;               // first < second

// Dataset-level view of the cross-dataset links: V labels, E label pairs, I
// instance IRIs, plus the instance-level edges E was projected from.
struct LinkGraph {
  std::set<DatasetLabel> vertices;
  std::set<LabelEdge> edges;
  std::set<Term> instances;
  std::set<InstanceEdge> instance_edges;
};

LabelEdge MakeLabelEdge(DatasetLabel a, DatasetLabel b);

// Builds the graph from asserted ege:linkedTo and owl:sameAs triples whose
// endpoints fall in different datasets. Inferred triples are ignored, so a
// materialized store yields the same graph as its asserted base. Throws
// LabelError for a link triple with an unlabelable endpoint.
LinkGraph BuildLinkGraph(const TripleStore& store,
                         const NamespaceTable& table = NamespaceTable::Default());

}  // namespace oge

#endif  // OGE_LINK_GRAPH_H_

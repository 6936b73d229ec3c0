#include "oge/link_graph.h"

#include "oge/vocab.h"

namespace oge {

char LabelLetter(DatasetLabel label) {
  static constexpr char kLetters[] = {'S', 'T', 'O', 'L', 'I', 'G', 'F'};
  return kLetters[static_cast<int>(label)];
}

std::string_view LabelDisplayName(DatasetLabel label) {
  static constexpr std::string_view kNames[] = {
      "Trámites y Servicios", "Territorio", "OSM",     "LinkedGeoData",
      "Infraestructura",      "GeoNames",   "Personas"};
  return kNames[static_cast<int>(label)];
}

std::optional<DatasetLabel> LabelFromLetter(char letter) {
  for (DatasetLabel l : kAllDatasetLabels) {
    if (LabelLetter(l) == letter) return l;
  }
  return std::nullopt;
}

NamespaceTable::NamespaceTable(std::vector<NamespaceEntry> entries) {
  for (auto& e : entries) Add(std::move(e));
}

NamespaceTable NamespaceTable::Default() {
  return NamespaceTable({{"tys", vocab::kTys, DatasetLabel::kS},
                         {"ter", vocab::kTer, DatasetLabel::kT},
                         {"osm", vocab::kOsm, DatasetLabel::kO},
                         {"lgd", vocab::kLgd, DatasetLabel::kL},
                         {"infra", vocab::kInfra, DatasetLabel::kI},
                         {"gn", vocab::kGn, DatasetLabel::kG},
                         {"foaf", vocab::kFoaf, DatasetLabel::kF}});
}

void NamespaceTable::Add(NamespaceEntry entry) {
  for (auto& e : entries_) {
    if (e.prefix == entry.prefix) {
      e = std::move(entry);
      return;
    }
  }
  entries_.push_back(std::move(entry));
}

std::optional<DatasetLabel> NamespaceTable::Find(const Term& iri) const {
  if (!iri.is_iri()) return std::nullopt;
  const NamespaceEntry* best = nullptr;
  for (const auto& e : entries_) {
    if (iri.value().starts_with(e.ns) &&
        (!best || e.ns.size() > best->ns.size())) {
      best = &e;
    }
  }
  if (!best) return std::nullopt;
  return best->label;
}

DatasetLabel NamespaceTable::Label(const Term& iri) const {
  auto label = Find(iri);
  if (!label) throw LabelError("unlabelable IRI: " + iri.ToNTriples());
  return *label;
}

LabelEdge MakeLabelEdge(DatasetLabel a, DatasetLabel b) {
  return a <= b ? LabelEdge{a, b} : LabelEdge{b, a};
}

LinkGraph BuildLinkGraph(const TripleStore& store,
                         const NamespaceTable& table) {
  LinkGraph g;
  for (const std::string& predicate :
       {vocab::Ege("linkedTo"), vocab::kSameAs}) {
    auto pid = store.Encode(Term::Iri(predicate));
    if (!pid) continue;
    store.ForEachMatch(std::nullopt, pid, std::nullopt, [&](const IdTriple& t) {
      if (store.IsInferred(t)) return true;
      const Term& a = store.Decode(t[0]);
      const Term& b = store.Decode(t[2]);
      DatasetLabel la = table.Label(a);
      DatasetLabel lb = table.Label(b);
      if (la == lb) return true;
      g.instances.insert(a);
      g.instances.insert(b);
      g.instance_edges.insert(a < b ? InstanceEdge{a, b} : InstanceEdge{b, a});
      g.edges.insert(MakeLabelEdge(la, lb));
      return true;
    });
  }
  for (const Term& i : g.instances) g.vertices.insert(table.Label(i));
  return g;
}

}  // namespace oge

#ifndef OGE_SCHEMA_H_
#define OGE_SCHEMA_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oge/reasoner.h"
#include "oge/triple_store.h"

namespace oge {

// Levels of the administrative tree. hasDivision edges between units go from
// rank r to rank r + 1.
enum class UnitLevel : unsigned char {
  kGobernacion,
  kVicegobernacion,
  kMinisterio,
  kSubsecretaria,
  kDireccionGeneral,
  kDireccion,
  kDepartamento,
};

inline constexpr UnitLevel kAllUnitLevels[] = {
    UnitLevel::kGobernacion,      UnitLevel::kVicegobernacion,
    UnitLevel::kMinisterio,       UnitLevel::kSubsecretaria,
    UnitLevel::kDireccionGeneral, UnitLevel::kDireccion,
    UnitLevel::kDepartamento};

int Rank(UnitLevel level);
// ege: class IRI of the level, e.g. ege:Ministerio.
std::string LevelClass(UnitLevel level);
std::optional<UnitLevel> LevelFromClass(std::string_view iri);

// The T-Box: classes of the four layers, the subclass tree, property
// declarations with domain/range annotations and the organization-ontology
// alignment. Deterministic.
std::vector<Triple> Vocabulary();
TripleStore VocabularyStore();

struct Violation {
  std::string constraint;  // "C1" .. "C6"
  Term focus;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Closed-world check of the structural axioms:
//   C1 every Estado has a hasPower object typed Ejecutivo, Legislativo or
//      Judicial
//   C2 every Ejecutivo has a hasDivision object typed Gobernacion or
//      Ministerio
//   C3 every asserted hasDivision edge between units climbs exactly one rank
//   C4 every unit below rank 0 has exactly one asserted hasDivision parent
//   C5 every Oficina resolves to coordinates
//   C6 every Tramite is offered by at least one Oficina
//
// The store is united with the vocabulary and materialized under `rules`
// unless it is already a materialized superset of the vocabulary. C5 and C6
// are checked once per sameAs class. The result is sorted by constraint and
// focus IRI.
std::vector<Violation> Validate(const TripleStore& store,
                                const RuleSet& rules = RuleSet::Default());

// Unit level of `term` from its rdf:type triples, if any.
std::optional<UnitLevel> UnitLevelOf(const TripleStore& store,
                                     const Term& term);

struct FixtureSpec {
  std::uint64_t seed = 0;
  std::size_t ministerios = 10;
  std::size_t subsecretarias = 37;
  std::size_t direcciones_generales = 68;
  std::size_t direcciones = 114;
  std::size_t departamentos = 326;
  std::size_t offices = 20;
  std::size_t tramites = 10;
};

// IRIs used by the generator.
std::string EstadoIri();
std::string PowerIri(std::string_view name);  // "ejecutivo", ...
std::string UnitIri(UnitLevel level, std::size_t index);  // 0-based index
std::string OfficeIri(std::size_t index);
std::string TramiteIri(std::size_t index);
std::string OfficeOsmIri(std::size_t index);
std::string OfficeLgdIri(std::size_t index);

// Deterministic organizational fixture (the A-Box only; see Vocabulary()).
// Children are dealt round-robin to parents ordered by IRI; offices get
// seeded coordinates around Posadas and are wired office -> lgd -> osm with
// the coordinates on the osm node; trámites are dealt to offices
// round-robin so every trámite and every office takes part.
TripleStore GenerateFixture(const FixtureSpec& spec = {});

}  // namespace oge

#endif  // OGE_SCHEMA_H_

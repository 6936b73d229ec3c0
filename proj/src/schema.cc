#include "oge/schema.h"

#include <algorithm>
#include <map>
#include <set>

#include "oge/geo.h"
#include "oge/vocab.h"

namespace oge {

namespace {

Term Iri(const std::string& s) { return Term::Iri(s); }
Term Ege(const char* local) { return Term::Iri(vocab::Ege(local)); }

struct ClassDecl {
  const char* name;
  const char* parent;  // ege: local name, or nullptr for owl:Thing
  const char* layer;
  const char* label;
};

// Tree-shaped class hierarchy; every class has exactly one parent.
constexpr ClassDecl kClasses[] = {
    {"Estado", nullptr, "upper", "Estado"},
    {"Poder", nullptr, "upper", "Poder"},
    {"Ejecutivo", "Poder", "upper", "Poder Ejecutivo"},
    {"Legislativo", "Poder", "upper", "Poder Legislativo"},
    {"Judicial", "Poder", "upper", "Poder Judicial"},
    {"NormaLegal", nullptr, "upper", "Norma legal"},
    {"UnidadAdministrativa", nullptr, "domain", "Unidad administrativa"},
    {"Gobernacion", "UnidadAdministrativa", "domain", "Gobernación"},
    {"Vicegobernacion", "UnidadAdministrativa", "domain", "Vicegobernación"},
    {"Ministerio", "UnidadAdministrativa", "domain", "Ministerio"},
    {"Subsecretaria", "UnidadAdministrativa", "domain", "Subsecretaría"},
    {"DireccionGeneral", "UnidadAdministrativa", "domain", "Dirección general"},
    {"Direccion", "UnidadAdministrativa", "domain", "Dirección"},
    {"Departamento", "UnidadAdministrativa", "domain", "Departamento"},
    {"Oficina", nullptr, "domain", "Oficina de atención al público"},
    {"Persona", nullptr, "domain", "Persona"},
    {"Lugar", nullptr, "external", "Lugar"},
    {"Tramite", nullptr, "application", "Trámite"},
    {"Servicio", nullptr, "application", "Servicio"},
};

struct PropertyDecl {
  const char* name;
  const char* kind;    // owl: local name
  const char* domain;  // ege: local name or nullptr
  const char* range;   // ege: local name, xsd:..., or nullptr
};

constexpr PropertyDecl kProperties[] = {
    {"hasPower", "ObjectProperty", "Estado", "Poder"},
    {"hasDivision", "ObjectProperty", nullptr, "UnidadAdministrativa"},
    {"unitOf", "ObjectProperty", "UnidadAdministrativa", nullptr},
    {"offersTramite", "ObjectProperty", "Oficina", "Tramite"},
    {"locatedIn", "ObjectProperty", "Oficina", "Lugar"},
    {"linkedTo", "ObjectProperty", nullptr, nullptr},
    {"lat", "DatatypeProperty", nullptr, nullptr},
    {"long", "DatatypeProperty", nullptr, nullptr},
    {"identifier", "DatatypeProperty", "NormaLegal", nullptr},
    {"title", "DatatypeProperty", "NormaLegal", nullptr},
};

constexpr std::pair<UnitLevel, const char*> kLevelNames[] = {
    {UnitLevel::kGobernacion, "Gobernacion"},
    {UnitLevel::kVicegobernacion, "Vicegobernacion"},
    {UnitLevel::kMinisterio, "Ministerio"},
    {UnitLevel::kSubsecretaria, "Subsecretaria"},
    {UnitLevel::kDireccionGeneral, "DireccionGeneral"},
    {UnitLevel::kDireccion, "Direccion"},
    {UnitLevel::kDepartamento, "Departamento"},
};

const char* LevelName(UnitLevel level) {
  return kLevelNames[static_cast<int>(level)].second;
}

}  // namespace

int Rank(UnitLevel level) {
  switch (level) {
    case UnitLevel::kGobernacion:
    case UnitLevel::kVicegobernacion: return 0;
    case UnitLevel::kMinisterio: return 1;
    case UnitLevel::kSubsecretaria: return 2;
    case UnitLevel::kDireccionGeneral: return 3;
    case UnitLevel::kDireccion: return 4;
    case UnitLevel::kDepartamento: return 5;
  }
  return 0;
}

std::string LevelClass(UnitLevel level) { return vocab::Ege(LevelName(level)); }

std::optional<UnitLevel> LevelFromClass(std::string_view iri) {
  for (const auto& [level, name] : kLevelNames) {
    if (iri == vocab::Ege(name)) return level;
  }
  return std::nullopt;
}

std::vector<Triple> Vocabulary() {
  const Term type = Iri(vocab::kType);
  const Term sub = Iri(vocab::kSubClassOf);
  const Term label = Iri(vocab::Rdfs("label"));
  const Term layer = Ege("layer");
  const Term aligned = Ege("alignedWith");
  const Term annotation = Iri(vocab::Owl("AnnotationProperty"));
  std::vector<Triple> out;

  out.push_back({Iri(vocab::kEge), type, Iri(vocab::Owl("Ontology"))});
  out.push_back({layer, type, annotation});
  out.push_back({aligned, type, annotation});

  for (const ClassDecl& c : kClasses) {
    Term cls = Ege(c.name);
    out.push_back({cls, type, Iri(vocab::Owl("Class"))});
    out.push_back({cls, sub, c.parent ? Ege(c.parent) : Iri(vocab::Owl("Thing"))});
    out.push_back({cls, label, Term::Literal(c.label, "es")});
    out.push_back({cls, layer, Term::Literal(c.layer)});
  }
  for (const PropertyDecl& p : kProperties) {
    Term prop = Ege(p.name);
    out.push_back({prop, type, Iri(vocab::Owl(p.kind))});
    if (p.domain) out.push_back({prop, Iri(vocab::Rdfs("domain")), Ege(p.domain)});
    if (p.range) out.push_back({prop, Iri(vocab::Rdfs("range")), Ege(p.range)});
  }
  out.push_back({Ege("lat"), Iri(vocab::Rdfs("range")), Iri(vocab::Xsd("decimal"))});
  out.push_back({Ege("long"), Iri(vocab::Rdfs("range")), Iri(vocab::Xsd("decimal"))});
  out.push_back({Ege("hasDivision"), type, Iri(vocab::Owl("TransitiveProperty"))});
  out.push_back({Ege("unitOf"), Iri(vocab::Owl("inverseOf")), Ege("hasDivision")});

  // Alignment with the W3C Organization Ontology, by annotation only.
  const std::string org = vocab::kOrg;
  out.push_back({Ege("UnidadAdministrativa"), aligned, Iri(org + "OrganizationalUnit")});
  out.push_back({Ege("unitOf"), aligned, Iri(org + "unitOf")});
  out.push_back({Ege("hasDivision"), aligned, Iri(org + "hasUnit")});
  return out;
}

TripleStore VocabularyStore() {
  TripleStore s;
  for (const Triple& t : Vocabulary()) s.Insert(t);
  return s;
}

std::optional<UnitLevel> UnitLevelOf(const TripleStore& store,
                                     const Term& term) {
  const Term type = Iri(vocab::kType);
  for (UnitLevel level : kAllUnitLevels) {
    if (store.Contains({term, type, Iri(LevelClass(level))})) return level;
  }
  return std::nullopt;
}

namespace {

class Checker {
 public:
  explicit Checker(const TripleStore& store)
      : store_(store), partition_(SameAsPartition(store)) {}

  std::vector<Violation> Run() {
    CheckC1();
    CheckC2();
    CheckC3();
    CheckC4();
    CheckC5();
    CheckC6();
    std::sort(out_.begin(), out_.end(),
              [](const Violation& a, const Violation& b) {
                if (a.constraint != b.constraint) return a.constraint < b.constraint;
                if (a.focus != b.focus) return a.focus.value() < b.focus.value();
                return a.message < b.message;
              });
    return std::move(out_);
  }

 private:
  std::vector<Term> Instances(const char* cls) const {
    std::vector<Term> out;
    for (const Triple& t : store_.Match(std::nullopt, Iri(vocab::kType), Ege(cls))) {
      out.push_back(t.subject);
    }
    return out;
  }

  bool Typed(const Term& x, std::initializer_list<const char*> classes) const {
    for (const char* c : classes) {
      if (store_.Contains({x, Iri(vocab::kType), Ege(c)})) return true;
    }
    return false;
  }

  void Add(const char* id, const Term& focus, std::string message) {
    out_.push_back({id, focus, std::move(message)});
  }

  void CheckC1() {
    for (const Term& estado : Instances("Estado")) {
      bool ok = false;
      for (const Triple& t : store_.Match(estado, Ege("hasPower"), std::nullopt)) {
        ok |= Typed(t.object, {"Ejecutivo", "Legislativo", "Judicial"});
      }
      if (!ok) {
        Add("C1", estado,
            "Estado has no hasPower object typed Ejecutivo, Legislativo or "
            "Judicial");
      }
    }
  }

  void CheckC2() {
    for (const Term& x : Instances("Ejecutivo")) {
      bool ok = false;
      for (const Triple& t : store_.Match(x, Ege("hasDivision"), std::nullopt)) {
        ok |= Typed(t.object, {"Gobernacion", "Ministerio"});
      }
      if (!ok) {
        Add("C2", x,
            "Ejecutivo has no hasDivision object typed Gobernacion or "
            "Ministerio");
      }
    }
  }

  void CheckC3() {
    auto pid = store_.Encode(Ege("hasDivision"));
    if (!pid) return;
    store_.ForEachMatch(std::nullopt, pid, std::nullopt, [&](const IdTriple& id) {
      if (store_.IsInferred(id)) return true;
      Triple t = store_.DecodeTriple(id);
      auto from = UnitLevelOf(store_, t.subject);
      auto to = UnitLevelOf(store_, t.object);
      if (from && to && Rank(*to) != Rank(*from) + 1) {
        Add("C3", t.object,
            "hasDivision edge from " + t.subject.value() + " (rank " +
                std::to_string(Rank(*from)) + ") to " + t.object.value() +
                " (rank " + std::to_string(Rank(*to)) +
                ") does not descend exactly one rank");
      }
      return true;
    });
  }

  void CheckC4() {
    std::set<Term> units;
    for (const Term& u : Instances("UnidadAdministrativa")) units.insert(u);
    for (UnitLevel level : kAllUnitLevels) {
      for (const Term& u : Instances(LevelName(level))) units.insert(u);
    }
    auto pid = store_.Encode(Ege("hasDivision"));
    for (const Term& u : units) {
      auto level = UnitLevelOf(store_, u);
      if (level && Rank(*level) == 0) continue;
      std::set<TermId> parents;
      if (auto uid = store_.Encode(u); uid && pid) {
        store_.ForEachMatch(std::nullopt, pid, uid, [&](const IdTriple& t) {
          if (!store_.IsInferred(t)) parents.insert(t[0]);
          return true;
        });
      }
      if (parents.size() != 1) {
        Add("C4", u,
            "unit has " + std::to_string(parents.size()) +
                " asserted hasDivision parents, expected exactly 1");
      }
    }
  }

  // One focus per sameAs class: the least member whose type triple is
  // asserted, else the least member.
  std::vector<std::vector<Term>> GroupBySameAs(const std::vector<Term>& terms) const {
    std::map<Term, std::vector<Term>> groups;
    for (const Term& t : terms) groups[partition_.Representative(t)].push_back(t);
    std::vector<std::vector<Term>> out;
    for (auto& [rep, members] : groups) {
      std::sort(members.begin(), members.end(), [](const Term& a, const Term& b) {
        return a.ToNTriples() < b.ToNTriples();
      });
      out.push_back(std::move(members));
    }
    return out;
  }

  Term Focus(const std::vector<Term>& members, const char* cls) const {
    for (const Term& m : members) {
      if (store_.OriginOf({m, Iri(vocab::kType), Ege(cls)}) == Origin::kAsserted) {
        return m;
      }
    }
    return members.front();
  }

  void CheckC5() {
    for (const auto& members : GroupBySameAs(Instances("Oficina"))) {
      Term focus = Focus(members, "Oficina");
      try {
        if (!ResolveCoordinates(store_, focus)) {
          Add("C5", focus, "Oficina does not resolve to coordinates");
        }
      } catch (const DataError& e) {
        Add("C5", focus, std::string("Oficina has malformed coordinates: ") + e.what());
      }
    }
  }

  void CheckC6() {
    for (const auto& members : GroupBySameAs(Instances("Tramite"))) {
      bool offered = false;
      for (const Term& m : members) {
        for (const Triple& t : store_.Match(std::nullopt, Ege("offersTramite"), m)) {
          offered |= Typed(t.subject, {"Oficina"});
        }
      }
      if (!offered) {
        Add("C6", Focus(members, "Tramite"), "Tramite is not offered by any Oficina");
      }
    }
  }

  const TripleStore& store_;
  Partition partition_;
  std::vector<Violation> out_;
};

bool ContainsAll(const TripleStore& store, const std::vector<Triple>& triples) {
  for (const Triple& t : triples) {
    if (!store.Contains(t)) return false;
  }
  return true;
}

}  // namespace

std::vector<Violation> Validate(const TripleStore& store, const RuleSet& rules) {
  std::vector<Triple> tbox = Vocabulary();
  if (store.materialized() && ContainsAll(store, tbox)) {
    return Checker(store).Run();
  }
  TripleStore working = store;
  for (const Triple& t : tbox) working.Insert(t);
  TripleStore closed = Materialize(working, rules);
  return Checker(closed).Run();
}

// ---------------------------------------------------------------------------
// Fixture generation

namespace {

std::string Padded(std::size_t n) {
  std::string s = std::to_string(n);
  return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

const char* LevelSlug(UnitLevel level) {
  switch (level) {
    case UnitLevel::kGobernacion: return "gobernacion";
    case UnitLevel::kVicegobernacion: return "vicegobernacion";
    case UnitLevel::kMinisterio: return "ministerio";
    case UnitLevel::kSubsecretaria: return "subsecretaria";
    case UnitLevel::kDireccionGeneral: return "direccion-general";
    case UnitLevel::kDireccion: return "direccion";
    case UnitLevel::kDepartamento: return "departamento";
  }
  return "";
}

const char* LevelLabel(UnitLevel level) {
  switch (level) {
    case UnitLevel::kGobernacion: return "Gobernación";
    case UnitLevel::kVicegobernacion: return "Vicegobernación";
    case UnitLevel::kMinisterio: return "Ministerio";
    case UnitLevel::kSubsecretaria: return "Subsecretaría";
    case UnitLevel::kDireccionGeneral: return "Dirección General";
    case UnitLevel::kDireccion: return "Dirección";
    case UnitLevel::kDepartamento: return "Departamento";
  }
  return "";
}

// splitmix64; fixed across platforms, unlike std:: distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

std::string Degrees(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.7f", v);
  return buf;
}

constexpr std::uint64_t kOfficeNodeBase = 900000001;
constexpr double kCenterLat = -27.4;
constexpr double kCenterLon = -55.9;
constexpr double kHalfSpan = 0.05;  // degrees

}  // namespace

std::string EstadoIri() { return std::string(vocab::kUnit) + "estado-misiones"; }

std::string PowerIri(std::string_view name) {
  return std::string(vocab::kUnit) + "poder-" + std::string(name);
}

std::string UnitIri(UnitLevel level, std::size_t index) {
  std::string base = std::string(vocab::kUnit) + LevelSlug(level);
  if (Rank(level) == 0) return base;
  return base + "-" + Padded(index + 1);
}

std::string OfficeIri(std::size_t index) {
  return std::string(vocab::kInfra) + "oficina-" + Padded(index + 1);
}

std::string TramiteIri(std::size_t index) {
  return std::string(vocab::kTys) + "tramite-" + Padded(index + 1);
}

std::string OfficeOsmIri(std::size_t index) {
  return std::string(vocab::kOsm) + std::to_string(kOfficeNodeBase + index);
}

std::string OfficeLgdIri(std::size_t index) {
  return std::string(vocab::kLgd) + std::to_string(kOfficeNodeBase + index);
}

TripleStore GenerateFixture(const FixtureSpec& spec) {
  TripleStore s;
  const Term type = Iri(vocab::kType);
  const Term label = Iri(vocab::Rdfs("label"));
  const Term has_division = Ege("hasDivision");
  const Term sameas = Iri(vocab::kSameAs);
  const Term linked = Ege("linkedTo");
  auto add = [&s](const Term& a, const Term& b, const Term& c) {
    s.Insert({a, b, c});
  };
  auto es = [](std::string text) { return Term::Literal(std::move(text), "es"); };

  // Upper layer: the state and its powers. Only the executive is linked
  // through hasPower; the others are instantiated without structure.
  const Term estado = Iri(EstadoIri());
  add(estado, type, Ege("Estado"));
  add(estado, label, es("Provincia de Misiones"));
  const std::pair<const char*, const char*> powers[] = {
      {"ejecutivo", "Ejecutivo"}, {"legislativo", "Legislativo"}, {"judicial", "Judicial"}};
  for (const auto& [slug, cls] : powers) {
    Term p = Iri(PowerIri(slug));
    add(p, type, Ege(cls));
    add(p, label, es(std::string("Poder ") + cls));
  }
  const Term ejecutivo = Iri(PowerIri("ejecutivo"));
  add(estado, Ege("hasPower"), ejecutivo);

  // Domain layer: the administrative tree below the executive.
  const Term gobernacion = Iri(UnitIri(UnitLevel::kGobernacion, 0));
  const Term vicegobernacion = Iri(UnitIri(UnitLevel::kVicegobernacion, 0));
  add(gobernacion, type, Ege("Gobernacion"));
  add(gobernacion, label, es(LevelLabel(UnitLevel::kGobernacion)));
  add(vicegobernacion, type, Ege("Vicegobernacion"));
  add(vicegobernacion, label, es(LevelLabel(UnitLevel::kVicegobernacion)));
  add(ejecutivo, has_division, gobernacion);

  const std::pair<UnitLevel, std::size_t> levels[] = {
      {UnitLevel::kMinisterio, spec.ministerios},
      {UnitLevel::kSubsecretaria, spec.subsecretarias},
      {UnitLevel::kDireccionGeneral, spec.direcciones_generales},
      {UnitLevel::kDireccion, spec.direcciones},
      {UnitLevel::kDepartamento, spec.departamentos}};
  std::vector<Term> parents{gobernacion};
  for (const auto& [level, count] : levels) {
    std::vector<Term> current;
    current.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      Term u = Iri(UnitIri(level, i));
      add(u, type, Iri(LevelClass(level)));
      add(u, label, es(std::string(LevelLabel(level)) + " " + Padded(i + 1)));
      if (!parents.empty()) add(parents[i % parents.size()], has_division, u);
      current.push_back(std::move(u));
    }
    parents = std::move(current);
  }

  // External layer: the city, its GeoNames feature and one lgd/osm node pair
  // per office.
  Rng rng(spec.seed);
  if (spec.offices > 0) {
    const Term posadas = Iri(std::string(vocab::kTer) + "Posadas");
    const Term posadas_gn = Iri(std::string(vocab::kGn) + "3429886");
    add(posadas, type, Ege("Lugar"));
    add(posadas, label, es("Posadas"));
    add(posadas, linked, posadas_gn);
    add(posadas, sameas, posadas_gn);
    add(posadas_gn, Ege("lat"), Term::Literal("-27.3671"));
    add(posadas_gn, Ege("long"), Term::Literal("-55.8961"));

    for (std::size_t i = 0; i < spec.offices; ++i) {
      Term office = Iri(OfficeIri(i));
      Term lgd = Iri(OfficeLgdIri(i));
      Term osm = Iri(OfficeOsmIri(i));
      add(office, type, Ege("Oficina"));
      add(office, label, es("Oficina " + Padded(i + 1)));
      add(office, Ege("locatedIn"), posadas);
      add(office, linked, lgd);
      add(office, sameas, lgd);
      add(lgd, linked, osm);
      add(lgd, sameas, osm);
      double lat = kCenterLat + (rng.Uniform() * 2 - 1) * kHalfSpan;
      double lon = kCenterLon + (rng.Uniform() * 2 - 1) * kHalfSpan;
      add(osm, Ege("lat"), Term::Literal(Degrees(lat)));
      add(osm, Ege("long"), Term::Literal(Degrees(lon)));
    }
  }

  // Application layer.
  for (std::size_t j = 0; j < spec.tramites; ++j) {
    Term t = Iri(TramiteIri(j));
    add(t, type, Ege("Tramite"));
    add(t, label, es("Trámite " + Padded(j + 1)));
  }
  if (spec.offices > 0 && spec.tramites > 0) {
    std::size_t n = std::max(spec.offices, spec.tramites);
    for (std::size_t a = 0; a < n; ++a) {
      add(Iri(OfficeIri(a % spec.offices)), Ege("offersTramite"),
          Iri(TramiteIri(a % spec.tramites)));
    }
  }
  return s;
}

}  // namespace oge

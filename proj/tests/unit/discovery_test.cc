#include <algorithm>
#include <deque>
#include <map>

#include <gtest/gtest.h>

#include "oge/discovery.h"
#include "oge/http_service.h"
#include "oge/rdf_io.h"
#include "oge/schema.h"
#include "oge/vocab.h"
#include "oracles.h"

namespace oge {
namespace {

Term Iri(const char* ns, const std::string& local) { return Term::Iri(ns + local); }

const Term kDni = Iri(vocab::kTys, "Nuevo_DNI");
const Term kPosadas = Iri(vocab::kTer, "Posadas");
const Term kOffice = Iri(vocab::kInfra, "CDR-POS-CH-32-33");

TripleStore NuevoDniSnapshot() {
  TripleStore s;
  for (const auto& t : ParseFile(std::string(OGE_DATA_DIR) + "/nuevo_dni.ttl")) s.Insert(t);
  return PrepareSnapshot(std::move(s), RuleSet::Default());
}

const TripleStore& FixtureSnapshot() {
  static const TripleStore s = PrepareSnapshot(GenerateFixture(), RuleSet::Default());
  return s;
}

bool Adjacent(const TripleStore& s, const Term& a, const Term& b) {
  return !s.Match(a, std::nullopt, b).empty() || !s.Match(b, std::nullopt, a).empty();
}

void ExpectValidPath(const TripleStore& s, const std::vector<Term>& path, const Term& from,
                     const Term& to) {
  ASSERT_FALSE(path.empty());
  EXPECT_EQ(path.front(), from);
  EXPECT_EQ(path.back(), to);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    EXPECT_TRUE(Adjacent(s, path[i], path[i + 1]))
        << path[i].ToNTriples() << " " << path[i + 1].ToNTriples();
  }
}

TEST(FindOffices, NuevoDniNearestOffice) {
  TripleStore s = NuevoDniSnapshot();
  FindResult r = FindOffices(s, kDni, kPosadas, 1);
  ASSERT_EQ(r.offices.size(), 1u);
  const OfficeResult& o = r.offices[0];
  EXPECT_EQ(o.office, kOffice);
  EXPECT_EQ(o.point, GeoPoint(-27.3652841, -55.8947302));
  double expected = oracle::CentralAngleMeters(-27.36708, -55.89608, -27.3652841, -55.8947302);
  EXPECT_NEAR(o.distance_m, expected, 1e-6 * expected);
  ExpectValidPath(s, o.path, kDni, Iri(vocab::kOsm, "143320791"));
  EXPECT_TRUE(r.warnings.empty());
}

TEST(FindOffices, ZeroKIsEmpty) {
  EXPECT_TRUE(FindOffices(NuevoDniSnapshot(), kDni, kPosadas, 0).offices.empty());
}

TEST(FindOffices, ExactPointRanksOfficeFirst) {
  const TripleStore& s = FixtureSnapshot();
  Term tramite = Term::Iri(TramiteIri(0));
  auto at = ResolveCoordinates(s, Term::Iri(OfficeIri(10)));
  ASSERT_TRUE(at);
  FindResult r = FindOffices(s, tramite, at->point, 5);
  ASSERT_FALSE(r.offices.empty());
  EXPECT_EQ(r.offices[0].office, Term::Iri(OfficeIri(10)));
  EXPECT_EQ(r.offices[0].distance_m, 0.0);
}

TEST(FindOffices, RankingMatchesFullSortOracle) {
  const TripleStore& s = FixtureSnapshot();
  oracle::Generator g(11);
  std::uniform_real_distribution<double> lat(-27.5, -27.2), lon(-56.1, -55.7);
  for (std::size_t j = 0; j < 10; ++j) {
    Term tramite = Term::Iri(TramiteIri(j));
    // Offerers per the fixture's round-robin wiring.
    std::vector<Term> offerers;
    for (const Triple& t : s.Match(std::nullopt, Term::Iri(vocab::Ege("offersTramite")), tramite)) {
      if (t.subject.value().starts_with(vocab::kInfra)) offerers.push_back(t.subject);
    }
    GeoPoint origin(lat(g.rng()), lon(g.rng()));
    std::vector<std::pair<double, std::string>> oracle;
    for (const Term& o : offerers) {
      GeoPoint p = ResolveCoordinates(s, o)->point;
      oracle.push_back({oracle::CentralAngleMeters(origin.latitude(), origin.longitude(),
                                                   p.latitude(), p.longitude()),
                        o.value()});
    }
    std::sort(oracle.begin(), oracle.end());
    FindResult r = FindOffices(s, tramite, origin, 100);
    ASSERT_EQ(r.offices.size(), oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      EXPECT_EQ(r.offices[i].office.value(), oracle[i].second);
      EXPECT_NEAR(r.offices[i].distance_m, oracle[i].first, 1e-6 * oracle[i].first + 1e-9);
      ExpectValidPath(s, r.offices[i].path, tramite, r.offices[i].path.back());
    }
  }
}

TEST(FindOffices, Deterministic) {
  const TripleStore& s = FixtureSnapshot();
  Term tramite = Term::Iri(TramiteIri(3));
  FindResult a = FindOffices(s, tramite, kPosadas, 5);
  FindResult b = FindOffices(s, tramite, kPosadas, 5);
  ASSERT_EQ(a.offices.size(), b.offices.size());
  for (std::size_t i = 0; i < a.offices.size(); ++i) {
    EXPECT_EQ(a.offices[i].office, b.offices[i].office);
    EXPECT_EQ(a.offices[i].path, b.offices[i].path);
    EXPECT_EQ(a.offices[i].distance_m, b.offices[i].distance_m);
  }
}

TEST(FindOffices, Errors) {
  TripleStore s = NuevoDniSnapshot();
  try {
    FindOffices(s, Iri(vocab::kTys, "Nope"), kPosadas, 1);
    FAIL();
  } catch (const DiscoveryError& e) {
    EXPECT_EQ(e.code(), DiscoveryError::Code::kNoSuchTramite);
  }
  try {
    FindOffices(s, kDni, Iri(vocab::kFoaf, "12345678"), 1);
    FAIL();
  } catch (const DiscoveryError& e) {
    EXPECT_EQ(e.code(), DiscoveryError::Code::kOriginNotGeolocated);
  }
}

TEST(FindOffices, OfficeWithoutCoordinatesWarns) {
  TripleStore s = NuevoDniSnapshot();
  Term bare = Iri(vocab::kInfra, "SIN-COORDENADAS");
  s.Insert({bare, Term::Iri(vocab::kType), Term::Iri(vocab::Ege("Oficina"))});
  s.Insert({bare, Term::Iri(vocab::Ege("offersTramite")), kDni});
  FindResult r = FindOffices(s, kDni, kPosadas, 5);
  ASSERT_EQ(r.offices.size(), 1u);
  EXPECT_EQ(r.offices[0].office, kOffice);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("SIN-COORDENADAS"), std::string::npos);
}

TEST(LinkedComponent, NuevoDniInstanceSet) {
  TripleStore s = NuevoDniSnapshot();
  std::set<Term> expected{kDni,
                          kPosadas,
                          kOffice,
                          Iri(vocab::kOsm, "143320791"),
                          Iri(vocab::kLgd, "143320791"),
                          Iri(vocab::kGn, "3429886"),
                          Iri(vocab::kFoaf, "12345678")};
  for (const Term& t : expected) EXPECT_EQ(LinkedComponent(s, t), expected);
  Term alone = Iri(vocab::kTys, "Aislado");
  EXPECT_EQ(LinkedComponent(s, alone), std::set<Term>{alone});
}

TEST(LinkedComponent, MatchesBfsOracleAndPartitions) {
  const char* spaces[] = {vocab::kTys, vocab::kTer, vocab::kOsm, vocab::kInfra, vocab::kGn};
  const Term linked = Term::Iri(vocab::Ege("linkedTo"));
  const Term sameas = Term::Iri(vocab::kSameAs);
  const Term other = Term::Iri(vocab::Ege("locatedIn"));
  for (int round = 0; round < 40; ++round) {
    oracle::Generator g(100 + round);
    std::vector<Term> nodes;
    for (int i = 0; i < 25; ++i) {
      nodes.push_back(Iri(spaces[g.Below(5)], "n" + std::to_string(i)));
    }
    nodes.push_back(Term::Blank("b"));
    TripleStore s;
    std::map<Term, std::set<Term>> adj;
    std::size_t edges = g.Below(30);
    for (std::size_t e = 0; e < edges; ++e) {
      const Term& a = nodes[g.Below(nodes.size())];
      const Term& b = nodes[g.Below(nodes.size())];
      std::size_t kind = g.Below(3);
      if (a.is_blank() && kind == 2) continue;
      s.Insert({a, kind == 0 ? linked : kind == 1 ? sameas : other, b});
      if (kind < 2) {
        adj[a].insert(b);
        adj[b].insert(a);
      }
    }
    std::set<Term> covered;
    for (const Term& start : nodes) {
      if (start.is_blank()) continue;
      std::set<Term> seen{start};
      std::deque<Term> queue{start};
      while (!queue.empty()) {
        Term x = queue.front();
        queue.pop_front();
        for (const Term& y : adj[x]) {
          if (seen.insert(y).second) queue.push_back(y);
        }
      }
      std::erase_if(seen, [](const Term& t) { return t.is_blank(); });
      std::set<Term> got = LinkedComponent(s, start);
      EXPECT_EQ(got, seen) << "round " << round;
      // Components are either equal or disjoint.
      for (const Term& t : got) {
        if (covered.contains(t)) EXPECT_EQ(LinkedComponent(s, t), got);
      }
      covered.insert(got.begin(), got.end());
    }
  }
}

TEST(Explain, NuevoDniPaths) {
  TripleStore s = NuevoDniSnapshot();
  auto direct = Explain(s, kDni, kOffice);
  ASSERT_TRUE(direct);
  EXPECT_EQ(*direct, (std::vector<Term>{kDni, kOffice}));
  EXPECT_EQ(*Explain(s, kDni, kDni), std::vector<Term>{kDni});
  auto far = Explain(s, Iri(vocab::kFoaf, "12345678"), Iri(vocab::kGn, "3429886"));
  ASSERT_TRUE(far);
  ExpectValidPath(s, *far, Iri(vocab::kFoaf, "12345678"), Iri(vocab::kGn, "3429886"));
  EXPECT_FALSE(Explain(s, kDni, Iri(vocab::kTys, "Aislado")));
}

TEST(Explain, ShortestLengthMatchesBfs) {
  const Term linked = Term::Iri(vocab::Ege("linkedTo"));
  for (int round = 0; round < 30; ++round) {
    oracle::Generator g(500 + round);
    std::vector<Term> nodes;
    for (int i = 0; i < 15; ++i) nodes.push_back(Iri(vocab::kInfra, "x" + std::to_string(i)));
    TripleStore s;
    std::map<Term, std::set<Term>> adj;
    for (int e = 0; e < 20; ++e) {
      const Term& a = nodes[g.Below(nodes.size())];
      const Term& b = nodes[g.Below(nodes.size())];
      s.Insert({a, linked, b});
      adj[a].insert(b);
      adj[b].insert(a);
    }
    const Term& from = nodes[0];
    std::map<Term, std::size_t> dist{{from, 0}};
    std::deque<Term> queue{from};
    while (!queue.empty()) {
      Term x = queue.front();
      queue.pop_front();
      for (const Term& y : adj[x]) {
        if (dist.emplace(y, dist[x] + 1).second) queue.push_back(y);
      }
    }
    for (const Term& to : nodes) {
      auto path = Explain(s, from, to);
      if (!dist.contains(to)) {
        EXPECT_FALSE(path) << to.value();
        continue;
      }
      ASSERT_TRUE(path) << to.value();
      EXPECT_EQ(path->size(), dist[to] + 1);
      ExpectValidPath(s, *path, from, to);
    }
  }
}

}  // namespace
}  // namespace oge

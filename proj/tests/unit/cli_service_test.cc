#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <sys/wait.h>
#include <unistd.h>

#include <gtest/gtest.h>
#include <httplib.h>
#include <json.hpp>

#include "oge/cli.h"
#include "oge/config.h"
#include "oge/http_service.h"
#include "oge/json_api.h"
#include "oge/rdf_io.h"
#include "oge/schema.h"
#include "oge/vocab.h"

namespace oge {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kNuevoDni = std::string(OGE_DATA_DIR) + "/nuevo_dni.ttl";

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("oge_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string Write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }
  std::string Path(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Config, ParsesAllSections) {
  TempDir dir;
  dir.Write("a.ttl", "");
  Config c = ParseConfig(
      "# comment\n"
      "[data]\n"
      "path = a.ttl\n"
      "[namespaces]\n"
      "mun = <http://municipio.example/> T\n"
      "[rules]\n"
      "sameas_propagation = false\n"
      "transitive = ege:hasDivision\n"
      "[fixture]\n"
      "seed = 7\n"
      "offices = 3\n"
      "[http]\n"
      "bind = 0.0.0.0:9000\n",
      fs::path(dir.Path("a.ttl")).parent_path().string());
  ASSERT_EQ(c.data_paths.size(), 1u);
  EXPECT_EQ(fs::path(c.data_paths[0]).filename(), "a.ttl");
  EXPECT_TRUE(fs::exists(c.data_paths[0]));
  EXPECT_EQ(c.namespace_table.Label(Term::Iri("http://municipio.example/x")),
            DatasetLabel::kT);
  EXPECT_FALSE(c.rules.sameas_propagation);
  EXPECT_TRUE(c.rules.sameas_closure);
  EXPECT_EQ(c.fixture.seed, 7u);
  EXPECT_EQ(c.fixture.offices, 3u);
  EXPECT_EQ(c.fixture.ministerios, 10u);
  EXPECT_EQ(c.http_bind, "0.0.0.0:9000");
  EXPECT_EQ(c.Prefixes().Expand("mun:x"), "http://municipio.example/x");
  EXPECT_EQ(SplitHostPort(c.http_bind), (std::pair<std::string, int>{"0.0.0.0", 9000}));
}

TEST(Config, Defaults) {
  Config c = ParseConfig("");
  EXPECT_TRUE(c.data_paths.empty());
  EXPECT_EQ(c.http_bind, "127.0.0.1:8080");
  EXPECT_TRUE(c.rules.subclass_transitivity);
  EXPECT_EQ(c.fixture.departamentos, 326u);
}

TEST(Config, ErrorsNameTheLine) {
  auto line_of = [](const std::string& text) {
    try {
      ParseConfig(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(line_of("[data]\npath = /no/such/file.ttl\n").find("line 2"), std::string::npos);
  EXPECT_NE(line_of("[data]\npath = /no/such/file.ttl\n").find("does not exist"),
            std::string::npos);
  EXPECT_NE(line_of("[bogus]\n").find("line 1"), std::string::npos);
  EXPECT_NE(line_of("\n[rules]\nunknown_rule = true\n").find("line 3"), std::string::npos);
  EXPECT_NE(line_of("[rules]\nsameas_closure = maybe\n").find("line 2"), std::string::npos);
  EXPECT_NE(line_of("[namespaces]\nx = <http://x/> Q\n").find("line 2"), std::string::npos);
  EXPECT_NE(line_of("[fixture]\noffices = -1\n").find("line 2"), std::string::npos);
  EXPECT_NE(line_of("no section = 1\n").find("line 1"), std::string::npos);
  EXPECT_THROW(SplitHostPort("localhost"), ConfigError);
  EXPECT_THROW(SplitHostPort("h:99999"), ConfigError);
}

TEST(Config, LoadResolvesRelativeToFile) {
  TempDir dir;
  dir.Write("data.nt", "");
  std::string cfg = dir.Write("oge.ini", "[data]\npath = data.nt\n");
  Config c = LoadConfig(cfg);
  ASSERT_EQ(c.data_paths.size(), 1u);
  EXPECT_TRUE(fs::equivalent(c.data_paths[0], dir.Path("data.nt")));
  EXPECT_THROW(LoadConfig(dir.Path("missing.ini")), Error);
}

TEST(IriArg, Forms) {
  PrefixMap p = PrefixMap::Standard();
  p.Define("tys", vocab::kTys);
  EXPECT_EQ(ParseIriArg("<http://x/a>", p), Term::Iri("http://x/a"));
  EXPECT_EQ(ParseIriArg("tys:Nuevo_DNI", p), Term::Iri(std::string(vocab::kTys) + "Nuevo_DNI"));
  EXPECT_EQ(ParseIriArg("http://x/b", p), Term::Iri("http://x/b"));
  EXPECT_THROW(ParseIriArg("not an iri", p), Error);
  EXPECT_THROW(ParseIriArg("<relative>", p), Error);
  EXPECT_THROW(ParseIriArg("", p), Error);
}

TEST(Cli, FixtureValidatesClean) {
  TempDir dir;
  std::string nt = dir.Path("fixture.nt");
  ASSERT_EQ(Cli({"fixture", "-o", nt}).code, 0);
  CliRun r = Cli({"--data", nt, "validate"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(Cli({"--fixture", "validate"}).code, 0);
}

TEST(Cli, MissingHasPowerFailsC1) {
  TempDir dir;
  CliRun fixture = Cli({"fixture"});
  ASSERT_EQ(fixture.code, 0);
  std::string kept;
  for (const std::string& line : Lines(fixture.out)) {
    if (line.find(vocab::Ege("hasPower")) == std::string::npos) kept += line + "\n";
  }
  ASSERT_LT(kept.size(), fixture.out.size());
  CliRun r = Cli({"--data", dir.Write("broken.nt", kept), "validate"});
  EXPECT_EQ(r.code, 1);
  auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 1u) << r.out;
  EXPECT_TRUE(lines[0].starts_with("C1\t")) << lines[0];
}

TEST(Cli, FindPrintsJson) {
  CliRun r = Cli({"--data", kNuevoDni, "find", "tys:Nuevo_DNI", "--place", "ter:Posadas", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["office"], std::string(vocab::kInfra) + "CDR-POS-CH-32-33");
  EXPECT_DOUBLE_EQ(doc[0]["lat"].get<double>(), -27.3652841);
  EXPECT_DOUBLE_EQ(doc[0]["lon"].get<double>(), -55.8947302);
  EXPECT_EQ(doc[0]["path"].front(), std::string(vocab::kTys) + "Nuevo_DNI");
}

TEST(Cli, FindByCoordinatesAndErrors) {
  CliRun r = Cli({"--data", kNuevoDni, "find", "tys:Nuevo_DNI", "--lat", "-27.36", "--lon", "-55.89"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).size(), 1u);
  EXPECT_EQ(Cli({"--data", kNuevoDni, "find", "tys:Nada", "--place", "ter:Posadas"}).code, 1);
  EXPECT_EQ(Cli({"--data", kNuevoDni, "find", "tys:Nuevo_DNI"}).code, 2);
  EXPECT_EQ(Cli({"--data", kNuevoDni, "find", "tys:Nuevo_DNI", "--place", "ter:Posadas", "--lat",
                 "1", "--lon", "2"})
                .code,
            2);
}

TEST(Cli, UsageErrors) {
  CliRun bogus = Cli({"bogus"});
  EXPECT_EQ(bogus.code, 2);
  EXPECT_NE(bogus.err.find("bogus"), std::string::npos);
  EXPECT_EQ(Cli({}).code, 2);
  EXPECT_EQ(Cli({"--nope", "stats"}).code, 2);
  EXPECT_EQ(Cli({"--help"}).code, 0);
  EXPECT_EQ(Cli({"--data", "/no/such.ttl", "stats"}).code, 1);
}

TEST(Cli, LoadReportsParseErrorPosition) {
  TempDir dir;
  std::string bad = dir.Write("bad.ttl", "@prefix ex: <http://x/> .\nex:a ex:b \"open .\n");
  CliRun r = Cli({"load", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find(":2:"), std::string::npos) << r.err;
  CliRun ok = Cli({"load", kNuevoDni});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("24 triples"), std::string::npos) << ok.out;
}

TEST(Cli, DeterministicOutput) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"fixture"},
           {"--data", kNuevoDni, "infer"},
           {"--data", kNuevoDni, "stats"},
           {"--fixture", "find", TramiteIri(2), "--place", "ter:Posadas"}}) {
    CliRun a = Cli(args), b = Cli(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, InferOutputParsesAndContainsClosure) {
  CliRun r = Cli({"--data", kNuevoDni, "infer"});
  ASSERT_EQ(r.code, 0);
  auto triples = ParseNTriples(r.out);
  Triple inferred{Term::Iri(std::string(vocab::kOsm) + "143320791"),
                  Term::Iri(vocab::kSameAs),
                  Term::Iri(std::string(vocab::kInfra) + "CDR-POS-CH-32-33")};
  EXPECT_NE(std::find(triples.begin(), triples.end(), inferred), triples.end());
}

TEST(Cli, QueryPrintsBindings) {
  TempDir dir;
  std::string q = dir.Write(
      "q.json", R"({"patterns":[["?o","ege:offersTramite","tys:Nuevo_DNI"],
                                ["?o","rdf:type","ege:Oficina"]]})");
  CliRun r = Cli({"--data", kNuevoDni, "query", q});
  ASSERT_EQ(r.code, 0) << r.err;
  // sameAs propagation also types the office's lgd and osm nodes.
  std::set<std::string> got;
  for (const std::string& line : Lines(r.out)) got.insert(json::parse(line)["o"]);
  EXPECT_EQ(got, (std::set<std::string>{std::string(vocab::kInfra) + "CDR-POS-CH-32-33",
                                        std::string(vocab::kLgd) + "143320791",
                                        std::string(vocab::kOsm) + "143320791"}));
  EXPECT_EQ(Cli({"--data", kNuevoDni, "query", dir.Write("bad.json", "{")}).code, 1);
}

TEST(Cli, BinaryExitStatus) {
  auto status = [](const std::string& args) {
    int raw = std::system((std::string(OGE_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("--fixture validate"), 0);
  EXPECT_EQ(status("bogus"), 2);
  EXPECT_EQ(status("--data /no/such.ttl stats"), 1);
}

class ServiceTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    TripleStore data = GenerateFixture();
    for (const auto& t : ParseFile(kNuevoDni)) data.Insert(t);
    Config c;
    service_ = new HttpService(PrepareSnapshot(data, c.rules), c.namespace_table, c.Prefixes());
  }
  static void TearDownTestSuite() {
    delete service_;
    service_ = nullptr;
  }
  static HttpResponse Get(const std::string& path,
                          std::multimap<std::string, std::string> params = {}) {
    return service_->Handle("GET", path, params, "");
  }
  static inline HttpService* service_ = nullptr;
};

TEST_F(ServiceTest, Health) {
  HttpResponse r = Get("/health");
  EXPECT_EQ(r.status, 200);
  json doc = json::parse(r.body);
  EXPECT_EQ(doc["status"], "ok");
  EXPECT_EQ(doc["triples"].get<std::size_t>(), service_->store().size());
}

TEST_F(ServiceTest, OfficesRoute) {
  const std::string dni = std::string(vocab::kTys) + "Nuevo_DNI";
  HttpResponse r = Get("/tramites/" + dni + "/offices", {{"place", "ter:Posadas"}, {"k", "1"}});
  ASSERT_EQ(r.status, 200) << r.body;
  json doc = json::parse(r.body);
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["office"], std::string(vocab::kInfra) + "CDR-POS-CH-32-33");

  EXPECT_EQ(Get("/tramites/tys:Nada/offices", {{"place", "ter:Posadas"}}).status, 404);
  EXPECT_EQ(Get("/tramites/" + dni + "/offices").status, 400);
  EXPECT_EQ(Get("/tramites/" + dni + "/offices", {{"lat", "x"}, {"lon", "1"}}).status, 400);
  EXPECT_EQ(Get("/tramites/" + dni + "/offices", {{"lat", "91"}, {"lon", "1"}}).status, 400);
  EXPECT_EQ(Get("/tramites/" + dni + "/offices", {{"place", "ter:Posadas"}, {"k", "-1"}}).status,
            400);
  EXPECT_EQ(Get("/tramites/" + dni + "/offices", {{"place", "foaf:12345678"}}).status, 422);
  HttpResponse coords = Get("/tramites/" + dni + "/offices", {{"lat", "-27.4"}, {"lon", "-55.9"}});
  EXPECT_EQ(coords.status, 200);
}

TEST_F(ServiceTest, AncestorsRoute) {
  std::string dep = UnitIri(UnitLevel::kDepartamento, 0);
  HttpResponse r = Get("/units/" + dep + "/ancestors");
  ASSERT_EQ(r.status, 200) << r.body;
  json doc = json::parse(r.body);
  EXPECT_EQ(doc.size(), 5u);
  EXPECT_EQ(doc.back(), UnitIri(UnitLevel::kGobernacion, 0));
  EXPECT_EQ(Get("/units/tys:Nuevo_DNI/ancestors").status, 404);
}

TEST_F(ServiceTest, ComponentRoute) {
  HttpResponse r = Get("/component/tys:Nuevo_DNI");
  ASSERT_EQ(r.status, 200) << r.body;
  json doc = json::parse(r.body);
  EXPECT_NE(std::find(doc.begin(), doc.end(), std::string(vocab::kFoaf) + "12345678"), doc.end());
  EXPECT_EQ(Get("/component/http://nowhere.example/x").status, 404);
}

TEST_F(ServiceTest, QueryRoute) {
  HttpResponse r = service_->Handle(
      "POST", "/query", {},
      R"({"patterns":[["?o","ege:offersTramite","tys:Nuevo_DNI"]]})");
  ASSERT_EQ(r.status, 200) << r.body;
  json doc = json::parse(r.body);
  // The office plus its two sameAs nodes.
  ASSERT_EQ(doc["bindings"].size(), 3u);
  EXPECT_EQ(service_->Handle("POST", "/query", {}, "{").status, 400);
  EXPECT_EQ(service_->Handle("POST", "/query", {}, R"({"patterns":[["?s"]]})").status, 400);
  EXPECT_EQ(Get("/query").status, 404);
  EXPECT_EQ(Get("/nothing").status, 404);
}

TEST_F(ServiceTest, AgreesWithCli) {
  std::string tramite = TramiteIri(4);
  HttpResponse r = Get("/tramites/" + tramite + "/offices", {{"place", "ter:Posadas"}});
  ASSERT_EQ(r.status, 200);
  CliRun cli = Cli({"--fixture", "--data", kNuevoDni, "find", tramite, "--place", "ter:Posadas"});
  ASSERT_EQ(cli.code, 0) << cli.err;
  EXPECT_EQ(json::parse(r.body), json::parse(cli.out));
}

TEST(HttpSocket, ServesOverTcp) {
  TripleStore data;
  for (const auto& t : ParseFile(kNuevoDni)) data.Insert(t);
  Config c;
  HttpService service(PrepareSnapshot(data, c.rules), c.namespace_table, c.Prefixes());
  int port = service.Bind("127.0.0.1", 0);
  std::thread server([&] { service.Listen(); });
  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/health");
  auto offices =
      client.Get("/tramites/tys%3ANuevo_DNI/offices?place=ter%3APosadas&k=1");
  auto missing = client.Get("/tramites/tys%3ANada/offices?place=ter%3APosadas");
  auto query = client.Post("/query", R"({"patterns":[["?s","rdf:type","ege:Tramite"]]})",
                           "application/json");
  service.Stop();
  server.join();
  ASSERT_TRUE(health && offices && missing && query);
  EXPECT_EQ(health->status, 200);
  EXPECT_EQ(json::parse(health->body)["status"], "ok");
  EXPECT_EQ(offices->status, 200);
  EXPECT_EQ(json::parse(offices->body)[0]["office"],
            std::string(vocab::kInfra) + "CDR-POS-CH-32-33");
  EXPECT_EQ(missing->status, 404);
  EXPECT_EQ(query->status, 200);
  EXPECT_EQ(json::parse(query->body)["bindings"].size(), 1u);
}

}  // namespace
}  // namespace oge

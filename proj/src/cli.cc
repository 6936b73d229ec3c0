#include "oge/cli.h"

#include <algorithm>
#include <atomic>
#include <csignal>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "oge/bgp.h"
#include "oge/config.h"
#include "oge/discovery.h"
#include "oge/http_service.h"
#include "oge/json_api.h"
#include "oge/rdf_io.h"
#include "oge/schema.h"

namespace oge {

namespace {

std::atomic<HttpService*> g_serving{nullptr};

void StopServing(int) {
  if (HttpService* s = g_serving.load()) s->Stop();
}

struct Globals {
  std::string config_path;
  std::vector<std::string> data;
  bool fixture = false;
};

Config LoadGlobalConfig(const Globals& g) {
  return g.config_path.empty() ? Config{} : LoadConfig(g.config_path);
}

TripleStore LoadFiles(const std::vector<std::string>& paths) {
  TripleStore store;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    ParseOptions opts;
    opts.blank_scope = "f" + std::to_string(i);
    for (const Triple& t : ParseFile(paths[i], opts)) store.Insert(t);
  }
  return store;
}

// Config data paths, then --data files, then the generated fixture if asked.
TripleStore LoadData(const Globals& g, const Config& config) {
  std::vector<std::string> paths = config.data_paths;
  paths.insert(paths.end(), g.data.begin(), g.data.end());
  if (paths.empty() && !g.fixture) {
    throw Error("no input data: pass --data <file>, --fixture, or a config "
                "with [data] paths");
  }
  TripleStore store = LoadFiles(paths);
  if (g.fixture) store.InsertAll(GenerateFixture(config.fixture));
  return store;
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f.flush()) throw Error("cannot write " + path);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Organizational knowledge base of the Misiones government", "oge"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config_path, "Configuration file");
  app.add_option("--data", g.data, "RDF input file (.nt or .ttl); repeatable");
  app.add_flag("--fixture", g.fixture, "Include the generated fixture");

  auto* load = app.add_subcommand("load", "Parse files and report triple counts");
  std::vector<std::string> load_files;
  load->add_option("files", load_files, "Files to parse")->required();

  auto* validate = app.add_subcommand("validate", "Check constraints C1-C6");

  auto* infer = app.add_subcommand("infer", "Write the materialized closure");
  std::string infer_out;
  infer->add_option("-o,--output", infer_out, "Output .nt file (default stdout)");

  auto* query = app.add_subcommand("query", "Solve a basic graph pattern");
  std::string pattern_file;
  query->add_option("pattern-file", pattern_file,
                    "JSON file {\"patterns\":[[s,p,o],...]}")
      ->required();

  auto* find = app.add_subcommand("find", "Nearest offices offering a tramite");
  std::string find_tramite;
  std::optional<std::string> find_place;
  std::optional<double> find_lat;
  std::optional<double> find_lon;
  std::size_t find_k = 5;
  find->add_option("tramite", find_tramite, "Tramite IRI")->required();
  auto* place_opt = find->add_option("--place", find_place, "Origin place IRI");
  auto* lat_opt = find->add_option("--lat", find_lat, "Origin latitude");
  auto* lon_opt = find->add_option("--lon", find_lon, "Origin longitude");
  find->add_option("--k", find_k, "Number of offices")->capture_default_str();
  place_opt->excludes(lat_opt)->excludes(lon_opt);
  lat_opt->needs(lon_opt);
  lon_opt->needs(lat_opt);

  auto* fixture = app.add_subcommand("fixture", "Emit the generated fixture");
  std::optional<std::uint64_t> fixture_seed;
  std::string fixture_out;
  fixture->add_option("--seed", fixture_seed, "Coordinate seed");
  fixture->add_option("-o,--output", fixture_out, "Output .nt file (default stdout)");

  auto* stats = app.add_subcommand("stats", "Triple counts per dataset label");

  auto* serve = app.add_subcommand("serve", "Start the HTTP JSON API");
  std::string serve_bind;
  serve->add_option("--bind", serve_bind, "host:port (overrides the config)");

  // The first bare word after the global options names the subcommand.
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config" || a == "--data") {
      ++i;
      continue;
    }
    if (a.starts_with("-")) continue;
    auto subs = app.get_subcommands([&a](const CLI::App* s) { return s->get_name() == a; });
    if (subs.empty()) {
      err << "oge: unknown subcommand '" << a << "'\n" << app.help();
      return 2;
    }
    break;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (find->parsed() && !find_place && !find_lat) {
      throw CLI::ValidationError("find", "pass --place or --lat and --lon");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "oge: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    Config config = LoadGlobalConfig(g);
    PrefixMap prefixes = config.Prefixes();

    if (load->parsed()) {
      TripleStore total;
      for (std::size_t i = 0; i < load_files.size(); ++i) {
        ParseOptions opts;
        opts.blank_scope = "f" + std::to_string(i);
        auto triples = ParseFile(load_files[i], opts);
        out << load_files[i] << "\t" << triples.size() << " triples\n";
        for (const Triple& t : triples) total.Insert(t);
      }
      out << "total\t" << total.size() << " distinct triples\n";
      return 0;
    }

    if (fixture->parsed()) {
      FixtureSpec spec = config.fixture;
      if (fixture_seed) spec.seed = *fixture_seed;
      WriteOutput(fixture_out, SerializeNTriples(GenerateFixture(spec)), out);
      return 0;
    }

    TripleStore data = LoadData(g, config);

    if (stats->parsed()) {
      std::map<std::optional<DatasetLabel>, std::size_t> counts;
      for (const Triple& t : data.Triples()) {
        ++counts[config.namespace_table.Find(t.subject)];
      }
      for (DatasetLabel l : kAllDatasetLabels) {
        out << LabelLetter(l) << "\t" << LabelDisplayName(l) << "\t" << counts[l]
            << "\n";
      }
      out << "-\tunlabeled\t" << counts[std::nullopt] << "\n";
      out << "total\t\t" << data.size() << "\n";
      return 0;
    }

    if (validate->parsed()) {
      auto violations = Validate(data, config.rules);
      for (const Violation& v : violations) {
        out << v.constraint << "\t" << v.focus.value() << "\t" << v.message << "\n";
      }
      if (!violations.empty()) {
        err << violations.size() << " violation(s)\n";
        return 1;
      }
      return 0;
    }

    TripleStore snapshot = PrepareSnapshot(data, config.rules);

    if (infer->parsed()) {
      WriteOutput(infer_out, SerializeNTriples(snapshot), out);
      return 0;
    }

    if (query->parsed()) {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(ReadFileOrThrow(pattern_file));
      } catch (const nlohmann::json::exception& e) {
        throw Error(pattern_file + ": malformed JSON: " + e.what());
      }
      for (const Binding& b : SolveBgp(snapshot, ParsePatternsJson(doc, prefixes))) {
        out << BindingToJson(b).dump() << "\n";
      }
      return 0;
    }

    if (find->parsed()) {
      Term tramite = ParseTermArg(find_tramite, prefixes);
      QueryOrigin origin = find_place
                               ? QueryOrigin(ParseTermArg(*find_place, prefixes))
                               : QueryOrigin(GeoPoint(*find_lat, *find_lon));
      FindResult r = FindOffices(snapshot, tramite, origin, find_k,
                                 config.namespace_table);
      for (const std::string& w : r.warnings) err << "warning: " << w << "\n";
      out << OfficeResultsToJson(r.offices).dump(2) << "\n";
      return 0;
    }

    if (serve->parsed()) {
      auto [host, port] =
          SplitHostPort(serve_bind.empty() ? config.http_bind : serve_bind);
      HttpService service(std::move(snapshot), config.namespace_table, prefixes);
      int bound = service.Bind(host, port);
      err << "serving " << service.store().size() << " triples on " << host << ":"
          << bound << "\n";
      g_serving = &service;
      auto prev_int = std::signal(SIGINT, StopServing);
      auto prev_term = std::signal(SIGTERM, StopServing);
      service.Listen();
      std::signal(SIGINT, prev_int);
      std::signal(SIGTERM, prev_term);
      g_serving = nullptr;
      return 0;
    }
  } catch (const std::exception& e) {
    err << "oge: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace oge

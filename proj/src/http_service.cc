#include "oge/http_service.h"

#include <charconv>

#include <httplib.h>

#include "oge/discovery.h"
#include "oge/json_api.h"
#include "oge/reasoner.h"
#include "oge/schema.h"
#include "oge/vocab.h"

namespace oge {

TripleStore PrepareSnapshot(const TripleStore& data, const RuleSet& rules) {
  TripleStore kb = VocabularyStore();
  kb.InsertAll(data);
  return Materialize(kb, rules);
}

namespace {

HttpResponse Json(int status, const nlohmann::json& doc) {
  return {status, doc.dump()};
}

HttpResponse Fail(int status, const std::string& message) {
  return Json(status, {{"error", message}});
}

std::optional<std::string> Param(
    const std::multimap<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

std::optional<double> ParseDouble(const std::string& s) {
  double v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

// "/prefix/{id}/suffix" -> id, when `path` has that shape.
std::optional<std::string> Between(const std::string& path, std::string_view prefix,
                                   std::string_view suffix) {
  if (path.size() <= prefix.size() + suffix.size() || !path.starts_with(prefix) ||
      !path.ends_with(suffix)) {
    return std::nullopt;
  }
  return path.substr(prefix.size(), path.size() - prefix.size() - suffix.size());
}

}  // namespace

HttpService::HttpService(TripleStore snapshot, NamespaceTable table,
                         PrefixMap prefixes)
    : store_(std::move(snapshot)),
      table_(std::move(table)),
      prefixes_(std::move(prefixes)) {}

HttpService::~HttpService() { Stop(); }

HttpResponse HttpService::Handle(
    const std::string& method, const std::string& path,
    const std::multimap<std::string, std::string>& params,
    const std::string& body) const {
  try {
    if (method == "GET") {
      if (path == "/health") {
        return Json(200, {{"status", "ok"}, {"triples", store_.size()}});
      }
      if (auto id = Between(path, "/tramites/", "/offices")) {
        return Offices(*id, params);
      }
      if (auto id = Between(path, "/units/", "/ancestors")) return Ancestors(*id);
      if (auto id = Between(path, "/component/", "")) return Component(*id);
    } else if (method == "POST" && path == "/query") {
      return Query(body);
    }
    return Fail(404, "no such endpoint: " + method + " " + path);
  } catch (const std::exception& e) {
    return Fail(500, e.what());
  }
}

HttpResponse HttpService::Offices(
    const std::string& id,
    const std::multimap<std::string, std::string>& params) const {
  Term tramite = Term::Iri("urn:x:unset");
  try {
    tramite = ParseTermArg(id, prefixes_);
  } catch (const Error& e) {
    return Fail(400, e.what());
  }

  auto place = Param(params, "place");
  auto lat = Param(params, "lat");
  auto lon = Param(params, "lon");
  std::size_t k = 5;
  if (auto ks = Param(params, "k")) {
    auto [end, ec] = std::from_chars(ks->data(), ks->data() + ks->size(), k);
    if (ec != std::errc() || end != ks->data() + ks->size() || ks->empty()) {
      return Fail(400, "k must be a nonnegative integer");
    }
  }
  if (place.has_value() == (lat.has_value() || lon.has_value())) {
    return Fail(400, "pass either place or lat and lon");
  }

  std::optional<QueryOrigin> origin;
  try {
    if (place) {
      origin = ParseTermArg(*place, prefixes_);
    } else {
      auto la = lat ? ParseDouble(*lat) : std::nullopt;
      auto lo = lon ? ParseDouble(*lon) : std::nullopt;
      if (!la || !lo) return Fail(400, "lat and lon must both be numbers");
      origin = GeoPoint(*la, *lo);
    }
  } catch (const Error& e) {
    return Fail(400, e.what());
  }

  try {
    FindResult r = FindOffices(store_, tramite, *origin, k, table_);
    return Json(200, OfficeResultsToJson(r.offices));
  } catch (const DiscoveryError& e) {
    return Fail(e.code() == DiscoveryError::Code::kNoSuchTramite ? 404 : 422,
                e.what());
  }
}

HttpResponse HttpService::Ancestors(const std::string& id) const {
  Term unit = Term::Iri("urn:x:unset");
  try {
    unit = ParseTermArg(id, prefixes_);
  } catch (const Error& e) {
    return Fail(400, e.what());
  }
  if (!store_.Contains({unit, Term::Iri(vocab::kType),
                        Term::Iri(vocab::Ege("UnidadAdministrativa"))})) {
    return Fail(404, "no such unit: " + unit.ToNTriples());
  }
  return Json(200, TermsToJson(oge::Ancestors(store_, unit)));
}

HttpResponse HttpService::Component(const std::string& id) const {
  Term start = Term::Iri("urn:x:unset");
  try {
    start = ParseTermArg(id, prefixes_);
  } catch (const Error& e) {
    return Fail(400, e.what());
  }
  if (!store_.Encode(start)) return Fail(404, "unknown term: " + start.ToNTriples());
  std::set<Term> component = LinkedComponent(store_, start, table_);
  return Json(200, TermsToJson({component.begin(), component.end()}));
}

HttpResponse HttpService::Query(const std::string& body) const {
  std::vector<TriplePattern> patterns;
  try {
    patterns = ParsePatternsJson(nlohmann::json::parse(body), prefixes_);
  } catch (const nlohmann::json::exception& e) {
    return Fail(400, std::string("malformed JSON: ") + e.what());
  } catch (const Error& e) {
    return Fail(400, e.what());
  }
  nlohmann::json bindings = nlohmann::json::array();
  for (const Binding& b : SolveBgp(store_, patterns)) {
    bindings.push_back(BindingToJson(b));
  }
  return Json(200, {{"bindings", bindings}});
}

int HttpService::Bind(const std::string& host, int port) {
  server_ = std::make_unique<httplib::Server>();
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    HttpResponse r = Handle(req.method, req.path, req.params, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server_->Get(".*", route);
  server_->Post(".*", route);
  int bound = port == 0 ? server_->bind_to_any_port(host)
                        : (server_->bind_to_port(host, port) ? port : -1);
  if (bound <= 0) {
    server_.reset();
    throw Error("cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void HttpService::Listen() {
  if (!server_) throw Error("Listen() before Bind()");
  server_->listen_after_bind();
}

void HttpService::Stop() {
  if (server_) server_->stop();
}

}  // namespace oge

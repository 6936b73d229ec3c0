#ifndef OGE_HTTP_SERVICE_H_
#define OGE_HTTP_SERVICE_H_

#include <map>
#include <memory>
#include <string>

#include "oge/config.h"
#include "oge/triple_store.h"

namespace httplib {
class Server;
}

namespace oge {

// Vocabulary plus `data`, materialized with `rules`: what validate, query,
// find and serve operate on.
TripleStore PrepareSnapshot(const TripleStore& data, const RuleSet& rules);

struct HttpResponse {
  int status = 200;
  std::string body;  // JSON
};

// Read-only JSON API over an immutable snapshot:
//
//   GET  /health
//   GET  /tramites/{iri}/offices?place=<iri> | lat=<deg>&lon=<deg> [&k=<n>]
//   GET  /units/{iri}/ancestors
//   POST /query                 body {"patterns":[[s,p,o],...]}
//   GET  /component/{iri}
//
// {iri} is a percent-encoded full IRI (prefixed names are accepted too).
class HttpService {
 public:
  HttpService(TripleStore snapshot, NamespaceTable table, PrefixMap prefixes);
  ~HttpService();

  // Routing without a socket; `path` is already percent-decoded.
  HttpResponse Handle(const std::string& method, const std::string& path,
                      const std::multimap<std::string, std::string>& params,
                      const std::string& body) const;

  // Port 0 picks a free port. Returns the bound port; throws oge::Error on
  // failure.
  int Bind(const std::string& host, int port);
  // Blocks until Stop().
  void Listen();
  void Stop();

  const TripleStore& store() const { return store_; }

 private:
  HttpResponse Offices(const std::string& id,
                       const std::multimap<std::string, std::string>& params) const;
  HttpResponse Ancestors(const std::string& id) const;
  HttpResponse Component(const std::string& id) const;
  HttpResponse Query(const std::string& body) const;

  const TripleStore store_;
  const NamespaceTable table_;
  const PrefixMap prefixes_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace oge

#endif  // OGE_HTTP_SERVICE_H_

#include "oge/rdf_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "oge/vocab.h"

namespace oge {

std::optional<std::string> PrefixMap::Namespace(
    const std::string& prefix) const {
  auto it = map_.find(prefix);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> PrefixMap::Expand(std::string_view pname) const {
  auto colon = pname.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto ns = Namespace(std::string(pname.substr(0, colon)));
  if (!ns) return std::nullopt;
  return *ns + std::string(pname.substr(colon + 1));
}

PrefixMap PrefixMap::Standard() {
  PrefixMap m;
  m.Define("rdf", vocab::kRdf);
  m.Define("rdfs", vocab::kRdfs);
  m.Define("owl", vocab::kOwl);
  m.Define("xsd", vocab::kXsd);
  m.Define("org", vocab::kOrg);
  m.Define("ege", vocab::kEge);
  m.Define("unit", vocab::kUnit);
  m.Define("tys", vocab::kTys);
  m.Define("ter", vocab::kTer);
  m.Define("osm", vocab::kOsm);
  m.Define("lgd", vocab::kLgd);
  m.Define("infra", vocab::kInfra);
  m.Define("gn", vocab::kGn);
  m.Define("foaf", vocab::kFoaf);
  return m;
}

std::string ParseDiagnostic::ToString() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

std::string SerializeNTriples(const std::vector<Triple>& triples) {
  std::vector<std::string> lines;
  lines.reserve(triples.size());
  for (const Triple& t : triples) lines.push_back(t.ToNTriples());
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string SerializeNTriples(const TripleStore& store) {
  return SerializeNTriples(store.Triples());
}

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Triple> ParseFile(const std::string& path,
                              const ParseOptions& options) {
  auto ends_with = [&path](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) ==
               0;
  };
  bool turtle = ends_with(".ttl");
  if (!turtle && !ends_with(".nt")) {
    throw Error("unsupported file extension: " + path);
  }
  std::string text = ReadFileOrThrow(path);
  try {
    return turtle ? ParseTurtle(text, options) : ParseNTriples(text, options);
  } catch (const ParseError& e) {
    throw ParseError(e.diagnostic(), path);
  }
}

namespace {

struct IriParts {
  std::optional<std::string_view> scheme;
  std::optional<std::string_view> authority;
  std::string_view path;
  std::optional<std::string_view> query;
  std::optional<std::string_view> fragment;
};

IriParts Split(std::string_view s) {
  IriParts p;
  if (auto hash = s.find('#'); hash != std::string_view::npos) {
    p.fragment = s.substr(hash + 1);
    s = s.substr(0, hash);
  }
  if (auto q = s.find('?'); q != std::string_view::npos) {
    p.query = s.substr(q + 1);
    s = s.substr(0, q);
  }
  if (IsAbsoluteIri(s)) {
    auto colon = s.find(':');
    p.scheme = s.substr(0, colon);
    s = s.substr(colon + 1);
  }
  if (s.substr(0, 2) == "//") {
    s = s.substr(2);
    auto slash = s.find('/');
    p.authority = s.substr(0, slash);
    s = slash == std::string_view::npos ? std::string_view{} : s.substr(slash);
  }
  p.path = s;
  return p;
}

std::string RemoveDotSegments(std::string_view in) {
  std::string input(in);
  std::string output;
  while (!input.empty()) {
    if (input.starts_with("../")) {
      input.erase(0, 3);
    } else if (input.starts_with("./")) {
      input.erase(0, 2);
    } else if (input.starts_with("/./")) {
      input.erase(0, 2);
    } else if (input == "/.") {
      input = "/";
    } else if (input.starts_with("/../") || input == "/..") {
      input = input == "/.." ? "/" : input.substr(3);
      auto last = output.rfind('/');
      output.erase(last == std::string::npos ? 0 : last);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      std::size_t start = input[0] == '/' ? 1 : 0;
      auto next = input.find('/', start);
      if (next == std::string::npos) next = input.size();
      output += input.substr(0, next);
      input.erase(0, next);
    }
  }
  return output;
}

}  // namespace

std::string ResolveIri(std::string_view base, std::string_view reference) {
  IriParts r = Split(reference);
  IriParts b = Split(base);
  std::string scheme, authority, path;
  std::optional<std::string_view> query;
  bool has_authority = false;
  if (r.scheme) {
    scheme = *r.scheme;
    has_authority = r.authority.has_value();
    authority = r.authority.value_or("");
    path = RemoveDotSegments(r.path);
    query = r.query;
  } else {
    scheme = b.scheme.value_or("");
    if (r.authority) {
      has_authority = true;
      authority = *r.authority;
      path = RemoveDotSegments(r.path);
      query = r.query;
    } else {
      has_authority = b.authority.has_value();
      authority = b.authority.value_or("");
      if (r.path.empty()) {
        path = b.path;
        query = r.query ? r.query : b.query;
      } else {
        if (r.path[0] == '/') {
          path = RemoveDotSegments(r.path);
        } else {
          std::string merged;
          if (has_authority && b.path.empty()) {
            merged = "/" + std::string(r.path);
          } else {
            auto last = b.path.rfind('/');
            merged = (last == std::string_view::npos
                          ? std::string()
                          : std::string(b.path.substr(0, last + 1))) +
                     std::string(r.path);
          }
          path = RemoveDotSegments(merged);
        }
        query = r.query;
      }
    }
  }
  std::string out = scheme + ":";
  if (has_authority) out += "//" + authority;
  out += path;
  if (query) out += "?" + std::string(*query);
  if (r.fragment) out += "#" + std::string(*r.fragment);
  return out;
}

}  // namespace oge

#include "oge/config.h"

#include <charconv>
#include <filesystem>
#include <sstream>

namespace oge {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> Words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool ParseBool(std::string_view v, bool* out) {
  if (v == "true" || v == "yes" || v == "on" || v == "1") {
    *out = true;
    return true;
  }
  if (v == "false" || v == "no" || v == "off" || v == "0") {
    *out = false;
    return true;
  }
  return false;
}

template <typename T>
bool ParseUnsigned(std::string_view v, T* out) {
  auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), *out);
  return ec == std::errc() && end == v.data() + v.size() && !v.empty();
}

}  // namespace

PrefixMap Config::Prefixes() const {
  PrefixMap m = PrefixMap::Standard();
  for (const auto& e : namespace_table.entries()) m.Define(e.prefix, e.ns);
  return m;
}

Term ParseIriArg(std::string_view text, const PrefixMap& prefixes) {
  text = Trim(text);
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    return Term::Iri(std::string(text.substr(1, text.size() - 2)));
  }
  if (auto expanded = prefixes.Expand(text)) return Term::Iri(*expanded);
  if (IsAbsoluteIri(text)) return Term::Iri(std::string(text));
  throw Error("not an IRI: " + std::string(text));
}

std::pair<std::string, int> SplitHostPort(const std::string& bind) {
  auto colon = bind.rfind(':');
  int port = 0;
  if (colon == std::string::npos || colon == 0 ||
      !ParseUnsigned(std::string_view(bind).substr(colon + 1), &port) ||
      port > 65535) {
    throw ConfigError("malformed bind address (expected host:port): " + bind);
  }
  return {bind.substr(0, colon), port};
}

Config ParseConfig(std::string_view text, const std::string& base_dir) {
  Config config;
  PrefixMap prefixes = PrefixMap::Standard();
  std::string section;
  bool transitive_seen = false;
  bool inverse_seen = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    auto fail = [line_no](const std::string& msg) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " + msg);
    };
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("malformed section header");
      section = std::string(Trim(line.substr(1, line.size() - 2)));
      if (section != "data" && section != "namespaces" && section != "rules" &&
          section != "fixture" && section != "http") {
        fail("unknown section [" + section + "]");
      }
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected key = value");
    std::string key(Trim(line.substr(0, eq)));
    std::string_view value = Trim(line.substr(eq + 1));
    if (section.empty()) fail("key outside of any section");

    try {
      if (section == "data") {
        if (key != "path") fail("unknown key " + key);
        std::filesystem::path p{std::string(value)};
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        if (!std::filesystem::exists(p)) {
          fail("data path does not exist: " + p.string());
        }
        config.data_paths.push_back(p.lexically_normal().string());
      } else if (section == "namespaces") {
        auto words = Words(value);
        if (words.size() != 2 || words[1].size() != 1 ||
            !LabelFromLetter(words[1][0])) {
          fail("expected '<prefix> = <namespace> <label letter>'");
        }
        std::string ns = ParseIriArg(words[0], PrefixMap{}).value();
        config.namespace_table.Add({key, ns, *LabelFromLetter(words[1][0])});
        prefixes.Define(key, ns);
      } else if (section == "rules") {
        RuleSet& r = config.rules;
        bool* flag = key == "subclass_transitivity" ? &r.subclass_transitivity
                     : key == "type_inheritance"    ? &r.type_inheritance
                     : key == "sameas_closure"      ? &r.sameas_closure
                     : key == "sameas_propagation"  ? &r.sameas_propagation
                                                    : nullptr;
        if (flag) {
          if (!ParseBool(value, flag)) fail("expected true or false");
        } else if (key == "transitive") {
          if (!transitive_seen) r.transitive_predicates.clear();
          transitive_seen = true;
          r.transitive_predicates.push_back(ParseIriArg(value, prefixes));
        } else if (key == "inverse") {
          if (!inverse_seen) r.inverse_pairs.clear();
          inverse_seen = true;
          auto words = Words(value);
          if (words.size() != 2) fail("expected two IRIs");
          r.inverse_pairs.emplace_back(ParseIriArg(words[0], prefixes),
                                       ParseIriArg(words[1], prefixes));
        } else {
          fail("unknown key " + key);
        }
      } else if (section == "fixture") {
        FixtureSpec& f = config.fixture;
        std::size_t* count = key == "ministerios"             ? &f.ministerios
                             : key == "subsecretarias"        ? &f.subsecretarias
                             : key == "direcciones_generales" ? &f.direcciones_generales
                             : key == "direcciones"           ? &f.direcciones
                             : key == "departamentos"         ? &f.departamentos
                             : key == "offices"               ? &f.offices
                             : key == "tramites"              ? &f.tramites
                                                              : nullptr;
        bool ok = count ? ParseUnsigned(value, count)
                  : key == "seed" ? ParseUnsigned(value, &f.seed)
                                  : (fail("unknown key " + key), false);
        if (!ok) fail("expected a nonnegative integer");
      } else if (section == "http") {
        if (key != "bind") fail("unknown key " + key);
        config.http_bind = std::string(value);
        SplitHostPort(config.http_bind);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  config.rules.Validate();
  return config;
}

Config LoadConfig(const std::string& path) {
  std::string text = ReadFileOrThrow(path);
  auto dir = std::filesystem::path(path).parent_path();
  return ParseConfig(text, dir.empty() ? "." : dir.string());
}

}  // namespace oge

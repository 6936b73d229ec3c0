#include "oge/term.h"

#include <cstdio>

namespace oge {

namespace {

bool IsAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

void AppendUchar(unsigned char c, std::string* out) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "\\u%04X", static_cast<unsigned>(c));
  out->append(buf);
}

// Characters that may not appear raw inside an IRIREF.
bool NeedsIriEscape(unsigned char c) {
  if (c <= 0x20) return true;
  switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '^': case '`': case '\\':
      return true;
    default:
      return false;
  }
}

void AppendIri(const std::string& iri, std::string* out) {
  out->push_back('<');
  for (unsigned char c : iri) {
    if (NeedsIriEscape(c)) {
      AppendUchar(c, out);
    } else {
      out->push_back(static_cast<char>(c));
    }
  }
  out->push_back('>');
}

}  // namespace

bool IsAbsoluteIri(std::string_view iri) {
  if (iri.empty() || !IsAlpha(iri[0])) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!(IsAlpha(c) || IsDigit(c) || c == '+' || c == '-' || c == '.')) {
      return false;
    }
  }
  return false;
}

Term Term::Iri(std::string value) {
  if (!IsAbsoluteIri(value)) {
    throw Error("relative IRI: " + value);
  }
  return Term(TermKind::kIri, std::move(value), {}, {});
}

Term Term::Literal(std::string lexical, std::string language,
                   std::string datatype) {
  if (!language.empty() && !datatype.empty()) {
    throw Error("literal cannot carry both a language tag and a datatype");
  }
  if (!datatype.empty() && !IsAbsoluteIri(datatype)) {
    throw Error("relative datatype IRI: " + datatype);
  }
  return Term(TermKind::kLiteral, std::move(lexical), std::move(language),
              std::move(datatype));
}

Term Term::Blank(std::string label) {
  if (label.empty()) throw Error("empty blank node label");
  return Term(TermKind::kBlank, std::move(label), {}, {});
}

void AppendEscapedLiteral(std::string_view lexical, std::string* out) {
  out->push_back('"');
  for (unsigned char c : lexical) {
    switch (c) {
      case '"': out->append("\\\""); break;
      case '\\': out->append("\\\\"); break;
      case '\n': out->append("\\n"); break;
      case '\r': out->append("\\r"); break;
      case '\t': out->append("\\t"); break;
      case '\b': out->append("\\b"); break;
      case '\f': out->append("\\f"); break;
      default:
        if (c < 0x20 || c == 0x7F) {
          AppendUchar(c, out);
        } else {
          out->push_back(static_cast<char>(c));
        }
    }
  }
  out->push_back('"');
}

std::string Term::ToNTriples() const {
  std::string out;
  switch (kind_) {
    case TermKind::kIri:
      AppendIri(value_, &out);
      break;
    case TermKind::kBlank:
      out = "_:" + value_;
      break;
    case TermKind::kLiteral:
      AppendEscapedLiteral(value_, &out);
      if (!language_.empty()) {
        out += '@';
        out += language_;
      } else if (!datatype_.empty()) {
        out += "^^";
        AppendIri(datatype_, &out);
      }
      break;
  }
  return out;
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::hash<std::string> h;
  std::size_t seed = static_cast<std::size_t>(t.kind());
  auto mix = [&seed](std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  };
  mix(h(t.value()));
  if (t.is_literal()) {
    mix(h(t.language()));
    mix(h(t.datatype()));
  }
  return seed;
}

}  // namespace oge

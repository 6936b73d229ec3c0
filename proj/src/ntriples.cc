#include <atomic>

#include "oge/rdf_io.h"
#include "oge/vocab.h"
#include "parse_cursor.h"

namespace oge {
namespace internal {

void AppendUtf8(std::uint32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

void ReadEscape(Cursor& cur, bool allow_echar, std::string* out) {
  Mark at = cur.mark();
  if (cur.eof()) cur.Fail("invalid escape sequence");
  char c = cur.peek();
  if (c == 'u' || c == 'U') {
    std::size_t digits = c == 'u' ? 4 : 8;
    cur.get();
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      char h = cur.peek();
      if (cur.eof() || !IsHex(h)) cur.FailAt(at, "invalid \\u escape");
      cur.get();
      cp = cp * 16 + static_cast<std::uint32_t>(
                         IsDigit(h) ? h - '0' : (h | 0x20) - 'a' + 10);
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      cur.FailAt(at, "escape is not a Unicode scalar value");
    }
    AppendUtf8(cp, out);
    return;
  }
  if (allow_echar) {
    char decoded = 0;
    switch (c) {
      case 't': decoded = '\t'; break;
      case 'b': decoded = '\b'; break;
      case 'n': decoded = '\n'; break;
      case 'r': decoded = '\r'; break;
      case 'f': decoded = '\f'; break;
      case '"': decoded = '"'; break;
      case '\'': decoded = '\''; break;
      case '\\': decoded = '\\'; break;
      default: break;
    }
    if (decoded != 0) {
      cur.get();
      out->push_back(decoded);
      return;
    }
  }
  cur.FailAt(at, "invalid escape sequence");
}

std::string ReadIriRef(Cursor& cur) {
  Mark start = cur.mark();
  cur.get();  // '<'
  std::string iri;
  while (true) {
    if (cur.eof() || cur.peek() == '\n') cur.FailAt(start, "unterminated IRI");
    char c = cur.get();
    if (c == '>') break;
    if (c == '\\') {
      ReadEscape(cur, false, &iri);
      continue;
    }
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
        c == '|' || c == '^' || c == '`') {
      cur.Fail("invalid character in IRI");
    }
    iri.push_back(c);
  }
  return iri;
}

std::string ReadShortString(Cursor& cur) {
  Mark start = cur.mark();
  char quote = cur.get();
  std::string value;
  while (true) {
    if (cur.eof() || cur.peek() == '\n' || cur.peek() == '\r') {
      cur.FailAt(start, "unterminated literal");
    }
    char c = cur.get();
    if (c == quote) break;
    if (c == '\\') {
      ReadEscape(cur, true, &value);
    } else {
      value.push_back(c);
    }
  }
  return value;
}

std::string ReadBlankLabel(Cursor& cur) {
  Mark start = cur.mark();
  if (cur.peek() != '_' || cur.peek(1) != ':') {
    cur.Fail("expected blank node label");
  }
  cur.skip(2);
  auto is_label_char = [](char c) {
    return IsAsciiAlpha(c) || IsDigit(c) || c == '_' || c == '-' ||
           c == '.' || (static_cast<unsigned char>(c) & 0x80);
  };
  std::size_t n = 0;
  while (cur.has(n) && is_label_char(cur.peek(n))) ++n;
  while (n > 0 && cur.peek(n - 1) == '.') --n;
  if (n == 0 || cur.peek() == '-' || cur.peek() == '.') {
    cur.FailAt(start, "invalid blank node label");
  }
  std::string label(cur.rest().substr(0, n));
  cur.skip(n);
  return label;
}

std::string ReadLangTag(Cursor& cur) {
  Mark start = cur.mark();
  cur.get();  // '@'
  std::string tag;
  while (IsAsciiAlpha(cur.peek())) tag.push_back(cur.get());
  if (tag.empty()) cur.FailAt(start, "invalid language tag");
  while (cur.peek() == '-') {
    tag.push_back(cur.get());
    std::size_t before = tag.size();
    while (IsAsciiAlpha(cur.peek()) || IsDigit(cur.peek())) {
      tag.push_back(cur.get());
    }
    if (tag.size() == before) cur.FailAt(start, "invalid language tag");
  }
  return tag;
}

std::string BlankScope(const ParseOptions& options) {
  static std::atomic<std::uint64_t> counter{0};
  if (!options.blank_scope.empty()) return options.blank_scope;
  return "g" + std::to_string(counter.fetch_add(1) + 1);
}

}  // namespace internal

namespace {

using internal::Cursor;
using internal::Mark;

void SkipInlineSpace(Cursor& cur) {
  while (!cur.eof() && (cur.peek() == ' ' || cur.peek() == '\t')) cur.get();
}

// Consumes the rest of a line after a statement: spaces, an optional comment
// and the line break.
void FinishLine(Cursor& cur) {
  SkipInlineSpace(cur);
  if (cur.peek() == '#') {
    while (!cur.eof() && cur.peek() != '\n') cur.get();
  }
  if (cur.eof()) return;
  if (cur.peek() == '\r') cur.get();
  if (cur.eof()) return;
  if (cur.peek() != '\n') cur.Fail("expected end of line after '.'");
  cur.get();
}

Term ReadAbsoluteIri(Cursor& cur) {
  Mark start = cur.mark();
  std::string iri = internal::ReadIriRef(cur);
  if (!IsAbsoluteIri(iri)) cur.FailAt(start, "relative IRI");
  return Term::Iri(std::move(iri));
}

class NTriplesParser {
 public:
  NTriplesParser(std::string_view text, const ParseOptions& options)
      : cur_(text), options_(options), scope_(internal::BlankScope(options)) {}

  std::vector<Triple> Parse() {
    std::vector<Triple> out;
    while (!cur_.eof()) {
      SkipInlineSpace(cur_);
      if (cur_.eof()) break;
      char c = cur_.peek();
      if (c == '#' || c == '\n' || c == '\r') {
        FinishLine(cur_);
        continue;
      }
      Term s = Subject();
      SkipInlineSpace(cur_);
      if (cur_.peek() != '<') cur_.Fail("expected predicate IRI");
      Term p = ReadAbsoluteIri(cur_);
      SkipInlineSpace(cur_);
      Term o = Object();
      SkipInlineSpace(cur_);
      if (cur_.peek() != '.') cur_.Fail("missing terminating '.'");
      cur_.get();
      FinishLine(cur_);
      out.push_back(Triple{std::move(s), std::move(p), std::move(o)});
    }
    return out;
  }

 private:
  Term Blank() {
    return Term::Blank(
        internal::ScopedBlank(internal::ReadBlankLabel(cur_), options_, scope_));
  }

  Term Subject() {
    char c = cur_.peek();
    if (c == '<') return ReadAbsoluteIri(cur_);
    if (c == '_') return Blank();
    if (c == '"') cur_.Fail("literal subject");
    cur_.Fail("expected subject");
  }

  Term Object() {
    char c = cur_.peek();
    if (c == '<') return ReadAbsoluteIri(cur_);
    if (c == '_') return Blank();
    if (c != '"') cur_.Fail("expected object");
    std::string lexical = internal::ReadShortString(cur_);
    if (cur_.peek() == '@') {
      return Term::Literal(std::move(lexical), internal::ReadLangTag(cur_));
    }
    if (cur_.peek() == '^' && cur_.peek(1) == '^') {
      cur_.skip(2);
      if (cur_.peek() != '<') cur_.Fail("expected datatype IRI");
      Term dt = ReadAbsoluteIri(cur_);
      return Term::Literal(std::move(lexical), {}, dt.value());
    }
    return Term::Literal(std::move(lexical));
  }

  Cursor cur_;
  const ParseOptions& options_;
  std::string scope_;
};

}  // namespace

std::vector<Triple> ParseNTriples(std::string_view text,
                                  const ParseOptions& options) {
  return NTriplesParser(text, options).Parse();
}

}  // namespace oge

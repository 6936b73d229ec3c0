// Turtle subset: @prefix/@base (and the SPARQL-style PREFIX/BASE), prefixed
// names, 'a', predicate lists, object lists, short and long strings, numeric
// and boolean shorthand, labelled blank nodes and the empty node "[]".
// Collections and nested property lists are rejected.

#include <map>
#include <set>

#include "oge/rdf_io.h"
#include "oge/vocab.h"
#include "parse_cursor.h"

namespace oge {

namespace {

using internal::Cursor;
using internal::IsAsciiAlpha;
using internal::IsDigit;
using internal::IsHex;
using internal::Mark;

bool IsNameChar(char c) {
  return IsAsciiAlpha(c) || IsDigit(c) || c == '_' || c == '-' ||
         (static_cast<unsigned char>(c) & 0x80);
}

// Characters that may follow '\' in a local name.
bool IsLocalEscape(char c) {
  static constexpr std::string_view kChars = "_~.-!$&'()*+,;=/?#@%";
  return kChars.find(c) != std::string_view::npos;
}

class TurtleParser {
 public:
  TurtleParser(std::string_view text, const ParseOptions& options)
      : cur_(text), options_(options), scope_(internal::BlankScope(options)) {}

  std::vector<Triple> Parse() {
    while (true) {
      SkipSpace();
      if (cur_.eof()) break;
      Statement();
    }
    if (anon_counter_ > 0) LabelAnonymousNodes();
    return std::move(out_);
  }

 private:
  void SkipSpace() {
    while (!cur_.eof()) {
      char c = cur_.peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        cur_.get();
      } else if (c == '#') {
        while (!cur_.eof() && cur_.peek() != '\n') cur_.get();
      } else {
        break;
      }
    }
  }

  bool KeywordAhead(std::string_view word, bool case_insensitive) const {
    std::string_view rest = cur_.rest();
    if (rest.size() < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      char a = rest[i];
      char b = word[i];
      if (case_insensitive) {
        a = static_cast<char>(a | 0x20);
        b = static_cast<char>(b | 0x20);
      }
      if (a != b) return false;
    }
    return rest.size() == word.size() || !IsNameChar(rest[word.size()]);
  }

  void ExpectDot() {
    SkipSpace();
    if (cur_.eof()) cur_.Fail("unterminated statement: expected '.'");
    if (cur_.peek() != '.') cur_.Fail("unterminated statement: expected '.'");
    cur_.get();
  }

  void Statement() {
    if (cur_.peek() == '@') {
      if (KeywordAhead("@prefix", false)) {
        cur_.skip(7);
        PrefixDecl();
        ExpectDot();
        return;
      }
      if (KeywordAhead("@base", false)) {
        cur_.skip(5);
        BaseDecl();
        ExpectDot();
        return;
      }
      cur_.Fail("unknown directive");
    }
    if (KeywordAhead("PREFIX", true)) {
      cur_.skip(6);
      PrefixDecl();
      return;
    }
    if (KeywordAhead("BASE", true)) {
      cur_.skip(4);
      BaseDecl();
      return;
    }
    Term subject = Subject();
    PredicateObjectList(subject);
    ExpectDot();
  }

  void PrefixDecl() {
    SkipSpace();
    Mark start = cur_.mark();
    std::string prefix;
    while (!cur_.eof() && cur_.peek() != ':') {
      char c = cur_.peek();
      if (!(IsNameChar(c) || c == '.')) cur_.FailAt(start, "invalid prefix");
      prefix.push_back(cur_.get());
    }
    if (cur_.eof()) cur_.FailAt(start, "invalid prefix declaration");
    if (!prefix.empty() &&
        (!(IsAsciiAlpha(prefix[0]) ||
           (static_cast<unsigned char>(prefix[0]) & 0x80)) ||
         prefix.back() == '.')) {
      cur_.FailAt(start, "invalid prefix");
    }
    cur_.get();  // ':'
    SkipSpace();
    if (cur_.peek() != '<') cur_.Fail("expected namespace IRI");
    prefixes_.Define(std::move(prefix), Iri());
  }

  void BaseDecl() {
    SkipSpace();
    if (cur_.peek() != '<') cur_.Fail("expected base IRI");
    base_ = Iri();
  }

  // IRIREF resolved against the current base.
  std::string Iri() {
    Mark start = cur_.mark();
    std::string raw = internal::ReadIriRef(cur_);
    if (IsAbsoluteIri(raw)) return raw;
    if (base_.empty()) cur_.FailAt(start, "relative IRI");
    return ResolveIri(base_, raw);
  }

  std::optional<std::string> TryPrefixedName() {
    // Scan the prefix part without consuming.
    std::size_t n = 0;
    while (cur_.has(n) && (IsNameChar(cur_.peek(n)) || cur_.peek(n) == '.')) {
      ++n;
    }
    if (!cur_.has(n) || cur_.peek(n) != ':') return std::nullopt;
    Mark start = cur_.mark();
    std::string prefix(cur_.rest().substr(0, n));
    if (!prefix.empty() && !(IsAsciiAlpha(prefix[0]) ||
                             (static_cast<unsigned char>(prefix[0]) & 0x80))) {
      return std::nullopt;
    }
    cur_.skip(n + 1);
    std::string local;
    while (!cur_.eof()) {
      char c = cur_.peek();
      if (IsNameChar(c) || c == ':') {
        local.push_back(cur_.get());
      } else if (c == '.') {
        // A local name never ends with '.'.
        std::size_t k = 0;
        while (cur_.has(k) && cur_.peek(k) == '.') ++k;
        char after = cur_.peek(k);
        if (!cur_.has(k) ||
            !(IsNameChar(after) || after == ':' || after == '%' ||
              after == '\\')) {
          break;
        }
        local.push_back(cur_.get());
      } else if (c == '%') {
        if (!IsHex(cur_.peek(1)) || !IsHex(cur_.peek(2))) {
          cur_.Fail("invalid percent escape in local name");
        }
        for (int i = 0; i < 3; ++i) local.push_back(cur_.get());
      } else if (c == '\\') {
        if (!IsLocalEscape(cur_.peek(1))) {
          cur_.Fail("invalid escape in local name");
        }
        cur_.get();
        local.push_back(cur_.get());
      } else {
        break;
      }
    }
    auto ns = prefixes_.Namespace(prefix);
    if (!ns) cur_.FailAt(start, "unknown prefix " + prefix);
    std::string iri = *ns + local;
    if (!IsAbsoluteIri(iri)) cur_.FailAt(start, "relative IRI");
    return iri;
  }

  Term Blank() {
    std::string label = internal::ReadBlankLabel(cur_);
    explicit_labels_.insert(label);
    return Term::Blank(internal::ScopedBlank(label, options_, scope_));
  }

  // `[]` nodes carry a placeholder until the whole document is read, so their
  // final labels can avoid every label written explicitly.
  static constexpr char kAnonMark = '\x01';

  void LabelAnonymousNodes() {
    std::map<std::string, std::string> rename;
    int next = 0;
    for (int i = 1; i <= anon_counter_; ++i) {
      std::string label;
      do {
        label = "anon" + std::to_string(++next);
      } while (explicit_labels_.contains(label));
      rename[kAnonMark + std::to_string(i)] =
          internal::ScopedBlank(label, options_, scope_);
    }
    auto fix = [&](Term& t) {
      if (t.is_blank() && t.value().front() == kAnonMark) {
        t = Term::Blank(rename.at(t.value()));
      }
    };
    for (Triple& t : out_) {
      fix(t.subject);
      fix(t.object);
    }
  }

  Term Anonymous() {
    Mark start = cur_.mark();
    cur_.get();  // '['
    SkipSpace();
    if (cur_.peek() != ']') {
      cur_.FailAt(start, "unsupported construct: nested blank node property list");
    }
    cur_.get();
    return Term::Blank(kAnonMark + std::to_string(++anon_counter_));
  }

  Term Subject() {
    char c = cur_.peek();
    if (c == '<') return Term::Iri(Iri());
    if (c == '_' && cur_.peek(1) == ':') return Blank();
    if (c == '[') return Anonymous();
    if (c == '(') cur_.Fail("unsupported construct: collection");
    if (c == '"' || c == '\'') cur_.Fail("literal subject");
    if (auto iri = TryPrefixedName()) return Term::Iri(std::move(*iri));
    cur_.Fail("expected subject");
  }

  Term Predicate() {
    char c = cur_.peek();
    if (c == '<') return Term::Iri(Iri());
    if (c == 'a' && !IsNameChar(cur_.peek(1)) && cur_.peek(1) != ':' &&
        cur_.peek(1) != '.') {
      cur_.get();
      return Term::Iri(vocab::kType);
    }
    if (auto iri = TryPrefixedName()) return Term::Iri(std::move(*iri));
    cur_.Fail("expected predicate");
  }

  std::string StringBody() {
    char q = cur_.peek();
    if (cur_.peek(1) == q && cur_.peek(2) == q) return LongString(q);
    return internal::ReadShortString(cur_);
  }

  std::string LongString(char q) {
    Mark start = cur_.mark();
    cur_.skip(3);
    std::string value;
    while (true) {
      if (cur_.eof()) cur_.FailAt(start, "unterminated literal");
      char c = cur_.peek();
      if (c == q && cur_.peek(1) == q && cur_.peek(2) == q) {
        // Up to two extra quotes may close the string from inside.
        std::size_t k = 3;
        while (cur_.peek(k) == q && k < 5) ++k;
        for (std::size_t i = 3; i < k; ++i) value.push_back(q);
        cur_.skip(k);
        break;
      }
      cur_.get();
      if (c == '\\') {
        internal::ReadEscape(cur_, true, &value);
      } else {
        value.push_back(c);
      }
    }
    return value;
  }

  Term Literal() {
    std::string lexical = StringBody();
    if (cur_.peek() == '@') {
      return Term::Literal(std::move(lexical), internal::ReadLangTag(cur_));
    }
    if (cur_.peek() == '^' && cur_.peek(1) == '^') {
      cur_.skip(2);
      std::string dt;
      if (cur_.peek() == '<') {
        dt = Iri();
      } else if (auto iri = TryPrefixedName()) {
        dt = std::move(*iri);
      } else {
        cur_.Fail("expected datatype IRI");
      }
      return Term::Literal(std::move(lexical), {}, std::move(dt));
    }
    return Term::Literal(std::move(lexical));
  }

  Term Number() {
    Mark start = cur_.mark();
    std::string lex;
    if (cur_.peek() == '+' || cur_.peek() == '-') lex.push_back(cur_.get());
    while (IsDigit(cur_.peek())) lex.push_back(cur_.get());
    bool decimal = false;
    if (cur_.peek() == '.' && IsDigit(cur_.peek(1))) {
      decimal = true;
      lex.push_back(cur_.get());
      while (IsDigit(cur_.peek())) lex.push_back(cur_.get());
    }
    bool exponent = false;
    if ((cur_.peek() == 'e' || cur_.peek() == 'E') &&
        (IsDigit(cur_.peek(1)) ||
         ((cur_.peek(1) == '+' || cur_.peek(1) == '-') &&
          IsDigit(cur_.peek(2))))) {
      exponent = true;
      lex.push_back(cur_.get());
      if (cur_.peek() == '+' || cur_.peek() == '-') lex.push_back(cur_.get());
      while (IsDigit(cur_.peek())) lex.push_back(cur_.get());
    }
    bool has_digit = false;
    for (char c : lex) has_digit |= IsDigit(c);
    if (!has_digit) cur_.FailAt(start, "invalid numeric literal");
    const char* type = exponent ? "double" : decimal ? "decimal" : "integer";
    return Term::Literal(std::move(lex), {}, vocab::Xsd(type));
  }

  Term Object() {
    char c = cur_.peek();
    if (c == '<') return Term::Iri(Iri());
    if (c == '_' && cur_.peek(1) == ':') return Blank();
    if (c == '[') return Anonymous();
    if (c == '(') cur_.Fail("unsupported construct: collection");
    if (c == '"' || c == '\'') return Literal();
    if (IsDigit(c) || c == '+' || c == '-' ||
        (c == '.' && IsDigit(cur_.peek(1)))) {
      return Number();
    }
    if (KeywordAhead("true", false) && cur_.peek(4) != ':') {
      cur_.skip(4);
      return Term::Literal("true", {}, vocab::Xsd("boolean"));
    }
    if (KeywordAhead("false", false) && cur_.peek(5) != ':') {
      cur_.skip(5);
      return Term::Literal("false", {}, vocab::Xsd("boolean"));
    }
    if (auto iri = TryPrefixedName()) return Term::Iri(std::move(*iri));
    cur_.Fail("expected object");
  }

  void PredicateObjectList(const Term& subject) {
    while (true) {
      SkipSpace();
      if (cur_.eof()) cur_.Fail("unterminated statement: expected '.'");
      Term predicate = Predicate();
      while (true) {
        SkipSpace();
        if (cur_.eof()) cur_.Fail("unterminated statement: expected '.'");
        Term object = Object();
        out_.push_back(Triple{subject, predicate, std::move(object)});
        SkipSpace();
        if (cur_.peek() != ',') break;
        cur_.get();
      }
      if (cur_.peek() != ';') return;
      // Repeated ';' and a trailing ';' before '.' are allowed.
      while (cur_.peek() == ';') {
        cur_.get();
        SkipSpace();
      }
      if (cur_.peek() == '.' || cur_.peek() == ']' || cur_.eof()) return;
    }
  }

  Cursor cur_;
  const ParseOptions& options_;
  std::string scope_;
  PrefixMap prefixes_;
  std::string base_;
  std::vector<Triple> out_;
  int anon_counter_ = 0;
  std::set<std::string> explicit_labels_;
};

}  // namespace

std::vector<Triple> ParseTurtle(std::string_view text,
                                const ParseOptions& options) {
  return TurtleParser(text, options).Parse();
}

}  // namespace oge

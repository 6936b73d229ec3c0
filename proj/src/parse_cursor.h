// Character cursor shared by the N-Triples and Turtle parsers.

#ifndef OGE_SRC_PARSE_CURSOR_H_
#define OGE_SRC_PARSE_CURSOR_H_

#include <atomic>
#include <cstdint>
#include <string>
#include <string_view>

#include "oge/rdf_io.h"

namespace oge::internal {

struct Mark {
  std::size_t pos = 0;
  int line = 1;
  int column = 1;
};

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return mark_.pos >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    std::size_t i = mark_.pos + ahead;
    return i < text_.size() ? text_[i] : '\0';
  }
  bool has(std::size_t ahead) const { return mark_.pos + ahead < text_.size(); }
  std::string_view rest() const { return text_.substr(mark_.pos); }

  char get() {
    char c = text_[mark_.pos++];
    if (c == '\n') {
      ++mark_.line;
      mark_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++mark_.column;
    }
    return c;
  }
  void skip(std::size_t n) {
    while (n-- > 0 && !eof()) get();
  }

  const Mark& mark() const { return mark_; }

  [[noreturn]] void FailAt(const Mark& m, std::string message) const {
    throw ParseError(ParseDiagnostic{m.line, m.column, std::move(message)});
  }
  [[noreturn]] void Fail(std::string message) const {
    FailAt(mark_, std::move(message));
  }

 private:
  std::string_view text_;
  Mark mark_;
};

inline bool IsHex(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
         (c >= 'A' && c <= 'F');
}

inline bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool IsDigit(char c) { return c >= '0' && c <= '9'; }

void AppendUtf8(std::uint32_t cp, std::string* out);

// After a consumed '\\' reads u/U hex escapes; with `allow_echar` also the
// single-character escapes of string literals.
void ReadEscape(Cursor& cur, bool allow_echar, std::string* out);

// Reads "<...>" with UCHAR escapes; the cursor must be at '<'. Returns the raw
// (possibly relative) IRI.
std::string ReadIriRef(Cursor& cur);

// Reads a short quoted string ('"' or '\''), the cursor at the quote.
std::string ReadShortString(Cursor& cur);

// Reads "_:label"; returns the label.
std::string ReadBlankLabel(Cursor& cur);

// Reads "@lang" after a literal, the cursor at '@'.
std::string ReadLangTag(Cursor& cur);

// Resolves the blank-node scope for one parse call.
std::string BlankScope(const ParseOptions& options);

inline std::string ScopedBlank(const std::string& label,
                               const ParseOptions& options,
                               const std::string& scope) {
  return options.rename_blanks ? label + "_" + scope : label;
}

}  // namespace oge::internal

#endif  // OGE_SRC_PARSE_CURSOR_H_

#ifndef OGE_TERM_H_
#define OGE_TERM_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oge {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TermKind : unsigned char { kIri = 0, kLiteral = 1, kBlank = 2 };

// An RDF term: an absolute IRI, a literal or a blank node. Equality is exact
// string equality on every field.
class Term {
 public:
  // Throws oge::Error unless `value` is an absolute IRI.
  static Term Iri(std::string value);
  // At most one of `language` and `datatype` may be nonempty.
  static Term Literal(std::string lexical, std::string language = {},
                      std::string datatype = {});
  static Term Blank(std::string label);

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::kIri; }
  bool is_literal() const { return kind_ == TermKind::kLiteral; }
  bool is_blank() const { return kind_ == TermKind::kBlank; }

  // IRI string, lexical form or blank label depending on kind.
  const std::string& value() const { return value_; }
  const std::string& language() const { return language_; }
  const std::string& datatype() const { return datatype_; }

  // N-Triples rendering: <iri>, "lex"@lang, "lex"^^<dt>, _:label.
  std::string ToNTriples() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  Term(TermKind kind, std::string value, std::string language,
       std::string datatype)
      : kind_(kind),
        value_(std::move(value)),
        language_(std::move(language)),
        datatype_(std::move(datatype)) {}

  TermKind kind_ = TermKind::kIri;
  std::string value_;
  std::string language_;
  std::string datatype_;
};

// True iff `iri` starts with a URI scheme followed by ':'.
bool IsAbsoluteIri(std::string_view iri);

// Appends `"lex"` with N-Triples escaping applied.
void AppendEscapedLiteral(std::string_view lexical, std::string* out);

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

}  // namespace oge

template <>
struct std::hash<oge::Term> {
  std::size_t operator()(const oge::Term& t) const noexcept {
    return oge::TermHash{}(t);
  }
};

#endif  // OGE_TERM_H_

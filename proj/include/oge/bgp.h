#ifndef OGE_BGP_H_
#define OGE_BGP_H_

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "oge/term.h"
#include "oge/triple_store.h"

namespace oge {

// A named query variable, kept apart from the term space.
struct Variable {
  std::string name;  // nonempty, without any leading '?'

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
};

using Binding = std::map<std::string, Term>;

// All solutions of the conjunction of `patterns`, sorted and duplicate free.
// An empty pattern list has exactly one solution, the empty binding.
//
// Patterns are evaluated left-deep, most concrete terms first (ties keep input
// order); each later pattern is matched with the variables bound so far
// substituted in.
std::vector<Binding> SolveBgp(const TripleStore& store,
                              const std::vector<TriplePattern>& patterns);

// Throws oge::Error on an empty variable name.
Variable Var(std::string name);

}  // namespace oge

#endif  // OGE_BGP_H_

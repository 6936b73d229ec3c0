#include "oge/bgp.h"

#include <algorithm>
#include <optional>

namespace oge {

namespace {

// Id-level slot of a pattern: either a fixed id or a variable index.
struct Slot {
  bool is_var = false;
  TermId id = 0;
  std::size_t var = 0;
};

int ConcreteCount(const TriplePattern& p) {
  return std::holds_alternative<Term>(p.subject) +
         std::holds_alternative<Term>(p.predicate) +
         std::holds_alternative<Term>(p.object);
}

class Solver {
 public:
  Solver(const TripleStore& store, const std::vector<TriplePattern>& patterns)
      : store_(store) {
    std::vector<std::size_t> order(patterns.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return ConcreteCount(patterns[a]) >
                              ConcreteCount(patterns[b]);
                     });
    for (std::size_t i : order) {
      std::array<Slot, 3> slots;
      const PatternTerm* parts[3] = {&patterns[i].subject,
                                     &patterns[i].predicate,
                                     &patterns[i].object};
      for (int k = 0; k < 3; ++k) {
        if (const auto* v = std::get_if<Variable>(parts[k])) {
          slots[k].is_var = true;
          slots[k].var = VarIndex(v->name);
        } else {
          auto id = store_.Encode(std::get<Term>(*parts[k]));
          if (!id) unsatisfiable_ = true;
          slots[k].id = id.value_or(0);
        }
      }
      plan_.push_back(slots);
    }
  }

  std::vector<Binding> Run() {
    if (unsatisfiable_) return {};
    std::vector<std::optional<TermId>> values(names_.size());
    Step(0, values);
    std::sort(results_.begin(), results_.end());
    results_.erase(std::unique(results_.begin(), results_.end()),
                   results_.end());
    return std::move(results_);
  }

 private:
  std::size_t VarIndex(const std::string& name) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    names_.push_back(name);
    return names_.size() - 1;
  }

  void Step(std::size_t depth, std::vector<std::optional<TermId>>& values) {
    if (depth == plan_.size()) {
      Binding b;
      for (std::size_t i = 0; i < names_.size(); ++i) {
        b.emplace(names_[i], store_.Decode(*values[i]));
      }
      results_.push_back(std::move(b));
      return;
    }
    const auto& slots = plan_[depth];
    std::array<std::optional<TermId>, 3> bound;
    for (int k = 0; k < 3; ++k) {
      bound[k] = slots[k].is_var ? values[slots[k].var]
                                 : std::optional<TermId>(slots[k].id);
    }
    store_.ForEachMatch(bound[0], bound[1], bound[2], [&](const IdTriple& t) {
      // Bind fresh variables; a variable repeated inside one pattern must see
      // the same id in every position.
      std::vector<std::size_t> fresh;
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) {
        if (!slots[k].is_var) continue;
        auto& v = values[slots[k].var];
        if (!v) {
          v = t[k];
          fresh.push_back(slots[k].var);
        } else if (*v != t[k]) {
          ok = false;
        }
      }
      if (ok) Step(depth + 1, values);
      for (std::size_t f : fresh) values[f].reset();
      return true;
    });
  }

  const TripleStore& store_;
  std::vector<std::array<Slot, 3>> plan_;
  std::vector<std::string> names_;
  std::vector<Binding> results_;
  bool unsatisfiable_ = false;
};

}  // namespace

Variable Var(std::string name) {
  if (name.empty()) throw Error("empty variable name");
  return Variable{std::move(name)};
}

std::vector<Binding> SolveBgp(const TripleStore& store,
                              const std::vector<TriplePattern>& patterns) {
  for (const auto& p : patterns) {
    for (const PatternTerm* part : {&p.subject, &p.predicate, &p.object}) {
      if (const auto* v = std::get_if<Variable>(part); v && v->name.empty()) {
        throw Error("empty variable name");
      }
    }
  }
  return Solver(store, patterns).Run();
}

}  // namespace oge

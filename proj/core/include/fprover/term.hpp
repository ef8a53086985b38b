#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fprover/symbols.hpp"

namespace fpr {

// Immutable first-order term: a variable or an application of a function
// symbol to subterms (a constant is an arity-0 application). Terms are shared
// hash-cached trees with value semantics; copying is a refcount bump.
//
// Atoms reuse this type with a predicate symbol at the root.
class Term {
 public:
  static Term variable(VarId v);
  static Term app(SymbolId functor, std::vector<Term> args = {});

  bool is_variable() const { return node_->is_var; }
  VarId var() const { return node_->symbol; }
  SymbolId functor() const { return node_->symbol; }
  const std::vector<Term>& args() const { return node_->args; }

  // Total count of symbol occurrences (functors, constants, variables).
  uint32_t symbol_count() const { return node_->symbol_count; }
  bool is_ground() const { return node_->var_mask == 0 && !node_->is_var; }
  // max variable id + 1, 0 if ground
  uint32_t var_limit() const { return node_->var_limit; }
  uint64_t hash() const { return node_->hash; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  bool contains_var(VarId v) const;
  void collect_vars(std::vector<VarId>& out) const;  // in occurrence order, duplicates kept

  std::string to_string(const SymbolTable& symbols) const;

 private:
  struct Node {
    uint32_t symbol;  // var id or functor id
    bool is_var;
    uint32_t symbol_count;
    uint32_t var_limit;
    uint64_t var_mask;  // bloom over var ids (bit v % 64), 0 when ground
    uint64_t hash;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Finite map from variables to terms, kept sorted by variable id. After
// unification the map is idempotent: no bound variable occurs in any image.
class Substitution {
 public:
  Substitution() = default;

  bool empty() const { return bindings_.empty(); }
  size_t size() const { return bindings_.size(); }

  const Term* find(VarId v) const;
  // Insert or overwrite a binding.
  void bind(VarId v, Term t);

  const std::vector<std::pair<VarId, Term>>& bindings() const { return bindings_; }

  // Simultaneous replacement of bound variables.
  Term apply(const Term& t) const;

  // Resolve bindings through each other until no image mentions a bound
  // variable. Requires an acyclic (occurs-checked) binding set.
  void make_idempotent();

  std::string to_string(const SymbolTable& symbols) const;

 private:
  std::vector<std::pair<VarId, Term>> bindings_;
};

// Shift every variable id in t by offset.
Term shift_vars(const Term& t, uint32_t offset);

}  // namespace fpr

#pragma once

#include <string>
#include <vector>

#include "fprover/clause.hpp"
#include "fprover/symbols.hpp"
#include "fprover/term.hpp"

namespace testutil {

// Shorthand signature for building terms in tests. Arity is fixed at first
// use of each name, like the production symbol table it wraps.
struct Sig {
  fpr::SymbolTable table;

  fpr::Term v(fpr::VarId id) { return fpr::Term::variable(id); }

  fpr::Term fn(const std::string& name, std::vector<fpr::Term> args = {}) {
    fpr::SymbolId id = table.intern(name, static_cast<uint32_t>(args.size()),
                                    fpr::SymbolKind::Function);
    return fpr::Term::app(id, std::move(args));
  }

  fpr::Term atom(const std::string& pred, std::vector<fpr::Term> args = {}) {
    fpr::SymbolId id = table.intern(pred, static_cast<uint32_t>(args.size()),
                                    fpr::SymbolKind::Predicate);
    return fpr::Term::app(id, std::move(args));
  }

  fpr::Literal pos(const std::string& pred, std::vector<fpr::Term> args = {}) {
    return fpr::Literal{true, atom(pred, std::move(args))};
  }

  fpr::Literal neg(const std::string& pred, std::vector<fpr::Term> args = {}) {
    return fpr::Literal{false, atom(pred, std::move(args))};
  }

  fpr::Clause clause(std::vector<fpr::Literal> literals) {
    return fpr::Clause(std::move(literals));
  }
};

}  // namespace testutil

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fprover/term.hpp"

namespace fpr {

// A possibly-negated atom. The atom is a Term whose root symbol is a
// predicate.
struct Literal {
  bool positive = true;
  Term atom = Term::app(0);

  bool operator==(const Literal& other) const {
    return positive == other.positive && atom == other.atom;
  }
  bool operator!=(const Literal& other) const { return !(*this == other); }

  // symbol occurrences: predicate + argument symbols (negation not counted)
  uint32_t symbol_count() const { return atom.symbol_count(); }

  std::string to_string(const SymbolTable& symbols) const;
};

// A clause is a set of literals (duplicates collapse on construction) with
// variables implicitly universally quantified. Equality and hashing are
// invariant under variable renaming: construction computes a canonical
// encoding by sorting literals (polarity, predicate, structure with variables
// wildcarded) and numbering variables by first occurrence, searching over
// order ties for the minimal encoding. Pathologically symmetric clauses can
// exhaust the tie-search budget; such clauses fall back to a deterministic
// but not renaming-invariant encoding, which can only make a duplicate
// survive, never conflate distinct clauses.
//
// Clauses are immutable and cheap to copy (shared representation).
class Clause {
 public:
  // The empty clause (falsehood).
  Clause();

  // Normalizing constructor. With compact_vars (the default) the stored
  // literals are rewritten into canonical variable numbering; rename_apart
  // disables this to preserve its shifted variable ids.
  explicit Clause(std::vector<Literal> literals, bool compact_vars = true);

  const std::vector<Literal>& literals() const { return impl_->literals; }
  size_t num_literals() const { return impl_->literals.size(); }
  bool empty() const { return impl_->literals.empty(); }

  // Total symbol occurrences across all literals; 0 for the empty clause.
  uint32_t symbol_count() const { return impl_->symbol_count; }
  // max variable id + 1 over stored literals, 0 if ground
  uint32_t var_limit() const { return impl_->var_limit; }
  bool is_ground() const { return impl_->var_limit == 0; }

  uint64_t hash() const { return impl_->hash; }
  bool operator==(const Clause& other) const;
  bool operator!=(const Clause& other) const { return !(*this == other); }

  // True when the canonical encoding search completed within budget.
  bool canonical_exact() const { return impl_->canonical_exact; }

  std::string to_string(const SymbolTable& symbols) const;

  // Number of constructions that exhausted the tie-search budget, for
  // diagnostics.
  static uint64_t canonicalization_fallbacks();

 private:
  struct Impl {
    std::vector<Literal> literals;
    std::vector<int32_t> canon;
    uint64_t hash = 0;
    uint32_t symbol_count = 0;
    uint32_t var_limit = 0;
    bool canonical_exact = true;
  };
  std::shared_ptr<const Impl> impl_;
};

struct ClauseHash {
  size_t operator()(const Clause& c) const { return static_cast<size_t>(c.hash()); }
};

// size(C): total count of symbol occurrences; 0 for the empty clause.
inline uint32_t clause_size(const Clause& c) { return c.symbol_count(); }

// Simultaneous substitution application; the literal set re-normalizes
// (duplicates collapse).
Clause apply_substitution(const Substitution& theta, const Clause& c);

// c2 with variables renamed so that var(c1) and var(result) are disjoint;
// the result is alpha-equivalent to c2.
Clause rename_apart(const Clause& c1, const Clause& c2);

// Negation of a nonempty clause for refutation: every variable is replaced by
// a fresh Skolem constant interned into `symbols`, and each literal becomes
// one ground unit clause of flipped polarity. Throws std::invalid_argument on
// the empty clause.
std::vector<Clause> negate_conjecture(const Clause& c, SymbolTable& symbols);

}  // namespace fpr

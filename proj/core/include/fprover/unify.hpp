#pragma once

#include <optional>

#include "fprover/term.hpp"

namespace fpr {

// Most general unifier of a and b, or nullopt if none exists. Occurs-check
// enforced; the result is idempotent. Callers must ensure a and b come from
// the same symbol table (variable ids may overlap; that is meaningful here).
std::optional<Substitution> unify(const Term& a, const Term& b);

// One-sided matching: extend theta so that pattern*theta == target, binding
// only variables of the pattern. Variables of the target are left untouched
// (they behave like constants). No occurs-check: matching x against f(x) is
// legal. Returns false and leaves theta in an unspecified extended state on
// failure; callers keep their own undo snapshot.
bool match_extend(const Term& pattern, const Term& target, Substitution& theta);

}  // namespace fpr

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fprover/clause.hpp"

namespace fpr {

enum class InferenceRule : uint8_t { Initial, Resolution, Factoring };

const char* rule_name(InferenceRule rule);

// A freshly generated clause with its provenance: the rule, the positions of
// its parents in the caller's numbering, and the most general unifier used.
struct Inference {
  Clause clause;
  InferenceRule rule = InferenceRule::Resolution;
  // For Resolution: {given clause, side clause}. For Factoring: {clause}.
  std::vector<uint32_t> parents;
  Substitution mgu;
};

// All binary resolvents between `given` and each side clause: for every
// literal L of `given` and complementary-polarity literal M of the side
// clause (renamed apart), with unify(atom L, atom M) = theta, emits
// ((given \ L) u (side \ M))theta. The given clause is never resolved with
// itself; callers pass side sets that do not contain it. `side_ids` supplies
// the parent identifiers recorded in provenance; `given_id` likewise.
//
// Enumeration order is deterministic: side clauses in input order, then L by
// position in `given`, then M by position in the side clause.
std::vector<Inference> find_resolutions(const Clause& given, uint32_t given_id,
                                        std::span<const Clause> sides,
                                        std::span<const uint32_t> side_ids);

// All nontrivial factors of c: for every pair of same-polarity literals with
// unifier theta, emits c*theta (pairs enumerated i<j by position). Factors
// equal to c itself are excluded.
std::vector<Inference> find_factors(const Clause& c, uint32_t c_id);

// Counts unification attempts inside a subsumption check so the NP-hard
// matching search stays total. On exhaustion the check reports "not
// subsumed", which can only keep a redundant clause, never drop a needed one.
struct SubsumptionBudget {
  int64_t attempts = 10000;
};

// True iff there is a substitution theta with c1*theta a subset of c2's
// literal set. Several c1 literals may map onto one c2 literal.
bool theta_subsumes(const Clause& c1, const Clause& c2,
                    SubsumptionBudget budget = SubsumptionBudget{});

// theta-subsumption restricted to |c1| <= |c2| literals.
bool order_subsumes(const Clause& c1, const Clause& c2,
                    SubsumptionBudget budget = SubsumptionBudget{});

// True iff some positive literal's atom is syntactically identical to some
// negative literal's atom. No unification.
bool is_tautology(const Clause& c);

}  // namespace fpr

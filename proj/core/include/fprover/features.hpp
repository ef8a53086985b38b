#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fprover/clause.hpp"

namespace fpr {

inline constexpr int kClauseFeatureCount = 7;
inline constexpr int kScalarFeatureCount = 38;
// Pins the feature layout and the "atomic terms = leaf occurrences" reading;
// model checkpoints carry this tag and refuse to load under a different one.
inline constexpr int kFeatureSchemaVersion = 1;

using ClauseFeatures = std::array<double, kClauseFeatureCount>;
using ScalarFeatures = std::array<double, kScalarFeatureCount>;

// Per-clause features, in order: negated literals, positive literals, atomic
// terms (leaf occurrences: constants and variable occurrences), distinct
// predicates, distinct functors (constants included), distinct variables,
// total variable occurrences.
ClauseFeatures clause_features(const Clause& c);

// Problem-level context reused across every scored clause of one attempt:
// sum/avg/max/min aggregates of the conjecture-clause features, plus the
// initial clause count. All zero when there are no conjecture clauses.
struct ScoringContext {
  std::array<double, 4 * kClauseFeatureCount> conjecture_aggregates{};
  double num_initial = 0.0;
};

ScoringContext make_scoring_context(const std::vector<Clause>& conjectures,
                                    size_t num_initial);

// Layout: [0,7) target clause features; [7,35) per-feature aggregates in
// blocks of four (sum, avg, max, min); [35,38) generation step, premise
// count, initial clause count.
ScalarFeatures scalar_features(const Clause& target, double generation_step,
                               double premise_count, const ScoringContext& ctx);

}  // namespace fpr

#pragma once

#include "fprover/derived_clause.hpp"
#include "fprover/features.hpp"

namespace fpr {

// Scores a candidate clause for the cost priority queue. Implementations are
// pure and safe to share read-only across concurrent proof attempts.
class CostModel {
 public:
  virtual ~CostModel() = default;
  virtual double score(const DerivedClause& target,
                       const ScoringContext& ctx) const = 0;
};

// The paper's non-learned baseline: cost equals clause size.
class BasicCost final : public CostModel {
 public:
  double score(const DerivedClause& target, const ScoringContext&) const override {
    return double(clause_size(target.clause));
  }
};

}  // namespace fpr

#include "fprover/features.hpp"

#include <algorithm>
#include <set>

namespace fpr {

namespace {

void walk_args(const Term& t, double& atomic_terms, std::set<SymbolId>& functors,
               std::set<VarId>& variables, double& var_occurrences) {
  if (t.is_variable()) {
    atomic_terms += 1;
    variables.insert(t.var());
    var_occurrences += 1;
    return;
  }
  functors.insert(t.functor());
  if (t.args().empty()) {
    atomic_terms += 1;
    return;
  }
  for (const Term& a : t.args())
    walk_args(a, atomic_terms, functors, variables, var_occurrences);
}

}  // namespace

ClauseFeatures clause_features(const Clause& c) {
  double negated = 0, positive = 0, atomic_terms = 0, var_occurrences = 0;
  std::set<SymbolId> predicates, functors;
  std::set<VarId> variables;
  for (const Literal& lit : c.literals()) {
    (lit.positive ? positive : negated) += 1;
    predicates.insert(lit.atom.functor());
    for (const Term& a : lit.atom.args())
      walk_args(a, atomic_terms, functors, variables, var_occurrences);
  }
  return {negated,
          positive,
          atomic_terms,
          double(predicates.size()),
          double(functors.size()),
          double(variables.size()),
          var_occurrences};
}

ScoringContext make_scoring_context(const std::vector<Clause>& conjectures,
                                    size_t num_initial) {
  ScoringContext ctx;
  ctx.num_initial = double(num_initial);
  if (conjectures.empty()) return ctx;
  std::array<double, kClauseFeatureCount> sum{}, max{}, min{};
  bool first = true;
  for (const Clause& c : conjectures) {
    ClauseFeatures f = clause_features(c);
    for (int i = 0; i < kClauseFeatureCount; ++i) {
      sum[i] += f[i];
      max[i] = first ? f[i] : std::max(max[i], f[i]);
      min[i] = first ? f[i] : std::min(min[i], f[i]);
    }
    first = false;
  }
  for (int i = 0; i < kClauseFeatureCount; ++i) {
    ctx.conjecture_aggregates[4 * i + 0] = sum[i];
    ctx.conjecture_aggregates[4 * i + 1] = sum[i] / double(conjectures.size());
    ctx.conjecture_aggregates[4 * i + 2] = max[i];
    ctx.conjecture_aggregates[4 * i + 3] = min[i];
  }
  return ctx;
}

ScalarFeatures scalar_features(const Clause& target, double generation_step,
                               double premise_count, const ScoringContext& ctx) {
  ScalarFeatures x{};
  ClauseFeatures f = clause_features(target);
  std::copy(f.begin(), f.end(), x.begin());
  std::copy(ctx.conjecture_aggregates.begin(), ctx.conjecture_aggregates.end(),
            x.begin() + kClauseFeatureCount);
  x[35] = generation_step;
  x[36] = premise_count;
  x[37] = ctx.num_initial;
  return x;
}

}  // namespace fpr

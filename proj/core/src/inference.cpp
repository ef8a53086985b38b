#include "fprover/inference.hpp"

#include <cassert>

#include "fprover/unify.hpp"

namespace fpr {

const char* rule_name(InferenceRule rule) {
  switch (rule) {
    case InferenceRule::Initial: return "initial";
    case InferenceRule::Resolution: return "resolution";
    case InferenceRule::Factoring: return "factoring";
  }
  return "?";
}

std::vector<Inference> find_resolutions(const Clause& given, uint32_t given_id,
                                        std::span<const Clause> sides,
                                        std::span<const uint32_t> side_ids) {
  assert(side_ids.empty() || side_ids.size() == sides.size());
  std::vector<Inference> out;
  for (size_t s = 0; s < sides.size(); ++s) {
    const Clause side = rename_apart(given, sides[s]);
    for (size_t i = 0; i < given.num_literals(); ++i) {
      const Literal& li = given.literals()[i];
      for (size_t j = 0; j < side.num_literals(); ++j) {
        const Literal& mj = side.literals()[j];
        if (li.positive == mj.positive) continue;
        if (li.atom.functor() != mj.atom.functor()) continue;
        auto theta = unify(li.atom, mj.atom);
        if (!theta) continue;
        std::vector<Literal> rest;
        rest.reserve(given.num_literals() + side.num_literals() - 2);
        for (size_t k = 0; k < given.num_literals(); ++k)
          if (k != i)
            rest.push_back(Literal{given.literals()[k].positive,
                                   theta->apply(given.literals()[k].atom)});
        for (size_t k = 0; k < side.num_literals(); ++k)
          if (k != j)
            rest.push_back(Literal{side.literals()[k].positive,
                                   theta->apply(side.literals()[k].atom)});
        Inference inf;
        inf.clause = Clause(std::move(rest));
        inf.rule = InferenceRule::Resolution;
        inf.parents = {given_id,
                       side_ids.empty() ? static_cast<uint32_t>(s) : side_ids[s]};
        inf.mgu = std::move(*theta);
        out.push_back(std::move(inf));
      }
    }
  }
  return out;
}

std::vector<Inference> find_factors(const Clause& c, uint32_t c_id) {
  std::vector<Inference> out;
  const auto& lits = c.literals();
  for (size_t i = 0; i < lits.size(); ++i) {
    for (size_t j = i + 1; j < lits.size(); ++j) {
      if (lits[i].positive != lits[j].positive) continue;
      if (lits[i].atom.functor() != lits[j].atom.functor()) continue;
      auto theta = unify(lits[i].atom, lits[j].atom);
      if (!theta) continue;
      Clause factor = apply_substitution(*theta, c);
      if (factor == c) continue;
      Inference inf;
      inf.clause = std::move(factor);
      inf.rule = InferenceRule::Factoring;
      inf.parents = {c_id};
      inf.mgu = std::move(*theta);
      out.push_back(std::move(inf));
    }
  }
  return out;
}

namespace {

// Backtracking literal matching: map each c1 literal onto some c2 literal
// under one consistent substitution (not necessarily injectively).
bool subsumes_from(const Clause& c1, const Clause& c2, size_t next,
                   Substitution& theta, int64_t& attempts) {
  if (next == c1.num_literals()) return true;
  const Literal& lit = c1.literals()[next];
  for (const Literal& target : c2.literals()) {
    if (target.positive != lit.positive) continue;
    if (target.atom.functor() != lit.atom.functor()) continue;
    if (--attempts < 0) return false;
    Substitution snapshot = theta;
    if (match_extend(lit.atom, target.atom, theta)) {
      if (subsumes_from(c1, c2, next + 1, theta, attempts)) return true;
    }
    theta = std::move(snapshot);
  }
  return false;
}

}  // namespace

bool theta_subsumes(const Clause& c1, const Clause& c2, SubsumptionBudget budget) {
  if (c1.empty()) return true;
  if (c2.empty()) return false;
  // Quick reject: every (polarity, predicate) of c1 must occur in c2.
  for (const Literal& lit : c1.literals()) {
    bool found = false;
    for (const Literal& target : c2.literals())
      if (target.positive == lit.positive &&
          target.atom.functor() == lit.atom.functor()) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  Substitution theta;
  int64_t attempts = budget.attempts;
  return subsumes_from(c1, c2, 0, theta, attempts);
}

bool order_subsumes(const Clause& c1, const Clause& c2, SubsumptionBudget budget) {
  return c1.num_literals() <= c2.num_literals() && theta_subsumes(c1, c2, budget);
}

bool is_tautology(const Clause& c) {
  const auto& lits = c.literals();
  for (size_t i = 0; i < lits.size(); ++i) {
    if (!lits[i].positive) continue;
    for (size_t j = 0; j < lits.size(); ++j) {
      if (lits[j].positive) continue;
      if (lits[i].atom == lits[j].atom) return true;
    }
  }
  return false;
}

}  // namespace fpr

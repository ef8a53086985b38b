#pragma once

// Brute-force unification oracle, independent of the production unifier.
// Works by exhaustive search over a small enumerated term universe: terms of
// bounded depth over a fixed signature plus a variable pool. Intended for
// tiny inputs only; everything here is exponential.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fprover/term.hpp"

namespace oracle {

using VarMap = std::map<fpr::VarId, fpr::Term>;

inline fpr::Term subst(const VarMap& m, const fpr::Term& t) {
  if (t.is_variable()) {
    auto it = m.find(t.var());
    return it == m.end() ? t : it->second;
  }
  std::vector<fpr::Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(subst(m, a));
  return fpr::Term::app(t.functor(), std::move(args));
}

inline void distinct_vars(const fpr::Term& t, std::vector<fpr::VarId>& out) {
  std::vector<fpr::VarId> occ;
  t.collect_vars(occ);
  for (fpr::VarId v : occ)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

// All terms of depth <= max_depth over the signature `funcs` (symbol id,
// arity) and variables 0..num_vars-1. Depth 0 = variables and constants.
inline std::vector<fpr::Term> term_universe(
    const std::vector<std::pair<fpr::SymbolId, uint32_t>>& funcs, int num_vars,
    int max_depth) {
  std::vector<fpr::Term> layer;
  for (int v = 0; v < num_vars; ++v)
    layer.push_back(fpr::Term::variable(static_cast<fpr::VarId>(v)));
  for (auto [id, arity] : funcs)
    if (arity == 0) layer.push_back(fpr::Term::app(id));
  std::vector<fpr::Term> all = layer;
  for (int d = 0; d < max_depth; ++d) {
    std::vector<fpr::Term> next;
    for (auto [id, arity] : funcs) {
      if (arity == 0) continue;
      // argument tuples drawn from everything built so far
      std::vector<size_t> idx(arity, 0);
      for (;;) {
        std::vector<fpr::Term> args;
        for (uint32_t k = 0; k < arity; ++k) args.push_back(all[idx[k]]);
        next.push_back(fpr::Term::app(id, std::move(args)));
        uint32_t k = 0;
        while (k < arity && ++idx[k] == all.size()) idx[k++] = 0;
        if (k == arity) break;
      }
    }
    for (auto& t : next) {
      bool seen = false;
      for (const auto& u : all)
        if (u == t) {
          seen = true;
          break;
        }
      if (!seen) all.push_back(t);
    }
  }
  return all;
}

// Search the universe for ANY substitution sigma over vars(a) u vars(b) with
// a*sigma == b*sigma (single simultaneous application). Returns the first hit
// in enumeration order, or nullopt. A most general unifier, when one exists,
// is always representable in a universe that contains the needed images, so
// "nullopt over a generous universe" is strong evidence of non-unifiability
// for the small inputs used in tests.
inline std::optional<VarMap> brute_unify(
    const fpr::Term& a, const fpr::Term& b,
    const std::vector<fpr::Term>& universe) {
  std::vector<fpr::VarId> vars;
  distinct_vars(a, vars);
  distinct_vars(b, vars);
  if (vars.empty()) {
    if (a == b) return VarMap{};
    return std::nullopt;
  }
  std::vector<size_t> idx(vars.size(), 0);
  for (;;) {
    VarMap m;
    for (size_t i = 0; i < vars.size(); ++i) m.emplace(vars[i], universe[idx[i]]);
    if (subst(m, a) == subst(m, b)) return m;
    size_t k = 0;
    while (k < vars.size() && ++idx[k] == universe.size()) idx[k++] = 0;
    if (k == vars.size()) return std::nullopt;
  }
}

// All unifiers found in the universe (for generality checks).
inline std::vector<VarMap> all_unifiers(const fpr::Term& a, const fpr::Term& b,
                                        const std::vector<fpr::Term>& universe,
                                        size_t cap = 200) {
  std::vector<fpr::VarId> vars;
  distinct_vars(a, vars);
  distinct_vars(b, vars);
  std::vector<VarMap> out;
  if (vars.empty()) {
    if (a == b) out.push_back({});
    return out;
  }
  std::vector<size_t> idx(vars.size(), 0);
  for (;;) {
    VarMap m;
    for (size_t i = 0; i < vars.size(); ++i) m.emplace(vars[i], universe[idx[i]]);
    if (subst(m, a) == subst(m, b)) {
      out.push_back(m);
      if (out.size() >= cap) return out;
    }
    size_t k = 0;
    while (k < vars.size() && ++idx[k] == universe.size()) idx[k++] = 0;
    if (k == vars.size()) return out;
  }
}

// Straight-line recursive matcher: extend m so that pattern*m == target.
// Independent of the production match_extend.
inline bool match_into(const fpr::Term& pattern, const fpr::Term& target,
                       VarMap& m) {
  if (pattern.is_variable()) {
    auto it = m.find(pattern.var());
    if (it != m.end()) return it->second == target;
    m.emplace(pattern.var(), target);
    return true;
  }
  if (target.is_variable() || pattern.functor() != target.functor())
    return false;
  for (size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_into(pattern.args()[i], target.args()[i], m)) return false;
  return true;
}

// True iff theta is at least as general as sigma on `vars`: some rho with
// (v*theta)*rho == v*sigma for every v. rho is found by matching, which is
// complete for this one-sided problem.
inline bool as_general_as(const fpr::Substitution& theta, const VarMap& sigma,
                          const std::vector<fpr::VarId>& vars) {
  VarMap rho;
  for (fpr::VarId v : vars) {
    fpr::Term image = theta.apply(fpr::Term::variable(v));
    auto it = sigma.find(v);
    fpr::Term want = it == sigma.end() ? fpr::Term::variable(v) : it->second;
    if (!match_into(image, want, rho)) return false;
  }
  return true;
}

}  // namespace oracle

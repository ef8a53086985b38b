#include "fprover/unify.hpp"

#include <vector>

namespace fpr {

namespace {

// Follow variable bindings until an unbound variable or an application.
const Term& deref(const Term& t, const Substitution& theta) {
  const Term* cur = &t;
  while (cur->is_variable()) {
    const Term* bound = theta.find(cur->var());
    if (!bound) break;
    cur = bound;
  }
  return *cur;
}

// Occurs-check through the triangular substitution built so far.
bool occurs(VarId v, const Term& t, const Substitution& theta) {
  const Term& d = deref(t, theta);
  if (d.is_variable()) return d.var() == v;
  for (const Term& a : d.args())
    if (occurs(v, a, theta)) return true;
  return false;
}

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b) {
  Substitution theta;
  std::vector<std::pair<Term, Term>> todo;
  todo.emplace_back(a, b);
  while (!todo.empty()) {
    auto [s, t] = std::move(todo.back());
    todo.pop_back();
    const Term& ds = deref(s, theta);
    const Term& dt = deref(t, theta);
    if (ds.is_variable() && dt.is_variable() && ds.var() == dt.var()) continue;
    if (ds.is_variable()) {
      if (occurs(ds.var(), dt, theta)) return std::nullopt;
      theta.bind(ds.var(), dt);
    } else if (dt.is_variable()) {
      if (occurs(dt.var(), ds, theta)) return std::nullopt;
      theta.bind(dt.var(), ds);
    } else {
      if (ds.functor() != dt.functor() || ds.args().size() != dt.args().size())
        return std::nullopt;
      for (size_t i = 0; i < ds.args().size(); ++i)
        todo.emplace_back(ds.args()[i], dt.args()[i]);
    }
  }
  theta.make_idempotent();
  return theta;
}

bool match_extend(const Term& pattern, const Term& target, Substitution& theta) {
  if (pattern.is_variable()) {
    const Term* bound = theta.find(pattern.var());
    if (bound) return *bound == target;
    theta.bind(pattern.var(), target);
    return true;
  }
  if (target.is_variable()) return false;
  if (pattern.functor() != target.functor() ||
      pattern.args().size() != target.args().size())
    return false;
  for (size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_extend(pattern.args()[i], target.args()[i], theta)) return false;
  return true;
}

}  // namespace fpr

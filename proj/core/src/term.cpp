#include "fprover/term.hpp"

#include <algorithm>
#include <sstream>

namespace fpr {

namespace {

uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Term Term::variable(VarId v) {
  auto node = std::make_shared<Node>();
  node->symbol = v;
  node->is_var = true;
  node->symbol_count = 1;
  node->var_limit = v + 1;
  node->var_mask = 1ULL << (v % 64);
  node->hash = mix(0x5f3c1d2b, v);
  return Term(std::move(node));
}

Term Term::app(SymbolId functor, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->symbol = functor;
  node->is_var = false;
  node->symbol_count = 1;
  node->var_limit = 0;
  node->var_mask = 0;
  uint64_t h = mix(0x243f6a8885a308d3ULL, functor);
  for (const Term& a : args) {
    node->symbol_count += a.symbol_count();
    node->var_limit = std::max(node->var_limit, a.var_limit());
    node->var_mask |= a.node_->var_mask;
    h = mix(h, a.hash());
  }
  node->hash = h;
  node->args = std::move(args);
  return Term(std::move(node));
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.hash != b.hash || a.is_var != b.is_var || a.symbol != b.symbol ||
      a.args.size() != b.args.size())
    return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (a.args[i] != b.args[i]) return false;
  return true;
}

bool Term::contains_var(VarId v) const {
  const Node& n = *node_;
  if (n.is_var) return n.symbol == v;
  if ((n.var_mask & (1ULL << (v % 64))) == 0) return false;
  for (const Term& a : n.args)
    if (a.contains_var(v)) return true;
  return false;
}

void Term::collect_vars(std::vector<VarId>& out) const {
  if (node_->is_var) {
    out.push_back(node_->symbol);
    return;
  }
  for (const Term& a : node_->args) a.collect_vars(out);
}

std::string Term::to_string(const SymbolTable& symbols) const {
  if (is_variable()) return "X" + std::to_string(var());
  std::string s = symbols.name(functor());
  if (!args().empty()) {
    s += '(';
    for (size_t i = 0; i < args().size(); ++i) {
      if (i) s += ',';
      s += args()[i].to_string(symbols);
    }
    s += ')';
  }
  return s;
}

const Term* Substitution::find(VarId v) const {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), v,
                             [](const auto& b, VarId x) { return b.first < x; });
  if (it == bindings_.end() || it->first != v) return nullptr;
  return &it->second;
}

void Substitution::bind(VarId v, Term t) {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), v,
                             [](const auto& b, VarId x) { return b.first < x; });
  if (it != bindings_.end() && it->first == v) {
    it->second = std::move(t);
    return;
  }
  bindings_.insert(it, {v, std::move(t)});
}

Term Substitution::apply(const Term& t) const {
  if (t.is_variable()) {
    const Term* bound = find(t.var());
    return bound ? *bound : t;
  }
  if (t.is_ground() || empty()) return t;
  bool changed = false;
  std::vector<Term> new_args;
  new_args.reserve(t.args().size());
  for (const Term& a : t.args()) {
    Term na = apply(a);
    if (na != a) changed = true;
    new_args.push_back(std::move(na));
  }
  if (!changed) return t;
  return Term::app(t.functor(), std::move(new_args));
}

void Substitution::make_idempotent() {
  // Occurs-checked bindings are acyclic, so iterating to a fixpoint
  // terminates; each pass removes at least one level of indirection.
  for (;;) {
    bool dirty = false;
    for (auto& [v, t] : bindings_) {
      Term nt = apply(t);
      if (nt != t) {
        t = std::move(nt);
        dirty = true;
      }
    }
    if (!dirty) return;
  }
}

std::string Substitution::to_string(const SymbolTable& symbols) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, t] : bindings_) {
    if (!first) os << ", ";
    first = false;
    os << 'X' << v << " -> " << t.to_string(symbols);
  }
  os << '}';
  return os.str();
}

Term shift_vars(const Term& t, uint32_t offset) {
  if (offset == 0 || t.is_ground()) return t;
  if (t.is_variable()) return Term::variable(t.var() + offset);
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(shift_vars(a, offset));
  return Term::app(t.functor(), std::move(args));
}

}  // namespace fpr

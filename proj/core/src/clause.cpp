#include "fprover/clause.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <stdexcept>

namespace fpr {

namespace {

std::atomic<uint64_t> g_canon_fallbacks{0};

constexpr int32_t kPositiveMark = -2;
constexpr int32_t kNegativeMark = -1;

// app symbol s -> s+1 (>= 1); wildcarded variable -> 0
void wildcard_key(const Term& t, std::vector<int32_t>& out) {
  if (t.is_variable()) {
    out.push_back(0);
    return;
  }
  out.push_back(static_cast<int32_t>(t.functor()) + 1);
  for (const Term& a : t.args()) wildcard_key(a, out);
}

// Encoding of one literal under a variable numbering. Unassigned variables
// are numbered on first occurrence starting at next_var; assignments made
// here go into `assign` only if commit is set.
class VarNumbering {
 public:
  explicit VarNumbering(uint32_t var_limit) : assign_(var_limit, -1) {}

  int32_t number_of(VarId v) const { return assign_[v]; }

  // Encodes one literal, assigning numbers to unseen variables on first
  // occurrence. New assignments are appended to `added` so they can be rolled
  // back with undo(); assignments follow stack discipline (undo must be
  // called in reverse encode order).
  void encode_literal(const Literal& lit, std::vector<int32_t>& out,
                      std::vector<VarId>* added = nullptr) {
    out.push_back(lit.positive ? kPositiveMark : kNegativeMark);
    encode_term(lit.atom, out, added);
  }

  void undo(const std::vector<VarId>& added) {
    for (auto it = added.rbegin(); it != added.rend(); ++it) assign_[*it] = -1;
    next_var_ -= static_cast<int32_t>(added.size());
  }

 private:
  void encode_term(const Term& t, std::vector<int32_t>& out,
                   std::vector<VarId>* added) {
    if (t.is_variable()) {
      int32_t& slot = assign_[t.var()];
      if (slot < 0) {
        slot = next_var_++;
        if (added) added->push_back(t.var());
      }
      out.push_back(-(slot + 3));
      return;
    }
    out.push_back(static_cast<int32_t>(t.functor()) + 1);
    for (const Term& a : t.args()) encode_term(a, out, added);
  }

  std::vector<int32_t> assign_;
  int32_t next_var_ = 0;
};

uint64_t hash_encoding(const std::vector<int32_t>& canon) {
  uint64_t h = 0x9ddfea08eb382d69ULL;
  for (int32_t v : canon) {
    h ^= static_cast<uint64_t>(static_cast<uint32_t>(v)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Search for the lexicographically minimal encoding over literal orderings
// that respect the sort-key groups. Only orderings within tie groups are
// explored; literals with distinct keys have a forced relative order.
struct CanonSearch {
  const std::vector<Literal>& literals;
  const std::vector<std::vector<size_t>>& groups;
  uint32_t var_limit;
  int budget;

  std::vector<int32_t> best_encoding;
  std::vector<size_t> best_order;
  bool exact = true;

  void run() {
    VarNumbering numbering(var_limit);
    std::vector<int32_t> encoding;
    std::vector<size_t> order;
    std::vector<char> used(literals.size(), 0);
    descend(0, 0, numbering, encoding, order, used);
  }

 private:
  void descend(size_t group_idx, size_t within, VarNumbering& numbering,
               std::vector<int32_t>& encoding, std::vector<size_t>& order,
               std::vector<char>& used) {
    if (group_idx == groups.size()) {
      if (best_order.empty() || encoding < best_encoding) {
        best_encoding = encoding;
        best_order = order;
      }
      return;
    }
    const auto& group = groups[group_idx];
    if (within == group.size()) {
      descend(group_idx + 1, 0, numbering, encoding, order, used);
      return;
    }

    // Candidate segments for every unused literal in this group. All
    // literals in a group share a wildcard structure, so segments have equal
    // length and lexicographic comparison decides the whole encoding.
    std::vector<int32_t> min_segment;
    std::vector<size_t> argmins;
    for (size_t idx : group) {
      if (used[idx]) continue;
      std::vector<int32_t> segment;
      std::vector<VarId> added;
      numbering.encode_literal(literals[idx], segment, &added);
      numbering.undo(added);
      --budget;
      if (argmins.empty() || segment < min_segment) {
        min_segment = std::move(segment);
        argmins.assign(1, idx);
      } else if (segment == min_segment) {
        argmins.push_back(idx);
      }
      if (budget < 0) break;
    }
    if (budget < 0 && argmins.size() > 1) {
      exact = false;
      argmins.resize(1);  // stop branching, finish one path deterministically
    }

    // Prune against the best complete encoding found so far.
    if (!best_order.empty()) {
      const size_t pos = encoding.size();
      if (pos + min_segment.size() <= best_encoding.size() &&
          std::lexicographical_compare(best_encoding.begin() + pos,
                                       best_encoding.begin() + pos + min_segment.size(),
                                       min_segment.begin(), min_segment.end()))
        return;
    }

    for (size_t idx : argmins) {
      const size_t mark = encoding.size();
      std::vector<VarId> added;
      numbering.encode_literal(literals[idx], encoding, &added);
      order.push_back(idx);
      used[idx] = 1;
      descend(group_idx, within + 1, numbering, encoding, order, used);
      used[idx] = 0;
      order.pop_back();
      numbering.undo(added);
      encoding.resize(mark);
    }
  }
};

}  // namespace

std::string Literal::to_string(const SymbolTable& symbols) const {
  return (positive ? "" : "~") + atom.to_string(symbols);
}

Clause::Clause() {
  auto impl = std::make_shared<Impl>();
  impl->hash = hash_encoding(impl->canon);
  impl_ = std::move(impl);
}

Clause::Clause(std::vector<Literal> literals, bool compact_vars) {
  auto impl = std::make_shared<Impl>();

  // Collapse duplicate literals, preserving first occurrence.
  std::vector<Literal> distinct;
  distinct.reserve(literals.size());
  for (auto& lit : literals) {
    bool seen = false;
    for (const auto& d : distinct)
      if (d == lit) {
        seen = true;
        break;
      }
    if (!seen) distinct.push_back(std::move(lit));
  }

  // Sort by (polarity, predicate, wildcard structure); ties keep input order.
  const size_t n = distinct.size();
  std::vector<std::vector<int32_t>> keys(n);
  for (size_t i = 0; i < n; ++i) {
    keys[i].push_back(distinct[i].positive ? kPositiveMark : kNegativeMark);
    wildcard_key(distinct[i].atom, keys[i]);
  }
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  std::stable_sort(perm.begin(), perm.end(),
                   [&](size_t a, size_t b) { return keys[a] < keys[b]; });

  std::vector<Literal> sorted;
  sorted.reserve(n);
  for (size_t i : perm) sorted.push_back(std::move(distinct[i]));

  uint32_t var_limit = 0;
  for (const auto& lit : sorted) {
    impl->symbol_count += lit.symbol_count();
    var_limit = std::max(var_limit, lit.atom.var_limit());
  }

  // Tie groups: runs of equal sort keys.
  std::vector<std::vector<size_t>> groups;
  for (size_t i = 0; i < n;) {
    size_t j = i + 1;
    while (j < n && keys[perm[i]] == keys[perm[j]]) ++j;
    std::vector<size_t> g;
    for (size_t k = i; k < j; ++k) g.push_back(k);
    groups.push_back(std::move(g));
    i = j;
  }

  bool any_tie = false;
  for (const auto& g : groups)
    if (g.size() > 1) any_tie = true;

  std::vector<size_t> final_order(n);
  if (!any_tie) {
    VarNumbering numbering(var_limit);
    for (size_t i = 0; i < n; ++i) {
      numbering.encode_literal(sorted[i], impl->canon);
      final_order[i] = i;
    }
  } else {
    CanonSearch search{sorted, groups, var_limit, /*budget=*/4096, {}, {}, true};
    search.run();
    impl->canon = std::move(search.best_encoding);
    final_order = std::move(search.best_order);
    impl->canonical_exact = search.exact;
    if (!search.exact) g_canon_fallbacks.fetch_add(1, std::memory_order_relaxed);
  }

  // Store literals in canonical order; optionally rewrite variables into the
  // canonical numbering so the stored form is the canonical representative.
  std::vector<Literal> stored;
  stored.reserve(n);
  for (size_t i : final_order) stored.push_back(sorted[i]);
  if (compact_vars && var_limit > 0) {
    VarNumbering numbering(var_limit);
    std::vector<int32_t> scratch;
    for (const auto& lit : stored) {
      scratch.clear();
      numbering.encode_literal(lit, scratch);
    }
    Substitution renumber;
    std::vector<VarId> vars;
    for (const auto& lit : stored) lit.atom.collect_vars(vars);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    uint32_t new_limit = 0;
    for (VarId v : vars) {
      int32_t num = numbering.number_of(v);
      assert(num >= 0);
      renumber.bind(v, Term::variable(static_cast<VarId>(num)));
      new_limit = std::max(new_limit, static_cast<uint32_t>(num) + 1);
    }
    for (auto& lit : stored) lit.atom = renumber.apply(lit.atom);
    impl->var_limit = new_limit;
  } else {
    impl->var_limit = var_limit;
  }

  impl->literals = std::move(stored);
  impl->hash = hash_encoding(impl->canon);
  impl_ = std::move(impl);
}

bool Clause::operator==(const Clause& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->hash == other.impl_->hash && impl_->canon == other.impl_->canon;
}

std::string Clause::to_string(const SymbolTable& symbols) const {
  if (empty()) return "$false";
  std::string s;
  for (size_t i = 0; i < impl_->literals.size(); ++i) {
    if (i) s += " | ";
    s += impl_->literals[i].to_string(symbols);
  }
  return s;
}

uint64_t Clause::canonicalization_fallbacks() {
  return g_canon_fallbacks.load(std::memory_order_relaxed);
}

Clause apply_substitution(const Substitution& theta, const Clause& c) {
  if (theta.empty() || c.is_ground()) return c;
  std::vector<Literal> literals;
  literals.reserve(c.num_literals());
  for (const Literal& lit : c.literals())
    literals.push_back(Literal{lit.positive, theta.apply(lit.atom)});
  return Clause(std::move(literals));
}

Clause rename_apart(const Clause& c1, const Clause& c2) {
  const uint32_t offset = c1.var_limit();
  if (offset == 0 || c2.is_ground()) return c2;
  std::vector<Literal> literals;
  literals.reserve(c2.num_literals());
  for (const Literal& lit : c2.literals())
    literals.push_back(Literal{lit.positive, shift_vars(lit.atom, offset)});
  return Clause(std::move(literals), /*compact_vars=*/false);
}

std::vector<Clause> negate_conjecture(const Clause& c, SymbolTable& symbols) {
  if (c.empty())
    throw std::invalid_argument("negate_conjecture: empty clause");
  Substitution skolemize;
  std::vector<VarId> vars;
  for (const Literal& lit : c.literals()) lit.atom.collect_vars(vars);
  std::vector<VarId> seen;
  for (VarId v : vars) {
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
    seen.push_back(v);
    skolemize.bind(v, Term::app(symbols.fresh_skolem_constant()));
  }
  std::vector<Clause> units;
  units.reserve(c.num_literals());
  for (const Literal& lit : c.literals())
    units.push_back(
        Clause({Literal{!lit.positive, skolemize.apply(lit.atom)}}));
  return units;
}

}  // namespace fpr

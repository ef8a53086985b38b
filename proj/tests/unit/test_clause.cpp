#include "doctest.h"

#include <algorithm>

#include "fprover/clause.hpp"
#include "fprover/rng.hpp"

#include "support/builders.hpp"

using namespace fpr;
using testutil::Sig;

TEST_CASE("clause_size counts symbol occurrences") {
  Sig s;
  CHECK(clause_size(Clause()) == 0);
  CHECK(clause_size(s.clause({s.pos("p", {s.fn("a")})})) == 2);
  // ~q(x, f(x)): q, x, f, x
  CHECK(clause_size(s.clause({s.neg("q", {s.v(0), s.fn("f", {s.v(0)})})})) == 4);
  CHECK(clause_size(s.clause({s.pos("p", {s.fn("a")}),
                              s.neg("q", {s.v(0), s.fn("f", {s.v(0)})})})) == 6);
}

TEST_CASE("empty clause") {
  Clause c;
  CHECK(c.empty());
  CHECK(c.num_literals() == 0);
  CHECK(c.symbol_count() == 0);
  CHECK(c == Clause());
  Sig s;
  CHECK(c != s.clause({s.pos("p")}));
}

TEST_CASE("duplicate literals collapse on construction") {
  Sig s;
  Clause c = s.clause({s.pos("p", {s.v(0)}), s.pos("p", {s.v(0)})});
  CHECK(c.num_literals() == 1);
  // opposite polarity does not collapse
  Clause d = s.clause({s.pos("p", {s.v(0)}), s.neg("p", {s.v(0)})});
  CHECK(d.num_literals() == 2);
}

TEST_CASE("equality is invariant under variable renaming") {
  Sig s;
  Clause c1 = s.clause({s.pos("p", {s.v(0)}), s.pos("q", {s.v(0), s.v(1)})});
  Clause c2 = s.clause({s.pos("p", {s.v(7)}), s.pos("q", {s.v(7), s.v(2)})});
  CHECK(c1 == c2);
  CHECK(c1.hash() == c2.hash());

  Clause c3 = s.clause({s.pos("p", {s.v(0)}), s.pos("q", {s.v(1), s.v(0)})});
  CHECK(c1 != c3);
}

TEST_CASE("equality is invariant under literal reordering") {
  Sig s;
  Clause c1 = s.clause({s.pos("p", {s.v(0)}), s.neg("q", {s.v(0)})});
  Clause c2 = s.clause({s.neg("q", {s.v(1)}), s.pos("p", {s.v(1)})});
  CHECK(c1 == c2);
  CHECK(c1.hash() == c2.hash());
}

TEST_CASE("symmetric clauses canonicalize exactly") {
  Sig s;
  // all three literals share a wildcard skeleton; the tie search must still
  // find one canonical numbering for every presentation
  Clause c1 = s.clause({s.pos("p", {s.v(0), s.v(1)}), s.pos("p", {s.v(1), s.v(2)}),
                        s.pos("p", {s.v(2), s.v(0)})});
  Clause c2 = s.clause({s.pos("p", {s.v(2), s.v(0)}), s.pos("p", {s.v(0), s.v(1)}),
                        s.pos("p", {s.v(1), s.v(2)})});
  Clause c3 = s.clause({s.pos("p", {s.v(5), s.v(3)}), s.pos("p", {s.v(3), s.v(9)}),
                        s.pos("p", {s.v(9), s.v(5)})});
  CHECK(c1.canonical_exact());
  CHECK(c1 == c2);
  CHECK(c1 == c3);
  // the reversed 3-cycle maps back onto the cycle under x,y,z -> z,y,x
  Clause rev = s.clause({s.pos("p", {s.v(1), s.v(0)}), s.pos("p", {s.v(2), s.v(1)}),
                         s.pos("p", {s.v(0), s.v(2)})});
  CHECK(c1 == rev);
}

TEST_CASE("equality is stable under random variable permutation") {
  Sig s;
  Rng rng(0xc1a05eu);
  Clause base = s.clause({s.pos("p", {s.v(0), s.v(1)}),
                          s.neg("q", {s.fn("f", {s.v(1)}), s.v(2)}),
                          s.pos("r", {s.v(2), s.v(0), s.v(3)})});
  for (int round = 0; round < 200; ++round) {
    VarId perm[4] = {0, 1, 2, 3};
    for (int i = 3; i > 0; --i)
      std::swap(perm[i], perm[rng.next_below(static_cast<uint64_t>(i) + 1)]);
    Substitution theta;
    for (VarId v = 0; v < 4; ++v) theta.bind(v, Term::variable(perm[v] + 10));
    Clause permuted = apply_substitution(theta, base);
    CHECK(permuted == base);
    CHECK(permuted.hash() == base.hash());
  }
}

TEST_CASE("apply_substitution collapses literals") {
  Sig s;
  Substitution theta;
  theta.bind(0, s.fn("a"));
  // p(x) | p(a) -> p(a)
  Clause c = s.clause({s.pos("p", {s.v(0)}), s.pos("p", {s.fn("a")})});
  Clause r = apply_substitution(theta, c);
  CHECK(r.num_literals() == 1);
  CHECK(r == s.clause({s.pos("p", {s.fn("a")})}));

  // p(x) | q(x) -> p(a) | q(a)
  Clause c2 = s.clause({s.pos("p", {s.v(0)}), s.pos("q1", {s.v(0)})});
  CHECK(apply_substitution(theta, c2) ==
        s.clause({s.pos("p", {s.fn("a")}), s.pos("q1", {s.fn("a")})}));

  // identity
  CHECK(apply_substitution(Substitution(), c2) == c2);
}

TEST_CASE("rename_apart yields disjoint alpha-equivalent copy") {
  Sig s;
  Clause c1 = s.clause({s.pos("p", {s.v(0), s.v(1)})});
  Clause c2 = s.clause({s.pos("q", {s.v(0)}), s.neg("p", {s.v(1), s.v(0)})});
  Clause r = rename_apart(c1, c2);
  CHECK(r == c2);
  // no shared variable ids
  for (const auto& lit : r.literals()) {
    std::vector<VarId> vars;
    lit.atom.collect_vars(vars);
    for (VarId v : vars) CHECK(v >= c1.var_limit());
  }
}

TEST_CASE("rename_apart against a ground clause is identity-like") {
  Sig s;
  Clause ground = s.clause({s.pos("p", {s.fn("a")})});
  Clause c2 = s.clause({s.pos("q", {s.v(0)})});
  Clause r = rename_apart(ground, c2);
  CHECK(r == c2);
}

TEST_CASE("negate_conjecture grounds and flips") {
  Sig s;
  // negate(p(x) | ~q(x,b)) -> [~p(sk0), q(sk0,b)]
  Clause c = s.clause({s.pos("p", {s.v(0)}), s.neg("q", {s.v(0), s.fn("b")})});
  auto units = negate_conjecture(c, s.table);
  REQUIRE(units.size() == 2);
  auto sk0 = s.table.lookup("sk0");
  REQUIRE(sk0.has_value());
  Term sk = Term::app(*sk0);
  CHECK(units[0] == s.clause({s.neg("p", {sk})}));
  CHECK(units[1] == s.clause({s.pos("q", {sk, s.fn("b")})}));
  for (const auto& u : units) CHECK(u.is_ground());
}

TEST_CASE("negate_conjecture on ground unit") {
  Sig s;
  auto units = negate_conjecture(s.clause({s.pos("p", {s.fn("a")})}), s.table);
  REQUIRE(units.size() == 1);
  CHECK(units[0] == s.clause({s.neg("p", {s.fn("a")})}));
}

TEST_CASE("negate_conjecture uses distinct fresh constants per variable") {
  Sig s;
  Clause c = s.clause({s.pos("p", {s.v(0)}), s.pos("p", {s.v(1)})});
  auto units = negate_conjecture(c, s.table);
  REQUIRE(units.size() == 2);
  CHECK(units[0] != units[1]);
  CHECK(s.table.lookup("sk0").has_value());
  CHECK(s.table.lookup("sk1").has_value());
}

TEST_CASE("negate_conjecture skips taken skolem names") {
  Sig s;
  s.fn("sk0");  // already interned by the problem
  Clause c = s.clause({s.pos("p", {s.v(0)})});
  auto units = negate_conjecture(c, s.table);
  REQUIRE(units.size() == 1);
  CHECK(s.table.lookup("sk1").has_value());
}

TEST_CASE("negate_conjecture rejects the empty clause") {
  Sig s;
  CHECK_THROWS_AS(negate_conjecture(Clause(), s.table), std::invalid_argument);
}

TEST_CASE("clause to_string") {
  Sig s;
  Clause c = s.clause({s.neg("q", {s.v(0)}), s.pos("p", {s.v(0)})});
  // canonical order puts the positive literal first
  CHECK(c.to_string(s.table) == "p(X0) | ~q(X0)");
  CHECK(Clause().to_string(s.table) == "$false");
}

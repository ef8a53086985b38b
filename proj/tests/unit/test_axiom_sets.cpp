#include "fprover/axiom_sets.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "support/temp_dir.hpp"

using namespace fpr;
using testutil::TempDir;

TEST_CASE("axiom file labels strip directory, extension, and leading zeros") {
  CHECK(axiom_file_label("Axioms/FLD001-0.ax") == "FLD1");
  CHECK(axiom_file_label("Axioms/GRP005-0.ax") == "GRP5");
  CHECK(axiom_file_label("GEO006-0.ax") == "GEO6");
  CHECK(axiom_file_label("Axioms/KRS001+0.ax") == "KRS1");
  CHECK(axiom_file_label("Axioms/NUM009-0.ax") == "NUM9");
  CHECK(axiom_file_label("Axioms/SET001-0.ax") == "SET1");
  CHECK(axiom_file_label("Axioms/FLD000-0.ax") == "FLD0");
  CHECK(axiom_file_label("Axioms/ALG123-1.ax") == "ALG123");
  // unfamiliar shapes keep the stem
  CHECK(axiom_file_label("Axioms/oddball.ax") == "oddball");
  CHECK(axiom_file_label("123.ax") == "123");
}

namespace {

const char* kAxioms = R"(
    cnf(g1, axiom, p(f(X)) | ~p(X)).
    cnf(g2, axiom, p(e)).
  )";

Problem with_conjecture(const std::string& conjecture_formula) {
  std::string text = kAxioms;
  text += "cnf(goal, negated_conjecture, " + conjecture_formula + ").\n";
  return parse_cnf(text, "probe");
}

}  // namespace

TEST_CASE("forward proposability conditions") {
  SUBCASE("unit ground axiom-symbol conjecture is proposable") {
    Problem p = with_conjecture("~p(f(e))");
    ProposabilityDiagnosis d = diagnose_forward_proposable(p);
    CHECK(d.proposable);
    CHECK(d.violations.empty());
  }
  SUBCASE("non-unit conjecture violates (a)") {
    Problem p = with_conjecture("~p(f(e)) | ~p(e)");
    ProposabilityDiagnosis d = diagnose_forward_proposable(p);
    REQUIRE(d.violations.size() == 1);
    CHECK(d.violations[0].clause_index == 0);
    CHECK(d.violations[0].condition == ProposabilityCondition::Unit);
  }
  SUBCASE("conjecture with a variable violates (b)") {
    Problem p = with_conjecture("~p(X)");
    ProposabilityDiagnosis d = diagnose_forward_proposable(p);
    REQUIRE(d.violations.size() == 1);
    CHECK(d.violations[0].condition == ProposabilityCondition::Ground);
  }
  SUBCASE("fresh predicate violates (c)") {
    Problem p = with_conjecture("~q(e)");
    ProposabilityDiagnosis d = diagnose_forward_proposable(p);
    REQUIRE(d.violations.size() == 1);
    CHECK(d.violations[0].condition == ProposabilityCondition::Symbols);
  }
  SUBCASE("fresh non-constant function violates (c)") {
    Problem p = with_conjecture("~p(h(e))");
    ProposabilityDiagnosis d = diagnose_forward_proposable(p);
    REQUIRE(d.violations.size() == 1);
    CHECK(d.violations[0].condition == ProposabilityCondition::Symbols);
  }
  SUBCASE("fresh constants are exempt from (c)") {
    Problem p = with_conjecture("~p(f(sk_new))");
    CHECK(is_forward_proposable(p));
  }
  SUBCASE("only the first violated condition is reported per clause") {
    // non-unit and non-ground: (a) wins
    Problem p = with_conjecture("~p(X) | ~p(Y)");
    ProposabilityDiagnosis d = diagnose_forward_proposable(p);
    REQUIRE(d.violations.size() == 1);
    CHECK(d.violations[0].condition == ProposabilityCondition::Unit);
  }
  SUBCASE("every failing clause gets a violation entry") {
    std::string text = kAxioms;
    text += "cnf(goal1, negated_conjecture, ~p(e)).\n";
    text += "cnf(goal2, negated_conjecture, ~p(X)).\n";
    text += "cnf(goal3, negated_conjecture, ~q(e)).\n";
    Problem p = parse_cnf(text, "multi");
    ProposabilityDiagnosis d = diagnose_forward_proposable(p);
    CHECK_FALSE(d.proposable);
    REQUIRE(d.violations.size() == 2);
    CHECK(d.violations[0].clause_index == 1);
    CHECK(d.violations[0].condition == ProposabilityCondition::Ground);
    CHECK(d.violations[1].clause_index == 2);
    CHECK(d.violations[1].condition == ProposabilityCondition::Symbols);
  }
  SUBCASE("no conjecture clauses is vacuously proposable") {
    Problem p = parse_cnf(kAxioms, "noconj");
    CHECK(is_forward_proposable(p));
  }
}

TEST_CASE("proposability is invariant under reordering and renaming") {
  // same problem with shuffled clause order and renamed variables
  std::vector<std::string> variants = {
      R"(cnf(g1, axiom, p(f(X)) | ~p(X)).
         cnf(g2, axiom, p(e)).
         cnf(goal, negated_conjecture, ~p(f(e))).)",
      R"(cnf(goal, negated_conjecture, ~p(f(e))).
         cnf(g2, axiom, p(e)).
         cnf(g1, axiom, p(f(Var77)) | ~p(Var77)).)",
      R"(cnf(g2, axiom, p(e)).
         cnf(g1, axiom, ~p(Q) | p(f(Q))).
         cnf(goal, negated_conjecture, ~p(f(e))).)",
  };
  for (const auto& text : variants)
    CHECK(is_forward_proposable(parse_cnf(text, "v")));

  std::vector<std::string> failing = {
      R"(cnf(g1, axiom, p(f(X)) | ~p(X)).
         cnf(goal, negated_conjecture, ~p(Y)).)",
      R"(cnf(goal, negated_conjecture, ~p(Zz)).
         cnf(g1, axiom, ~p(K) | p(f(K))).)",
  };
  for (const auto& text : failing)
    CHECK_FALSE(is_forward_proposable(parse_cnf(text, "v")));
}

namespace {

// A small TPTP tree: one well-used axiom file, one rarely-used one, a joint
// group, an equality domain, plus skippable oddities.
struct MiniCorpus {
  TempDir dir;
  ParseOptions options;

  MiniCorpus() {
    options.include_root = dir.path;
    dir.write("Axioms/GRP001-0.ax", R"(
      cnf(g1, axiom, p(f(X)) | ~p(X)).
      cnf(g2, axiom, p(e)).
    )");
    dir.write("Axioms/FLD001-0.ax", R"(
      cnf(f1, axiom, r(a, b)).
    )");
    dir.write("Axioms/EQL001-0.ax", R"(
      cnf(e1, axiom, equal(X, X)).
    )");
    // ten GRP problems; 8.p is non-ground, 9.p non-unit, 10.p fresh predicate
    for (int i = 1; i <= 7; ++i)
      dir.write("Problems/GRP/GRP001-" + std::to_string(i) + ".p",
                "include('Axioms/GRP001-0.ax').\n"
                "cnf(goal, negated_conjecture, ~p(f(e))).\n");
    dir.write("Problems/GRP/GRP001-8.p",
              "include('Axioms/GRP001-0.ax').\n"
              "cnf(goal, negated_conjecture, ~p(X)).\n");
    dir.write("Problems/GRP/GRP001-9.p",
              "include('Axioms/GRP001-0.ax').\n"
              "cnf(goal, negated_conjecture, ~p(e) | ~p(f(e))).\n");
    dir.write("Problems/GRP/GRP001-10.p",
              "include('Axioms/GRP001-0.ax').\n"
              "cnf(goal, negated_conjecture, ~q(e)).\n");
    // three FLD problems (below the default theorem threshold)
    for (int i = 1; i <= 3; ++i)
      dir.write("Problems/FLD/FLD001-" + std::to_string(i) + ".p",
                "include('Axioms/FLD001-0.ax').\n"
                "cnf(goal, negated_conjecture, ~r(a, b)).\n");
    // two problems using both axiom files together
    for (int i = 1; i <= 2; ++i)
      dir.write("Problems/MIX/MIX001-" + std::to_string(i) + ".p",
                "include('Axioms/GRP001-0.ax').\n"
                "include('Axioms/FLD001-0.ax').\n"
                "cnf(goal, negated_conjecture, ~r(a, b)).\n");
    // two equality problems
    for (int i = 1; i <= 2; ++i)
      dir.write("Problems/EQL/EQL001-" + std::to_string(i) + ".p",
                "include('Axioms/EQL001-0.ax').\n"
                "cnf(goal, negated_conjecture, ~equal(a, a)).\n");
    // skipped: no includes, unparseable, wrong extension
    dir.write("Problems/lonely.p", "cnf(ax, axiom, standalone(c)).\n");
    dir.write("Problems/broken.p", "fof(x, axiom, ![X]: p(X)).\n");
    dir.write("Problems/notes.txt", "not a problem file\n");
  }
};

const AxiomSet* find_set(const std::vector<AxiomSet>& sets,
                         const std::string& name) {
  for (const auto& s : sets)
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace

TEST_CASE("build_axiom_sets groups problems by their include sets") {
  MiniCorpus corpus;
  AxiomSetFilter keep_small;
  keep_small.min_theorems = 2;
  std::vector<AxiomSet> sets =
      build_axiom_sets(corpus.dir.path / "Problems", corpus.options, keep_small);

  std::vector<std::string> names;
  for (const auto& s : sets) names.push_back(s.name);
  // equality set dropped by default; lonely/broken skipped
  CHECK(names == std::vector<std::string>{"FLD1", "FLD1+GRP1", "GRP1"});

  const AxiomSet* grp = find_set(sets, "GRP1");
  REQUIRE(grp != nullptr);
  CHECK(grp->clauses.size() == 2);
  CHECK(grp->problem_names.size() == 10);
  CHECK(grp->include_paths ==
        std::vector<std::string>{"Axioms/GRP001-0.ax"});

  const AxiomSet* joint = find_set(sets, "FLD1+GRP1");
  REQUIRE(joint != nullptr);
  CHECK(joint->clauses.size() == 3);  // both files loaded into one set
  CHECK(joint->problem_names.size() == 2);
  REQUIRE(joint->include_paths.size() == 2);

  const AxiomSet* fld = find_set(sets, "FLD1");
  REQUIRE(fld != nullptr);
  CHECK(fld->clauses.size() == 1);
  CHECK(fld->problem_names ==
        std::vector<std::string>{"FLD001-1", "FLD001-2", "FLD001-3"});
}

TEST_CASE("default filter drops sparse and oversized and equality sets") {
  MiniCorpus corpus;
  std::vector<AxiomSet> sets =
      build_axiom_sets(corpus.dir.path / "Problems", corpus.options);
  // only GRP1 has >= 10 theorems
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].name == "GRP1");

  AxiomSetFilter tiny;
  tiny.min_theorems = 2;
  tiny.max_axioms = 1;
  std::vector<AxiomSet> capped =
      build_axiom_sets(corpus.dir.path / "Problems", corpus.options, tiny);
  // GRP1 (2 axioms) and the joint set (3) exceed the cap
  REQUIRE(capped.size() == 1);
  CHECK(capped[0].name == "FLD1");

  AxiomSetFilter with_equality;
  with_equality.min_theorems = 2;
  with_equality.exclude_equality = false;
  std::vector<AxiomSet> all =
      build_axiom_sets(corpus.dir.path / "Problems", corpus.options, with_equality);
  CHECK(find_set(all, "EQL1") != nullptr);
}

TEST_CASE("label collisions get #k suffixes in stable order") {
  TempDir dir;
  ParseOptions options;
  options.include_root = dir.path;
  dir.write("Axioms/GRP001-0.ax", "cnf(a1, axiom, p(c0)).\n");
  dir.write("Axioms/GRP001-1.ax", "cnf(a2, axiom, p(c1)).\n");
  for (int i = 1; i <= 2; ++i)
    dir.write("Problems/A" + std::to_string(i) + ".p",
              "include('Axioms/GRP001-0.ax').\n"
              "cnf(goal, negated_conjecture, ~p(c0)).\n");
  for (int i = 1; i <= 2; ++i)
    dir.write("Problems/B" + std::to_string(i) + ".p",
              "include('Axioms/GRP001-1.ax').\n"
              "cnf(goal, negated_conjecture, ~p(c1)).\n");
  AxiomSetFilter filter;
  filter.min_theorems = 2;
  std::vector<AxiomSet> sets =
      build_axiom_sets(dir.path / "Problems", options, filter);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].name == "GRP1");
  CHECK(sets[0].include_paths ==
        std::vector<std::string>{"Axioms/GRP001-0.ax"});
  CHECK(sets[1].name == "GRP1#2");
  CHECK(sets[1].include_paths ==
        std::vector<std::string>{"Axioms/GRP001-1.ax"});
}

TEST_CASE("empty or missing directory yields no axiom sets") {
  TempDir dir;
  ParseOptions options;
  CHECK(build_axiom_sets(dir.path, options).empty());
  CHECK(build_axiom_sets(dir.path / "does_not_exist", options).empty());
}

TEST_CASE("analyze_proposability counts per set and prints Table-3 CSV") {
  MiniCorpus corpus;
  AxiomSetFilter filter;
  filter.min_theorems = 2;
  std::vector<AxiomSet> sets =
      build_axiom_sets(corpus.dir.path / "Problems", corpus.options, filter);
  std::vector<AxiomSetStats> stats =
      analyze_proposability(sets, corpus.options);

  REQUIRE(stats.size() == 3);
  CHECK(stats[0].name == "FLD1");
  CHECK(stats[0].proposable == 3);
  CHECK(stats[0].total == 3);
  CHECK(stats[1].name == "FLD1+GRP1");
  CHECK(stats[1].proposable == 2);
  CHECK(stats[1].total == 2);
  CHECK(stats[2].name == "GRP1");
  CHECK(stats[2].proposable == 7);
  CHECK(stats[2].total == 10);

  CHECK(proposability_csv(stats) ==
        "axiom_set,proposable,total,percent\n"
        "FLD1,3,3,100.0\n"
        "FLD1+GRP1,2,2,100.0\n"
        "GRP1,7,10,70.0\n"
        "TOTAL,12,15,80.0\n");
}

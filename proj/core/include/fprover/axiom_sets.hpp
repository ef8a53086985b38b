#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fprover/tptp.hpp"

namespace fpr {

// Why a conjecture clause blocks forward proposal: (a) not unit, (b) not
// ground, (c) uses a non-constant symbol absent from the axioms.
enum class ProposabilityCondition : char { Unit = 'a', Ground = 'b', Symbols = 'c' };

struct ProposabilityDiagnosis {
  bool proposable = true;
  struct Violation {
    size_t clause_index;
    ProposabilityCondition condition;  // first violated condition
  };
  std::vector<Violation> violations;
};

// A problem is forward-proposable iff every conjecture clause is unit,
// ground, and built from axiom symbols (constants exempt: they stand for
// Skolemized variables of the un-negated conjecture).
ProposabilityDiagnosis diagnose_forward_proposable(const Problem& problem);
bool is_forward_proposable(const Problem& problem);

// Axiom files that occur together in problems, with the problems they serve.
struct AxiomSet {
  std::string name;                         // e.g. FLD1, or A+B for joint sets
  std::vector<std::string> include_paths;   // sorted group key
  std::shared_ptr<SymbolTable> symbols;
  std::vector<Clause> clauses;
  std::vector<std::string> problem_names;
  std::vector<std::filesystem::path> problem_paths;
};

struct AxiomSetFilter {
  size_t max_axioms = 1000;
  size_t min_theorems = 10;
  bool exclude_equality = true;
};

// Display name for one axiom file: alphabetic prefix plus the file number
// with leading zeros stripped ("Axioms/FLD001-0.ax" -> "FLD1"). Falls back to
// the stem when the shape is unfamiliar.
std::string axiom_file_label(const std::string& include_path);

// Scan `problems_dir` recursively for .p files, group them by the set of
// axiom files they include, and keep the groups passing `filter`. Problems
// without includes are skipped; groups whose axioms mention the equality
// predicate are dropped when the filter says so. Unparseable files are
// skipped. Result is sorted by set name; name collisions between distinct
// groups get a #k suffix in that order.
std::vector<AxiomSet> build_axiom_sets(const std::filesystem::path& problems_dir,
                                       const ParseOptions& options,
                                       const AxiomSetFilter& filter = {});

struct AxiomSetStats {
  std::string name;
  size_t proposable = 0;
  size_t total = 0;
};

// Re-parse every associated problem and count forward-proposable ones.
std::vector<AxiomSetStats> analyze_proposability(const std::vector<AxiomSet>& sets,
                                                 const ParseOptions& options);

// CSV rows "axiom_set,proposable,total,percent" with a trailing TOTAL row;
// percent has one decimal place.
std::string proposability_csv(const std::vector<AxiomSetStats>& stats);

}  // namespace fpr

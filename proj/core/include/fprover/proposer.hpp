#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fprover/derived_clause.hpp"
#include "fprover/saturation.hpp"
#include "fprover/tptp.hpp"

namespace fpr {

// An N-step linear-resolution random walk from the axioms. Temperature
// governs the size softmax; infinity means uniform candidate selection.
struct ProposerConfig {
  uint32_t steps = 10;
  double temperature = 10.0;
  uint64_t seed = 0;
  // Dead-ended walks restart from step 1; this caps the restarts before
  // propose reports failure.
  uint32_t max_restarts = 64;
};

inline constexpr double kInfiniteTemperature =
    std::numeric_limits<double>::infinity();

// A synthetic theorem with its walk as a replayable certificate. The
// derivation lists the axioms first (rule Initial, dense ids), then one
// entry per walk step; the conclusion is the last entry's clause.
struct ProposedTheorem {
  Clause conclusion;
  std::vector<DerivedClause> derivation;
  size_t num_axioms = 0;
  ProposerConfig config;
};

class ProposeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Step 1 draws from all factors and pairwise resolvents of the axioms; every
// later step draws from factors of the last clause and resolvents of the
// last clause against all earlier clauses. Tautologies, empty clauses, and
// alpha-duplicates of existing clauses or of an earlier candidate in the same
// step are excluded. One candidate is sampled per step with probability
// proportional to exp(-size/T). Throws ProposeError after max_restarts
// dead ends, std::invalid_argument on an empty axiom list or bad config.
ProposedTheorem propose(const std::vector<Clause>& axioms,
                        const ProposerConfig& config);

// Selection probabilities over candidate sizes: softmax of -size/T, uniform
// at infinite temperature. Empty input gives an empty vector.
std::vector<double> size_softmax(const std::vector<uint32_t>& sizes,
                                 double temperature);

// Replays every walk step through the production inference rules and checks
// linearity (each step after the first generated one consumes its
// predecessor), dense ids, parent ordering, and that the conclusion is the
// final clause, nonempty and not a tautology.
bool certify(const ProposedTheorem& t);

// Axioms -> Clause as a refutation problem: the derivation's initial clauses
// become axioms and the negated conclusion (variables Skolemized) becomes the
// conjecture clauses. The problem gets a copy of `base_symbols` so concurrent
// callers never share a mutable table.
Problem to_problem(const ProposedTheorem& t, const SymbolTable& base_symbols,
                   const std::string& name);

// JSON certificate: {schema_version, steps, temperature, seed, num_axioms,
// conclusion, clauses: [{id, rule, parents, step, formula}]}.
std::string certificate_json(const ProposedTheorem& t, const SymbolTable& symbols);
// Inverse; parses formulas into a fresh symbol table returned via
// `symbols_out`. Throws std::runtime_error on malformed documents.
ProposedTheorem parse_certificate_json(const std::string& text,
                                       SymbolTable& symbols_out);

// Table 2 of the paper: the per-axiom-set (steps, temperature) choices.
struct ProposerSettings {
  uint32_t steps;
  double temperature;
};
std::optional<ProposerSettings> paper_proposer_setting(const std::string& name);

// One grid-search cell: sampled theorems judged for size, difficulty (judge
// prover failure rate under a fixed budget), and conclusion uniqueness.
struct GridCell {
  uint32_t steps = 0;
  double temperature = 0.0;
  uint32_t samples = 0;        // theorems actually produced
  double mean_size = 0.0;      // mean conclusion size
  double solve_rate = 0.0;     // judge solves / samples
  double unique_fraction = 0.0;
  bool eligible = false;       // mean_size <= 64 and unique_fraction >= 0.5
};

struct GridSearchResult {
  std::vector<GridCell> cells;  // step-major, temperature-minor
  // Most difficult (lowest solve rate) eligible cell; ties break to the
  // earlier cell. Empty when no cell is eligible.
  std::optional<size_t> recommended;
};

inline constexpr double kMeanSizeCap = 64.0;
inline constexpr double kMinUniqueFraction = 0.5;

// The judge proves to_problem(t) with the basic cost model under
// judge_config's budgets; per-sample seeds derive from `seed`.
GridSearchResult grid_search(const std::vector<Clause>& axioms,
                             const SymbolTable& symbols,
                             const std::vector<uint32_t>& step_grid,
                             const std::vector<double>& temperature_grid,
                             uint32_t samples_per_cell,
                             const ProverConfig& judge_config, uint64_t seed);

// CSV "steps,temperature,samples,mean_size,solve_rate,unique_fraction,
// eligible,recommended"; temperature prints as "inf" when infinite.
std::string grid_search_csv(const GridSearchResult& result);

}  // namespace fpr

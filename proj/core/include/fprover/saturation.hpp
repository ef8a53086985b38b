#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fprover/cost.hpp"
#include "fprover/derived_clause.hpp"
#include "fprover/features.hpp"

namespace fpr {

enum class Verdict : uint8_t { RefutationFound, Satisfiable, ResourceOut };

const char* verdict_name(Verdict v);  // refutation_found / satisfiable / resource_out

struct ProverConfig {
  // Queue schedule a:c. The age queue is used for a consecutive iterations,
  // then the cost queue for c. Not both zero.
  uint32_t age_weight = 1;
  uint32_t cost_weight = 5;
  // Processed-iteration cap; 0 disables.
  uint64_t max_iterations = 0;
  // Generated-clause budget ("search steps"). The verdict flips to
  // resource_out the moment a clause beyond the budget would be recorded.
  uint64_t max_generated = 1000000;
  // Wall-clock cap; <= 0 disables all clock reads, making the run fully
  // deterministic.
  double time_limit_seconds = 300.0;
};

struct ProverStats {
  uint64_t generated = 0;  // non-initial derived clauses recorded
  uint64_t processed = 0;  // clauses added to P
  uint64_t subsumed_forward = 0;
  uint64_t subsumed_backward = 0;
  uint64_t tautologies = 0;  // discarded at generation, never assigned ids
};

// One step of the search, for golden-trace tests and --trace output.
struct TraceEvent {
  enum class Kind : uint8_t {
    Select,          // clause_id leaves both queues at iteration t
    EmptyClause,     // selected clause is the empty clause
    DiscardForward,  // clause_id dropped, order-subsumed by other_id in P
    RemoveBackward,  // other_id removed from P, order-subsumed by clause_id
    Process,         // clause_id joins P; t advances after this
  };
  Kind kind;
  uint64_t t;
  bool from_age_queue;  // meaningful for Select
  uint32_t clause_id;
  uint32_t other_id;  // subsumption partner, else 0
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct ProofResult {
  Verdict verdict = Verdict::ResourceOut;
  // Every clause of the attempt, indexed by id (initial clauses first).
  std::vector<DerivedClause> derivation;
  size_t num_initial = 0;
  std::optional<uint32_t> empty_clause_id;
  // Ancestor closure of the empty clause, itself and initial ancestors
  // included, sorted by id. Empty unless refutation_found.
  std::vector<uint32_t> proof_clause_ids;
  ProverStats stats;
  double wall_seconds = 0.0;
};

// Algorithm: given-clause saturation with an age queue and a cost queue over
// the same set of unprocessed clauses. Per iteration: pick a queue by the a:c
// schedule, pop the top clause from both queues, stop on the empty clause,
// discard it if order-subsumed by a processed clause (the iteration counter
// does not advance on a discard), remove processed clauses it order-subsumes,
// record its factors and resolutions against the processed set (tautologies
// dropped unrecorded), then add it to the processed set. Empty queues mean
// saturation: satisfiable.
ProofResult refute(const std::vector<Clause>& initial_clauses,
                   const CostModel& cost_fn, const ScoringContext& ctx,
                   const ProverConfig& config, const TraceSink& trace = {});

// Positive/negative example split of a successful attempt: positives are the
// non-initial ancestors of the empty clause (the empty clause included),
// candidates_negative every other non-initial clause.
struct ProofExamples {
  std::vector<DerivedClause> positives;
  std::vector<DerivedClause> candidates_negative;
};
ProofExamples extract_proof(const ProofResult& result);

// The ancestor-closed derivation slice (initial ancestors included), sorted
// by id: the replayable proof object.
std::vector<DerivedClause> proof_slice(const ProofResult& result);

// Independent replay check: every slice entry re-derives from its recorded
// parents under its recorded rule (initial entries must match an initial
// clause alpha-exactly), ids strictly increase, parents precede children, and
// the final clause is empty.
bool check_proof(const std::vector<Clause>& initial_clauses,
                 const std::vector<DerivedClause>& slice);

}  // namespace fpr

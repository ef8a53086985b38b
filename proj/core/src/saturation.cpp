#include "fprover/saturation.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace fpr {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::RefutationFound: return "refutation_found";
    case Verdict::Satisfiable: return "satisfiable";
    case Verdict::ResourceOut: return "resource_out";
  }
  return "unknown";
}

namespace {

enum class State : uint8_t { Queued, Taken };

struct CostOrder {
  // min-cost first, ties to the smaller id
  bool operator()(const std::pair<double, uint32_t>& a,
                  const std::pair<double, uint32_t>& b) const {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  }
};

class Clock {
 public:
  explicit Clock(double limit_seconds) : limit_(limit_seconds) {
    if (enabled()) start_ = std::chrono::steady_clock::now();
  }
  bool enabled() const { return limit_ > 0.0; }
  double elapsed() const {
    if (!enabled()) return 0.0;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }
  bool expired() const { return enabled() && elapsed() > limit_; }

 private:
  double limit_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

ProofResult refute(const std::vector<Clause>& initial_clauses,
                   const CostModel& cost_fn, const ScoringContext& ctx,
                   const ProverConfig& config, const TraceSink& trace) {
  if (initial_clauses.empty())
    throw std::invalid_argument("refute: no initial clauses");
  if (config.age_weight == 0 && config.cost_weight == 0)
    throw std::invalid_argument("refute: age and cost weights both zero");

  Clock clock(config.time_limit_seconds);
  ProofResult result;
  result.num_initial = initial_clauses.size();

  std::vector<State> state;
  // (predicate, polarity) occurrence bitmask per clause: c1 can only subsume
  // c2 if sig[c1] is a subset of sig[c2]
  std::vector<uint64_t> literal_sig;
  std::priority_queue<std::pair<double, uint32_t>,
                      std::vector<std::pair<double, uint32_t>>, CostOrder>
      cost_heap;
  size_t age_cursor = 0;  // ids are dense in generation order
  size_t queued_count = 0;

  auto signature_of = [](const Clause& c) {
    uint64_t sig = 0;
    for (const Literal& lit : c.literals()) {
      uint64_t slot = (uint64_t(lit.atom.functor()) << 1) | lit.positive;
      sig |= uint64_t(1) << (slot % 64);
    }
    return sig;
  };

  auto record = [&](Clause clause, InferenceRule rule,
                    std::vector<uint32_t> parents, uint64_t t) {
    DerivedClause dc;
    dc.clause = std::move(clause);
    dc.id = static_cast<uint32_t>(result.derivation.size());
    dc.rule = rule;
    dc.parent_ids = std::move(parents);
    dc.generation_step = static_cast<uint32_t>(t);
    dc.cost = cost_fn.score(dc, ctx);
    cost_heap.emplace(dc.cost, dc.id);
    state.push_back(State::Queued);
    literal_sig.push_back(signature_of(dc.clause));
    ++queued_count;
    result.derivation.push_back(std::move(dc));
  };

  for (const Clause& c : initial_clauses)
    record(c, InferenceRule::Initial, {}, 0);

  // processed set P, in processing order; ids and clauses kept in lockstep so
  // generation can take a span without copying P every iteration
  std::vector<uint32_t> processed_ids;
  std::vector<Clause> processed_clauses;
  std::unordered_multimap<uint64_t, uint32_t> processed_by_hash;

  const uint64_t period = config.age_weight + config.cost_weight;
  uint64_t t = 0;

  auto out_of_resources = [&] {
    if (config.max_iterations && t >= config.max_iterations) return true;
    return clock.expired();
  };

  auto pop_next = [&](bool use_age) -> uint32_t {
    if (use_age) {
      while (state[age_cursor] != State::Queued) ++age_cursor;
      return static_cast<uint32_t>(age_cursor);
    }
    while (state[cost_heap.top().second] != State::Queued) cost_heap.pop();
    return cost_heap.top().second;
  };

  while (queued_count > 0) {
    if (out_of_resources()) {
      result.verdict = Verdict::ResourceOut;
      result.wall_seconds = clock.elapsed();
      return result;
    }

    bool use_age = (t % period) < config.age_weight;
    uint32_t selected = pop_next(use_age);
    state[selected] = State::Taken;
    --queued_count;
    const Clause given = result.derivation[selected].clause;
    if (trace) trace({TraceEvent::Kind::Select, t, use_age, selected, 0});

    if (given.empty()) {
      if (trace) trace({TraceEvent::Kind::EmptyClause, t, use_age, selected, 0});
      result.verdict = Verdict::RefutationFound;
      result.empty_clause_id = selected;
      break;
    }

    // forward subsumption: alpha-duplicate fast path, then the general scan
    uint32_t subsumer = 0;
    bool discarded = false;
    auto range = processed_by_hash.equal_range(given.hash());
    for (auto it = range.first; it != range.second; ++it) {
      if (result.derivation[it->second].clause == given) {
        subsumer = it->second;
        discarded = true;
        break;
      }
    }
    if (!discarded) {
      uint64_t given_sig = literal_sig[selected];
      size_t given_size = given.num_literals();
      for (size_t i = 0; i < processed_ids.size(); ++i) {
        uint32_t pid = processed_ids[i];
        if ((literal_sig[pid] & ~given_sig) != 0) continue;
        if (processed_clauses[i].num_literals() > given_size) continue;
        if (order_subsumes(processed_clauses[i], given)) {
          subsumer = pid;
          discarded = true;
          break;
        }
      }
    }
    if (discarded) {
      ++result.stats.subsumed_forward;
      if (trace)
        trace({TraceEvent::Kind::DiscardForward, t, use_age, selected, subsumer});
      continue;  // t does not advance
    }

    // backward subsumption
    for (size_t i = 0; i < processed_ids.size();) {
      uint32_t pid = processed_ids[i];
      bool removed = false;
      if ((literal_sig[selected] & ~literal_sig[pid]) == 0 &&
          given.num_literals() <= processed_clauses[i].num_literals() &&
          order_subsumes(given, processed_clauses[i])) {
        removed = true;
        ++result.stats.subsumed_backward;
        if (trace)
          trace({TraceEvent::Kind::RemoveBackward, t, use_age, selected, pid});
        auto r = processed_by_hash.equal_range(processed_clauses[i].hash());
        for (auto it = r.first; it != r.second; ++it)
          if (it->second == pid) {
            processed_by_hash.erase(it);
            break;
          }
        processed_ids.erase(processed_ids.begin() + i);
        processed_clauses.erase(processed_clauses.begin() + i);
      }
      if (!removed) ++i;
    }

    // generate: factors first, then resolutions against the surviving P
    std::vector<Inference> fresh = find_factors(given, selected);
    std::vector<Inference> resolutions =
        find_resolutions(given, selected, processed_clauses, processed_ids);
    fresh.insert(fresh.end(), std::make_move_iterator(resolutions.begin()),
                 std::make_move_iterator(resolutions.end()));

    for (Inference& inf : fresh) {
      if (is_tautology(inf.clause)) {
        ++result.stats.tautologies;
        continue;
      }
      if (result.stats.generated >= config.max_generated) {
        result.verdict = Verdict::ResourceOut;
        result.wall_seconds = clock.elapsed();
        return result;
      }
      ++result.stats.generated;
      record(std::move(inf.clause), inf.rule, std::move(inf.parents), t);
    }

    processed_ids.push_back(selected);
    processed_clauses.push_back(given);
    processed_by_hash.emplace(given.hash(), selected);
    ++result.stats.processed;
    if (trace) trace({TraceEvent::Kind::Process, t, use_age, selected, 0});
    ++t;
  }

  if (result.verdict == Verdict::RefutationFound) {
    result.proof_clause_ids.clear();
    std::vector<bool> seen(result.derivation.size(), false);
    std::vector<uint32_t> stack = {*result.empty_clause_id};
    seen[*result.empty_clause_id] = true;
    while (!stack.empty()) {
      uint32_t id = stack.back();
      stack.pop_back();
      result.proof_clause_ids.push_back(id);
      for (uint32_t p : result.derivation[id].parent_ids)
        if (!seen[p]) {
          seen[p] = true;
          stack.push_back(p);
        }
    }
    std::sort(result.proof_clause_ids.begin(), result.proof_clause_ids.end());
  } else if (queued_count == 0) {
    result.verdict = Verdict::Satisfiable;
  }
  result.wall_seconds = clock.elapsed();
  return result;
}

ProofExamples extract_proof(const ProofResult& result) {
  ProofExamples out;
  if (result.verdict != Verdict::RefutationFound) return out;
  std::vector<bool> in_proof(result.derivation.size(), false);
  for (uint32_t id : result.proof_clause_ids) in_proof[id] = true;
  for (const DerivedClause& dc : result.derivation) {
    if (dc.rule == InferenceRule::Initial) continue;
    (in_proof[dc.id] ? out.positives : out.candidates_negative).push_back(dc);
  }
  return out;
}

std::vector<DerivedClause> proof_slice(const ProofResult& result) {
  std::vector<DerivedClause> slice;
  slice.reserve(result.proof_clause_ids.size());
  for (uint32_t id : result.proof_clause_ids)
    slice.push_back(result.derivation[id]);
  return slice;
}

bool check_proof(const std::vector<Clause>& initial_clauses,
                 const std::vector<DerivedClause>& slice) {
  if (slice.empty()) return false;
  std::unordered_map<uint32_t, const DerivedClause*> by_id;
  uint32_t prev_id = 0;
  bool first = true;
  for (const DerivedClause& dc : slice) {
    if (!first && dc.id <= prev_id) return false;  // ids strictly increase
    prev_id = dc.id;
    first = false;

    switch (dc.rule) {
      case InferenceRule::Initial: {
        if (!dc.parent_ids.empty()) return false;
        bool found = std::any_of(initial_clauses.begin(), initial_clauses.end(),
                                 [&](const Clause& c) { return c == dc.clause; });
        if (!found) return false;
        break;
      }
      case InferenceRule::Factoring: {
        if (dc.parent_ids.size() != 1) return false;
        auto it = by_id.find(dc.parent_ids[0]);
        if (it == by_id.end() || dc.parent_ids[0] >= dc.id) return false;
        auto factors = find_factors(it->second->clause, 0);
        bool found = std::any_of(factors.begin(), factors.end(),
                                 [&](const Inference& inf) {
                                   return inf.clause == dc.clause;
                                 });
        if (!found) return false;
        break;
      }
      case InferenceRule::Resolution: {
        if (dc.parent_ids.size() != 2) return false;
        auto a = by_id.find(dc.parent_ids[0]);
        auto b = by_id.find(dc.parent_ids[1]);
        if (a == by_id.end() || b == by_id.end()) return false;
        if (dc.parent_ids[0] >= dc.id || dc.parent_ids[1] >= dc.id) return false;
        std::vector<Clause> side = {b->second->clause};
        std::vector<uint32_t> side_id = {1};
        auto rs = find_resolutions(a->second->clause, 0, side, side_id);
        bool found = std::any_of(rs.begin(), rs.end(), [&](const Inference& inf) {
          return inf.clause == dc.clause;
        });
        if (!found) return false;
        break;
      }
    }
    by_id.emplace(dc.id, &dc);
  }
  return slice.back().clause.empty();
}

}  // namespace fpr

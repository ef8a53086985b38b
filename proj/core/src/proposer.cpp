#include "fprover/proposer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <unordered_set>

#include <json.hpp>

#include "fprover/cost.hpp"
#include "fprover/inference.hpp"

namespace fpr {

namespace {

constexpr int kCertificateSchemaVersion = 1;

uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void validate_config(const ProposerConfig& config) {
  if (config.steps < 1)
    throw std::invalid_argument("proposer: steps must be at least 1");
  if (!(config.temperature > 0.0))
    throw std::invalid_argument("proposer: temperature must be positive");
}

// Candidates of one walk step, deduplicated against everything already on
// the walk and within the step itself.
struct CandidateSet {
  std::vector<Inference> inferences;
  std::unordered_set<Clause, ClauseHash> seen;

  void offer(Inference inf, const std::unordered_set<Clause, ClauseHash>& existing) {
    if (inf.clause.empty() || is_tautology(inf.clause)) return;
    if (existing.count(inf.clause) || seen.count(inf.clause)) return;
    seen.insert(inf.clause);
    inferences.push_back(std::move(inf));
  }
};

size_t sample_index(const std::vector<double>& probabilities,
                    std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  double u = dist(rng);
  double acc = 0.0;
  for (size_t i = 0; i < probabilities.size(); ++i) {
    acc += probabilities[i];
    if (u < acc) return i;
  }
  return probabilities.size() - 1;
}

// Replay of one recorded step through the production rules; true iff some
// emitted inference reproduces the clause under the recorded parents.
bool replay_entry(const DerivedClause& entry,
                  const std::vector<DerivedClause>& derivation) {
  for (uint32_t pid : entry.parent_ids)
    if (pid >= entry.id) return false;
  if (entry.rule == InferenceRule::Factoring) {
    if (entry.parent_ids.size() != 1) return false;
    for (const Inference& inf :
         find_factors(derivation[entry.parent_ids[0]].clause, entry.parent_ids[0]))
      if (inf.clause == entry.clause) return true;
    return false;
  }
  if (entry.rule == InferenceRule::Resolution) {
    if (entry.parent_ids.size() != 2) return false;
    if (entry.parent_ids[0] == entry.parent_ids[1]) return false;
    const Clause& given = derivation[entry.parent_ids[0]].clause;
    const Clause side[] = {derivation[entry.parent_ids[1]].clause};
    const uint32_t side_id[] = {entry.parent_ids[1]};
    for (const Inference& inf :
         find_resolutions(given, entry.parent_ids[0], side, side_id))
      if (inf.clause == entry.clause) return true;
    return false;
  }
  return false;
}

}  // namespace

std::vector<double> size_softmax(const std::vector<uint32_t>& sizes,
                                 double temperature) {
  std::vector<double> p(sizes.size());
  if (sizes.empty()) return p;
  if (std::isinf(temperature)) {
    std::fill(p.begin(), p.end(), 1.0 / double(sizes.size()));
    return p;
  }
  double best = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < sizes.size(); ++i) {
    p[i] = -double(sizes[i]) / temperature;
    best = std::max(best, p[i]);
  }
  double total = 0.0;
  for (double& x : p) {
    x = std::exp(x - best);
    total += x;
  }
  for (double& x : p) x /= total;
  return p;
}

ProposedTheorem propose(const std::vector<Clause>& axioms,
                        const ProposerConfig& config) {
  if (axioms.empty())
    throw std::invalid_argument("proposer: axiom list is empty");
  validate_config(config);

  std::mt19937_64 rng(config.seed);
  for (uint32_t attempt = 0; attempt <= config.max_restarts; ++attempt) {
    std::vector<DerivedClause> walk;
    std::unordered_set<Clause, ClauseHash> existing;
    walk.reserve(axioms.size() + config.steps);
    for (const Clause& ax : axioms) {
      DerivedClause dc;
      dc.clause = ax;
      dc.id = uint32_t(walk.size());
      walk.push_back(std::move(dc));
      existing.insert(ax);
    }

    bool dead_end = false;
    for (uint32_t step = 1; step <= config.steps; ++step) {
      CandidateSet candidates;
      if (step == 1) {
        for (uint32_t i = 0; i < axioms.size(); ++i)
          for (Inference& inf : find_factors(walk[i].clause, i))
            candidates.offer(std::move(inf), existing);
        // Unordered pairs once: the later axiom plays the given clause.
        std::vector<Clause> sides;
        std::vector<uint32_t> side_ids;
        for (uint32_t j = 1; j < axioms.size(); ++j) {
          sides.assign(axioms.begin(), axioms.begin() + j);
          side_ids.resize(j);
          for (uint32_t i = 0; i < j; ++i) side_ids[i] = i;
          for (Inference& inf :
               find_resolutions(walk[j].clause, j, sides, side_ids))
            candidates.offer(std::move(inf), existing);
        }
      } else {
        const DerivedClause& last = walk.back();
        for (Inference& inf : find_factors(last.clause, last.id))
          candidates.offer(std::move(inf), existing);
        std::vector<Clause> sides;
        std::vector<uint32_t> side_ids;
        sides.reserve(walk.size() - 1);
        for (uint32_t i = 0; i + 1 < walk.size(); ++i) {
          sides.push_back(walk[i].clause);
          side_ids.push_back(i);
        }
        for (Inference& inf :
             find_resolutions(last.clause, last.id, sides, side_ids))
          candidates.offer(std::move(inf), existing);
      }

      if (candidates.inferences.empty()) {
        dead_end = true;
        break;
      }
      std::vector<uint32_t> sizes(candidates.inferences.size());
      for (size_t i = 0; i < sizes.size(); ++i)
        sizes[i] = clause_size(candidates.inferences[i].clause);
      size_t pick =
          sample_index(size_softmax(sizes, config.temperature), rng);

      Inference& chosen = candidates.inferences[pick];
      DerivedClause dc;
      dc.clause = std::move(chosen.clause);
      dc.id = uint32_t(walk.size());
      dc.rule = chosen.rule;
      dc.parent_ids = std::move(chosen.parents);
      dc.generation_step = step;
      existing.insert(dc.clause);
      walk.push_back(std::move(dc));
    }

    if (!dead_end) {
      ProposedTheorem t;
      t.conclusion = walk.back().clause;
      t.derivation = std::move(walk);
      t.num_axioms = axioms.size();
      t.config = config;
      return t;
    }
  }
  throw ProposeError("proposer: no candidates after " +
                     std::to_string(config.max_restarts + 1) +
                     " walks; retry with a different seed or fewer steps");
}

bool certify(const ProposedTheorem& t) {
  const auto& d = t.derivation;
  if (d.empty() || t.num_axioms == 0 || t.num_axioms >= d.size()) return false;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i].id != i) return false;
  for (size_t i = 0; i < t.num_axioms; ++i)
    if (d[i].rule != InferenceRule::Initial || !d[i].parent_ids.empty())
      return false;
  for (size_t i = t.num_axioms; i < d.size(); ++i) {
    if (d[i].rule == InferenceRule::Initial) return false;
    if (!replay_entry(d[i], d)) return false;
    // Linearity: after the first generated clause, every step consumes its
    // predecessor.
    if (i > t.num_axioms) {
      uint32_t prev = uint32_t(i - 1);
      if (std::find(d[i].parent_ids.begin(), d[i].parent_ids.end(), prev) ==
          d[i].parent_ids.end())
        return false;
    } else {
      for (uint32_t pid : d[i].parent_ids)
        if (pid >= t.num_axioms) return false;
    }
  }
  if (t.conclusion != d.back().clause) return false;
  if (t.conclusion.empty() || is_tautology(t.conclusion)) return false;
  return true;
}

Problem to_problem(const ProposedTheorem& t, const SymbolTable& base_symbols,
                   const std::string& name) {
  Problem p;
  p.name = name;
  p.symbols = std::make_shared<SymbolTable>(base_symbols);
  for (size_t i = 0; i < t.num_axioms; ++i) {
    p.axioms.push_back(t.derivation[i].clause);
    p.axiom_names.push_back("ax" + std::to_string(i));
  }
  std::vector<Clause> negated = negate_conjecture(t.conclusion, *p.symbols);
  for (size_t i = 0; i < negated.size(); ++i) {
    p.conjectures.push_back(negated[i]);
    p.conjecture_names.push_back("goal" + std::to_string(i));
  }
  return p;
}

std::string certificate_json(const ProposedTheorem& t,
                             const SymbolTable& symbols) {
  nlohmann::json doc;
  doc["schema_version"] = kCertificateSchemaVersion;
  doc["steps"] = t.config.steps;
  if (std::isinf(t.config.temperature))
    doc["temperature"] = "inf";
  else
    doc["temperature"] = t.config.temperature;
  doc["seed"] = t.config.seed;
  doc["num_axioms"] = t.num_axioms;
  doc["conclusion"] = t.conclusion.empty() ? "$false" : t.conclusion.to_string(symbols);
  nlohmann::json clauses = nlohmann::json::array();
  for (const DerivedClause& dc : t.derivation) {
    nlohmann::json c;
    c["id"] = dc.id;
    c["rule"] = rule_name(dc.rule);
    c["parents"] = dc.parent_ids;
    c["step"] = dc.generation_step;
    c["formula"] = dc.clause.empty() ? "$false" : dc.clause.to_string(symbols);
    clauses.push_back(std::move(c));
  }
  doc["clauses"] = std::move(clauses);
  return doc.dump(2);
}

ProposedTheorem parse_certificate_json(const std::string& text,
                                       SymbolTable& symbols_out) {
  try {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (doc.at("schema_version").get<int>() != kCertificateSchemaVersion)
      throw std::runtime_error("certificate: unsupported schema_version");
    ProposedTheorem t;
    t.config.steps = doc.at("steps").get<uint32_t>();
    const auto& temp = doc.at("temperature");
    t.config.temperature =
        temp.is_string() ? kInfiniteTemperature : temp.get<double>();
    t.config.seed = doc.at("seed").get<uint64_t>();
    t.num_axioms = doc.at("num_axioms").get<size_t>();
    for (const auto& c : doc.at("clauses")) {
      DerivedClause dc;
      dc.id = c.at("id").get<uint32_t>();
      std::string rule = c.at("rule").get<std::string>();
      if (rule == "initial") dc.rule = InferenceRule::Initial;
      else if (rule == "resolution") dc.rule = InferenceRule::Resolution;
      else if (rule == "factoring") dc.rule = InferenceRule::Factoring;
      else throw std::runtime_error("certificate: unknown rule " + rule);
      dc.parent_ids = c.at("parents").get<std::vector<uint32_t>>();
      dc.generation_step = c.at("step").get<uint32_t>();
      dc.clause = parse_clause(c.at("formula").get<std::string>(), symbols_out);
      t.derivation.push_back(std::move(dc));
    }
    t.conclusion = parse_clause(doc.at("conclusion").get<std::string>(), symbols_out);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("certificate: ") + e.what());
  } catch (const ParseError& e) {
    throw std::runtime_error(std::string("certificate: ") + e.what());
  }
}

std::optional<ProposerSettings> paper_proposer_setting(const std::string& name) {
  struct Row {
    const char* name;
    uint32_t steps;
    double temperature;
  };
  static const Row rows[] = {
      {"FLD1", 15, 10.0}, {"FLD2", 10, 12.0}, {"GEO6", 10, 8.0},
      {"GEO7", 5, 12.0},  {"GEO8", 10, 8.0},  {"GEO9", 15, 4.0},
      {"GRP5", 10, 20.0}, {"KRS1", 5, kInfiniteTemperature},
      {"NUM9", 10, 20.0}, {"SET1", 10, 5.0},
  };
  for (const Row& r : rows)
    if (name == r.name) return ProposerSettings{r.steps, r.temperature};
  return std::nullopt;
}

GridSearchResult grid_search(const std::vector<Clause>& axioms,
                             const SymbolTable& symbols,
                             const std::vector<uint32_t>& step_grid,
                             const std::vector<double>& temperature_grid,
                             uint32_t samples_per_cell,
                             const ProverConfig& judge_config, uint64_t seed) {
  GridSearchResult result;
  BasicCost judge_cost;
  uint64_t cell_index = 0;
  for (uint32_t steps : step_grid) {
    for (double temperature : temperature_grid) {
      GridCell cell;
      cell.steps = steps;
      cell.temperature = temperature;
      double size_sum = 0.0;
      uint32_t solved = 0;
      std::unordered_set<Clause, ClauseHash> unique;

      for (uint32_t s = 0; s < samples_per_cell; ++s) {
        ProposerConfig config;
        config.steps = steps;
        config.temperature = temperature;
        config.seed = mix64(mix64(seed ^ cell_index) + s);
        ProposedTheorem t;
        try {
          t = propose(axioms, config);
        } catch (const ProposeError&) {
          continue;  // cell statistics run over the walks that completed
        }
        cell.samples += 1;
        size_sum += double(clause_size(t.conclusion));
        unique.insert(t.conclusion);

        Problem p = to_problem(t, symbols, "grid");
        std::vector<Clause> initial = p.initial_clauses();
        ScoringContext ctx = make_scoring_context(p.conjectures, initial.size());
        ProofResult r = refute(initial, judge_cost, ctx, judge_config);
        if (r.verdict == Verdict::RefutationFound) solved += 1;
      }

      if (cell.samples > 0) {
        cell.mean_size = size_sum / double(cell.samples);
        cell.solve_rate = double(solved) / double(cell.samples);
        cell.unique_fraction = double(unique.size()) / double(cell.samples);
        cell.eligible = cell.mean_size <= kMeanSizeCap &&
                        cell.unique_fraction >= kMinUniqueFraction;
      }
      result.cells.push_back(cell);
      ++cell_index;
    }
  }
  for (size_t i = 0; i < result.cells.size(); ++i) {
    const GridCell& c = result.cells[i];
    if (!c.eligible) continue;
    if (!result.recommended ||
        c.solve_rate < result.cells[*result.recommended].solve_rate)
      result.recommended = i;
  }
  return result;
}

std::string grid_search_csv(const GridSearchResult& result) {
  std::string out =
      "steps,temperature,samples,mean_size,solve_rate,unique_fraction,"
      "eligible,recommended\n";
  char buf[160];
  for (size_t i = 0; i < result.cells.size(); ++i) {
    const GridCell& c = result.cells[i];
    std::string temp = std::isinf(c.temperature)
                           ? "inf"
                           : (std::snprintf(buf, sizeof buf, "%g", c.temperature), buf);
    std::snprintf(buf, sizeof buf, "%u,%s,%u,%.2f,%.4f,%.4f,%d,%d\n", c.steps,
                  temp.c_str(), c.samples, c.mean_size, c.solve_rate,
                  c.unique_fraction, c.eligible ? 1 : 0,
                  result.recommended && *result.recommended == i ? 1 : 0);
    out += buf;
  }
  return out;
}

}  // namespace fpr

#include "fprover/proof_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace fpr {

using nlohmann::json;

namespace {

constexpr int kDerivationSchemaVersion = 1;

InferenceRule rule_from_name(const std::string& name) {
  if (name == "initial") return InferenceRule::Initial;
  if (name == "resolution") return InferenceRule::Resolution;
  if (name == "factoring") return InferenceRule::Factoring;
  throw std::runtime_error("unknown inference rule: " + name);
}

Verdict verdict_from_name(const std::string& name) {
  if (name == "refutation_found") return Verdict::RefutationFound;
  if (name == "satisfiable") return Verdict::Satisfiable;
  if (name == "resource_out") return Verdict::ResourceOut;
  throw std::runtime_error("unknown verdict: " + name);
}

}  // namespace

std::string derivation_json(const ProofResult& result,
                            const SymbolTable& symbols,
                            const std::string& problem_name) {
  json clauses = json::array();
  for (const DerivedClause& dc : result.derivation) {
    clauses.push_back({{"id", dc.id},
                       {"rule", rule_name(dc.rule)},
                       {"parents", dc.parent_ids},
                       {"step", dc.generation_step},
                       {"cost", dc.cost},
                       {"formula", dc.clause.to_string(symbols)}});
  }
  json doc = {{"schema_version", kDerivationSchemaVersion},
              {"problem", problem_name},
              {"verdict", verdict_name(result.verdict)},
              {"num_initial", result.num_initial},
              {"proof_clause_ids", result.proof_clause_ids},
              {"stats",
               {{"generated", result.stats.generated},
                {"processed", result.stats.processed},
                {"subsumed_forward", result.stats.subsumed_forward},
                {"subsumed_backward", result.stats.subsumed_backward},
                {"tautologies", result.stats.tautologies}}},
              {"clauses", std::move(clauses)}};
  return doc.dump(2);
}

DerivationDoc parse_derivation_json(std::string_view text) {
  json doc = json::parse(text);
  if (doc.at("schema_version").get<int>() != kDerivationSchemaVersion)
    throw std::runtime_error("unsupported derivation schema version");
  DerivationDoc out;
  out.problem = doc.at("problem").get<std::string>();
  out.verdict = verdict_from_name(doc.at("verdict").get<std::string>());
  out.num_initial = doc.at("num_initial").get<size_t>();
  out.proof_clause_ids =
      doc.at("proof_clause_ids").get<std::vector<uint32_t>>();
  out.symbols = std::make_shared<SymbolTable>();
  for (const json& jc : doc.at("clauses")) {
    DerivedClause dc;
    dc.id = jc.at("id").get<uint32_t>();
    dc.rule = rule_from_name(jc.at("rule").get<std::string>());
    dc.parent_ids = jc.at("parents").get<std::vector<uint32_t>>();
    dc.generation_step = jc.at("step").get<uint32_t>();
    dc.cost = jc.at("cost").get<double>();
    dc.clause = parse_clause(jc.at("formula").get<std::string>(), *out.symbols);
    out.clauses.push_back(std::move(dc));
  }
  if (out.num_initial > out.clauses.size())
    throw std::runtime_error("num_initial exceeds clause count");
  return out;
}

bool check_derivation(const DerivationDoc& doc) {
  std::vector<Clause> initial;
  initial.reserve(doc.num_initial);
  for (size_t i = 0; i < doc.num_initial; ++i)
    initial.push_back(doc.clauses[i].clause);
  std::vector<DerivedClause> slice;
  for (uint32_t id : doc.proof_clause_ids) {
    if (id >= doc.clauses.size() || doc.clauses[id].id != id) return false;
    slice.push_back(doc.clauses[id]);
  }
  return check_proof(initial, slice);
}

std::string format_derivation(const std::vector<DerivedClause>& slice,
                              const SymbolTable& symbols) {
  std::string out;
  for (const DerivedClause& dc : slice) {
    out += "  " + std::to_string(dc.id) + ". ";
    out += dc.clause.to_string(symbols);
    out += "  [";
    out += rule_name(dc.rule);
    for (size_t i = 0; i < dc.parent_ids.size(); ++i)
      out += (i == 0 ? " " : ", ") + std::to_string(dc.parent_ids[i]);
    out += "]\n";
  }
  return out;
}

}  // namespace fpr

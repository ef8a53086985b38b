#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fprover/saturation.hpp"
#include "fprover/tptp.hpp"

namespace fpr {

// Serialized derivation DAG of one prover run. Formulas are stored as TPTP
// text (Clause::to_string), so the document is self-contained and re-parsing
// it against a fresh symbol table reproduces every clause alpha-exactly.
std::string derivation_json(const ProofResult& result,
                            const SymbolTable& symbols,
                            const std::string& problem_name);

// A derivation document decoupled from the run that produced it. `symbols`
// is a fresh table the stored formulas were interned into.
struct DerivationDoc {
  std::string problem;
  Verdict verdict = Verdict::ResourceOut;
  size_t num_initial = 0;
  std::vector<DerivedClause> clauses;  // id order, initial clauses first
  std::vector<uint32_t> proof_clause_ids;
  std::shared_ptr<SymbolTable> symbols;
};

// Throws std::runtime_error on malformed documents.
DerivationDoc parse_derivation_json(std::string_view text);

// Replays a parsed document's proof slice with check_proof.
bool check_derivation(const DerivationDoc& doc);

// Human-readable listing, one clause per line:
//   "  12. q(a) | ~r(a)  [resolution 4, 9]"
std::string format_derivation(const std::vector<DerivedClause>& slice,
                              const SymbolTable& symbols);

}  // namespace fpr

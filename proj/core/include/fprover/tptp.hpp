#pragma once

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fprover/clause.hpp"

namespace fpr {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column,
             const std::string& file = "")
      : std::runtime_error((file.empty() ? "" : file + ":") +
                           std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line(line),
        column(column) {}
  int line;
  int column;
};

// A parsed problem: axiom clauses (roles axiom/hypothesis) and conjecture
// clauses (every other role; in CNF problems these are already negated).
struct Problem {
  std::string name;
  std::shared_ptr<SymbolTable> symbols = std::make_shared<SymbolTable>();
  std::vector<Clause> axioms;
  std::vector<Clause> conjectures;
  std::vector<std::string> axiom_names;
  std::vector<std::string> conjecture_names;
  // include() paths as written, for axiom-set grouping
  std::vector<std::string> includes;

  std::vector<Clause> initial_clauses() const {
    std::vector<Clause> all = axioms;
    all.insert(all.end(), conjectures.begin(), conjectures.end());
    return all;
  }

  // Clause-list equality (alpha-equivalence per clause, order preserved).
  bool operator==(const Problem& other) const {
    return axioms == other.axioms && conjectures == other.conjectures;
  }
};

struct ParseOptions {
  // Root for include('...') resolution (TPTP distribution layout). When an
  // include is not found under the root, the including file's directory is
  // tried as a fallback.
  std::filesystem::path include_root;
  int max_include_depth = 16;
};

// Parse TPTP CNF text: cnf(name, role, formula). statements, '|' disjunction,
// '~' negation, '%' and '/* */' comments, include('file') directives.
// Throws ParseError with line/column on malformed input and SymbolError on
// arity clashes.
Problem parse_cnf(std::string_view text, const std::string& problem_name,
                  const ParseOptions& options = {});

// Parse a .p/.ax file from disk.
Problem parse_problem_file(const std::filesystem::path& path,
                           const ParseOptions& options = {});

// Append the clauses of `text` to an existing problem (shares its symbol
// table). Used for include resolution and axiom-set assembly.
void parse_cnf_into(Problem& problem, std::string_view text,
                    const std::string& filename, const ParseOptions& options,
                    int depth);

// Parse one bare formula ("p(X) | ~q(X)" or "$false") against an existing
// symbol table. Inverse of Clause::to_string.
Clause parse_clause(std::string_view formula_text, SymbolTable& symbols);

// Print a problem as TPTP CNF accepted by parse_cnf. Variables are printed
// upper-case, functors lower-case as interned.
std::string print_cnf(const Problem& problem);

// One cnf(...) line.
std::string print_cnf_clause(const std::string& name, const std::string& role,
                             const Clause& clause, const SymbolTable& symbols);

}  // namespace fpr

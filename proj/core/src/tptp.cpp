#include "fprover/tptp.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace fpr {

namespace {

struct Lexer {
  std::string_view text;
  std::string file;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line, col, file);
  }

  bool eof() {
    skip_trivia();
    return pos >= text.size();
  }

  char peek() {
    skip_trivia();
    if (pos >= text.size()) fail("unexpected end of input");
    return text[pos];
  }

  char advance() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_trivia() {
    for (;;) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        advance();
      if (pos < text.size() && text[pos] == '%') {
        while (pos < text.size() && text[pos] != '\n') advance();
        continue;
      }
      if (pos + 1 < text.size() && text[pos] == '/' && text[pos + 1] == '*') {
        advance();
        advance();
        while (pos + 1 < text.size() && !(text[pos] == '*' && text[pos + 1] == '/'))
          advance();
        if (pos + 1 >= text.size()) fail("unterminated block comment");
        advance();
        advance();
        continue;
      }
      return;
    }
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "', found '" + peek() + "'");
    advance();
  }

  bool accept(char c) {
    if (!eof() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  // lower_word, integer, or single-quoted symbol
  std::string lower_or_quoted() {
    char c = peek();
    if (c == '\'') {
      advance();
      std::string s;
      while (pos < text.size() && text[pos] != '\'') s += advance();
      if (pos >= text.size()) fail("unterminated quoted symbol");
      advance();
      if (s.empty()) fail("empty quoted symbol");
      return s;
    }
    if (std::islower(static_cast<unsigned char>(c)) ||
        std::isdigit(static_cast<unsigned char>(c)) || c == '$') {
      std::string s;
      s += advance();
      while (pos < text.size() && is_ident_char(text[pos])) s += advance();
      return s;
    }
    fail(std::string("expected a symbol, found '") + c + "'");
  }

  std::string upper_word() {
    std::string s;
    s += advance();
    while (pos < text.size() && is_ident_char(text[pos])) s += advance();
    return s;
  }
};

struct ClauseParser {
  Lexer& lex;
  SymbolTable& symbols;
  std::unordered_map<std::string, VarId> vars;  // per-clause scope

  Term parse_term() {
    char c = lex.peek();
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = lex.upper_word();
      auto it = vars.find(name);
      if (it == vars.end())
        it = vars.emplace(name, static_cast<VarId>(vars.size())).first;
      return Term::variable(it->second);
    }
    std::string name = lex.lower_or_quoted();
    std::vector<Term> args = parse_args();
    SymbolId id = symbols.intern(name, static_cast<uint32_t>(args.size()),
                                 SymbolKind::Function);
    return Term::app(id, std::move(args));
  }

  std::vector<Term> parse_args() {
    std::vector<Term> args;
    if (!lex.eof() && lex.peek() == '(') {
      lex.advance();
      args.push_back(parse_term());
      while (lex.accept(',')) args.push_back(parse_term());
      lex.expect(')');
    }
    return args;
  }

  // Returns false for a dropped '$false' disjunct.
  bool parse_literal(std::vector<Literal>& out) {
    bool positive = true;
    while (lex.accept('~')) positive = !positive;
    std::string name = lex.lower_or_quoted();
    if (name == "$false") {
      if (!positive) lex.fail("negated $false is not in the supported subset");
      return false;
    }
    if (name == "$true") lex.fail("$true is not in the supported subset");
    std::vector<Term> args = parse_args();
    SymbolId id = symbols.intern(name, static_cast<uint32_t>(args.size()),
                                 SymbolKind::Predicate);
    out.push_back(Literal{positive, Term::app(id, std::move(args))});
    return true;
  }

  Clause parse_formula() {
    bool parenthesized = lex.accept('(');
    std::vector<Literal> literals;
    parse_literal(literals);
    while (lex.accept('|')) parse_literal(literals);
    if (parenthesized) lex.expect(')');
    return Clause(std::move(literals));
  }
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void resolve_include(Problem& problem, const std::string& target,
                     const std::string& including_file,
                     const ParseOptions& options, int depth, const Lexer& lex) {
  namespace fs = std::filesystem;
  if (depth >= options.max_include_depth)
    throw ParseError("include depth limit exceeded", lex.line, lex.col, lex.file);
  fs::path candidate = options.include_root / target;
  if (!fs::exists(candidate) && !including_file.empty())
    candidate = fs::path(including_file).parent_path() / target;
  if (!fs::exists(candidate))
    throw ParseError("cannot resolve include('" + target + "')", lex.line,
                     lex.col, lex.file);
  std::string text = read_file(candidate);
  parse_cnf_into(problem, text, candidate.string(), options, depth + 1);
}

}  // namespace

void parse_cnf_into(Problem& problem, std::string_view text,
                    const std::string& filename, const ParseOptions& options,
                    int depth) {
  Lexer lex{text, filename};
  while (!lex.eof()) {
    std::string keyword = lex.lower_or_quoted();
    if (keyword == "include") {
      lex.expect('(');
      Lexer& l = lex;
      if (l.peek() != '\'') l.fail("include expects a quoted path");
      std::string target = l.lower_or_quoted();
      if (!lex.accept(')'))
        lex.fail("formula selection in include() is not supported");
      lex.expect('.');
      problem.includes.push_back(target);
      resolve_include(problem, target, filename, options, depth, lex);
      continue;
    }
    if (keyword != "cnf")
      lex.fail("expected 'cnf' or 'include', found '" + keyword + "'");
    lex.expect('(');
    std::string clause_name = lex.lower_or_quoted();
    lex.expect(',');
    std::string role = lex.lower_or_quoted();
    lex.expect(',');
    ClauseParser cp{lex, *problem.symbols, {}};
    Clause clause = cp.parse_formula();
    lex.expect(')');
    lex.expect('.');
    if (role == "axiom" || role == "hypothesis") {
      problem.axioms.push_back(std::move(clause));
      problem.axiom_names.push_back(clause_name);
    } else {
      problem.conjectures.push_back(std::move(clause));
      problem.conjecture_names.push_back(clause_name);
    }
  }
}

Clause parse_clause(std::string_view formula_text, SymbolTable& symbols) {
  Lexer lex{formula_text, "<clause>"};
  ClauseParser cp{lex, symbols, {}};
  Clause clause = cp.parse_formula();
  if (!lex.eof()) lex.fail("trailing input after formula");
  return clause;
}

Problem parse_cnf(std::string_view text, const std::string& problem_name,
                  const ParseOptions& options) {
  Problem problem;
  problem.name = problem_name;
  parse_cnf_into(problem, text, problem_name, options, 0);
  return problem;
}

Problem parse_problem_file(const std::filesystem::path& path,
                           const ParseOptions& options) {
  Problem problem;
  problem.name = path.stem().string();
  parse_cnf_into(problem, read_file(path), path.string(), options, 0);
  return problem;
}

std::string print_cnf_clause(const std::string& name, const std::string& role,
                             const Clause& clause, const SymbolTable& symbols) {
  std::string s = "cnf(" + name + ", " + role + ", ";
  s += clause.empty() ? "$false" : clause.to_string(symbols);
  s += ").";
  return s;
}

std::string print_cnf(const Problem& problem) {
  std::string out;
  for (size_t i = 0; i < problem.axioms.size(); ++i) {
    std::string name = i < problem.axiom_names.size() ? problem.axiom_names[i]
                                                      : "ax" + std::to_string(i);
    out += print_cnf_clause(name, "axiom", problem.axioms[i], *problem.symbols);
    out += '\n';
  }
  for (size_t i = 0; i < problem.conjectures.size(); ++i) {
    std::string name = i < problem.conjecture_names.size()
                           ? problem.conjecture_names[i]
                           : "goal" + std::to_string(i);
    out += print_cnf_clause(name, "negated_conjecture", problem.conjectures[i],
                            *problem.symbols);
    out += '\n';
  }
  return out;
}

}  // namespace fpr

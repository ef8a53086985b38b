#include "fprover/axiom_sets.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fpr {

namespace {

// Non-constant symbols (arity >= 1 functions, all predicates) of a term tree.
void collect_checked_symbols(const Term& t, const SymbolTable& symbols,
                             std::set<SymbolId>& out) {
  if (t.is_variable()) return;
  if (symbols.kind(t.functor()) == SymbolKind::Predicate ||
      symbols.arity(t.functor()) >= 1)
    out.insert(t.functor());
  for (const Term& a : t.args()) collect_checked_symbols(a, symbols, out);
}

}  // namespace

ProposabilityDiagnosis diagnose_forward_proposable(const Problem& problem) {
  std::set<SymbolId> axiom_symbols;
  for (const Clause& c : problem.axioms)
    for (const Literal& lit : c.literals())
      collect_checked_symbols(lit.atom, *problem.symbols, axiom_symbols);

  ProposabilityDiagnosis d;
  for (size_t i = 0; i < problem.conjectures.size(); ++i) {
    const Clause& c = problem.conjectures[i];
    if (c.num_literals() != 1) {
      d.violations.push_back({i, ProposabilityCondition::Unit});
      continue;
    }
    if (!c.is_ground()) {
      d.violations.push_back({i, ProposabilityCondition::Ground});
      continue;
    }
    std::set<SymbolId> used;
    collect_checked_symbols(c.literals()[0].atom, *problem.symbols, used);
    bool covered = std::all_of(used.begin(), used.end(), [&](SymbolId s) {
      return axiom_symbols.count(s) > 0;
    });
    if (!covered) d.violations.push_back({i, ProposabilityCondition::Symbols});
  }
  d.proposable = d.violations.empty();
  return d;
}

bool is_forward_proposable(const Problem& problem) {
  return diagnose_forward_proposable(problem).proposable;
}

std::string axiom_file_label(const std::string& include_path) {
  std::string stem = std::filesystem::path(include_path).stem().string();
  size_t i = 0;
  while (i < stem.size() && std::isalpha(static_cast<unsigned char>(stem[i]))) ++i;
  size_t j = i;
  while (j < stem.size() && std::isdigit(static_cast<unsigned char>(stem[j]))) ++j;
  if (i == 0 || j == i) return stem;
  size_t k = i;
  while (k < j - 1 && stem[k] == '0') ++k;  // strip leading zeros, keep one digit
  return stem.substr(0, i) + stem.substr(k, j - k);
}

namespace {

std::string group_label(const std::vector<std::string>& include_paths) {
  std::vector<std::string> labels;
  for (const auto& p : include_paths) {
    std::string l = axiom_file_label(p);
    if (std::find(labels.begin(), labels.end(), l) == labels.end())
      labels.push_back(l);
  }
  std::sort(labels.begin(), labels.end());
  std::string name;
  for (const auto& l : labels) {
    if (!name.empty()) name += '+';
    name += l;
  }
  return name;
}

}  // namespace

std::vector<AxiomSet> build_axiom_sets(const std::filesystem::path& problems_dir,
                                       const ParseOptions& options,
                                       const AxiomSetFilter& filter) {
  struct Group {
    std::vector<std::string> problem_names;
    std::vector<std::filesystem::path> problem_paths;
  };
  std::map<std::vector<std::string>, Group> groups;

  std::vector<std::filesystem::path> files;
  if (std::filesystem::exists(problems_dir))
    for (const auto& entry :
         std::filesystem::recursive_directory_iterator(problems_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".p")
        files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  for (const auto& file : files) {
    Problem p;
    try {
      p = parse_problem_file(file, options);
    } catch (const std::exception&) {
      continue;  // outside the supported subset
    }
    std::vector<std::string> key = p.includes;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    if (key.empty()) continue;
    auto& g = groups[key];
    g.problem_names.push_back(p.name);
    g.problem_paths.push_back(file);
  }

  std::vector<AxiomSet> sets;
  for (auto& [key, group] : groups) {
    if (group.problem_names.size() < filter.min_theorems) continue;
    AxiomSet set;
    set.include_paths = key;
    set.name = group_label(key);
    set.problem_names = std::move(group.problem_names);
    set.problem_paths = std::move(group.problem_paths);

    // load the axiom files into one shared symbol table
    Problem axioms;
    axioms.name = set.name;
    bool loaded = true;
    for (const auto& inc : key) {
      auto path = options.include_root / inc;
      if (!std::filesystem::exists(path))
        path = set.problem_paths.front().parent_path() / inc;
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        loaded = false;
        break;
      }
      std::ostringstream text;
      text << in.rdbuf();
      try {
        parse_cnf_into(axioms, text.str(), path.string(), options, 0);
      } catch (const std::exception&) {
        loaded = false;
        break;
      }
    }
    if (!loaded) continue;
    if (axioms.axioms.size() > filter.max_axioms) continue;
    if (filter.exclude_equality && axioms.symbols->has_equality_predicate())
      continue;
    set.symbols = axioms.symbols;
    set.clauses = std::move(axioms.axioms);
    sets.push_back(std::move(set));
  }

  // stable: equal labels keep include-key order, so #k suffixes are
  // deterministic
  std::stable_sort(sets.begin(), sets.end(),
                   [](const AxiomSet& a, const AxiomSet& b) { return a.name < b.name; });
  // distinct groups can map to one label; disambiguate in sorted order
  for (size_t i = 0; i < sets.size();) {
    size_t j = i + 1;
    while (j < sets.size() && sets[j].name == sets[i].name) ++j;
    if (j - i > 1)
      for (size_t k = i + 1; k < j; ++k)
        sets[k].name += "#" + std::to_string(k - i + 1);
    i = j;
  }
  return sets;
}

std::vector<AxiomSetStats> analyze_proposability(
    const std::vector<AxiomSet>& sets, const ParseOptions& options) {
  std::vector<AxiomSetStats> stats;
  for (const auto& set : sets) {
    AxiomSetStats row;
    row.name = set.name;
    for (const auto& path : set.problem_paths) {
      Problem p;
      try {
        p = parse_problem_file(path, options);
      } catch (const std::exception&) {
        continue;
      }
      ++row.total;
      if (is_forward_proposable(p)) ++row.proposable;
    }
    stats.push_back(std::move(row));
  }
  return stats;
}

std::string proposability_csv(const std::vector<AxiomSetStats>& stats) {
  std::string out = "axiom_set,proposable,total,percent\n";
  size_t sum_prop = 0, sum_total = 0;
  char line[160];
  for (const auto& row : stats) {
    double pct = row.total ? 100.0 * double(row.proposable) / double(row.total) : 0.0;
    std::snprintf(line, sizeof line, "%s,%zu,%zu,%.1f\n", row.name.c_str(),
                  row.proposable, row.total, pct);
    out += line;
    sum_prop += row.proposable;
    sum_total += row.total;
  }
  double pct = sum_total ? 100.0 * double(sum_prop) / double(sum_total) : 0.0;
  std::snprintf(line, sizeof line, "TOTAL,%zu,%zu,%.1f\n", sum_prop, sum_total, pct);
  out += line;
  return out;
}

}  // namespace fpr

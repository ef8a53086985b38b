#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "fprover/axiom_sets.hpp"
#include "fprover/mlp.hpp"
#include "fprover/proof_io.hpp"
#include "fprover/proposer.hpp"
#include "fprover/saturation.hpp"
#include "fprover/tptp.hpp"

namespace {

struct ProveArgs {
  std::string problem;
  std::string tptp_root;
  std::string cost = "basic";
  std::string model;
  std::string age_cost = "1:5";
  double time_limit = 300.0;
  uint64_t step_limit = 1000000;
  std::string proof_json;
  bool selfcheck = false;
};

struct AnalyzeArgs {
  std::string tptp_root;
  std::string problems;
  std::string out;
  size_t min_theorems = 10;
  size_t max_axioms = 1000;
  bool include_equality = false;
};

struct ProposeArgs {
  std::string axioms;
  uint32_t steps = 10;
  std::string temperature = "10";
  uint32_t count = 1;
  uint64_t seed = 0;
  uint32_t max_restarts = 64;
  std::string out;
};

struct GridSearchArgs {
  std::string axioms;
  std::string steps = "5,10,15";
  std::string temperatures = "2,4,8,16,inf";
  uint32_t samples = 100;
  uint64_t judge_budget = 50000;
  std::string judge_age_cost = "1:5";
  uint64_t seed = 0;
  std::string out;
};

bool parse_temperature(const std::string& text, double& value) {
  if (text == "inf" || text == "Inf" || text == "infinity") {
    value = fpr::kInfiniteTemperature;
    return true;
  }
  try {
    size_t used = 0;
    value = std::stod(text, &used);
    return used == text.size() && value > 0.0;
  } catch (const std::exception&) {
    return false;
  }
}

// Clauses of a standalone axiom file, whatever roles it uses.
std::vector<fpr::Clause> load_axiom_clauses(const std::string& path,
                                            fpr::Problem& problem) {
  problem = fpr::parse_problem_file(path, fpr::ParseOptions{});
  return problem.initial_clauses();
}

bool parse_ratio(const std::string& text, uint32_t& a, uint32_t& c) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) return false;
  try {
    a = static_cast<uint32_t>(std::stoul(text.substr(0, colon)));
    c = static_cast<uint32_t>(std::stoul(text.substr(colon + 1)));
  } catch (const std::exception&) {
    return false;
  }
  return a > 0 || c > 0;
}

int run_prove(const ProveArgs& args) {
  fpr::ParseOptions options;
  if (!args.tptp_root.empty()) options.include_root = args.tptp_root;
  fpr::Problem problem = fpr::parse_problem_file(args.problem, options);

  fpr::ProverConfig config;
  if (!parse_ratio(args.age_cost, config.age_weight, config.cost_weight)) {
    std::cerr << "invalid --age-cost ratio: " << args.age_cost << "\n";
    return 2;
  }
  config.time_limit_seconds = args.time_limit;
  config.max_generated = args.step_limit;

  std::unique_ptr<fpr::CostModel> cost;
  if (args.cost == "basic") {
    cost = std::make_unique<fpr::BasicCost>();
  } else if (args.cost == "neural") {
    if (args.model.empty()) {
      std::cerr << "--cost neural requires --model <checkpoint.json>\n";
      return 2;
    }
    cost = std::make_unique<fpr::NeuralCost>(
        std::make_shared<fpr::MlpModel>(fpr::load_model_file(args.model)));
  } else {
    std::cerr << "unknown cost model: " << args.cost << "\n";
    return 2;
  }

  std::vector<fpr::Clause> initial = problem.initial_clauses();
  fpr::ScoringContext ctx =
      fpr::make_scoring_context(problem.conjectures, initial.size());
  fpr::ProofResult result = fpr::refute(initial, *cost, ctx, config);

  std::cout << "problem: " << problem.name << "\n";
  std::cout << "verdict: " << fpr::verdict_name(result.verdict) << "\n";
  std::cout << "processed: " << result.stats.processed << "\n";
  std::cout << "generated: " << result.stats.generated << "\n";
  std::cout << "subsumed_forward: " << result.stats.subsumed_forward << "\n";
  std::cout << "subsumed_backward: " << result.stats.subsumed_backward << "\n";
  std::cout << "tautologies: " << result.stats.tautologies << "\n";
  std::cerr << "wall_seconds: " << result.wall_seconds << "\n";

  if (result.verdict == fpr::Verdict::RefutationFound) {
    std::cout << "proof:\n"
              << fpr::format_derivation(fpr::proof_slice(result),
                                        *problem.symbols);
    if (args.selfcheck) {
      bool ok = fpr::check_proof(initial, fpr::proof_slice(result));
      std::cout << "proof_check: " << (ok ? "ok" : "FAILED") << "\n";
      if (!ok) return 1;
    }
  }

  if (!args.proof_json.empty()) {
    std::ofstream out(args.proof_json);
    if (!out) {
      std::cerr << "cannot write " << args.proof_json << "\n";
      return 2;
    }
    out << fpr::derivation_json(result, *problem.symbols, problem.name);
  }
  return result.verdict == fpr::Verdict::RefutationFound ? 0 : 1;
}

int run_analyze(const AnalyzeArgs& args) {
  fpr::ParseOptions options;
  options.include_root = args.tptp_root;
  fpr::AxiomSetFilter filter;
  filter.min_theorems = args.min_theorems;
  filter.max_axioms = args.max_axioms;
  filter.exclude_equality = !args.include_equality;

  std::filesystem::path problems =
      args.problems.empty() ? std::filesystem::path(args.tptp_root) / "Problems"
                            : std::filesystem::path(args.problems);
  std::vector<fpr::AxiomSet> sets =
      fpr::build_axiom_sets(problems, options, filter);
  std::string csv =
      fpr::proposability_csv(fpr::analyze_proposability(sets, options));
  if (args.out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(args.out);
    if (!out) {
      std::cerr << "cannot write " << args.out << "\n";
      return 2;
    }
    out << csv;
  }
  return 0;
}

int run_propose(const ProposeArgs& args) {
  double temperature = 0.0;
  if (!parse_temperature(args.temperature, temperature)) {
    std::cerr << "invalid --temperature: " << args.temperature << "\n";
    return 2;
  }
  fpr::Problem source;
  std::vector<fpr::Clause> axioms = load_axiom_clauses(args.axioms, source);
  if (axioms.empty()) {
    std::cerr << "no clauses in " << args.axioms << "\n";
    return 2;
  }
  std::filesystem::path out_dir(args.out);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "cannot create " << args.out << ": " << ec.message() << "\n";
    return 2;
  }

  uint32_t produced = 0;
  for (uint32_t i = 0; i < args.count; ++i) {
    fpr::ProposerConfig config;
    config.steps = args.steps;
    config.temperature = temperature;
    config.seed = args.seed + i;
    config.max_restarts = args.max_restarts;

    fpr::ProposedTheorem t;
    try {
      t = fpr::propose(axioms, config);
    } catch (const fpr::ProposeError& e) {
      std::cerr << "theorem_" << i << ": " << e.what() << "\n";
      continue;
    }
    std::string stem = "theorem_" + std::to_string(i);
    fpr::Problem p = fpr::to_problem(t, *source.symbols, stem);
    std::ofstream problem_out(out_dir / (stem + ".p"));
    std::ofstream cert_out(out_dir / (stem + ".json"));
    if (!problem_out || !cert_out) {
      std::cerr << "cannot write under " << args.out << "\n";
      return 2;
    }
    problem_out << fpr::print_cnf(p);
    cert_out << fpr::certificate_json(t, *source.symbols);
    std::cout << stem << ": size=" << fpr::clause_size(t.conclusion) << " "
              << t.conclusion.to_string(*source.symbols) << "\n";
    ++produced;
  }
  std::cout << "proposed: " << produced << "/" << args.count << "\n";
  return produced > 0 ? 0 : 1;
}

int run_gridsearch(const GridSearchArgs& args) {
  std::vector<uint32_t> steps;
  for (size_t pos = 0; pos < args.steps.size();) {
    size_t comma = args.steps.find(',', pos);
    if (comma == std::string::npos) comma = args.steps.size();
    try {
      steps.push_back(
          static_cast<uint32_t>(std::stoul(args.steps.substr(pos, comma - pos))));
    } catch (const std::exception&) {
      std::cerr << "invalid --steps list: " << args.steps << "\n";
      return 2;
    }
    pos = comma + 1;
  }
  std::vector<double> temperatures;
  for (size_t pos = 0; pos < args.temperatures.size();) {
    size_t comma = args.temperatures.find(',', pos);
    if (comma == std::string::npos) comma = args.temperatures.size();
    double t = 0.0;
    if (!parse_temperature(args.temperatures.substr(pos, comma - pos), t)) {
      std::cerr << "invalid --temperatures list: " << args.temperatures << "\n";
      return 2;
    }
    temperatures.push_back(t);
    pos = comma + 1;
  }
  if (steps.empty() || temperatures.empty()) {
    std::cerr << "empty parameter grid\n";
    return 2;
  }

  fpr::Problem source;
  std::vector<fpr::Clause> axioms = load_axiom_clauses(args.axioms, source);
  if (axioms.empty()) {
    std::cerr << "no clauses in " << args.axioms << "\n";
    return 2;
  }

  fpr::ProverConfig judge;
  if (!parse_ratio(args.judge_age_cost, judge.age_weight, judge.cost_weight)) {
    std::cerr << "invalid --judge-age-cost ratio: " << args.judge_age_cost
              << "\n";
    return 2;
  }
  judge.max_generated = args.judge_budget;
  judge.time_limit_seconds = 0.0;

  fpr::GridSearchResult result = fpr::grid_search(
      axioms, *source.symbols, steps, temperatures, args.samples, judge,
      args.seed);
  std::string csv = fpr::grid_search_csv(result);
  if (args.out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(args.out);
    if (!out) {
      std::cerr << "cannot write " << args.out << "\n";
      return 2;
    }
    out << csv;
  }
  if (result.recommended) {
    const fpr::GridCell& c = result.cells[*result.recommended];
    std::cerr << "recommended: steps=" << c.steps << " temperature=";
    if (std::isinf(c.temperature)) {
      std::cerr << "inf";
    } else {
      std::cerr << c.temperature;
    }
    std::cerr << " solve_rate=" << c.solve_rate << "\n";
  } else {
    std::cerr << "recommended: none (no eligible cell)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"first-order resolution prover with learned clause selection"};
  app.require_subcommand(1);

  ProveArgs prove;
  CLI::App* prove_cmd =
      app.add_subcommand("prove", "refute one TPTP CNF problem");
  prove_cmd->add_option("--problem", prove.problem, "TPTP problem file")
      ->required();
  prove_cmd->add_option("--tptp-root", prove.tptp_root,
                        "root directory for include() resolution");
  prove_cmd->add_option("--cost", prove.cost, "clause cost model: basic|neural");
  prove_cmd->add_option("--model", prove.model,
                        "model checkpoint for --cost neural");
  prove_cmd->add_option("--age-cost", prove.age_cost,
                        "age:cost queue schedule, e.g. 1:5");
  prove_cmd->add_option("--time-limit", prove.time_limit,
                        "wall-clock limit in seconds; <= 0 disables");
  prove_cmd->add_option("--step-limit", prove.step_limit,
                        "generated-clause budget");
  prove_cmd->add_option("--proof-json", prove.proof_json,
                        "write the derivation DAG as JSON to this file");
  prove_cmd->add_flag("--selfcheck", prove.selfcheck,
                      "replay the proof through the independent checker");

  AnalyzeArgs analyze;
  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "forward-proposability census over a TPTP tree (CSV)");
  analyze_cmd
      ->add_option("--tptp-root", analyze.tptp_root,
                   "TPTP distribution root (contains Axioms/, Problems/)")
      ->required();
  analyze_cmd->add_option("--problems", analyze.problems,
                          "problem directory (default <tptp-root>/Problems)");
  analyze_cmd->add_option("--out", analyze.out, "CSV output file (default stdout)");
  analyze_cmd->add_option("--min-theorems", analyze.min_theorems,
                          "drop axiom sets with fewer associated problems");
  analyze_cmd->add_option("--max-axioms", analyze.max_axioms,
                          "drop axiom sets with more axiom clauses");
  analyze_cmd->add_flag("--include-equality", analyze.include_equality,
                        "keep domains whose axioms use the equality predicate");

  ProposeArgs propose;
  CLI::App* propose_cmd = app.add_subcommand(
      "propose", "sample synthetic theorems by linear-resolution walks");
  propose_cmd->add_option("--axioms", propose.axioms, "TPTP CNF axiom file")
      ->required();
  propose_cmd->add_option("--steps", propose.steps, "walk length N");
  propose_cmd->add_option("--temperature", propose.temperature,
                          "size-softmax temperature T, or inf for uniform");
  propose_cmd->add_option("--count", propose.count, "theorems to sample");
  propose_cmd->add_option("--seed", propose.seed,
                          "base seed; theorem i uses seed+i");
  propose_cmd->add_option("--max-restarts", propose.max_restarts,
                          "dead-end restarts before a sample fails");
  propose_cmd
      ->add_option("--out", propose.out,
                   "directory for theorem_<i>.p and theorem_<i>.json")
      ->required();

  GridSearchArgs grid;
  CLI::App* grid_cmd = app.add_subcommand(
      "gridsearch", "evaluate proposer settings over an N x T grid (CSV)");
  grid_cmd->add_option("--axioms", grid.axioms, "TPTP CNF axiom file")
      ->required();
  grid_cmd->add_option("--steps", grid.steps, "comma list of walk lengths");
  grid_cmd->add_option("--temperatures", grid.temperatures,
                       "comma list of temperatures; inf allowed");
  grid_cmd->add_option("--samples", grid.samples, "theorems per cell");
  grid_cmd->add_option("--judge-budget", grid.judge_budget,
                       "generated-clause budget for the judge prover");
  grid_cmd->add_option("--judge-age-cost", grid.judge_age_cost,
                       "judge queue schedule, e.g. 1:5");
  grid_cmd->add_option("--seed", grid.seed, "base seed for cell sampling");
  grid_cmd->add_option("--out", grid.out, "CSV output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (prove_cmd->parsed()) return run_prove(prove);
    if (analyze_cmd->parsed()) return run_analyze(analyze);
    if (propose_cmd->parsed()) return run_propose(propose);
    if (grid_cmd->parsed()) return run_gridsearch(grid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dsearch/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dsearch/counting.hpp"
#include "dsearch/dimacs.hpp"
#include "dsearch/params.hpp"
#include "dsearch/planted.hpp"
#include "dsearch/search.hpp"
#include "dsearch/verify.hpp"

namespace dsearch {

namespace {

using nlohmann::json;

constexpr int kExitSatisfied = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitPromise = 2;
constexpr int kExitConfig = 3;

int exhaustive_limit_default() {
  if (const char* env = std::getenv("DERAND_MAX_EXHAUSTIVE")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return kDefaultExhaustiveLimit;
}

struct SolveOptions {
  std::string input;
  std::string driver = "stagewise";
  std::string eps;
  std::string mode = "practical";
  std::string counter = "exact";
  std::string counter_delta = "1/100";
  std::string stars = "exhaustive";
  std::string fill = "uniform";
  std::string fill_delta = "1/8";
  std::string eps_floor = "1/64";
  int star_k = 2;
  int fill_k = 3;
  int p_log2 = 1;
  uint64_t seed = 1;
  int max_exhaustive = exhaustive_limit_default();
  double const_c = 1.0;
  std::string trace_out;
  std::string summary_out;
};

std::unique_ptr<BiasCounter> make_counter(const SolveOptions& opt) {
  if (opt.counter == "exact") return std::make_unique<ExactCounter>(opt.max_exhaustive);
  const Rat delta = rat_parse(opt.counter_delta);
  Skew skew;
  if (opt.counter == "adversarial-down")
    skew = Skew::Down;
  else if (opt.counter == "adversarial-up")
    skew = Skew::Up;
  else if (opt.counter == "adversarial-jitter")
    skew = Skew::Jitter;
  else
    throw std::invalid_argument("unknown counter: " + opt.counter);
  return std::make_unique<AdversarialCounter>(delta, skew, opt.seed, opt.max_exhaustive);
}

FillSpec make_fill_spec(const SolveOptions& opt) {
  FillSpec spec;
  if (opt.fill == "uniform")
    spec.kind = FillKind::Uniform;
  else if (opt.fill == "kwise")
    spec.kind = FillKind::Kwise;
  else if (opt.fill == "smallbias")
    spec.kind = FillKind::SmallBias;
  else
    throw std::invalid_argument("unknown fill: " + opt.fill);
  spec.k = opt.fill_k;
  spec.delta = rat_parse(opt.fill_delta);
  return spec;
}

void emit_trace(const SearchTrace& trace, const SolveOptions& opt) {
  if (!opt.trace_out.empty()) {
    std::ofstream out(opt.trace_out);
    if (!out) throw std::runtime_error("cannot write " + opt.trace_out);
    trace.write_csv(out);
  }
  if (!opt.summary_out.empty()) {
    std::ofstream out(opt.summary_out);
    if (!out) throw std::runtime_error("cannot write " + opt.summary_out);
    out << trace.summary_json() << "\n";
  }
}

int trace_exit_code(const SearchTrace& trace) {
  switch (trace.outcome) {
    case Outcome::Satisfied: return kExitSatisfied;
    case Outcome::NotFound:
    case Outcome::EpsFloorReached: return kExitNotFound;
    default: return kExitPromise;
  }
}

// pad -> trim -> driver, with the assignment checked against the original F
SearchTrace run_driver(const CnfFormula& original, const Rat& eps, const SolveOptions& opt,
                       const BiasCounter& counter) {
  const CnfFormula padded = original.padded();
  const ParameterSet ps = [&] {
    if (opt.mode == "paper")
      return compute_parameters(padded.clause_count(), padded.variable_count(), eps, opt.const_c,
                                ParamMode::Paper);
    PracticalOverrides ov;
    ov.p_log2 = opt.p_log2;
    if (opt.counter != "exact") ov.delta_count = rat_parse(opt.counter_delta);
    return compute_parameters(padded.clause_count(), padded.variable_count(), eps, opt.const_c,
                              ParamMode::Practical, ov);
  }();
  const CnfFormula trimmed = padded.trimmed(ps.trim_width);

  SearchTrace trace;
  if (opt.driver == "stagewise") {
    StagewiseConfig config;
    config.params = ps;
    config.stars = star_family_from_string(opt.stars);
    config.star_k = opt.star_k;
    config.fill = make_fill_spec(opt);
    config.exhaustive_limit = opt.max_exhaustive;
    config.audit_limit = opt.max_exhaustive;
    trace = search_stagewise(trimmed, eps, config, counter);
  } else if (opt.driver == "naive") {
    trace = search_naive(trimmed, eps, counter, opt.max_exhaustive);
  } else {
    throw std::invalid_argument("unknown driver: " + opt.driver);
  }

  // trimming only ever removes satisfying assignments, so check the original
  if (trace.outcome == Outcome::Satisfied &&
      (!trace.assignment || !original.evaluate(*trace.assignment))) {
    trace.outcome = Outcome::PromiseViolation;
    trace.detail = "assignment from the trimmed pipeline does not satisfy the input";
    trace.assignment.reset();
  }
  return trace;
}

int cmd_solve(SolveOptions opt) {
  const CnfFormula f = parse_dimacs_file(opt.input);
  if (f.variable_count() < 1) {
    std::cerr << "error: formula has no variables\n";
    return kExitConfig;
  }

  if (opt.driver == "auto") {
    // small-bias mode only under the asserted near-1 promise
    const bool high_eps =
        !opt.eps.empty() &&
        rat_parse(opt.eps) >= Rat(1) - Rat(1, 4 * std::max(1, f.padded().clause_count()));
    opt.driver = high_eps ? "smallbias" : "stagewise";
  }
  if (opt.driver == "stagewise" && opt.mode == "paper") {
    std::cerr << "error: paper-mode star density is below any enumerable family; "
                 "use --mode practical with the stagewise driver\n";
    return kExitConfig;
  }

  if (opt.driver == "prg-enum" || opt.driver == "smallbias") {
    CostCounter cost;
    std::optional<Assignment> found;
    if (opt.driver == "prg-enum") {
      const auto fill = make_fill(f.variable_count(), make_fill_spec(opt), opt.max_exhaustive);
      found = search_prg_enumeration(f, *fill, &cost);
    } else {
      found = search_smallbias_high_eps(f, &cost);
    }
    SearchTrace trace;
    trace.eps = opt.eps.empty() ? Rat(0) : rat_parse(opt.eps);
    trace.outcome = found ? Outcome::Satisfied : Outcome::NotFound;
    trace.assignment = found;
    trace.cost = cost;
    emit_trace(trace, opt);
    if (found) {
      std::cout << found->to_string() << "\n";
      return kExitSatisfied;
    }
    std::cout << "not-found\n";
    return kExitNotFound;
  }

  const auto counter = make_counter(opt);
  SearchTrace trace;
  if (!opt.eps.empty()) {
    trace = run_driver(f, rat_parse(opt.eps), opt, *counter);
  } else {
    trace = search_with_unknown_eps(
        f, [&](const Rat& eps) { return run_driver(f, eps, opt, *counter); },
        rat_parse(opt.eps_floor));
  }
  emit_trace(trace, opt);
  if (trace.outcome == Outcome::Satisfied) {
    std::cout << trace.assignment->to_string() << "\n";
    return kExitSatisfied;
  }
  std::cout << to_string(trace.outcome) << (trace.detail.empty() ? "" : ": " + trace.detail)
            << "\n";
  return trace_exit_code(trace);
}

int cmd_gen(int n, int m, int k, const std::string& eps, uint64_t seed, int count,
            const std::string& out_prefix) {
  const Rat target = rat_parse(eps);
  for (int i = 0; i < count; ++i) {
    const PlantedInstance inst = generate_planted(n, m, k, target, seed + i);
    const std::string base =
        count == 1 ? out_prefix : out_prefix + "_" + std::to_string(i);
    {
      std::ofstream out(base + ".cnf");
      if (!out) throw std::runtime_error("cannot write " + base + ".cnf");
      out << "c planted instance seed=" << inst.seed << "\n";
      write_dimacs(inst.formula, out);
    }
    {
      json j;
      j["n"] = n;
      j["M"] = inst.formula.clause_count();
      j["k"] = k;
      j["seed"] = inst.seed;
      j["witness"] = inst.witness.to_string();
      j["true_bias"] = rat_to_string(inst.true_bias);
      std::ofstream out(base + ".json");
      if (!out) throw std::runtime_error("cannot write " + base + ".json");
      out << j.dump(2) << "\n";
    }
    std::cout << base << ".cnf true_bias=" << rat_to_string(inst.true_bias) << "\n";
  }
  return kExitSatisfied;
}

int cmd_verify(const std::string& suite) {
  std::vector<CheckResult> results;
  if (suite == "core")
    results = verify_core();
  else if (suite == "prg")
    results = verify_prg();
  else if (suite == "restrictions")
    results = verify_restrictions();
  else if (suite == "framework")
    results = verify_framework();
  else if (suite == "params")
    results = verify_params();
  else if (suite == "all")
    results = verify_all();
  else {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return kExitConfig;
  }
  bool all_pass = true;
  for (const CheckResult& r : results) {
    std::cout << (r.pass ? "ok   " : "FAIL ") << r.name << "\n";
    if (!r.pass) {
      all_pass = false;
      std::cout << "     counterexample: " << r.detail << "\n";
    }
  }
  std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << " (" << results.size()
            << " run)\n";
  return all_pass ? 0 : kExitPromise;
}

int cmd_bench(const std::vector<std::string>& files, const std::vector<std::string>& drivers,
              const std::string& eps, const SolveOptions& base_opt, const std::string& out_path) {
  struct Row {
    std::string instance;
    std::string driver;
    uint64_t counter_calls = 0;
    uint64_t candidates = 0;
    size_t stages = 0;
    bool success = false;
    double wall_ms = 0;
  };
  std::vector<Row> rows;
  for (const std::string& file : files) {
    const CnfFormula f = parse_dimacs_file(file);
    for (const std::string& driver : drivers) {
      SolveOptions opt = base_opt;
      opt.driver = driver;
      opt.eps = eps;
      Row row;
      row.instance = file;
      row.driver = driver;
      const auto start = std::chrono::steady_clock::now();
      try {
        if (driver == "prg-enum" || driver == "smallbias") {
          CostCounter cost;
          std::optional<Assignment> found;
          if (driver == "prg-enum") {
            const auto fill =
                make_fill(f.variable_count(), make_fill_spec(opt), opt.max_exhaustive);
            found = search_prg_enumeration(f, *fill, &cost);
          } else {
            found = search_smallbias_high_eps(f, &cost);
          }
          row.success = found.has_value() && f.evaluate(*found);
          row.counter_calls = cost.counter_calls;
          row.candidates = cost.assignments_enumerated;
        } else {
          const auto counter = make_counter(opt);
          const SearchTrace trace = run_driver(f, rat_parse(eps), opt, *counter);
          row.success = trace.outcome == Outcome::Satisfied;
          row.counter_calls = trace.cost.counter_calls;
          row.candidates = trace.cost.candidates_examined;
          row.stages = trace.stages.size();
        }
      } catch (const std::exception& e) {
        row.success = false;  // per-row failure recorded, run continues
      }
      row.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.instance != b.instance ? a.instance < b.instance : a.driver < b.driver;
  });
  std::ostream* out = &std::cout;
  std::ofstream file_out;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) throw std::runtime_error("cannot write " + out_path);
    out = &file_out;
  }
  *out << "instance,driver,counter_calls,candidates,stages,success,wall_time_ms\n";
  for (const Row& r : rows)
    *out << r.instance << "," << r.driver << "," << r.counter_calls << "," << r.candidates << ","
         << r.stages << "," << (r.success ? 1 : 0) << "," << r.wall_ms << "\n";
  return kExitSatisfied;
}

int cmd_params(uint64_t m, uint64_t n, const std::string& eps, double const_c) {
  const ParameterSet ps = compute_parameters(m, n == 0 ? m : n, rat_parse(eps), const_c);
  std::cout << parameter_set_to_json(ps) << "\n";
  const PropositionReport rep = verify_proposition(ps);
  json j;
  j["ineq1"] = rep.ineq1;
  j["ineq1_lhs"] = rep.ineq1_lhs;
  j["ineq1_rhs"] = rep.ineq1_rhs;
  j["ineq2"] = rep.ineq2;
  j["ineq2_lhs"] = rat_to_string(rep.ineq2_lhs);
  j["ineq2_rhs"] = rat_to_string(rep.ineq2_rhs);
  j["eta_power_ok"] = rep.eta_power_ok;
  const CostModelReport cost = cost_model(ps);
  j["r_SL"] = cost.r_sl;
  j["r_PRG"] = cost.r_prg;
  j["log2_T_count"] = cost.log2_t_count;
  j["log2_total"] = cost.log2_total;
  std::cout << j.dump(2) << "\n";
  return kExitSatisfied;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{"deterministic CNF satisfying-assignment search"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "search a DIMACS CNF for a satisfying assignment");
  solve->add_option("input", solve_opt.input, "DIMACS CNF file")->required();
  solve->add_option("--driver", solve_opt.driver,
                    "stagewise | naive | prg-enum | smallbias | auto");
  solve->add_option("--eps", solve_opt.eps, "promised satisfying fraction, e.g. 1/4");
  solve->add_option("--eps-floor", solve_opt.eps_floor, "unknown-eps schedule floor");
  solve->add_option("--mode", solve_opt.mode, "paper | practical");
  solve->add_option("--counter", solve_opt.counter,
                    "exact | adversarial-down | adversarial-up | adversarial-jitter");
  solve->add_option("--counter-delta", solve_opt.counter_delta, "adversarial counter accuracy");
  solve->add_option("--stars", solve_opt.stars, "exhaustive | kwise-select | blockwise");
  solve->add_option("--star-k", solve_opt.star_k, "independence of the kwise-select family");
  solve->add_option("--fill", solve_opt.fill, "uniform | kwise | smallbias");
  solve->add_option("--fill-k", solve_opt.fill_k, "independence of the kwise fill");
  solve->add_option("--fill-delta", solve_opt.fill_delta, "bias of the smallbias fill");
  solve->add_option("--p-log2", solve_opt.p_log2, "star density p = 2^-p_log2");
  solve->add_option("--seed", solve_opt.seed, "seed for all seeded components");
  solve->add_option("--max-exhaustive", solve_opt.max_exhaustive, "exhaustive enumeration limit");
  solve->add_option("--const-C", solve_opt.const_c, "universal constant C");
  solve->add_option("--trace-out", solve_opt.trace_out, "per-stage CSV trace path");
  solve->add_option("--summary-out", solve_opt.summary_out, "summary JSON path");

  int gen_n = 10, gen_m = 8, gen_k = 3, gen_count = 1;
  uint64_t gen_seed = 1;
  std::string gen_eps = "1/4", gen_out = "planted";
  auto* gen = app.add_subcommand("gen", "generate planted instances with exact bias sidecars");
  gen->add_option("--n", gen_n, "variables")->required();
  gen->add_option("--m", gen_m, "clauses")->required();
  gen->add_option("--k", gen_k, "clause width");
  gen->add_option("--target-eps", gen_eps, "minimum true bias");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--count", gen_count, "number of instances");
  gen->add_option("--out", gen_out, "output path prefix");

  std::string verify_suite = "all";
  auto* verify = app.add_subcommand("verify", "run the module invariant suites");
  verify->add_option("suite", verify_suite, "core | prg | restrictions | framework | params | all");

  std::vector<std::string> bench_files;
  std::string bench_drivers = "stagewise,naive,prg-enum";
  std::string bench_eps = "1/4", bench_out;
  SolveOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "instance x driver matrix, CSV output");
  bench->add_option("files", bench_files, "DIMACS CNF files")->required();
  bench->add_option("--drivers", bench_drivers, "comma-separated driver list");
  bench->add_option("--eps", bench_eps, "promised satisfying fraction");
  bench->add_option("--seed", bench_opt.seed, "seed for seeded components");
  bench->add_option("--max-exhaustive", bench_opt.max_exhaustive, "exhaustive limit");
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");

  uint64_t params_m = 0, params_n = 0;
  std::string params_eps = "1/8";
  double params_c = 1.0;
  auto* params = app.add_subcommand("params", "evaluate the parameter calculus and cost model");
  params->add_option("--m", params_m, "clause count M")->required();
  params->add_option("--n", params_n, "variable count n (default M)");
  params->add_option("--eps", params_eps, "satisfying fraction");
  params->add_option("--const-C", params_c, "universal constant C");

  try {
    std::reverse(args.begin(), args.end());  // CLI11 parses back to front
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_opt);
    if (gen->parsed()) return cmd_gen(gen_n, gen_m, gen_k, gen_eps, gen_seed, gen_count, gen_out);
    if (verify->parsed()) return cmd_verify(verify_suite);
    if (bench->parsed()) {
      std::vector<std::string> drivers;
      std::string cur;
      for (char c : bench_drivers + ",") {
        if (c == ',') {
          if (!cur.empty()) drivers.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      return cmd_bench(bench_files, drivers, bench_eps, bench_opt, bench_out);
    }
    if (params->parsed()) return cmd_params(params_m, params_n, params_eps, params_c);
  } catch (const DimacsError& e) {
    std::cerr << "error: malformed DIMACS, " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace dsearch

// Copyright 2026 The rfx Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: classify, explain, convert, negate, stats,
// fixture-gen and solve.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rfx/app/explain_request.h"
#include "rfx/app/stats.h"
#include "rfx/forest.h"
#include "rfx/generators.h"
#include "rfx/io/model_file.h"
#include "rfx/io/text.h"
#include "rfx/optimize/minimal.h"
#include "rfx/sat/dimacs.h"
#include "rfx/sat/external.h"
#include "rfx/sat/maxsat.h"

namespace {

using rfx::Instance;
using rfx::RandomForest;
using rfx::ReasonKind;
using rfx::app::ExplainOutcome;
using rfx::app::ExplainRequest;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNone = 2;
constexpr int kExitTimeout = 3;

// Kind-specific flags, kept as text until the model's feature names are known.
struct RequestFlags {
  std::string order;
  int permutations = 1;
  std::uint64_t seed = rfx::kDefaultSeed;
  std::optional<std::string> delta;
  std::optional<std::string> intelligible;
  std::optional<std::string> strata;
  std::optional<std::string> weights;
  std::optional<std::string> linear;
  std::optional<std::string> notion;
  std::optional<double> timeout;
  bool use_cores = false;
};

void add_request_flags(CLI::App* cmd, RequestFlags& f) {
  cmd->add_option("--order", f.order,
                  "Elimination order, comma-separated features (default: x_n first)");
  cmd->add_option("--permutations", f.permutations,
                  "Majoritary: keep the smallest reason over this many random orders")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Seed for random orders");
  cmd->add_option("--delta", f.delta, "Delta-probable threshold, e.g. 0.9 or 3/4");
  cmd->add_option("--intelligible", f.intelligible,
                  "Comprehensible: comma-separated intelligible features");
  cmd->add_option("--strata", f.strata,
                  "Inclusion-preferred: strata, least salient first, e.g. 'x4;x2,x3;x1'");
  cmd->add_option("--weights", f.weights,
                  "Minimal-weight: 'w1,...,wn' or 'feature:w,...' (default 1)");
  cmd->add_option("--linear", f.linear, "Lime: comma-separated linear weights");
  cmd->add_option("--notion", f.notion,
                  "Oracle for comprehensible/inclusion-preferred: "
                  "single-tree, majority, forest-sat, delta-probable");
  cmd->add_option("--timeout", f.timeout, "Time budget in seconds")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--use-cores", f.use_cores,
                "Sufficient: shrink with unsatisfiable cores between SAT calls");
}

ExplainRequest build_request(const RequestFlags& f, const RandomForest& forest) {
  const auto& names = forest.feature_names();
  const int n = forest.var_count();
  ExplainRequest r;
  r.order = rfx::io::parse_feature_list(f.order, names, n);
  r.permutations = f.permutations;
  r.seed = f.seed;
  if (f.delta) r.delta = rfx::parse_rational(*f.delta);
  if (f.intelligible) {
    r.intelligible = rfx::io::parse_feature_list(*f.intelligible, names, n);
  }
  if (f.strata) r.strata = rfx::io::parse_strata(*f.strata, names, n);
  if (f.weights) r.weights = rfx::io::parse_weights(*f.weights, names, n);
  if (f.linear) r.linear = rfx::io::parse_linear_model(*f.linear);
  if (f.notion) {
    r.notion = rfx::parse_oracle_mode(*f.notion);
    if (!r.notion) throw std::invalid_argument("unknown notion '" + *f.notion + "'");
  }
  r.timeout_seconds = f.timeout;
  r.use_cores = f.use_cores;
  return r;
}

ReasonKind parse_kind(const std::string& name) {
  auto kind = rfx::parse_reason_kind(name);
  if (!kind) throw std::invalid_argument("unknown reason kind '" + name + "'");
  return *kind;
}

void emit_model(const RandomForest& forest, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    rfx::io::write_model(std::cout, forest);
  } else {
    rfx::io::save_model(out_path, forest);
  }
}

std::string status_word(ExplainOutcome::Status s) {
  switch (s) {
    case ExplainOutcome::Status::kOk:
      return "ok";
    case ExplainOutcome::Status::kNone:
      return "none";
    case ExplainOutcome::Status::kTimeout:
      return "timeout";
  }
  return "?";
}

void print_text(const ExplainOutcome& out, const RandomForest& forest,
                ReasonKind kind) {
  std::cout << "kind: " << rfx::to_string(kind) << '\n';
  if (!out.reason) {
    std::cout << "no comprehensible reason\n";
    return;
  }
  const rfx::Reason& r = *out.reason;
  std::cout << "prediction: " << (r.prediction ? 1 : 0) << '\n'
            << "reason: " << rfx::to_string(r.term, forest.feature_names()) << '\n'
            << "size: " << r.size() << '\n';
  if (r.cost) std::cout << "cost: " << *r.cost << '\n';
  if (r.probability) {
    std::cout << "probability: " << rfx::to_string(*r.probability) << " ("
              << rfx::to_double(*r.probability) << ")\n";
  }
  std::cout << "optimal: " << (r.optimal ? "yes" : "no") << '\n'
            << "elapsed_s: " << std::setprecision(6) << r.elapsed.count() << '\n';
  if (out.status == ExplainOutcome::Status::kTimeout) {
    std::cout << "status: timeout, best result so far\n";
  }
  if (r.fallback) std::cout << "fallback: t_x\n";
  for (const auto& note : r.notes) std::cout << "note: " << note << '\n';
}

void print_json(const ExplainOutcome& out, const RandomForest& forest,
                ReasonKind kind) {
  nlohmann::json j;
  j["kind"] = std::string(rfx::to_string(kind));
  j["status"] = status_word(out.status);
  if (out.reason) {
    const rfx::Reason& r = *out.reason;
    std::vector<int> lits;
    for (rfx::Literal l : r.term) lits.push_back(l.to_dimacs());
    j["prediction"] = r.prediction ? 1 : 0;
    j["literals"] = lits;
    j["reason"] = rfx::to_string(r.term, forest.feature_names());
    j["size"] = r.size();
    j["optimal"] = r.optimal;
    j["elapsed_s"] = r.elapsed.count();
    j["fallback"] = r.fallback;
    if (r.cost) j["cost"] = *r.cost;
    if (r.probability) j["probability"] = rfx::to_string(*r.probability);
    j["notes"] = r.notes;
  } else {
    j["reason"] = nullptr;
  }
  nlohmann::json traj = nlohmann::json::array();
  for (const auto& e : out.log) {
    traj.push_back({{"elapsed_s", e.elapsed.count()}, {"cost", e.cost}});
  }
  j["trajectory"] = std::move(traj);
  std::cout << j.dump(2) << '\n';
}

int exit_code(ExplainOutcome::Status s) {
  switch (s) {
    case ExplainOutcome::Status::kOk:
      return kExitOk;
    case ExplainOutcome::Status::kNone:
      return kExitNone;
    case ExplainOutcome::Status::kTimeout:
      return kExitTimeout;
  }
  return kExitError;
}

int run_solve(const std::string& path, bool wcnf, std::optional<double> timeout,
              bool external) {
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
  }
  std::istream& in = path == "-" ? std::cin : file;
  const rfx::Deadline deadline = rfx::Deadline::after_seconds(timeout);
  std::optional<std::string> command;
  if (external) {
    command = rfx::sat::external_solver_from_env();
    if (!command) {
      throw std::runtime_error(std::string("--external needs ") +
                               rfx::sat::kExternalSolverEnv + " to be set");
    }
  }
  auto print_model = [](const std::vector<std::uint8_t>& model) {
    std::cout << 'v';
    for (std::size_t v = 0; v < model.size(); ++v) {
      std::cout << ' ' << (model[v] ? "" : "-") << v + 1;
    }
    std::cout << " 0\n";
  };
  if (!wcnf) {
    const rfx::sat::CnfInstance cnf = rfx::sat::read_dimacs(in);
    const rfx::sat::SolveOutcome out =
        command ? rfx::sat::solve_external(*command, cnf)
                : rfx::sat::solve(cnf, {}, deadline);
    switch (out.status) {
      case rfx::sat::SolveStatus::kSat:
        std::cout << "s SATISFIABLE\n";
        print_model(out.model);
        return kExitOk;
      case rfx::sat::SolveStatus::kUnsat:
        std::cout << "s UNSATISFIABLE\n";
        return kExitOk;
      case rfx::sat::SolveStatus::kTimeout:
        std::cout << "s UNKNOWN\n";
        return 0;
    }
  }
  const rfx::sat::WeightedCnf problem = rfx::sat::read_wcnf(in);
  rfx::sat::MaxSatResult res;
  try {
    res = command ? rfx::sat::maxsat_external(*command, problem)
                  : rfx::sat::maxsat_anytime(problem, deadline,
                                             [](const auto& imp) {
                                               std::cout << "o " << imp.cost << '\n';
                                             });
  } catch (const rfx::sat::HardClausesUnsat&) {
    std::cout << "s UNSATISFIABLE\n";
    return kExitOk;
  }
  switch (res.status) {
    case rfx::sat::MaxSatStatus::kOptimal:
      std::cout << "s OPTIMUM FOUND\n";
      print_model(res.model);
      return kExitOk;
    case rfx::sat::MaxSatStatus::kFeasible:
      std::cout << "s SATISFIABLE\n";
      print_model(res.model);
      return kExitOk;
    case rfx::sat::MaxSatStatus::kNoModel:
      std::cout << "s UNKNOWN\n";
      return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abductive explanations for decision trees and random forests"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  // classify
  std::string model_path, instances_path;
  auto* classify = app.add_subcommand("classify", "Predict a class per instance row");
  classify->add_option("model", model_path, "Model file")->required();
  classify->add_option("instances", instances_path, "Instance CSV")->required();

  // explain
  RequestFlags flags;
  std::string kind_name = "direct";
  std::string instance_text;
  int row = 0;
  bool as_json = false;
  std::string export_wcnf;
  auto* explain = app.add_subcommand("explain", "Explain the prediction for one instance");
  explain->add_option("model", model_path, "Model file")->required();
  explain->add_option("--kind", kind_name,
                      "direct, sufficient, majoritary, minimal-majoritary, "
                      "minimal-weight, minimal-sufficient, approx-minimal, "
                      "delta-probable, comprehensible, inclusion-preferred, lime");
  auto* inst_opt = explain->add_option("--instance", instance_text,
                                       "Instance as '1,0,1' or '101'");
  auto* file_opt = explain->add_option("--instances", instances_path, "Instance CSV");
  explain->add_option("--row", row, "1-based row of --instances (default 1)");
  inst_opt->excludes(file_opt);
  explain->add_flag("--json", as_json, "Machine-readable output");
  explain->add_option("--export-wcnf", export_wcnf,
                      "Minimal kinds: also write the MaxSAT instance as WCNF");
  add_request_flags(explain, flags);

  // convert
  std::string from, input_path, out_path;
  auto* convert = app.add_subcommand("convert", "Build a forest from a DIMACS CNF or DNF");
  convert->add_option("--from", from, "cnf or dnf")
      ->required()
      ->check(CLI::IsMember({"cnf", "dnf"}));
  convert->add_option("input", input_path, "DIMACS file ('p cnf' or 'p dnf')")->required();
  convert->add_option("-o,--out", out_path, "Output model file (default stdout)");

  // negate
  auto* negate = app.add_subcommand("negate", "Forest computing the negated function");
  negate->add_option("model", model_path, "Model file")->required();
  negate->add_option("-o,--out", out_path, "Output model file (default stdout)");

  // stats
  std::string kinds_text, csv_path, trajectory_path;
  int jobs = 1;
  RequestFlags stats_flags;
  auto* stats = app.add_subcommand("stats", "Reason sizes and times over an instance set");
  stats->add_option("model", model_path, "Model file")->required();
  stats->add_option("instances", instances_path, "Instance CSV")->required();
  stats->add_option("--kinds", kinds_text, "Comma-separated reason kinds")->required();
  stats->add_option("--out", csv_path, "CSV output (default stdout)");
  stats->add_option("--trajectory", trajectory_path,
                    "Anytime improvement log (CSV)");
  stats->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_request_flags(stats, stats_flags);

  // fixture-gen
  int parity_n = 0, copies = 1;
  auto* fixture = app.add_subcommand("fixture-gen",
                                     "Parity forest: k copies of T, k of its negation, a 1-leaf");
  fixture->add_option("--parity", parity_n, "Number of features")->required()
      ->check(CLI::Range(1, 20));
  fixture->add_option("--copies", copies, "k")->check(CLI::PositiveNumber);
  fixture->add_option("-o,--out", out_path, "Output model file (default stdout)");

  // solve
  bool wcnf = false, external = false;
  std::optional<double> solve_timeout;
  auto* solve = app.add_subcommand("solve", "Solve a DIMACS CNF or WCNF file");
  solve->add_option("input", input_path, "DIMACS file, or - for stdin")->required();
  solve->add_flag("--wcnf", wcnf, "Input is weighted (p wcnf)");
  solve->add_option("--timeout", solve_timeout, "Time budget in seconds");
  solve->add_flag("--external", external,
                  std::string("Use the solver command in ") +
                      rfx::sat::kExternalSolverEnv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*classify) {
      const RandomForest forest = rfx::io::load_model(model_path);
      const auto table = rfx::io::load_instances(instances_path, forest.var_count());
      for (const Instance& x : table.rows) std::cout << (forest.eval(x) ? 1 : 0) << '\n';
      return kExitOk;
    }
    if (*explain) {
      const RandomForest forest = rfx::io::load_model(model_path);
      Instance x;
      if (!instance_text.empty()) {
        x = rfx::io::parse_instance(instance_text, forest.var_count());
      } else if (!instances_path.empty()) {
        const auto table = rfx::io::load_instances(instances_path, forest.var_count());
        const int index = row == 0 ? 1 : row;
        if (index < 1 || index > static_cast<int>(table.rows.size())) {
          throw std::invalid_argument("--row " + std::to_string(index) +
                                      " outside 1.." +
                                      std::to_string(table.rows.size()));
        }
        x = table.rows[index - 1];
      } else {
        throw std::invalid_argument("give --instance or --instances");
      }
      ExplainRequest request = build_request(flags, forest);
      request.kind = parse_kind(kind_name);
      if (!export_wcnf.empty()) {
        const bool minimal = request.kind == ReasonKind::kMinimalMajoritary ||
                             request.kind == ReasonKind::kMinimalWeight ||
                             request.kind == ReasonKind::kMinimalSufficient;
        if (!minimal) throw std::invalid_argument("--export-wcnf needs a minimal kind");
        rfx::app::check_request(request, forest);
        const RandomForest model = forest.eval(x) ? forest : forest.negated();
        const rfx::WeightMap w = request.weights
                                     ? *request.weights
                                     : rfx::WeightMap::uniform(forest.var_count());
        std::ofstream out(export_wcnf);
        if (!out) throw std::runtime_error("cannot write " + export_wcnf);
        rfx::sat::write_wcnf(out, rfx::build_minimal_reason_wcnf(model, x, w));
      }
      const ExplainOutcome out = rfx::app::run_explain(forest, x, request);
      if (as_json) {
        print_json(out, forest, request.kind);
      } else {
        print_text(out, forest, request.kind);
      }
      return exit_code(out.status);
    }
    if (*convert) {
      std::ifstream in(input_path);
      if (!in) throw std::runtime_error("cannot open " + input_path);
      const rfx::sat::DimacsFile file = rfx::sat::read_dimacs_file(in);
      if (file.format != "cnf" && file.format != "dnf") {
        throw std::invalid_argument("expected 'p cnf' or 'p dnf', found 'p " +
                                    file.format + "'");
      }
      if (file.format != from) {
        throw std::invalid_argument("--from " + from + " but the file declares 'p " +
                                    file.format + "'");
      }
      auto literals = [](const std::vector<int>& list) {
        std::vector<rfx::Literal> lits;
        for (int d : list) lits.push_back(rfx::Literal::from_dimacs(d));
        return lits;
      };
      if (from == "cnf") {
        std::vector<rfx::Clause> clauses;
        for (const auto& list : file.lists) clauses.emplace_back(literals(list));
        emit_model(rfx::cnf_to_forest(clauses, file.var_count), out_path);
      } else {
        std::vector<rfx::Term> terms;
        for (const auto& list : file.lists) terms.emplace_back(literals(list));
        emit_model(rfx::dnf_to_forest(terms, file.var_count), out_path);
      }
      return kExitOk;
    }
    if (*negate) {
      emit_model(rfx::io::load_model(model_path).negated(), out_path);
      return kExitOk;
    }
    if (*stats) {
      const RandomForest forest = rfx::io::load_model(model_path);
      const auto table = rfx::io::load_instances(instances_path, forest.var_count());
      std::vector<ReasonKind> kinds;
      for (const auto& k : rfx::io::split(kinds_text, ',')) {
        if (!k.empty()) kinds.push_back(parse_kind(k));
      }
      if (kinds.empty()) throw std::invalid_argument("--kinds is empty");
      const ExplainRequest base = build_request(stats_flags, forest);
      const auto report = rfx::app::run_stats(forest, table.rows, kinds, base, jobs);
      if (csv_path.empty() || csv_path == "-") {
        rfx::app::write_stats_csv(std::cout, report);
      } else {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot write " + csv_path);
        rfx::app::write_stats_csv(out, report);
      }
      if (!trajectory_path.empty()) {
        std::ofstream out(trajectory_path);
        if (!out) throw std::runtime_error("cannot write " + trajectory_path);
        rfx::app::write_trajectory_csv(out, report);
      }
      return kExitOk;
    }
    if (*fixture) {
      emit_model(rfx::parity_forest(parity_n, copies), out_path);
      return kExitOk;
    }
    if (*solve) {
      return run_solve(input_path, wcnf, solve_timeout, external);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

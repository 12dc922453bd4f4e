// Command-line front end: spectrum | cohomology | anomaly | verma-check.
#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "cecoh/problem_io.hpp"

namespace {

struct Options {
  std::string input;
  std::string output = "text";
  std::string method = "both";
  std::string lambda = "1";
  int degree = 8;
  int order = 6;
  std::optional<double> tol_cluster, tol_rank, tol_obstruction;
  std::optional<long> seed;
};

void apply_flag_overrides(const Options& opt, cecoh::ProblemFile& pf) {
  if (opt.tol_cluster) pf.tolerances.cluster = *opt.tol_cluster;
  if (opt.tol_rank) pf.tolerances.rank = *opt.tol_rank;
  if (opt.tol_obstruction) pf.tolerances.obstruction = *opt.tol_obstruction;
}

void emit(const nlohmann::json& rep, const std::string& output) {
  if (output == "json") {
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << cecoh::render_text(rep);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perturbative anomaly detector for commuting Hermitian pairs"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand

  Options opt;
  app.add_option("--output", opt.output, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--tol-cluster", opt.tol_cluster,
                 "absolute eigenvalue clustering width");
  app.add_option("--tol-rank", opt.tol_rank, "relative rank tolerance");
  app.add_option("--tol-obstruction", opt.tol_obstruction,
                 "relative obstruction tolerance");
  app.add_option("--order", opt.order, "series continuation order")
      ->capture_default_str();
  app.add_option("--seed", opt.seed,
                 "seed echoed into reports (reserved for randomized self-tests)");

  CLI::App* cmd_spectrum =
      app.add_subcommand("spectrum", "joint spectral decomposition");
  cmd_spectrum->add_option("input", opt.input, "problem file (JSON)")->required();

  CLI::App* cmd_cohomology =
      app.add_subcommand("cohomology", "cohomology dimensions of the pair");
  cmd_cohomology->add_option("input", opt.input, "problem file (JSON)")->required();
  cmd_cohomology->add_option("--method", opt.method, "computation route")
      ->check(CLI::IsMember({"theorem", "brute", "both"}))
      ->capture_default_str();

  CLI::App* cmd_anomaly =
      app.add_subcommand("anomaly", "first order, obstruction class, series");
  cmd_anomaly->add_option("input", opt.input, "problem file (JSON)")->required();

  CLI::App* cmd_verma =
      app.add_subcommand("verma-check", "exact sl2 cocycle verification");
  cmd_verma->add_option("--lambda", opt.lambda, "highest weight, P or P/Q")
      ->capture_default_str();
  cmd_verma->add_option("--degree", opt.degree, "truncation degree N")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    nlohmann::json rep;
    if (cmd_verma->parsed()) {
      rep = cecoh::verma_report_json(opt.lambda, opt.degree, opt.seed);
    } else {
      cecoh::ProblemFile pf = cecoh::load_problem(opt.input);
      apply_flag_overrides(opt, pf);
      if (cmd_spectrum->parsed()) {
        rep = cecoh::spectrum_report_json(pf, opt.seed);
      } else if (cmd_cohomology->parsed()) {
        rep = cecoh::cohomology_report_json(pf, opt.method, opt.seed);
      } else if (cmd_anomaly->parsed()) {
        rep = cecoh::anomaly_report_json(pf, opt.order, opt.seed);
      }
    }
    emit(rep, opt.output);
    return 0;
  } catch (const cecoh::InputError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  }
}

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "matrix_io.hpp"
#include "report.hpp"

namespace {

void add_common_flags(CLI::App* sub, riclab::RunConfig& cfg) {
  sub->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
  sub->add_option("--format", cfg.format, "Report format (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--budget", cfg.budget, "Max subsets for exhaustive enumeration (default 5e6)");
  sub->add_option("--tol-eig", cfg.tol_eig, "Eigenvalue check tolerance (default 1e-10)");
  sub->add_option("--tol-ric", cfg.tol_ric, "RIC check tolerance (default 1e-8)");
  sub->add_option("--tol-tie", cfg.tol_tie, "Correlation tie tolerance (default 1e-9)");
}

CLI::Option* add_policy_flag(CLI::App* sub, riclab::RunConfig& cfg) {
  return sub->add_option("--policy", cfg.policy, "Tie-breaking policy")
      ->check(CLI::IsMember({"smallest", "largest", "adversarial"}));
}

}  // namespace

namespace {

int run(int argc, char** argv) {
  riclab::RunConfig cfg;

  CLI::App app{"riclab: exact restricted-isometry constants, OMP tracing, and recovery experiments"};
  app.require_subcommand(1);

  CLI::App* ce = app.add_subcommand(
      "ce", "Build and verify instances of the failure family with delta_{K+1} = t");
  ce->add_option("--K", cfg.sparsity_k, "Sparsity level (>= 2)")
      ->required()
      ->each([&cfg](const std::string&) { cfg.k_set = true; });
  ce->add_option("--t", cfg.t, "Target constant in [1/sqrt(K+1), 1)")
      ->each([&cfg](const std::string&) { cfg.t_set = true; });
  ce->add_option("--t-grid", cfg.t_grid_points, "Verify this many grid points across the t range");
  add_policy_flag(ce, cfg);
  ce->add_option("--export-matrix", cfg.export_matrix_path,
                 "Also write the instance sensing matrix to this file (single --t only)");
  add_common_flags(ce, cfg);

  CLI::App* ric = app.add_subcommand("ric", "Exact restricted isometry constant of a matrix file");
  ric->add_option("--matrix", cfg.matrix_path, "Matrix file")->required();
  ric->add_option("--k", cfg.ric_order, "Constant order (default K+1 when --K is given)");
  ric->add_option("--k-max", cfg.ric_order_max, "Report every order 1..k-max instead");
  ric->add_option("--K", cfg.sparsity_k, "Sparsity level; adds a condition report for delta_{K+1}")
      ->each([&cfg](const std::string&) { cfg.k_set = true; });
  add_common_flags(ric, cfg);

  CLI::App* omp = app.add_subcommand("omp", "Run orthogonal matching pursuit with a full trace");
  omp->add_option("--matrix", cfg.matrix_path, "Matrix file")->required();
  omp->add_option("--vector", cfg.vector_path, "Measurement vector file")->required();
  omp->add_option("--K", cfg.sparsity_k, "Number of iterations / target sparsity")
      ->required()
      ->each([&cfg](const std::string&) { cfg.k_set = true; });
  add_policy_flag(omp, cfg);
  omp->add_flag("--early-stop", cfg.early_stop,
                "Stop once the residual is below 1e-12*||y|| (off by default)");
  add_common_flags(omp, cfg);

  CLI::App* conditions =
      app.add_subcommand("conditions", "Compare a delta_{K+1} value against known thresholds");
  conditions->add_option("--delta", cfg.delta, "Measured delta_{K+1}")
      ->required()
      ->each([&cfg](const std::string&) { cfg.delta_set = true; });
  conditions->add_option("--K", cfg.sparsity_k, "Sparsity level")
      ->required()
      ->each([&cfg](const std::string&) { cfg.k_set = true; });
  add_common_flags(conditions, cfg);

  CLI::App* thm2 = app.add_subcommand(
      "thm2", "Recovery sweep over a seeded matrix ensemble, partitioned by delta_{K+1}");
  thm2->add_option("--K", cfg.sparsity_k, "Sparsity level (default 2)")
      ->each([&cfg](const std::string&) { cfg.k_set = true; });
  thm2->add_option("--m", cfg.rows, "Rows per matrix (default 40)");
  thm2->add_option("--n", cfg.cols, "Columns per matrix (default 12)");
  thm2->add_option("--matrices", cfg.matrices, "Ensemble size (default 50)");
  thm2->add_option("--draws", cfg.draws, "Coefficient draws per support (default 5)")
      ->each([&cfg](const std::string&) { cfg.draws_set = true; });
  thm2->add_option("--seed", cfg.seed, "RNG seed")
      ->required()
      ->each([&cfg](const std::string&) { cfg.seed_set = true; });
  add_policy_flag(thm2, cfg);
  add_common_flags(thm2, cfg);

  CLI::App* gap = app.add_subcommand(
      "gap", "Search the open interval between the sharp threshold and the failure region");
  gap->add_option("--K", cfg.sparsity_k, "Sparsity level (default 2)")
      ->each([&cfg](const std::string&) { cfg.k_set = true; });
  gap->add_option("--trials", cfg.trials, "Candidate matrices to draw (default 200)");
  gap->add_option("--m", cfg.rows, "Rows per candidate (default 8)");
  gap->add_option("--n", cfg.cols, "Columns per candidate (default 10)");
  gap->add_option("--draws", cfg.draws, "Coefficient draws per support (default 3)")
      ->each([&cfg](const std::string&) { cfg.draws_set = true; });
  gap->add_option("--seed", cfg.seed, "RNG seed")
      ->required()
      ->each([&cfg](const std::string&) { cfg.seed_set = true; });
  add_common_flags(gap, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();

  try {
    const riclab::CommandOutcome outcome = riclab::run_command(cfg);
    const std::string text =
        cfg.format == "csv" ? outcome.csv : riclab::render_json(outcome.report);
    if (cfg.out_path.empty())
      std::cout << text;
    else
      riclab::write_file_atomic(cfg.out_path, text);
    return outcome.exit_code;
  } catch (const riclab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return riclab::exit_code_for(e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

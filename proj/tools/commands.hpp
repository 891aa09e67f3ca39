#ifndef RICLAB_TOOLS_COMMANDS_HPP
#define RICLAB_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"
#include "riclab/omp.hpp"
#include "riclab/ric.hpp"

namespace riclab {

// Effective configuration of one command invocation; every field has a
// documented default and is echoed verbatim into the report.
struct RunConfig {
  std::string command;
  int sparsity_k = 0;  // --K
  bool k_set = false;
  double t = 0.0;  // --t
  bool t_set = false;
  int t_grid_points = 0;   // --t-grid
  int ric_order = 0;       // --k
  int ric_order_max = 0;   // --k-max (reports for every order 1..k_max)
  double delta = 0.0;     // --delta (conditions)
  bool delta_set = false;
  std::string policy;  // empty: per-command default
  std::uint64_t seed = 0;
  bool seed_set = false;
  long long budget = kDefaultRicBudget;
  std::string matrix_path;
  std::string vector_path;
  std::string out_path;
  std::string export_matrix_path;
  std::string format = "json";
  double tol_eig = 1e-10;
  double tol_ric = 1e-8;
  double tol_tie = kDefaultTieTol;
  bool early_stop = false;
  int rows = 0;      // --m
  int cols = 0;      // --n
  int matrices = 50;
  int draws = 5;  // per-command default: 5 for thm2, 3 for gap
  bool draws_set = false;
  int trials = 200;
};

struct CommandOutcome {
  OrderedJson report;
  std::string csv;  // populated when format == "csv"
  int exit_code = 0;
};

CommandOutcome cmd_ce(const RunConfig& cfg);
CommandOutcome cmd_ric(const RunConfig& cfg);
CommandOutcome cmd_omp(const RunConfig& cfg);
CommandOutcome cmd_conditions(const RunConfig& cfg);
CommandOutcome cmd_thm2(const RunConfig& cfg);
CommandOutcome cmd_gap(const RunConfig& cfg);

// Dispatch on cfg.command.
CommandOutcome run_command(const RunConfig& cfg);

struct Thm2MatrixResult {
  int index = 0;
  std::string generator;  // "random_normalized" | "near_orthogonal"
  double epsilon = 0.0;   // perturbation magnitude, 0 for the random half
  double delta = 0.0;     // exact delta_{K+1}
  bool satisfied = false;
  long long checks = 0;
  long long failures = 0;
};

struct Thm2Summary {
  double threshold = 0.0;  // 1/(sqrt(K)+1)
  std::vector<Thm2MatrixResult> matrices;
  long long satisfied_count = 0;
  long long satisfied_checks = 0;
  long long satisfied_failures = 0;
  long long unsatisfied_checks = 0;
  long long unsatisfied_failures = 0;
};

// Mixed ensemble sweep behind the thm2 command: half random column-normalized
// matrices, half near-orthogonal ones (perturbation magnitudes cycling
// 0.01/0.05/0.1) so the satisfied partition is never empty at desk scale;
// every matrix is swept over all size-K supports times `draws` coefficient
// draws.
Thm2Summary run_thm2_experiment(int sparsity_k, int rows, int cols, int num_matrices, int draws,
                                std::uint64_t seed, long long budget, TiePolicy::Kind policy);

// 0 verified, 1 verification failure, 2 usage/parse, 3 budget exceeded.
int exit_code_for(const Error& e);

TiePolicy::Kind parse_policy_kind(const std::string& name);

}  // namespace riclab

#endif

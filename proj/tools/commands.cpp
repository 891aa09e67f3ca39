#include "commands.hpp"

#include <chrono>
#include <cmath>

#include "matrix_io.hpp"
#include "riclab/counterexample.hpp"
#include "riclab/ensembles.hpp"
#include "riclab/oracle.hpp"
#include "riclab/rng.hpp"
#include "riclab/subsets.hpp"

namespace riclab {

namespace {

class WallTimer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

OrderedJson base_config(const RunConfig& cfg) {
  OrderedJson j;
  j["format"] = cfg.format;
  j["budget"] = cfg.budget;
  j["tol_eig"] = cfg.tol_eig;
  j["tol_ric"] = cfg.tol_ric;
  j["tol_tie"] = cfg.tol_tie;
  return j;
}

std::string effective_policy(const RunConfig& cfg, const char* fallback) {
  return cfg.policy.empty() ? fallback : cfg.policy;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

void require(bool cond, const std::string& msg) {
  if (!cond) fail(Errc::invalid_argument, msg);
}

}  // namespace

TiePolicy::Kind parse_policy_kind(const std::string& name) {
  if (name == "smallest") return TiePolicy::Kind::kSmallestIndex;
  if (name == "largest") return TiePolicy::Kind::kLargestIndex;
  if (name == "adversarial") return TiePolicy::Kind::kAdversarial;
  fail(Errc::invalid_argument, "unknown policy '" + name + "'");
}

CommandOutcome cmd_ce(const RunConfig& cfg) {
  WallTimer timer;
  require(cfg.k_set, "ce: --K is required");
  require(cfg.t_set || cfg.t_grid_points > 0, "ce: pass --t or --t-grid");
  require(!(cfg.t_set && cfg.t_grid_points > 0), "ce: --t and --t-grid are exclusive");

  const std::string policy_str = effective_policy(cfg, "adversarial");
  const TiePolicy::Kind kind = parse_policy_kind(policy_str);

  std::vector<double> ts =
      cfg.t_grid_points > 0 ? t_grid(cfg.sparsity_k, cfg.t_grid_points)
                            : std::vector<double>{cfg.t};

  WitnessTolerances tol;
  tol.eig = cfg.tol_eig;
  tol.ric = cfg.tol_ric;
  tol.tie = cfg.tol_tie;
  tol.budget = cfg.budget;

  require(cfg.export_matrix_path.empty() || ts.size() == 1,
          "ce: --export-matrix needs a single --t");

  CommandOutcome out;
  OrderedJson grid = OrderedJson::array();
  bool all_passed = true;

  for (double t : ts) {
    const CounterexampleInstance inst = build_instance(cfg.sparsity_k, t);
    TiePolicy policy{kind, {}};
    if (kind == TiePolicy::Kind::kAdversarial) policy.true_support = inst.signal.support;
    OrderedJson wj;
    try {
      wj = json_of(witness_check(inst, policy, tol));
    } catch (const VerificationError& e) {
      wj = json_of(e.report());
      all_passed = false;
    }
    grid.push_back(std::move(wj));
    if (!cfg.export_matrix_path.empty())
      write_matrix_file(cfg.export_matrix_path, inst.sensing);
  }

  OrderedJson config = base_config(cfg);
  config["K"] = cfg.sparsity_k;
  if (cfg.t_set) config["t"] = cfg.t;
  if (cfg.t_grid_points > 0) config["t_grid"] = cfg.t_grid_points;
  config["policy"] = policy_str;
  if (!cfg.export_matrix_path.empty()) config["export_matrix"] = cfg.export_matrix_path;

  OrderedJson results;
  results["all_passed"] = all_passed;
  results["witnesses"] = std::move(grid);

  if (cfg.format == "csv") {
    std::string csv =
        "K,t,shift,policy,eig_max_abs_diff,delta_computed,delta_abs_diff,corr_max_abs_diff,"
        "first_selected,tie_detected,omp_failed,passed\n";
    for (const auto& w : results["witnesses"]) {
      csv += std::to_string(cfg.sparsity_k) + "," + csv_num(w["t"].get<double>()) + "," +
             csv_num(w["shift"].get<double>()) + "," + policy_str + "," +
             csv_num(w["eig_check"]["max_abs_diff"].get<double>()) + "," +
             csv_num(w["ric_check"]["delta_computed"].get<double>()) + "," +
             csv_num(w["ric_check"]["abs_diff"].get<double>()) + "," +
             csv_num(w["correlation_check"]["max_abs_diff"].get<double>()) + "," +
             std::to_string(w["first_selected"].get<int>()) + "," +
             (w["tie_detected"].get<bool>() ? "true" : "false") + "," +
             (w["omp_failed"].get<bool>() ? "true" : "false") + "," +
             (w["passed"].get<bool>() ? "true" : "false") + "\n";
    }
    out.csv = std::move(csv);
  }

  out.report = report_envelope("ce", std::move(config), std::move(results), timer.seconds());
  out.exit_code = all_passed ? 0 : 1;
  return out;
}

CommandOutcome cmd_ric(const RunConfig& cfg) {
  WallTimer timer;
  require(!cfg.matrix_path.empty(), "ric: --matrix is required");
  require(cfg.ric_order > 0 || cfg.ric_order_max > 0 || cfg.k_set,
          "ric: pass --k, --k-max, or --K");
  require(!(cfg.ric_order > 0 && cfg.ric_order_max > 0), "ric: --k and --k-max are exclusive");

  const DenseMatrix a = read_matrix_file(cfg.matrix_path);

  std::vector<int> orders;
  if (cfg.ric_order_max > 0)
    for (int k = 1; k <= cfg.ric_order_max; ++k) orders.push_back(k);
  else
    orders.push_back(cfg.ric_order > 0 ? cfg.ric_order : cfg.sparsity_k + 1);

  std::vector<RicReport> reports;
  reports.reserve(orders.size());
  for (int k : orders) reports.push_back(exact_ric(a, k, cfg.budget));

  OrderedJson results;
  if (cfg.ric_order_max > 0) {
    results["ric_grid"] = OrderedJson::array();
    for (const auto& r : reports) results["ric_grid"].push_back(json_of(r));
  } else {
    results["ric"] = json_of(reports.front());
  }

  std::string csv = "order,delta,lambda_min,lambda_max,witness_subset,subsets_examined\n";
  for (const auto& r : reports)
    csv += std::to_string(r.order) + "," + csv_num(r.delta) + "," + csv_num(r.lambda_min) + "," +
           csv_num(r.lambda_max) + "," + csv_escape(join_ints(r.witness_subset)) + "," +
           std::to_string(r.subsets_examined) + "\n";

  if (cfg.k_set) {
    double delta_k1 = -1.0;
    for (const auto& r : reports)
      if (r.order == cfg.sparsity_k + 1) delta_k1 = r.delta;
    if (delta_k1 < 0.0) delta_k1 = exact_ric(a, cfg.sparsity_k + 1, cfg.budget).delta;
    results["conditions"] = json_of(evaluate_conditions(delta_k1, cfg.sparsity_k));
  }

  OrderedJson config = base_config(cfg);
  config["matrix"] = cfg.matrix_path;
  if (cfg.ric_order_max > 0)
    config["k_max"] = cfg.ric_order_max;
  else
    config["k"] = orders.front();
  if (cfg.k_set) config["K"] = cfg.sparsity_k;

  CommandOutcome out;
  if (cfg.format == "csv") out.csv = std::move(csv);
  out.report = report_envelope("ric", std::move(config), std::move(results), timer.seconds());
  return out;
}

CommandOutcome cmd_omp(const RunConfig& cfg) {
  WallTimer timer;
  require(!cfg.matrix_path.empty(), "omp: --matrix is required");
  require(!cfg.vector_path.empty(), "omp: --vector is required");
  require(cfg.k_set, "omp: --K is required");

  const std::string policy_str = effective_policy(cfg, "smallest");
  const TiePolicy::Kind kind = parse_policy_kind(policy_str);
  require(kind != TiePolicy::Kind::kAdversarial,
          "omp: the adversarial policy needs a known signal; use ce/thm2/gap");

  const DenseMatrix a = read_matrix_file(cfg.matrix_path);
  const Vector y = read_vector_file(cfg.vector_path);
  const OmpTrace trace =
      omp_run(a, y, cfg.sparsity_k, TiePolicy{kind, {}}, cfg.tol_tie, cfg.early_stop);

  OrderedJson config = base_config(cfg);
  config["matrix"] = cfg.matrix_path;
  config["vector"] = cfg.vector_path;
  config["K"] = cfg.sparsity_k;
  config["policy"] = policy_str;
  config["early_stop"] = cfg.early_stop;

  OrderedJson results;
  results["y_norm"] = norm2(y);
  results["final_residual_norm"] =
      trace.iterations.empty() ? norm2(y) : trace.iterations.back().residual_norm;
  results["trace"] = json_of(trace);

  CommandOutcome out;
  if (cfg.format == "csv") {
    std::string csv = "k,selected,tie,residual_norm,support_after\n";
    for (const auto& it : trace.iterations)
      csv += std::to_string(it.k) + "," + std::to_string(it.selected) + "," +
             (it.tie ? "true" : "false") + "," + csv_num(it.residual_norm) + "," +
             csv_escape(join_ints(it.support_after)) + "\n";
    out.csv = std::move(csv);
  }
  out.report = report_envelope("omp", std::move(config), std::move(results), timer.seconds());
  return out;
}

CommandOutcome cmd_conditions(const RunConfig& cfg) {
  WallTimer timer;
  require(cfg.delta_set, "conditions: --delta is required");
  require(cfg.k_set, "conditions: --K is required");

  const ConditionReport report = evaluate_conditions(cfg.delta, cfg.sparsity_k);

  OrderedJson config = base_config(cfg);
  config["delta"] = cfg.delta;
  config["K"] = cfg.sparsity_k;

  OrderedJson results;
  results["conditions"] = json_of(report);

  CommandOutcome out;
  if (cfg.format == "csv") {
    std::string csv = "name,threshold,strict,sense,satisfied\n";
    for (const auto& row : report.rows)
      csv += csv_escape(row.name) + "," + csv_num(row.threshold) + "," +
             (row.strict ? "true" : "false") + "," + (row.geq ? "geq" : "leq") + "," +
             (row.satisfied ? "true" : "false") + "\n";
    out.csv = std::move(csv);
  }
  out.report =
      report_envelope("conditions", std::move(config), std::move(results), timer.seconds());
  return out;
}

Thm2Summary run_thm2_experiment(int sparsity_k, int rows, int cols, int num_matrices, int draws,
                                std::uint64_t seed, long long budget, TiePolicy::Kind policy) {
  require(sparsity_k >= 1, "thm2: K must be >= 1");
  require(cols > sparsity_k, "thm2: n must exceed K");
  require(rows >= sparsity_k + 1, "thm2: m must be at least K+1");
  require(num_matrices >= 0, "thm2: matrix count must be >= 0");
  require(draws >= 1, "thm2: draws must be >= 1");

  const double eps_cycle[3] = {0.01, 0.05, 0.1};

  Thm2Summary summary;
  summary.threshold = 1.0 / (std::sqrt(static_cast<double>(sparsity_k)) + 1.0);

  Rng rng(seed);
  for (int i = 0; i < num_matrices; ++i) {
    Thm2MatrixResult mr;
    mr.index = i;
    DenseMatrix a(1, 1);
    if (i < num_matrices / 2) {
      mr.generator = "random_normalized";
      a = random_column_normalized(rows, cols, rng);
    } else {
      mr.generator = "near_orthogonal";
      mr.epsilon = eps_cycle[(i - num_matrices / 2) % 3];
      a = near_orthogonal(rows, cols, mr.epsilon, rng);
    }
    mr.delta = exact_ric(a, sparsity_k + 1, budget).delta;
    mr.satisfied = mr.delta <= summary.threshold;

    for (SubsetIterator it(cols, sparsity_k); !it.done(); it.advance()) {
      std::vector<int> support;
      for (int c : it.current()) support.push_back(c + 1);
      for (int d = 0; d < draws; ++d) {
        std::vector<double> values;
        values.reserve(support.size());
        for (std::size_t v = 0; v < support.size(); ++v)
          values.push_back(rng.signed_coefficient());
        const SparseSignal x = make_sparse_signal(cols, support, values);
        const RecoveryCheck rc = exact_recovery_check(a, x, sparsity_k, TiePolicy{policy, {}});
        ++mr.checks;
        if (!rc.recovered) ++mr.failures;
      }
    }

    if (mr.satisfied) {
      ++summary.satisfied_count;
      summary.satisfied_checks += mr.checks;
      summary.satisfied_failures += mr.failures;
    } else {
      summary.unsatisfied_checks += mr.checks;
      summary.unsatisfied_failures += mr.failures;
    }
    summary.matrices.push_back(std::move(mr));
  }
  return summary;
}

CommandOutcome cmd_thm2(const RunConfig& cfg) {
  WallTimer timer;
  require(cfg.seed_set, "thm2: --seed is required");

  const int k = cfg.k_set ? cfg.sparsity_k : 2;
  const int m = cfg.rows > 0 ? cfg.rows : 40;
  const int n = cfg.cols > 0 ? cfg.cols : 12;
  const std::string policy_str = effective_policy(cfg, "smallest");
  const TiePolicy::Kind kind = parse_policy_kind(policy_str);
  require(kind != TiePolicy::Kind::kAdversarial, "thm2: use smallest or largest policy");

  const Thm2Summary summary =
      run_thm2_experiment(k, m, n, cfg.matrices, cfg.draws, cfg.seed, cfg.budget, kind);

  OrderedJson config = base_config(cfg);
  config["K"] = k;
  config["m"] = m;
  config["n"] = n;
  config["matrices"] = cfg.matrices;
  config["draws"] = cfg.draws;
  config["seed"] = cfg.seed;
  config["policy"] = policy_str;

  OrderedJson results;
  results["threshold"] = summary.threshold;
  results["satisfied_count"] = summary.satisfied_count;
  results["satisfied_checks"] = summary.satisfied_checks;
  results["satisfied_failures"] = summary.satisfied_failures;
  results["unsatisfied_checks"] = summary.unsatisfied_checks;
  results["unsatisfied_failures"] = summary.unsatisfied_failures;
  results["matrices"] = OrderedJson::array();
  for (const auto& mr : summary.matrices) {
    OrderedJson jm;
    jm["index"] = mr.index;
    jm["generator"] = mr.generator;
    jm["epsilon"] = mr.epsilon;
    jm["delta"] = mr.delta;
    jm["satisfied"] = mr.satisfied;
    jm["checks"] = mr.checks;
    jm["failures"] = mr.failures;
    results["matrices"].push_back(std::move(jm));
  }

  CommandOutcome out;
  if (cfg.format == "csv") {
    std::string csv = "index,generator,epsilon,delta,satisfied,checks,failures\n";
    for (const auto& mr : summary.matrices)
      csv += std::to_string(mr.index) + "," + mr.generator + "," + csv_num(mr.epsilon) + "," +
             csv_num(mr.delta) + "," + (mr.satisfied ? "true" : "false") + "," +
             std::to_string(mr.checks) + "," + std::to_string(mr.failures) + "\n";
    out.csv = std::move(csv);
  }
  out.report = report_envelope("thm2", std::move(config), std::move(results), timer.seconds());
  out.exit_code = summary.satisfied_failures == 0 ? 0 : 1;
  return out;
}

CommandOutcome cmd_gap(const RunConfig& cfg) {
  WallTimer timer;
  require(cfg.seed_set, "gap: --seed is required");

  GapSearchParams params;
  params.sparsity_k = cfg.k_set ? cfg.sparsity_k : 2;
  params.trials = cfg.trials;
  params.seed = cfg.seed;
  params.rows = cfg.rows > 0 ? cfg.rows : 8;
  params.cols = cfg.cols > 0 ? cfg.cols : 10;
  params.draws_per_support = cfg.draws_set ? cfg.draws : 3;
  params.budget = cfg.budget;

  const std::vector<GapFinding> findings = gap_search(params);

  OrderedJson config = base_config(cfg);
  config["K"] = params.sparsity_k;
  config["trials"] = params.trials;
  config["seed"] = params.seed;
  config["m"] = params.rows;
  config["n"] = params.cols;
  config["draws"] = params.draws_per_support;

  OrderedJson results;
  results["gap_lo"] = 1.0 / (std::sqrt(static_cast<double>(params.sparsity_k)) + 1.0);
  results["gap_hi"] = 1.0 / std::sqrt(static_cast<double>(params.sparsity_k) + 1.0);
  results["findings_count"] = findings.size();
  results["failures_found"] = 0;
  int failures = 0;
  results["findings"] = OrderedJson::array();
  for (const auto& f : findings) {
    if (f.failure_found) ++failures;
    results["findings"].push_back(json_of(f));
  }
  results["failures_found"] = failures;

  CommandOutcome out;
  if (cfg.format == "csv") {
    std::string csv = "trial,generator,digest,delta,signals_checked,failure_found,failing_policy\n";
    for (const auto& f : findings)
      csv += std::to_string(f.trial) + "," + f.generator + "," + f.digest + "," +
             csv_num(f.delta) + "," + std::to_string(f.signals_checked) + "," +
             (f.failure_found ? "true" : "false") + "," + f.failing_policy + "\n";
    out.csv = std::move(csv);
  }
  out.report = report_envelope("gap", std::move(config), std::move(results), timer.seconds());
  return out;
}

CommandOutcome run_command(const RunConfig& cfg) {
  if (cfg.command == "ce") return cmd_ce(cfg);
  if (cfg.command == "ric") return cmd_ric(cfg);
  if (cfg.command == "omp") return cmd_omp(cfg);
  if (cfg.command == "conditions") return cmd_conditions(cfg);
  if (cfg.command == "thm2") return cmd_thm2(cfg);
  if (cfg.command == "gap") return cmd_gap(cfg);
  fail(Errc::invalid_argument, "unknown command '" + cfg.command + "'");
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::budget_exceeded:
      return 3;
    case Errc::parse_error:
    case Errc::t_out_of_range:
    case Errc::k_too_small:
    case Errc::invalid_argument:
    case Errc::index_out_of_range:
    case Errc::dimension_mismatch:
    case Errc::delta_too_large:
      return 2;
    default:
      return 1;
  }
}

}  // namespace riclab

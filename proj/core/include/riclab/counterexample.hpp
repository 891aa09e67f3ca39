#ifndef RICLAB_COUNTEREXAMPLE_HPP
#define RICLAB_COUNTEREXAMPLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "riclab/dense.hpp"
#include "riclab/errors.hpp"
#include "riclab/omp.hpp"
#include "riclab/ric.hpp"
#include "riclab/signal.hpp"

namespace riclab {

// Family of OMP failure instances: for K >= 2 and any target constant
// t in [1/sqrt(K+1), 1) there is an upper-triangular sensing matrix A with
// delta_{K+1}(A) = t and a K-sparse all-ones signal whose off-support
// correlation strictly dominates (ties exactly at the left endpoint).
struct CounterexampleInstance {
  int sparsity_k = 0;      // K
  double target_delta = 0.0;  // t
  double shift = 0.0;         // t - 1/sqrt(K+1)
  DenseMatrix base_gram;      // (K+1)x(K+1): diagonal block K/(K+1) I_K,
                              // border 1/(K+1), corner (K+2)/(K+1)
  DenseMatrix shifted_gram;   // base_gram - shift * I
  DenseMatrix sensing;        // upper triangular, sensing^T sensing = shifted_gram
  SparseSignal signal;        // ones on {1, ..., K}, length K+1
  std::vector<double> predicted_eigs;        // ascending closed forms
  double predicted_on_support_corr = 0.0;    // K/(K+1) - shift
  double predicted_off_support_corr = 0.0;   // K/(K+1)
};

DenseMatrix build_base_gram(int sparsity_k);

// Ascending eigenvalues of the shifted Gram matrix in closed form:
// 1 - t, then K/(K+1) - shift with multiplicity K-1, then
// 1 + 1/sqrt(K+1) - shift.
std::vector<double> closed_form_eigs(int sparsity_k, double t);

CounterexampleInstance build_instance(int sparsity_k, double t);

struct WitnessTolerances {
  double eig = 1e-10;
  double ric = 1e-8;
  double corr = 1e-10;
  double tie = kDefaultTieTol;
  long long budget = kDefaultRicBudget;
};

struct WitnessReport {
  int sparsity_k = 0;
  double target_delta = 0.0;
  double shift = 0.0;
  std::vector<double> predicted_eigs;
  std::vector<double> computed_eigs;
  double eig_max_abs_diff = 0.0;
  double delta_computed = 0.0;
  double delta_abs_diff = 0.0;
  Vector first_correlations;
  double predicted_on_support_corr = 0.0;
  double predicted_off_support_corr = 0.0;
  double corr_max_abs_diff = 0.0;
  int first_selected = 0;  // 1-based
  bool tie_detected = false;
  bool omp_failed = false;
  std::string policy_used;
  bool boundary_tie_case = false;  // shift <= tie tolerance: failure needs the
                                   // adversarial resolution, recorded as such
  std::vector<std::string> failed_clauses;
};

class VerificationError : public Error {
 public:
  VerificationError(const std::string& msg, WitnessReport report)
      : Error(Errc::verification_failed, msg), report_(std::move(report)) {}
  const WitnessReport& report() const { return report_; }

 private:
  WitnessReport report_;
};

// Verifies every quantitative claim about an instance: computed eigenvalues
// match the closed forms, exact delta_{K+1} equals t, first-iteration
// correlations match (K/(K+1) - shift on support, K/(K+1) off), and OMP
// fails to recover. Off the boundary the failure must occur under any
// policy; at the boundary (shift within tie tolerance) it is required only
// under the adversarial policy and the tie must be flagged. Throws
// VerificationError naming the violated clauses.
WitnessReport witness_check(const CounterexampleInstance& inst, const TiePolicy& policy,
                            const WitnessTolerances& tol = {});

// The canonical verification grid over t: left endpoint plus nine interior
// points; t = 1 is excluded (the shifted Gram becomes singular).
std::vector<double> t_grid(int sparsity_k, int points = 10);

struct GapFinding {
  int trial = 0;
  std::string generator;  // "random" | "structured"
  std::string digest;
  double delta = 0.0;
  DenseMatrix matrix;
  long long signals_checked = 0;
  bool failure_found = false;
  SparseSignal failing_signal;  // empty support when no failure was found
  std::string failing_policy;
};

struct GapSearchParams {
  int sparsity_k = 2;
  int trials = 0;
  std::uint64_t seed = 0;
  int rows = 8;
  int cols = 10;
  int draws_per_support = 3;
  long long budget = kDefaultRicBudget;
};

// Searches the open interval (1/(sqrt(K)+1), 1/sqrt(K+1)) where recovery is
// neither guaranteed nor refuted: seeded candidate matrices (random
// column-normalized ones interleaved with structured frames that reproduce
// the boundary construction's identity-plus-border Gram shape at a weakened
// border strength), exact delta_{K+1} filtering, then an exhaustive K-sparse
// recovery sweep under the smallest- and largest-index policies. Findings
// are ordered by trial.
std::vector<GapFinding> gap_search(const GapSearchParams& params);

}  // namespace riclab

#endif

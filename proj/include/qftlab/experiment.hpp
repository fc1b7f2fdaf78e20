#pragma once

// Monte Carlo harness for the query-complexity separation: per (order, budget)
// cell it draws (psi, pi) uniformly, runs the classical collision solver on
// every trial and the quantum solver on a configurable sample of trials,
// then checks the empirical collision rate against the m^2/(2n - m^2) bound
// and every collision-determined answer against the audited psi(1).

#include <cstdint>
#include <string>
#include <vector>

#include "qftlab/common.hpp"

namespace qftlab {

struct SeparationConfig {
  std::vector<std::uint64_t> orders;   // prime orders
  std::vector<std::uint64_t> budgets;  // empty = 1..ceil(sqrt(2n)) per order
  std::uint64_t trials = 10000;
  /// Quantum runs per cell. The quantum answer is exact, so its column carries
  /// no statistics; a sample per cell keeps large-order runs inside budget.
  std::uint64_t quantum_trials = 200;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  bool audit = false;
};

struct ExperimentCell {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t trials = 0;
  double collision_rate = 0.0;
  double standard_error = 0.0;   // sqrt(p(1-p)/trials)
  double paper_bound = 0.0;      // min(1, m^2/(2n - m^2))
  std::uint64_t threshold = 0;   // ceil(sqrt(2n/3))
  double quantum_queries = 0.0;  // mean over quantum trials; must be exactly 1
  double quantum_correct_rate = 0.0;
  std::uint64_t seed = 0;

  // Report-only extras (not part of the CSV contract).
  double guess_success = 0.0;  // 1/(n - m(m-1)/2): residual guessing chance
  std::uint64_t quantum_trials = 0;
  std::uint64_t soundness_violations = 0;  // determined answers != audited psi(1)
  bool bound_ok = true;                    // rate <= bound + 3*stderr
};

struct AuditRecord {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t trial = 0;
  std::uint64_t trial_seed = 0;
  bool determined = false;
  std::uint64_t answer = 0;  // meaningful when determined
  std::uint64_t truth = 0;   // audited psi(1)
  std::uint64_t queries = 0;
};

struct SeparationReport {
  std::vector<ExperimentCell> cells;
  std::vector<AuditRecord> audits;  // populated when config.audit

  bool all_pass() const;  // bounds hold, soundness exact, quantum exact
};

/// Orders must be prime (refused otherwise: the solver needs invertible
/// differences). Fully deterministic for a fixed config.
SeparationReport run_separation_experiment(const SeparationConfig& config);

/// CSV per the external contract:
/// n,m,trials,collision_rate,stderr,paper_bound,threshold,quantum_queries,
/// quantum_correct_rate,seed
std::string to_csv(const SeparationReport& report);

/// JSON with the CSV fields plus the report-only extras and audit records.
std::string to_json_string(const SeparationReport& report);

/// 1-based first-collision query index per trial (0 = none within max_queries)
/// for the birthday-scaling witness.
std::vector<std::uint64_t> first_collision_counts(std::uint64_t order, std::size_t trials,
                                                  std::uint64_t max_queries, std::uint64_t seed);

/// Median treating "no collision" as +infinity.
double median_first_collision(std::vector<std::uint64_t> counts);

std::string format_g17(double v);

}  // namespace qftlab

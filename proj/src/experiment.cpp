#include "qftlab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "qftlab/black_box.hpp"
#include "qftlab/field.hpp"
#include "qftlab/operators.hpp"
#include "qftlab/solvers.hpp"

namespace qftlab {
namespace {

struct TrialOutcome {
  bool determined = false;
  bool sound = true;
  std::uint64_t answer = 0;
  std::uint64_t truth = 0;
  std::uint64_t queries = 0;
  std::uint64_t trial_seed = 0;
  bool quantum_run = false;
  bool quantum_correct = false;
  std::uint64_t quantum_queries = 0;
};

std::vector<std::uint64_t> default_budgets(std::uint64_t n) {
  std::uint64_t top = 1;
  while (top * top < 2 * n) ++top;  // ceil(sqrt(2n))
  std::vector<std::uint64_t> budgets;
  for (std::uint64_t m = 1; m <= top; ++m) budgets.push_back(m);
  return budgets;
}

}  // namespace

bool SeparationReport::all_pass() const {
  for (const ExperimentCell& cell : cells) {
    if (!cell.bound_ok || cell.soundness_violations != 0) return false;
    if (cell.quantum_trials > 0 &&
        (cell.quantum_correct_rate != 1.0 || cell.quantum_queries != 1.0)) {
      return false;
    }
  }
  return !cells.empty();
}

SeparationReport run_separation_experiment(const SeparationConfig& config) {
  if (config.orders.empty()) throw StructuralError("experiment needs at least one order");
  if (config.trials == 0) throw StructuralError("experiment needs at least one trial");
  for (std::uint64_t n : config.orders) {
    if (!is_prime(n)) {
      throw PreconditionError("order " + std::to_string(n) +
                              " is not prime; the collision analysis needs Z_p");
    }
  }

  SeparationReport report;
  std::uint64_t cell_id = 0;
  for (std::uint64_t n : config.orders) {
    const GroupSpec g({n});
    const CharacterBasis basis = product_basis(g);
    const OperatorHandle f = qft(basis);
    const OperatorHandle fdag = f.adjoint();
    const GroupElement a = element_of(g, 1);  // generator of Z_p

    const std::vector<std::uint64_t> budgets =
        config.budgets.empty() ? default_budgets(n) : config.budgets;
    for (std::uint64_t m : budgets) {
      const std::uint64_t quantum_trials =
          std::min<std::uint64_t>(config.trials, config.quantum_trials);
      std::vector<TrialOutcome> outcomes(config.trials);
      parallel_for(config.trials, config.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
          TrialOutcome& out = outcomes[t];
          out.trial_seed = derive_seed(config.seed, cell_id, t);
          BlackBox classical_box = BlackBox::random(g, out.trial_seed);
          out.truth = BlackBoxAudit::hidden_psi_index(classical_box, 1);

          std::mt19937_64 solver_rng(splitmix64(out.trial_seed ^ 0xC1A551CA1ULL));
          const ClassicalSolveResult solved =
              solve_classical_collision(classical_box, m, solver_rng);
          out.queries = solved.queries;
          if (solved.psi_one) {
            out.determined = true;
            out.answer = index_of(g, *solved.psi_one);
            out.sound = out.answer == out.truth;
          }

          if (t < quantum_trials) {
            // Fresh box with the same hidden pair so query accounting stays clean.
            BlackBox quantum_box(BlackBoxAudit::hidden_psi(classical_box),
                                 BlackBoxAudit::hidden_pi(classical_box), out.trial_seed);
            const QuantumSolveResult q = solve_quantum(quantum_box, f, fdag, a);
            out.quantum_run = true;
            out.quantum_queries = q.queries;
            out.quantum_correct = index_of(g, q.value) == out.truth;
          }
        }
      });

      ExperimentCell cell;
      cell.n = n;
      cell.m = m;
      cell.trials = config.trials;
      cell.seed = config.seed;
      cell.threshold = lower_bound_threshold(n);
      cell.paper_bound = collision_bound(n, m);
      const double half_pairs = static_cast<double>(m) * (static_cast<double>(m) - 1.0) / 2.0;
      cell.guess_success =
          half_pairs >= static_cast<double>(n) ? 1.0 : 1.0 / (static_cast<double>(n) - half_pairs);

      std::uint64_t determined = 0;
      std::uint64_t q_run = 0, q_correct = 0, q_queries = 0;
      for (const TrialOutcome& out : outcomes) {
        if (out.determined) {
          ++determined;
          if (!out.sound) ++cell.soundness_violations;
        }
        if (out.quantum_run) {
          ++q_run;
          q_queries += out.quantum_queries;
          if (out.quantum_correct) ++q_correct;
        }
      }
      cell.collision_rate = static_cast<double>(determined) / static_cast<double>(config.trials);
      cell.standard_error = std::sqrt(cell.collision_rate * (1.0 - cell.collision_rate) /
                                      static_cast<double>(config.trials));
      cell.quantum_trials = q_run;
      if (q_run > 0) {
        cell.quantum_queries = static_cast<double>(q_queries) / static_cast<double>(q_run);
        cell.quantum_correct_rate = static_cast<double>(q_correct) / static_cast<double>(q_run);
      }
      cell.bound_ok = cell.collision_rate <= cell.paper_bound + 3.0 * cell.standard_error;
      report.cells.push_back(cell);

      if (config.audit) {
        for (std::size_t t = 0; t < outcomes.size(); ++t) {
          const TrialOutcome& out = outcomes[t];
          report.audits.push_back({n, m, t, out.trial_seed, out.determined, out.answer, out.truth,
                                   out.queries});
        }
      }
      ++cell_id;
    }
  }
  return report;
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const SeparationReport& report) {
  std::ostringstream out;
  out << "n,m,trials,collision_rate,stderr,paper_bound,threshold,quantum_queries,"
         "quantum_correct_rate,seed\n";
  for (const ExperimentCell& c : report.cells) {
    out << c.n << ',' << c.m << ',' << c.trials << ',' << format_g17(c.collision_rate) << ','
        << format_g17(c.standard_error) << ',' << format_g17(c.paper_bound) << ',' << c.threshold
        << ',' << format_g17(c.quantum_queries) << ',' << format_g17(c.quantum_correct_rate)
        << ',' << c.seed << '\n';
  }
  return out.str();
}

std::string to_json_string(const SeparationReport& report) {
  std::ostringstream out;
  out << "{\n  \"cells\": [";
  for (std::size_t i = 0; i < report.cells.size(); ++i) {
    const ExperimentCell& c = report.cells[i];
    out << (i ? ",\n    {" : "\n    {");
    out << "\"n\": " << c.n << ", \"m\": " << c.m << ", \"trials\": " << c.trials
        << ", \"collision_rate\": " << format_g17(c.collision_rate)
        << ", \"stderr\": " << format_g17(c.standard_error)
        << ", \"paper_bound\": " << format_g17(c.paper_bound)
        << ", \"threshold\": " << c.threshold
        << ", \"quantum_queries\": " << format_g17(c.quantum_queries)
        << ", \"quantum_correct_rate\": " << format_g17(c.quantum_correct_rate)
        << ", \"seed\": " << c.seed << ", \"guess_success\": " << format_g17(c.guess_success)
        << ", \"quantum_trials\": " << c.quantum_trials
        << ", \"soundness_violations\": " << c.soundness_violations
        << ", \"bound_ok\": " << (c.bound_ok ? "true" : "false") << "}";
  }
  out << "\n  ]";
  if (!report.audits.empty()) {
    out << ",\n  \"audit\": [";
    for (std::size_t i = 0; i < report.audits.size(); ++i) {
      const AuditRecord& a = report.audits[i];
      out << (i ? ",\n    {" : "\n    {");
      out << "\"n\": " << a.n << ", \"m\": " << a.m << ", \"trial\": " << a.trial
          << ", \"trial_seed\": " << a.trial_seed
          << ", \"determined\": " << (a.determined ? "true" : "false")
          << ", \"answer\": " << a.answer << ", \"truth\": " << a.truth
          << ", \"queries\": " << a.queries << "}";
    }
    out << "\n  ]";
  }
  out << "\n}\n";
  return out.str();
}

std::vector<std::uint64_t> first_collision_counts(std::uint64_t order, std::size_t trials,
                                                  std::uint64_t max_queries, std::uint64_t seed) {
  if (!is_prime(order)) {
    throw PreconditionError("first-collision scan needs a prime order");
  }
  const GroupSpec g({order});
  std::vector<std::uint64_t> counts(trials, 0);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, 0xF1257C0ULL, t);
    BlackBox box = BlackBox::random(g, trial_seed);
    std::mt19937_64 solver_rng(splitmix64(trial_seed ^ 0xC1A551CA1ULL));
    const ClassicalSolveResult solved = solve_classical_collision(box, max_queries, solver_rng);
    counts[t] = solved.first_collision;
  }
  return counts;
}

double median_first_collision(std::vector<std::uint64_t> counts) {
  if (counts.empty()) throw StructuralError("median of empty sample");
  for (std::uint64_t& c : counts) {
    if (c == 0) c = std::numeric_limits<std::uint64_t>::max();  // never collided
  }
  std::sort(counts.begin(), counts.end());
  const std::size_t mid = counts.size() / 2;
  if (counts.size() % 2 == 1) return static_cast<double>(counts[mid]);
  return 0.5 * (static_cast<double>(counts[mid - 1]) + static_cast<double>(counts[mid]));
}

}  // namespace qftlab

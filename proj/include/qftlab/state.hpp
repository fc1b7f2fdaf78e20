#pragma once

// State vectors over CG (one register) and CG (x) CG (two registers).
// Two-register amplitudes are indexed by index(x)*n + index(y): register 1
// is the high (slow) index, which fixes every matrix layout downstream.

#include <cstdint>
#include <vector>

#include "qftlab/common.hpp"

namespace qftlab {

struct StateVector {
  std::size_t register_dim = 0;  // n
  int registers = 1;             // 1 or 2
  std::vector<Cplx> amps;        // size n or n^2

  static StateVector basis1(std::size_t n, std::uint64_t index);
  static StateVector basis2(std::size_t n, std::uint64_t first, std::uint64_t second);
  static StateVector zero1(std::size_t n);
  static StateVector zero2(std::size_t n);

  /// Two-register product state u (x) v.
  static StateVector product(const StateVector& u, const StateVector& v);

  std::size_t dim() const { return amps.size(); }
  double norm() const;  // sqrt(sum |amp|^2)
};

/// Marginal distribution of one register (1 or 2) by summing |amp|^2 over the
/// other. Throws IntegrityError if the state norm has drifted beyond 1e-9.
std::vector<double> register_distribution(const StateVector& state, int reg);

struct DeterministicOutcome {
  bool deterministic = false;
  std::uint64_t outcome = 0;
  double probability = 0.0;
};

/// Outcome whose probability is >= threshold (default 1 - 1e-9), if any.
DeterministicOutcome deterministic_outcome(const StateVector& state, int reg,
                                           double threshold = 1.0 - 1e-9);

/// Seeded draw from the register's marginal distribution.
std::uint64_t sample_register(const StateVector& state, int reg, std::mt19937_64& rng);

}  // namespace qftlab

#pragma once

// Solvers for the hidden homomorphism problem: the exact one-query quantum
// procedure (prepare |0>|a>, conjugate the query by F (x) F^dag, measure
// register 1) and the classical collision strategy whose success probability
// the Omega(sqrt(|G|)) lower bound caps.

#include <cstdint>
#include <optional>

#include "qftlab/black_box.hpp"
#include "qftlab/character.hpp"
#include "qftlab/common.hpp"
#include "qftlab/state.hpp"

namespace qftlab {

struct QuantumSolveResult {
  GroupElement value;        // psi(a)
  double probability = 0.0;  // measured register-1 probability (>= 1 - 1e-9)
  std::uint64_t queries = 0;
  StateVector final_state;   // |psi(a)> (x) (F U_pi F^dag)|a>; kept for audits
};

/// Theorem-3 procedure: |0>|a> -> (F (x) F^dag) -> one query -> (F^dag (x) F)
/// -> deterministic measurement of register 1 yields psi(a). Throws
/// IntegrityError if the outcome is not deterministic (bug or incompatible psi).
QuantumSolveResult solve_quantum(BlackBox& box, const CharacterBasis& basis,
                                 const GroupElement& a, std::size_t cap = kDefaultDenseCap);

/// Same procedure with a prebuilt transform pair, for harnesses that run many
/// trials over one group.
QuantumSolveResult solve_quantum(BlackBox& box, const OperatorHandle& f,
                                 const OperatorHandle& fdag, const GroupElement& a);

struct ClassicalSolveResult {
  std::optional<GroupElement> psi_one;    // psi(1) when a collision pinned it down
  std::uint64_t queries = 0;              // queries actually issued
  std::uint64_t first_collision = 0;      // 1-based query index of the collision, 0 if none
};

/// Collision strategy on a prime-order cyclic group: issues up to budget
/// distinct queries (x_i = i, y_i uniform from rng), watches the permuted
/// outputs for a repeat, and solves psi(1) = (y_i - y_j) (x_j - x_i)^{-1}.
/// Throws PreconditionError for non-prime orders (the inverse may not exist).
ClassicalSolveResult solve_classical_collision(BlackBox& box, std::uint64_t budget,
                                               std::mt19937_64& rng);

/// ceil(sqrt(2n/3)): the query count the Theorem-4 bound forces before the
/// collision probability can reach 1/2. Integer-exact.
std::uint64_t lower_bound_threshold(std::uint64_t n);

/// min(1, m^2 / (2n - m^2)) for m^2 < 2n; 1 outside the bound's valid regime,
/// since it caps a probability.
double collision_bound(std::uint64_t n, std::uint64_t m);

}  // namespace qftlab

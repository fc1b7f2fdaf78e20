#pragma once

// The hidden homomorphism black box B_psi(x, y) = (x, pi(y + psi(x))) with a
// hidden permutation pi and hidden compatible psi. Both the classical query
// and the two-register quantum query U_{pi,psi} = (I (x) U_pi) A_psi count as
// exactly one query. Hidden parameters are reachable only through
// BlackBoxAudit, which test and audit code use to check answers.

#include <cstdint>
#include <utility>
#include <vector>

#include "qftlab/common.hpp"
#include "qftlab/group.hpp"
#include "qftlab/homomorphism.hpp"
#include "qftlab/operators.hpp"
#include "qftlab/state.hpp"

namespace qftlab {

class BlackBox {
 public:
  BlackBox(Homomorphism psi, std::vector<std::uint64_t> pi, std::uint64_t seed = 0);

  /// Draws psi = psi_s with s uniform over G and pi by Fisher-Yates shuffle,
  /// all randomness derived from the seed.
  static BlackBox random(const GroupSpec& g, std::uint64_t seed);

  const GroupSpec& group() const { return spec_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t query_count() const { return queries_; }

  /// (x, y) -> (x, pi(y + psi(x))); one query.
  std::pair<GroupElement, GroupElement> classical_query(const GroupElement& x,
                                                        const GroupElement& y);

  /// Same map on indices; one query.
  std::pair<std::uint64_t, std::uint64_t> classical_query_index(std::uint64_t x, std::uint64_t y);

  /// Applies U_{pi,psi} = (I (x) U_pi) A_psi to a two-register state; one query.
  void quantum_query(StateVector& state);

  /// The query unitary as an operator handle (does not count queries).
  OperatorHandle query_unitary() const;

 private:
  GroupSpec spec_;
  Homomorphism psi_;
  std::vector<std::uint64_t> pi_;
  std::vector<std::uint64_t> psi_table_;
  std::uint64_t seed_ = 0;
  std::uint64_t queries_ = 0;

  friend struct BlackBoxAudit;
};

/// Privileged access for tests and audit reports only; solver code must not
/// touch these.
struct BlackBoxAudit {
  static const Homomorphism& hidden_psi(const BlackBox& box) { return box.psi_; }
  static const std::vector<std::uint64_t>& hidden_pi(const BlackBox& box) { return box.pi_; }
  static std::uint64_t hidden_psi_index(const BlackBox& box, std::uint64_t x) {
    return box.psi_table_[x];
  }
};

}  // namespace qftlab

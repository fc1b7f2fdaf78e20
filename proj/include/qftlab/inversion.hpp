#pragma once

// Machine checks of the control/target inversion identities
//   (F^dag (x) F) A_psi (F (x) F^dag) = B_psi          (single homomorphism)
//   (F^dag (x) F) A_psi (F (x) F^dag) = B_phi          (compatible pair)
// as exact operator comparisons in the max-entry norm. The product is swept
// column by column, so memory stays O(n^2) while the comparison covers every
// entry of the n^2 x n^2 operators.

#include "qftlab/character.hpp"
#include "qftlab/common.hpp"
#include "qftlab/homomorphism.hpp"

namespace qftlab {

struct InversionOptions {
  double tolerance = kDefaultTolerance;
  unsigned workers = 0;  // 0 = hardware concurrency
  std::size_t dense_cap = kDefaultDenseCap;
  bool check_preconditions = true;
};

/// Max-entry norm of (F^dag (x) F) A_psi (F (x) F^dag) - B_psi.
/// Throws PreconditionError if psi fails check_compatibility first; an
/// incompatible homomorphism is a misuse, not an identity failure.
double verify_inversion(const CharacterBasis& basis, const Homomorphism& psi,
                        const InversionOptions& opts = {});

/// Same with B_phi on the right-hand side; (psi, phi) must pass
/// check_pair_compatibility.
double verify_inversion_pair(const CharacterBasis& basis, const Homomorphism& psi,
                             const Homomorphism& phi, const InversionOptions& opts = {});

}  // namespace qftlab

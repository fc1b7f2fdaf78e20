#pragma once

// Unitaries on CG and CG (x) CG. The QFT F_G and verification products are
// dense matrices (capped); P_x, A_psi, B_psi and U_pi are phase-decorated
// index permutations, exact and O(n^2) storage at two registers. Composite
// handles represent ordered products without multiplying anything out.

#include <cstdint>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qftlab/character.hpp"
#include "qftlab/common.hpp"
#include "qftlab/group.hpp"
#include "qftlab/homomorphism.hpp"
#include "qftlab/state.hpp"

namespace qftlab {

using CMatrix = Eigen::MatrixXcd;

class OperatorHandle {
 public:
  enum class Form { Dense, IndexMap, Composite };

  static OperatorHandle dense(CMatrix m);

  /// |i> -> phases[i] * |targets[i]>; targets must be a bijection. Empty
  /// phases mean all ones.
  static OperatorHandle index_map(std::vector<std::uint64_t> targets,
                                  std::vector<Cplx> phases = {});

  /// Ordered product factors[0] * factors[1] * ...; applied right to left.
  static OperatorHandle composite(std::vector<OperatorHandle> factors);

  Form form() const;
  std::size_t dim() const;

  StateVector apply(const StateVector& state) const;
  void apply_in_place(StateVector& state) const;

  OperatorHandle adjoint() const;

  /// Materializes the matrix; refuses dimensions above the cap.
  CMatrix to_dense(std::size_t cap = kDefaultDenseCap) const;

  /// max-entry norm of U U^dagger - I. Dense forms multiply it out; index
  /// maps are unitary by construction, so only the phase moduli are checked.
  double unitarity_defect(std::size_t cap = kDefaultDenseCap) const;

  // Form-specific views; null when the handle holds a different form.
  const CMatrix* dense_matrix() const;
  const std::vector<std::uint64_t>* index_targets() const;
  const std::vector<Cplx>* index_phases() const;
  const std::vector<OperatorHandle>* composite_factors() const;

 private:
  struct DenseForm {
    CMatrix mat;
  };
  struct IndexMapForm {
    std::vector<std::uint64_t> targets;
    std::vector<Cplx> phases;  // empty = all ones
  };
  struct CompositeForm {
    std::vector<OperatorHandle> factors;
  };

  explicit OperatorHandle(std::variant<DenseForm, IndexMapForm, CompositeForm> rep)
      : rep_(std::move(rep)) {}

  std::variant<DenseForm, IndexMapForm, CompositeForm> rep_;
};

/// Kronecker product (row/col blocks of a scaled by b).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Dense F_G with entry (row y, col x) = chi_x(y)/sqrt(n). For product groups
/// with the fixed index order this equals the Kronecker product of the factor
/// transforms.
OperatorHandle qft(const CharacterBasis& basis, std::size_t cap = kDefaultDenseCap);

/// Functional application of F_G (or its adjoint) to a one-register state,
/// available at any order, O(n^2).
void qft_apply(const CharacterBasis& basis, StateVector& state, bool adjoint = false);

/// |chi_x>: amplitudes conj(chi_x(y))/sqrt(n). Equals F_G|-x>.
StateVector fourier_state(const CharacterBasis& basis, const GroupElement& x,
                          std::size_t cap = kDefaultDenseCap);

/// P_x |y> = |x + y>.
OperatorHandle translation_op(const GroupSpec& g, const GroupElement& x);

/// A_psi |x>|y> = |x>|y + psi(x)>.
OperatorHandle a_psi(const Homomorphism& psi);

/// B_psi |x>|y> = |x + psi(y)>|y>.
OperatorHandle b_psi(const Homomorphism& psi);

/// U_pi |y> = |pi(y)>; pi must be a bijection of [0, n).
OperatorHandle permutation_op(const GroupSpec& g, const std::vector<std::uint64_t>& pi);

/// Applies u to register 1 and v to register 2 without materializing the
/// n^2 x n^2 product.
void tensor_apply(const OperatorHandle& u, const OperatorHandle& v, StateVector& state);

/// Dense cross-check path: materializes kron(u, v) and applies it.
StateVector tensor_apply_dense(const OperatorHandle& u, const OperatorHandle& v,
                               const StateVector& state, std::size_t cap = kDefaultDenseCap);

}  // namespace qftlab

#include "qftlab/inversion.hpp"

#include <algorithm>
#include <sstream>

#include "qftlab/operators.hpp"

namespace qftlab {
namespace {

/// Sweeps every basis column |x>|y>. The input to the conjugated product is
/// a product state, so A_psi(u (x) v) keeps the row structure
/// row z1 = u(z1) * (P_{psi(z1)} v); one dense transform per register then
/// finishes the column. One n x n product per column, O(n^2) workspace.
double residual_sweep(const CharacterBasis& basis, const std::vector<std::uint64_t>& psi_table,
                      const std::vector<std::uint64_t>& phi_table,
                      const InversionOptions& opts) {
  const GroupSpec& g = basis.group();
  const std::size_t n = g.order;
  const CMatrix f = qft(basis, opts.dense_cap).to_dense(opts.dense_cap);
  const CMatrix fdag = f.adjoint();

  std::vector<double> column_worst(n, 0.0);
  parallel_for(n, opts.workers, [&](std::size_t begin, std::size_t end) {
    CMatrix vshift(n, n);   // vshift(t, s) = v[t - s], i.e. column s = P_s v
    CMatrix shifted(n, n);  // column s = F P_s v
    CMatrix w2t(n, n);      // transposed post-A_psi state, register 2 transformed
    CMatrix out(n, n);
    for (std::size_t y = begin; y < end; ++y) {
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
          vshift(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s)) =
              fdag(static_cast<Eigen::Index>(sub_indices(g, t, s)), static_cast<Eigen::Index>(y));
        }
      }
      shifted.noalias() = f * vshift;
      double worst = 0.0;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z1 = 0; z1 < n; ++z1) {
          w2t.col(static_cast<Eigen::Index>(z1)) =
              f(static_cast<Eigen::Index>(z1), static_cast<Eigen::Index>(x)) *
              shifted.col(static_cast<Eigen::Index>(psi_table[z1]));
        }
        out.noalias() = fdag * w2t.transpose();
        out(static_cast<Eigen::Index>(add_indices(g, x, phi_table[y])),
            static_cast<Eigen::Index>(y)) -= Cplx(1.0, 0.0);
        worst = std::max(worst, out.cwiseAbs().maxCoeff());
      }
      column_worst[y] = worst;
    }
  });
  return *std::max_element(column_worst.begin(), column_worst.end());
}

std::string witness_text(const GroupSpec& g, const WitnessPair& w) {
  return "(" + element_to_string(g, w.a) + ", " + element_to_string(g, w.b) + ")";
}

}  // namespace

double verify_inversion(const CharacterBasis& basis, const Homomorphism& psi,
                        const InversionOptions& opts) {
  const GroupSpec& g = basis.group();
  if (g.order > opts.dense_cap) {
    throw CapExceededError("inversion check needs the dense QFT; order exceeds the cap");
  }
  if (opts.check_preconditions) {
    const CheckResult compat = check_compatibility(basis, psi, opts.dense_cap);
    if (!compat.ok) {
      throw PreconditionError("homomorphism is not compatible with the Fourier basis; witness " +
                              witness_text(g, *compat.witness));
    }
  }
  const std::vector<std::uint64_t> table = psi.index_table(opts.dense_cap);
  return residual_sweep(basis, table, table, opts);
}

double verify_inversion_pair(const CharacterBasis& basis, const Homomorphism& psi,
                             const Homomorphism& phi, const InversionOptions& opts) {
  const GroupSpec& g = basis.group();
  if (g.order > opts.dense_cap) {
    throw CapExceededError("inversion check needs the dense QFT; order exceeds the cap");
  }
  if (opts.check_preconditions) {
    const PairCheckResult compat = check_pair_compatibility(basis, psi, phi, opts.dense_cap);
    if (!compat.ok) {
      std::ostringstream msg;
      msg << "(psi, phi) is not a compatible pair";
      if (compat.character_witness) {
        msg << "; character witness " << witness_text(g, *compat.character_witness);
      }
      if (compat.commutation_witness) {
        msg << "; commutation witness " << element_to_string(g, *compat.commutation_witness);
      }
      throw PreconditionError(msg.str());
    }
  }
  return residual_sweep(basis, psi.index_table(opts.dense_cap), phi.index_table(opts.dense_cap),
                        opts);
}

}  // namespace qftlab

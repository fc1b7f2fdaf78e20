#include "qftlab/character.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace qftlab {
namespace {

constexpr std::size_t kElementCacheMax = 1u << 16;

}  // namespace

CharacterBasis::CharacterBasis(GroupSpec group, Pairing pairing, double tolerance,
                               std::string label)
    : group_(std::move(group)),
      pairing_(std::move(pairing)),
      tolerance_(tolerance),
      label_(std::move(label)) {
  if (!pairing_) throw StructuralError("character basis needs a pairing");
  if (tolerance_ <= 0) throw StructuralError("tolerance must be positive");
  if (group_.order <= kElementCacheMax) {
    elements_.reserve(group_.order);
    for (std::uint64_t i = 0; i < group_.order; ++i) {
      elements_.push_back(element_of(group_, i));
    }
  }
}

Cplx CharacterBasis::value(const GroupElement& x, const GroupElement& y) const {
  validate_element(group_, x);
  validate_element(group_, y);
  return pairing_(x, y);
}

Cplx CharacterBasis::value_at(std::uint64_t xi, std::uint64_t yi) const {
  if (xi >= group_.order || yi >= group_.order) {
    throw RangeError("character index out of range");
  }
  if (!elements_.empty()) return pairing_(elements_[xi], elements_[yi]);
  return pairing_(element_of(group_, xi), element_of(group_, yi));
}

CharacterBasis product_basis(const GroupSpec& g, double tolerance) {
  // Per-modulus root-of-unity tables; moduli too large to tabulate fall back
  // to direct evaluation with the exponent reduced first.
  constexpr std::uint64_t kTableMax = 1u << 16;
  std::vector<std::vector<Cplx>> roots(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const std::uint64_t m = g.moduli[j];
    if (m <= kTableMax) {
      roots[j].reserve(m);
      for (std::uint64_t t = 0; t < m; ++t) {
        roots[j].push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) /
                                               static_cast<double>(m)));
      }
    }
  }
  GroupSpec spec = g;
  auto pairing = [spec, roots = std::move(roots)](const GroupElement& x,
                                                  const GroupElement& y) -> Cplx {
    Cplx out(1.0, 0.0);
    for (std::size_t j = 0; j < spec.rank(); ++j) {
      const std::uint64_t m = spec.moduli[j];
      const std::uint64_t t = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(x[j]) * static_cast<unsigned __int128>(y[j])) % m);
      if (!roots[j].empty()) {
        out *= roots[j][t];
      } else {
        out *= std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) /
                                   static_cast<double>(m));
      }
    }
    return out;
  };
  return CharacterBasis(g, std::move(pairing), tolerance, g.to_string());
}

double verify_orthogonality(const CharacterBasis& basis, std::size_t cap) {
  const std::uint64_t n = basis.group().order;
  if (n > cap) throw CapExceededError("orthogonality check exceeds the dense cap");
  Eigen::MatrixXcd table(n, n);
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t x = 0; x < n; ++x) {
      table(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(x)) = basis.value_at(i, x);
    }
  }
  Eigen::MatrixXcd gram = (table * table.adjoint()) / static_cast<double>(n);
  gram -= Eigen::MatrixXcd::Identity(n, n);
  return gram.cwiseAbs().maxCoeff();
}

bool verify_character_completeness(const CharacterBasis& basis, std::size_t cap) {
  const std::uint64_t n = basis.group().order;
  if (n > cap) throw CapExceededError("completeness check exceeds the dense cap");
  const double tol = basis.tolerance();
  std::vector<Cplx> row_i(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t x = 0; x < n; ++x) row_i[x] = basis.value_at(i, x);
    for (std::uint64_t j = i + 1; j < n; ++j) {
      bool identical = true;
      for (std::uint64_t x = 0; x < n; ++x) {
        if (std::abs(row_i[x] - basis.value_at(j, x)) > tol) {
          identical = false;
          break;
        }
      }
      if (identical) return false;
    }
  }
  return true;
}

}  // namespace qftlab

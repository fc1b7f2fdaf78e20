#pragma once

// Fourier bases: indexed families {chi_x : x in G} of characters realized as
// an evaluable pairing G x G -> unit complex numbers. The standard basis for
// a product group is chi_x(y) = prod_j omega_j^(x_j y_j), omega_j = e^(2*pi*i/m_j),
// with the exponent x_j*y_j reduced mod m_j before exponentiation.

#include <functional>
#include <string>
#include <vector>

#include "qftlab/common.hpp"
#include "qftlab/group.hpp"

namespace qftlab {

class CharacterBasis {
 public:
  using Pairing = std::function<Cplx(const GroupElement&, const GroupElement&)>;

  CharacterBasis(GroupSpec group, Pairing pairing, double tolerance = kDefaultTolerance,
                 std::string label = "custom");

  const GroupSpec& group() const { return group_; }
  double tolerance() const { return tolerance_; }
  const std::string& label() const { return label_; }

  /// chi_x(y).
  Cplx value(const GroupElement& x, const GroupElement& y) const;

  /// chi_{element_of(xi)}(element_of(yi)); element tuples are cached for
  /// small orders so this is allocation-free on hot paths.
  Cplx value_at(std::uint64_t xi, std::uint64_t yi) const;

 private:
  GroupSpec group_;
  Pairing pairing_;
  double tolerance_;
  std::string label_;
  std::vector<GroupElement> elements_;  // populated when the order is small
};

/// The product-group basis of roots of unity described above.
CharacterBasis product_basis(const GroupSpec& g, double tolerance = kDefaultTolerance);

/// max over (i,j) of |(1/n) sum_x chi_i(x) conj(chi_j(x)) - delta_ij|.
/// Schur orthogonality makes this vanish for any true Fourier basis.
double verify_orthogonality(const CharacterBasis& basis, std::size_t cap = kDefaultDenseCap);

/// True iff x -> chi_x is injective, i.e. the rows of the character table are
/// pairwise distinct within the basis tolerance.
bool verify_character_completeness(const CharacterBasis& basis,
                                   std::size_t cap = kDefaultDenseCap);

}  // namespace qftlab

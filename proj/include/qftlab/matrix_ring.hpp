#pragma once

// The ring R^(dim x dim) of square matrices over a small commutative base
// ring R (Z_r or GF(q)). Its additive group is R's additive group repeated
// dim^2 times (entries in row-major order), and its Fourier basis is built
// from a base basis satisfying chi_y(s z) = chi_{y s}(z) via the transposed
// product chi_Y(Z) = prod_{i,j} chi_{Y_ij}(Z_ji). Left and right
// multiplications X -> SX and X -> XS are the Theorem-2 endomorphism pair.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qftlab/character.hpp"
#include "qftlab/common.hpp"
#include "qftlab/field.hpp"
#include "qftlab/group.hpp"
#include "qftlab/homomorphism.hpp"

namespace qftlab {

/// Commutative base ring with elements indexed 0..size-1. For GF(q) the
/// element index is the field's natural labeling.
class BaseRing {
 public:
  static BaseRing integers_mod(std::uint64_t r);
  static BaseRing galois_field(FieldSpec f);

  std::uint64_t size() const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;

  GroupSpec additive_group() const;

  /// Natural Fourier basis of the additive group: e^(2*pi*i*yz/r) for Z_r,
  /// the default-functional basis for GF(q). Both satisfy chi_y(sz) = chi_{ys}(z).
  CharacterBasis character_basis(double tolerance = kDefaultTolerance) const;

  bool is_field() const { return std::holds_alternative<FieldSpec>(rep_); }
  const FieldSpec& field() const { return std::get<FieldSpec>(rep_); }

  std::string to_string() const;  // "Z3" or "GF(4)"

  friend bool operator==(const BaseRing& a, const BaseRing& b) { return a.rep_ == b.rep_; }

 private:
  explicit BaseRing(std::variant<std::uint64_t, FieldSpec> rep) : rep_(std::move(rep)) {}
  std::variant<std::uint64_t, FieldSpec> rep_;
};

struct MatrixRingSpec {
  BaseRing base;
  std::size_t dim = 0;

  MatrixRingSpec(BaseRing base_ring, std::size_t dimension);

  /// Base additive group repeated dim^2 times, row-major entry order.
  GroupSpec additive_group() const;
  std::uint64_t matrix_count() const;  // |R|^(dim^2)
  std::string to_string() const;       // "M2(Z3)"
};

/// dim x dim matrix of base-ring element indices, row-major.
using RingMatrix = std::vector<std::uint64_t>;

RingMatrix mat_zero(const MatrixRingSpec& spec);
RingMatrix mat_identity(const MatrixRingSpec& spec);
RingMatrix mat_mul(const MatrixRingSpec& spec, const RingMatrix& a, const RingMatrix& b);
RingMatrix random_matrix(const MatrixRingSpec& spec, std::mt19937_64& rng);
RingMatrix mat_of_index(const MatrixRingSpec& spec, std::uint64_t index);

void validate_matrix(const MatrixRingSpec& spec, const RingMatrix& a);

GroupElement mat_to_group(const MatrixRingSpec& spec, const RingMatrix& a);
RingMatrix mat_from_group(const MatrixRingSpec& spec, const GroupElement& x);

/// chi_Y(Z) = prod_{i,j} chi_{Y_ij}(Z_ji) with chi from base_basis.
Cplx matrix_character(const MatrixRingSpec& spec, const CharacterBasis& base_basis,
                      const RingMatrix& y, const RingMatrix& z);

/// The same pairing packaged as a CharacterBasis over the flat additive group,
/// using the base ring's natural basis.
CharacterBasis matrix_character_basis(const MatrixRingSpec& spec,
                                      double tolerance = kDefaultTolerance);

Homomorphism matrix_left_hom(const MatrixRingSpec& spec, const RingMatrix& s);   // X -> SX
Homomorphism matrix_right_hom(const MatrixRingSpec& spec, const RingMatrix& s);  // X -> XS

}  // namespace qftlab

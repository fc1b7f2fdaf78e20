#pragma once

// GF(p^m) realized as GF(p)[Z] / <f> for a monic irreducible
// f(Z) = Z^m - sum_i a_i Z^i. Elements are residue-class coefficient vectors
// c_0..c_{m-1}; the additive group is Z_p^m with the shared mixed-radix
// indexing, so field elements and group elements convert coordinatewise.
// Characters come from a nonzero linear functional phi: GF(q) -> GF(p) via
// chi_x(y) = e^(2*pi*i*phi(x*y)/p).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qftlab/character.hpp"
#include "qftlab/common.hpp"
#include "qftlab/group.hpp"
#include "qftlab/homomorphism.hpp"

namespace qftlab {

bool is_prime(std::uint64_t p);

/// q = p^m with p prime; throws StructuralError otherwise.
std::pair<std::uint64_t, std::size_t> factor_prime_power(std::uint64_t q);

/// Irreducibility over GF(p) by trial division against every monic divisor
/// of degree in [1, deg/2]. coeffs is little-endian including the leading
/// coefficient, which must be 1 mod p.
bool is_irreducible(std::uint64_t p, const std::vector<std::int64_t>& coeffs);

/// First irreducible monic polynomial of degree m over GF(p) in coefficient
/// counter order (c = b_0 + b_1 p + ...); deterministic, so a reproducible
/// default modulus for every small field.
std::vector<std::int64_t> first_irreducible(std::uint64_t p, std::size_t m);

struct FieldSpec {
  std::uint64_t p = 0;                  // prime characteristic, <= 10^4
  std::size_t m = 0;                    // extension degree >= 1
  std::vector<std::int64_t> reduction;  // a_0..a_{m-1}: f(Z) = Z^m - sum a_i Z^i
  std::uint64_t q = 0;                  // p^m

  FieldSpec(std::uint64_t p, std::size_t m, std::vector<std::int64_t> reduction_coeffs);

  /// From the conventional plus-form f = b_0 + b_1 Z + ... + Z^m
  /// (little-endian, leading 1 included).
  static FieldSpec from_plus_coeffs(std::uint64_t p, const std::vector<std::int64_t>& plus);

  /// q factored as p^m; modulus chosen by first_irreducible.
  static FieldSpec with_builtin_modulus(std::uint64_t q);

  GroupSpec additive_group() const;  // Z_p x ... x Z_p (m factors)
  std::vector<std::int64_t> plus_coeffs() const;
  std::string to_string() const;  // "GF(9);f=Z^2+1"

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p == b.p && a.m == b.m && a.reduction == b.reduction;
  }
};

struct FieldElement {
  std::vector<std::int64_t> coeffs;  // c_0..c_{m-1}, each in [0, p)

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

FieldElement field_zero(const FieldSpec& f);
FieldElement field_one(const FieldSpec& f);
FieldElement field_add(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement field_neg(const FieldSpec& f, const FieldElement& a);
FieldElement field_mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b);

void validate_field_element(const FieldSpec& f, const FieldElement& a);

// Conversions with the additive group / its index space.
GroupElement field_to_group(const FieldSpec& f, const FieldElement& a);
FieldElement field_from_group(const FieldSpec& f, const GroupElement& x);
FieldElement field_element_of(const FieldSpec& f, std::uint64_t index);
std::uint64_t field_index_of(const FieldSpec& f, const FieldElement& a);

std::string field_element_to_string(const FieldSpec& f, const FieldElement& a);  // "Z+1"

/// Nonzero GF(p)-linear map GF(q) -> GF(p), phi(x) = sum w_i x_i mod p.
struct LinearFunctional {
  std::vector<std::int64_t> weights;

  LinearFunctional(const FieldSpec& f, std::vector<std::int64_t> w);
};

/// Coefficient extraction phi(x) = x_0.
LinearFunctional default_functional(const FieldSpec& f);
LinearFunctional random_nonzero_functional(const FieldSpec& f, std::mt19937_64& rng);

std::int64_t apply_functional(const FieldSpec& f, const LinearFunctional& phi,
                              const FieldElement& x);

/// chi_x(y) = e^(2*pi*i*phi(x*y)/p), packaged over the additive group.
CharacterBasis field_character_basis(const FieldSpec& f, const LinearFunctional& phi,
                                     double tolerance = kDefaultTolerance);

/// psi_s(x) = s*x under field multiplication.
Homomorphism mul_hom(const FieldSpec& f, const FieldElement& s);

}  // namespace qftlab

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qftlab/field.hpp"

using namespace qftlab;

namespace {

FieldElement elem(const FieldSpec& f, std::initializer_list<std::int64_t> coeffs) {
  return FieldElement{std::vector<std::int64_t>(coeffs)};
}

// Root-scan oracle for cubics and quadratics: irreducible iff no linear factor.
bool no_roots(std::uint64_t p, const std::vector<std::int64_t>& plus) {
  for (std::uint64_t r = 0; r < p; ++r) {
    std::int64_t acc = 0;
    std::int64_t pow = 1;
    for (std::int64_t c : plus) {
      acc = (acc + c * pow) % static_cast<std::int64_t>(p);
      pow = (pow * static_cast<std::int64_t>(r)) % static_cast<std::int64_t>(p);
    }
    if ((acc % static_cast<std::int64_t>(p) + p) % p == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(257));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9973 * 3));
  CHECK(factor_prime_power(27) == std::pair<std::uint64_t, std::size_t>{3, 3});
  CHECK_THROWS_AS(factor_prime_power(6), StructuralError);
}

TEST_CASE("irreducibility examples over GF(2)") {
  CHECK(is_irreducible(2, {1, 1, 1}));        // Z^2+Z+1
  CHECK_FALSE(is_irreducible(2, {1, 0, 1}));  // Z^2+1 has the root 1
  CHECK_THROWS_AS(is_irreducible(2, {1, 1, 0}), StructuralError);  // not monic
}

TEST_CASE("Z^3-Z-1 over GF(3) agrees with the root-scan oracle") {
  const std::vector<std::int64_t> plus = {-1, -1, 0, 1};  // Z^3 - Z - 1
  CHECK(is_irreducible(3, plus) == no_roots(3, plus));
  CHECK(is_irreducible(3, plus));
}

TEST_CASE("irreducibility matches root scan for every monic cubic over GF(3)") {
  for (std::int64_t c0 = 0; c0 < 3; ++c0) {
    for (std::int64_t c1 = 0; c1 < 3; ++c1) {
      for (std::int64_t c2 = 0; c2 < 3; ++c2) {
        const std::vector<std::int64_t> plus = {c0, c1, c2, 1};
        CHECK(is_irreducible(3, plus) == no_roots(3, plus));
      }
    }
  }
}

TEST_CASE("builtin moduli are the first irreducibles in counter order") {
  CHECK(first_irreducible(2, 2) == std::vector<std::int64_t>{1, 1, 1});     // Z^2+Z+1
  CHECK(first_irreducible(2, 3) == std::vector<std::int64_t>{1, 1, 0, 1});  // Z^3+Z+1
  CHECK(first_irreducible(3, 2) == std::vector<std::int64_t>{1, 0, 1});     // Z^2+1
  CHECK(first_irreducible(2, 4) == std::vector<std::int64_t>{1, 1, 0, 0, 1});  // Z^4+Z+1
  CHECK(first_irreducible(5, 2) == std::vector<std::int64_t>{2, 0, 1});        // Z^2+2
  CHECK(first_irreducible(3, 3) == std::vector<std::int64_t>{1, 2, 0, 1});     // Z^3+2Z+1
}

TEST_CASE("spec construction and validation") {
  CHECK_THROWS_AS(FieldSpec(4, 1, {0}), StructuralError);             // p not prime
  CHECK_THROWS_AS(FieldSpec(10007, 1, {0}), StructuralError);         // p above bound
  CHECK_THROWS_AS(FieldSpec::from_plus_coeffs(2, {1, 0, 1}), StructuralError);  // reducible
  CHECK_THROWS_AS(FieldSpec::from_plus_coeffs(3, {2, 0, 1}), StructuralError);  // Z^2+2=(Z-1)(Z+1)

  const FieldSpec gf9 = FieldSpec::from_plus_coeffs(3, {1, 0, 1});
  CHECK(gf9.q == 9);
  CHECK(gf9.to_string() == "GF(9);f=Z^2+1");
  CHECK(gf9.additive_group() == GroupSpec({3, 3}));

  const FieldSpec gf8 = FieldSpec::with_builtin_modulus(8);
  CHECK(gf8.p == 2);
  CHECK(gf8.m == 3);
  CHECK(gf8.to_string() == "GF(8);f=Z^3+Z+1");
}

TEST_CASE("GF(4) multiplication forced by mod-f reduction") {
  const FieldSpec gf4 = FieldSpec::with_builtin_modulus(4);  // Z^2+Z+1, so Z^2 = Z+1
  const FieldElement z = elem(gf4, {0, 1});
  CHECK(field_mul(gf4, z, z) == elem(gf4, {1, 1}));
  CHECK(field_mul(gf4, z, field_one(gf4)) == z);
}

TEST_CASE("GF(9) with f=Z^2+1 squares Z to 2") {
  const FieldSpec gf9 = FieldSpec::from_plus_coeffs(3, {1, 0, 1});
  const FieldElement z = elem(gf9, {0, 1});
  CHECK(field_mul(gf9, z, z) == elem(gf9, {2, 0}));
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (std::uint64_t q : {2ULL, 3ULL, 4ULL, 5ULL, 7ULL, 8ULL, 9ULL, 16ULL, 25ULL, 27ULL}) {
    const FieldSpec f = FieldSpec::with_builtin_modulus(q);
    // multiplicative associativity and distributivity
    for (std::uint64_t a = 0; a < q; ++a) {
      const FieldElement ea = field_element_of(f, a);
      for (std::uint64_t b = 0; b < q; ++b) {
        const FieldElement eb = field_element_of(f, b);
        for (std::uint64_t c = 0; c < q; ++c) {
          const FieldElement ec = field_element_of(f, c);
          CHECK(field_mul(f, field_mul(f, ea, eb), ec) ==
                field_mul(f, ea, field_mul(f, eb, ec)));
          CHECK(field_mul(f, ea, field_add(f, eb, ec)) ==
                field_add(f, field_mul(f, ea, eb), field_mul(f, ea, ec)));
        }
      }
    }
    // every nonzero element has an inverse (scan)
    for (std::uint64_t a = 1; a < q; ++a) {
      const FieldElement ea = field_element_of(f, a);
      bool invertible = false;
      for (std::uint64_t b = 1; b < q && !invertible; ++b) {
        invertible = field_mul(f, ea, field_element_of(f, b)) == field_one(f);
      }
      CHECK(invertible);
    }
  }
}

TEST_CASE("index round trip matches the additive group") {
  const FieldSpec f = FieldSpec::with_builtin_modulus(27);
  const GroupSpec g = f.additive_group();
  for (std::uint64_t i = 0; i < f.q; ++i) {
    const FieldElement a = field_element_of(f, i);
    CHECK(field_index_of(f, a) == i);
    CHECK(index_of(g, field_to_group(f, a)) == i);
    CHECK(field_from_group(f, field_to_group(f, a)) == a);
  }
}

TEST_CASE("functional validation") {
  const FieldSpec gf4 = FieldSpec::with_builtin_modulus(4);
  CHECK_THROWS_AS(LinearFunctional(gf4, {0, 0}), StructuralError);
  CHECK_THROWS_AS(LinearFunctional(gf4, {1}), StructuralError);
  CHECK(default_functional(gf4).weights == std::vector<std::int64_t>{1, 0});
}

TEST_CASE("frozen character values") {
  const FieldSpec gf2 = FieldSpec::with_builtin_modulus(2);
  const CharacterBasis b2 = field_character_basis(gf2, default_functional(gf2));
  CHECK(std::abs(b2.value_at(1, 1) - Cplx(-1.0, 0.0)) < 1e-12);

  const FieldSpec gf4 = FieldSpec::with_builtin_modulus(4);
  const CharacterBasis b4 = field_character_basis(gf4, default_functional(gf4));
  // chi_Z(Z) = e^(2 pi i phi(Z^2)/2), phi(Z+1) = 1 -> -1.
  const std::uint64_t zi = field_index_of(gf4, FieldElement{{0, 1}});
  CHECK(std::abs(b4.value_at(zi, zi) - Cplx(-1.0, 0.0)) < 1e-12);

  for (std::uint64_t x = 0; x < 4; ++x) CHECK(std::abs(b4.value_at(x, 0) - Cplx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("functional bases are orthogonal, complete and symmetric") {
  std::mt19937_64 rng(20260810);
  for (std::uint64_t q : {2ULL, 4ULL, 8ULL, 9ULL, 16ULL}) {
    const FieldSpec f = FieldSpec::with_builtin_modulus(q);
    for (int k = 0; k < 3; ++k) {
      const LinearFunctional phi =
          k == 0 ? default_functional(f) : random_nonzero_functional(f, rng);
      const CharacterBasis b = field_character_basis(f, phi);
      CHECK(verify_orthogonality(b) <= 1e-9);
      CHECK(verify_character_completeness(b));
      for (std::uint64_t x = 0; x < q; ++x) {
        for (std::uint64_t y = 0; y < q; ++y) {
          CHECK(std::abs(b.value_at(x, y) - b.value_at(y, x)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("mul_hom examples and properties") {
  const FieldSpec gf4 = FieldSpec::with_builtin_modulus(4);
  const FieldElement z = FieldElement{{0, 1}};
  CHECK(mul_hom(gf4, field_one(gf4))(field_to_group(gf4, z)) == field_to_group(gf4, z));
  CHECK(mul_hom(gf4, z)(field_to_group(gf4, z)) ==
        field_to_group(gf4, FieldElement{{1, 1}}));

  // Additivity and compatibility for every s in GF(8), every tested functional.
  const FieldSpec gf8 = FieldSpec::with_builtin_modulus(8);
  std::mt19937_64 rng(99);
  for (int k = 0; k < 3; ++k) {
    const LinearFunctional phi =
        k == 0 ? default_functional(gf8) : random_nonzero_functional(gf8, rng);
    const CharacterBasis b = field_character_basis(gf8, phi);
    for (std::uint64_t s = 0; s < 8; ++s) {
      const Homomorphism psi = mul_hom(gf8, field_element_of(gf8, s));
      CHECK(verify_homomorphism(psi).ok);
      CHECK(check_compatibility(b, psi).ok);
    }
  }
}

TEST_CASE("element display") {
  const FieldSpec gf8 = FieldSpec::with_builtin_modulus(8);
  CHECK(field_element_to_string(gf8, field_element_of(gf8, 0)) == "0");
  CHECK(field_element_to_string(gf8, field_element_of(gf8, 5)) == "Z^2+1");
}

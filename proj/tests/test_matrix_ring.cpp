#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qftlab/matrix_ring.hpp"
#include "qftlab/operators.hpp"

using namespace qftlab;

TEST_CASE("base ring arithmetic") {
  const BaseRing z6 = BaseRing::integers_mod(6);
  CHECK(z6.size() == 6);
  CHECK(z6.add(4, 5) == 3);
  CHECK(z6.mul(4, 5) == 2);
  CHECK(z6.additive_group() == GroupSpec({6}));

  const BaseRing gf4 = BaseRing::galois_field(FieldSpec::with_builtin_modulus(4));
  CHECK(gf4.size() == 4);
  CHECK(gf4.mul(2, 2) == 3);  // Z * Z = Z + 1
  CHECK(gf4.additive_group() == GroupSpec({2, 2}));
  CHECK_THROWS_AS(BaseRing::integers_mod(1), StructuralError);
}

TEST_CASE("base bases satisfy chi_y(sz) = chi_{ys}(z)") {
  for (const BaseRing& ring :
       {BaseRing::integers_mod(2), BaseRing::integers_mod(3), BaseRing::integers_mod(4),
        BaseRing::galois_field(FieldSpec::with_builtin_modulus(4))}) {
    const CharacterBasis b = ring.character_basis();
    const std::uint64_t r = ring.size();
    for (std::uint64_t s = 0; s < r; ++s) {
      for (std::uint64_t y = 0; y < r; ++y) {
        for (std::uint64_t z = 0; z < r; ++z) {
          CHECK(std::abs(b.value_at(y, ring.mul(s, z)) - b.value_at(ring.mul(y, s), z)) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("matrix ring spec and additive group") {
  const MatrixRingSpec m2z3(BaseRing::integers_mod(3), 2);
  CHECK(m2z3.matrix_count() == 81);
  CHECK(m2z3.additive_group() == GroupSpec({3, 3, 3, 3}));
  CHECK(m2z3.to_string() == "M2(Z3)");

  const MatrixRingSpec m2gf4(BaseRing::galois_field(FieldSpec::with_builtin_modulus(4)), 2);
  CHECK(m2gf4.matrix_count() == 256);
  CHECK(m2gf4.additive_group().rank() == 8);
}

TEST_CASE("matrix multiplication in the ring") {
  const MatrixRingSpec ring(BaseRing::integers_mod(3), 2);
  const RingMatrix a = {1, 2, 0, 1};  // [[1,2],[0,1]]
  const RingMatrix b = {2, 0, 1, 1};  // [[2,0],[1,1]]
  CHECK(mat_mul(ring, a, b) == RingMatrix{1, 2, 1, 1});
  CHECK(mat_mul(ring, a, mat_identity(ring)) == a);
  CHECK(mat_mul(ring, mat_zero(ring), a) == mat_zero(ring));
}

TEST_CASE("group round trip for matrices") {
  const MatrixRingSpec ring(BaseRing::integers_mod(3), 2);
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 20; ++rep) {
    const RingMatrix a = random_matrix(ring, rng);
    CHECK(mat_from_group(ring, mat_to_group(ring, a)) == a);
  }
  for (std::uint64_t i = 0; i < 81; ++i) {
    CHECK(index_of(ring.additive_group(), mat_to_group(ring, mat_of_index(ring, i))) == i);
  }
}

TEST_CASE("matrix character frozen examples") {
  const MatrixRingSpec ring(BaseRing::integers_mod(2), 2);
  const CharacterBasis base = ring.base.character_basis();
  const RingMatrix zero = mat_zero(ring);
  const RingMatrix eye = mat_identity(ring);
  std::mt19937_64 rng(8);
  const RingMatrix any = random_matrix(ring, rng);
  CHECK(std::abs(matrix_character(ring, base, zero, any) - Cplx(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(matrix_character(ring, base, any, zero) - Cplx(1.0, 0.0)) < 1e-12);
  // chi_I(I) = chi_1(1)^2 = (-1)^2 = 1 over Z_2.
  CHECK(std::abs(matrix_character(ring, base, eye, eye) - Cplx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("matrix basis keeps orthogonality and the transposed-index identity") {
  for (const MatrixRingSpec& ring :
       {MatrixRingSpec(BaseRing::integers_mod(2), 2), MatrixRingSpec(BaseRing::integers_mod(3), 2)}) {
    const CharacterBasis b = matrix_character_basis(ring);
    CHECK(verify_orthogonality(b) <= 1e-9);
    CHECK(verify_character_completeness(b));

    // chi_Y(SZ) = chi_{YS}(Z) spot checks
    const CharacterBasis base = ring.base.character_basis();
    std::mt19937_64 rng(15);
    for (int rep = 0; rep < 10; ++rep) {
      const RingMatrix s = random_matrix(ring, rng);
      const RingMatrix y = random_matrix(ring, rng);
      const RingMatrix z = random_matrix(ring, rng);
      const Cplx lhs = matrix_character(ring, base, y, mat_mul(ring, s, z));
      const Cplx rhs = matrix_character(ring, base, mat_mul(ring, y, s), z);
      CHECK(std::abs(lhs - rhs) <= 1e-9);
    }
  }
}

TEST_CASE("left and right multiplication homomorphisms") {
  const MatrixRingSpec ring(BaseRing::integers_mod(3), 2);
  const RingMatrix eye = mat_identity(ring);
  const RingMatrix zero = mat_zero(ring);
  std::mt19937_64 rng(16);
  const RingMatrix x = random_matrix(ring, rng);
  const GroupElement gx = mat_to_group(ring, x);

  CHECK(matrix_left_hom(ring, eye)(gx) == gx);
  CHECK(matrix_right_hom(ring, eye)(gx) == gx);
  CHECK(matrix_left_hom(ring, zero)(gx) == mat_to_group(ring, zero));
  CHECK(matrix_right_hom(ring, zero)(gx) == mat_to_group(ring, zero));

  for (int rep = 0; rep < 5; ++rep) {
    const RingMatrix s = random_matrix(ring, rng);
    CHECK(verify_homomorphism(matrix_left_hom(ring, s)).ok);
    CHECK(verify_homomorphism(matrix_right_hom(ring, s)).ok);
  }
}

TEST_CASE("left/right pair commutes: both sides send X to SXS") {
  const MatrixRingSpec ring(BaseRing::integers_mod(3), 2);
  std::mt19937_64 rng(17);
  const RingMatrix s = random_matrix(ring, rng);
  const Homomorphism left = matrix_left_hom(ring, s);
  const Homomorphism right = matrix_right_hom(ring, s);
  for (int rep = 0; rep < 20; ++rep) {
    const RingMatrix x = random_matrix(ring, rng);
    const GroupElement gx = mat_to_group(ring, x);
    const GroupElement via_lr = left(right(gx));
    const GroupElement via_rl = right(left(gx));
    CHECK(via_lr == via_rl);
    CHECK(via_lr == mat_to_group(ring, mat_mul(ring, mat_mul(ring, s, x), s)));
  }
}

TEST_CASE("pair compatibility for 20 random S on M2(Z3)") {
  const MatrixRingSpec ring(BaseRing::integers_mod(3), 2);
  const CharacterBasis b = matrix_character_basis(ring);
  std::mt19937_64 rng(18);
  for (int rep = 0; rep < 20; ++rep) {
    const RingMatrix s = random_matrix(ring, rng);
    CHECK(check_pair_compatibility(b, matrix_left_hom(ring, s), matrix_right_hom(ring, s)).ok);
  }
}

TEST_CASE("pair compatibility on a field-based ring M2(GF(4))") {
  const MatrixRingSpec ring(BaseRing::galois_field(FieldSpec::with_builtin_modulus(4)), 2);
  const CharacterBasis b = matrix_character_basis(ring);
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 5; ++rep) {
    const RingMatrix s = random_matrix(ring, rng);
    CHECK(check_pair_compatibility(b, matrix_left_hom(ring, s), matrix_right_hom(ring, s)).ok);
  }
}

TEST_CASE("dense operators refuse oversized rings") {
  const MatrixRingSpec big(BaseRing::integers_mod(5), 3);  // order 5^9
  CHECK(big.matrix_count() == 1953125);
  const CharacterBasis b = matrix_character_basis(big);
  CHECK_THROWS_AS(qft(b), CapExceededError);
}

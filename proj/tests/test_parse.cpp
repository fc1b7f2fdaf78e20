#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qftlab/parse.hpp"

using namespace qftlab;

TEST_CASE("group text forms") {
  CHECK(parse_group_spec("Z4xZ2") == GroupSpec({4, 2}));
  CHECK(parse_group_spec("z4Xz2") == GroupSpec({4, 2}));
  CHECK(parse_group_spec(" Z2 x Z3 x Z5 ") == GroupSpec({2, 3, 5}));
  CHECK(parse_group_spec("Z12") == GroupSpec({12}));
}

TEST_CASE("group parse failures carry positions") {
  CHECK_THROWS_AS(parse_group_spec("Z1"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Z4xZ"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Q8"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Z4xZ2junk"), ParseError);
  try {
    parse_group_spec("Z4xZ1");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);  // points at the offending modulus
  }
}

TEST_CASE("field text forms") {
  const FieldSpec gf9 = parse_field_spec("GF(9);f=Z^2+1");
  CHECK(gf9.p == 3);
  CHECK(gf9.m == 2);
  CHECK(gf9.to_string() == "GF(9);f=Z^2+1");

  const FieldSpec gf8 = parse_field_spec("GF(8)");
  CHECK(gf8.to_string() == "GF(8);f=Z^3+Z+1");

  const FieldSpec gf27 = parse_field_spec("gf(27); f = Z^3 + 2Z + 1");
  CHECK(gf27.p == 3);
  CHECK(gf27.m == 3);

  // minus signs reduce mod p
  const FieldSpec gf9b = parse_field_spec("GF(9);f=Z^2-Z-1");
  CHECK(gf9b.reduction == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("field parse failures") {
  CHECK_THROWS_AS(parse_field_spec("GF(6)"), ParseError);          // not a prime power
  CHECK_THROWS_AS(parse_field_spec("GF(9);f=Z^2+2"), ParseError);  // reducible
  CHECK_THROWS_AS(parse_field_spec("GF(9);f=Z^3+1"), ParseError);  // degree mismatch
  CHECK_THROWS_AS(parse_field_spec("GF(9);f=2Z^2+1"), ParseError); // not monic
  CHECK_THROWS_AS(parse_field_spec("GF()"), ParseError);
}

TEST_CASE("matrix ring text forms") {
  const MatrixRingSpec m2z3 = parse_matrix_ring_spec("M2(Z3)");
  CHECK(m2z3.dim == 2);
  CHECK(m2z3.base.size() == 3);
  CHECK(m2z3.to_string() == "M2(Z3)");

  const MatrixRingSpec m2gf4 = parse_matrix_ring_spec("m2(gf(4))");
  CHECK(m2gf4.base.is_field());
  CHECK(m2gf4.matrix_count() == 256);

  CHECK_THROWS_AS(parse_matrix_ring_spec("M0(Z3)"), ParseError);
  CHECK_THROWS_AS(parse_matrix_ring_spec("M2(Z1)"), ParseError);
  CHECK_THROWS_AS(parse_matrix_ring_spec("M2(Q)"), ParseError);
}

TEST_CASE("dispatching parse_spec") {
  CHECK(std::holds_alternative<GroupSpec>(parse_spec("Z4xZ2")));
  CHECK(std::holds_alternative<FieldSpec>(parse_spec("GF(8)")));
  CHECK(std::holds_alternative<MatrixRingSpec>(parse_spec("M2(Z3)")));
  CHECK_THROWS_AS(parse_spec("what"), ParseError);

  CHECK(additive_group_of(parse_spec("GF(8)")) == GroupSpec({2, 2, 2}));
  CHECK(additive_group_of(parse_spec("M2(Z3)")) == GroupSpec({3, 3, 3, 3}));
  CHECK(spec_to_string(parse_spec("z4xz2")) == "Z4xZ2");
}

TEST_CASE("JSON forms") {
  CHECK(group_spec_from_json(R"({"moduli":[4,2]})") == GroupSpec({4, 2}));
  CHECK_THROWS_AS(group_spec_from_json(R"({"moduli":[4,2],"extra":1})"), ParseError);
  CHECK_THROWS_AS(group_spec_from_json(R"({"m":[4,2]})"), ParseError);

  const FieldSpec gf9 = field_spec_from_json(R"({"p":3,"m":2,"f_plus_coeffs":[1,0,1]})");
  CHECK(gf9.q == 9);
  CHECK_THROWS_AS(field_spec_from_json(R"({"p":3,"m":2,"f_plus_coeffs":[1,0,1],"x":0})"),
                  ParseError);
  CHECK_THROWS_AS(field_spec_from_json(R"({"p":3,"m":2,"f_plus_coeffs":[1,0]})"), ParseError);
}

TEST_CASE("element forms") {
  const GroupSpec g({4, 2});
  CHECK(parse_element(g, "5") == GroupElement{2, 1});       // index
  CHECK(parse_element(g, "3,1") == GroupElement{3, 1});     // coordinates
  CHECK(parse_element(g, "(3,1)") == GroupElement{3, 1});
  CHECK(parse_element(GroupSpec({5}), "3") == GroupElement{3});
  CHECK_THROWS_AS(parse_element(g, "9"), ParseError);       // index out of range
  CHECK_THROWS_AS(parse_element(g, "1,2,3"), ParseError);   // wrong arity
  CHECK_THROWS_AS(parse_element(g, "(3,1"), ParseError);
}

#include "qftlab/matrix_ring.hpp"

#include <limits>
#include <numbers>

namespace qftlab {

BaseRing BaseRing::integers_mod(std::uint64_t r) {
  if (r < 2) throw StructuralError("base ring modulus must be >= 2");
  return BaseRing(std::variant<std::uint64_t, FieldSpec>(std::in_place_index<0>, r));
}

BaseRing BaseRing::galois_field(FieldSpec f) {
  return BaseRing(std::variant<std::uint64_t, FieldSpec>(std::in_place_index<1>, std::move(f)));
}

std::uint64_t BaseRing::size() const {
  if (is_field()) return field().q;
  return std::get<std::uint64_t>(rep_);
}

std::uint64_t BaseRing::add(std::uint64_t a, std::uint64_t b) const {
  if (is_field()) {
    const FieldSpec& f = field();
    return field_index_of(f, field_add(f, field_element_of(f, a), field_element_of(f, b)));
  }
  const std::uint64_t r = std::get<std::uint64_t>(rep_);
  return (a % r + b % r) % r;
}

std::uint64_t BaseRing::mul(std::uint64_t a, std::uint64_t b) const {
  if (is_field()) {
    const FieldSpec& f = field();
    return field_index_of(f, field_mul(f, field_element_of(f, a), field_element_of(f, b)));
  }
  const std::uint64_t r = std::get<std::uint64_t>(rep_);
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a % r) * static_cast<unsigned __int128>(b % r)) % r);
}

GroupSpec BaseRing::additive_group() const {
  if (is_field()) return field().additive_group();
  return GroupSpec({std::get<std::uint64_t>(rep_)});
}

CharacterBasis BaseRing::character_basis(double tolerance) const {
  if (is_field()) {
    return field_character_basis(field(), default_functional(field()), tolerance);
  }
  return product_basis(additive_group(), tolerance);
}

std::string BaseRing::to_string() const {
  if (is_field()) return "GF(" + std::to_string(field().q) + ")";
  return "Z" + std::to_string(std::get<std::uint64_t>(rep_));
}

MatrixRingSpec::MatrixRingSpec(BaseRing base_ring, std::size_t dimension)
    : base(std::move(base_ring)), dim(dimension) {
  if (dim < 1) throw StructuralError("matrix dimension must be >= 1");
  additive_group();  // validates that the order fits 64 bits
}

GroupSpec MatrixRingSpec::additive_group() const {
  const GroupSpec entry = base.additive_group();
  std::vector<std::uint64_t> moduli;
  moduli.reserve(entry.rank() * dim * dim);
  for (std::size_t e = 0; e < dim * dim; ++e) {
    moduli.insert(moduli.end(), entry.moduli.begin(), entry.moduli.end());
  }
  return GroupSpec(std::move(moduli));
}

std::uint64_t MatrixRingSpec::matrix_count() const {
  return additive_group().order;
}

std::string MatrixRingSpec::to_string() const {
  return "M" + std::to_string(dim) + "(" + base.to_string() + ")";
}

RingMatrix mat_zero(const MatrixRingSpec& spec) {
  return RingMatrix(spec.dim * spec.dim, 0);
}

RingMatrix mat_identity(const MatrixRingSpec& spec) {
  RingMatrix a = mat_zero(spec);
  const std::uint64_t one = spec.base.is_field()
                                ? field_index_of(spec.base.field(), field_one(spec.base.field()))
                                : 1;
  for (std::size_t i = 0; i < spec.dim; ++i) a[i * spec.dim + i] = one;
  return a;
}

void validate_matrix(const MatrixRingSpec& spec, const RingMatrix& a) {
  if (a.size() != spec.dim * spec.dim) throw StructuralError("matrix has wrong shape");
  for (std::uint64_t v : a) {
    if (v >= spec.base.size()) throw StructuralError("matrix entry out of base-ring range");
  }
}

RingMatrix mat_mul(const MatrixRingSpec& spec, const RingMatrix& a, const RingMatrix& b) {
  validate_matrix(spec, a);
  validate_matrix(spec, b);
  const std::size_t d = spec.dim;
  RingMatrix out(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < d; ++j) {
        acc = spec.base.add(acc, spec.base.mul(a[i * d + j], b[j * d + k]));
      }
      out[i * d + k] = acc;
    }
  }
  return out;
}

RingMatrix random_matrix(const MatrixRingSpec& spec, std::mt19937_64& rng) {
  RingMatrix a(spec.dim * spec.dim);
  for (auto& v : a) v = uniform_below(rng, spec.base.size());
  return a;
}

RingMatrix mat_of_index(const MatrixRingSpec& spec, std::uint64_t index) {
  return mat_from_group(spec, element_of(spec.additive_group(), index));
}

GroupElement mat_to_group(const MatrixRingSpec& spec, const RingMatrix& a) {
  validate_matrix(spec, a);
  const GroupSpec entry = spec.base.additive_group();
  GroupElement out;
  out.reserve(entry.rank() * a.size());
  for (std::uint64_t v : a) {
    const GroupElement coords = element_of(entry, v);
    out.insert(out.end(), coords.begin(), coords.end());
  }
  return out;
}

RingMatrix mat_from_group(const MatrixRingSpec& spec, const GroupElement& x) {
  const GroupSpec entry = spec.base.additive_group();
  const std::size_t rank = entry.rank();
  if (x.size() != rank * spec.dim * spec.dim) {
    throw StructuralError("group element has wrong rank for this matrix ring");
  }
  RingMatrix out(spec.dim * spec.dim);
  GroupElement coords(rank);
  for (std::size_t e = 0; e < out.size(); ++e) {
    for (std::size_t j = 0; j < rank; ++j) coords[j] = x[e * rank + j];
    out[e] = index_of(entry, coords);
  }
  return out;
}

Cplx matrix_character(const MatrixRingSpec& spec, const CharacterBasis& base_basis,
                      const RingMatrix& y, const RingMatrix& z) {
  validate_matrix(spec, y);
  validate_matrix(spec, z);
  const std::size_t d = spec.dim;
  Cplx out(1.0, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out *= base_basis.value_at(y[i * d + j], z[j * d + i]);  // transposed index z_ji
    }
  }
  return out;
}

CharacterBasis matrix_character_basis(const MatrixRingSpec& spec, double tolerance) {
  MatrixRingSpec ring = spec;
  CharacterBasis base = spec.base.character_basis(tolerance);
  auto pairing = [ring, base](const GroupElement& x, const GroupElement& y) -> Cplx {
    return matrix_character(ring, base, mat_from_group(ring, x), mat_from_group(ring, y));
  };
  return CharacterBasis(spec.additive_group(), std::move(pairing), tolerance, spec.to_string());
}

Homomorphism matrix_left_hom(const MatrixRingSpec& spec, const RingMatrix& s) {
  validate_matrix(spec, s);
  MatrixRingSpec ring = spec;
  RingMatrix lhs = s;
  auto eval = [ring, lhs](const GroupElement& x) {
    return mat_to_group(ring, mat_mul(ring, lhs, mat_from_group(ring, x)));
  };
  return Homomorphism(Homomorphism::Kind::MatrixLeft, spec.additive_group(), std::move(eval),
                      "X -> SX");
}

Homomorphism matrix_right_hom(const MatrixRingSpec& spec, const RingMatrix& s) {
  validate_matrix(spec, s);
  MatrixRingSpec ring = spec;
  RingMatrix rhs = s;
  auto eval = [ring, rhs](const GroupElement& x) {
    return mat_to_group(ring, mat_mul(ring, mat_from_group(ring, x), rhs));
  };
  return Homomorphism(Homomorphism::Kind::MatrixRight, spec.additive_group(), std::move(eval),
                      "X -> XS");
}

}  // namespace qftlab

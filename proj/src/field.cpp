#include "qftlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace qftlab {
namespace {

constexpr std::uint64_t kMaxPrime = 10000;
constexpr std::uint64_t kMaxDivisorScan = 1000000;

std::int64_t mod_p(std::int64_t v, std::uint64_t p) {
  const std::int64_t m = static_cast<std::int64_t>(p);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return r;
}

// Little-endian polynomial helpers over GF(p).

std::size_t poly_degree(const std::vector<std::int64_t>& a) {
  std::size_t d = a.size();
  while (d > 0 && a[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}

bool poly_is_zero(const std::vector<std::int64_t>& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

/// Remainder of a modulo a monic divisor, both little-endian.
std::vector<std::int64_t> poly_rem(std::vector<std::int64_t> a,
                                   const std::vector<std::int64_t>& divisor, std::uint64_t p) {
  const std::size_t dd = poly_degree(divisor);
  for (std::size_t d = a.size(); d-- > dd;) {
    const std::int64_t c = mod_p(a[d], p);
    a[d] = 0;
    if (c == 0) continue;
    for (std::size_t i = 0; i < dd; ++i) {
      a[d - dd + i] = mod_p(a[d - dd + i] - c * divisor[i], p);
    }
  }
  a.resize(dd == 0 ? 1 : dd);
  return a;
}

std::string poly_plus_to_string(const std::vector<std::int64_t>& plus) {
  // plus is little-endian with nonzero leading coefficient.
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = plus.size(); d-- > 0;) {
    const std::int64_t b = plus[d];
    if (b == 0) continue;
    if (!first) out << '+';
    first = false;
    if (d == 0) {
      out << b;
    } else {
      if (b != 1) out << b;
      out << 'Z';
      if (d > 1) out << '^' << d;
    }
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint64_t p, const std::vector<std::int64_t>& coeffs) {
  if (!is_prime(p)) throw StructuralError("irreducibility test needs a prime characteristic");
  if (coeffs.size() < 2) throw StructuralError("polynomial must have degree >= 1");
  std::vector<std::int64_t> a(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) a[i] = mod_p(coeffs[i], p);
  const std::size_t deg = poly_degree(a);
  if (deg + 1 != a.size() || a[deg] != 1) {
    throw StructuralError("irreducibility test needs a monic polynomial");
  }
  if (deg == 1) return true;
  // Trial division over all monic polynomials of degree in [1, deg/2].
  std::uint64_t scan = 0;
  std::uint64_t count = 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    count *= p;
    scan += count;
    if (scan > kMaxDivisorScan) {
      throw CapExceededError("irreducibility scan too large for trial division");
    }
  }
  std::vector<std::int64_t> divisor;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    divisor.assign(d + 1, 0);
    divisor[d] = 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (std::uint64_t c = 0; c < total; ++c) {
      std::uint64_t v = c;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::int64_t>(v % p);
        v /= p;
      }
      if (poly_is_zero(poly_rem(a, divisor, p))) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> first_irreducible(std::uint64_t p, std::size_t m) {
  if (m == 0) throw StructuralError("extension degree must be >= 1");
  std::vector<std::int64_t> candidate(m + 1, 0);
  candidate[m] = 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > kMaxDivisorScan) throw CapExceededError("modulus scan too large");
    total *= p;
  }
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t v = c;
    for (std::size_t i = 0; i < m; ++i) {
      candidate[i] = static_cast<std::int64_t>(v % p);
      v /= p;
    }
    if (is_irreducible(p, candidate)) return candidate;
  }
  throw IntegrityError("no irreducible polynomial found");  // unreachable for prime p
}

FieldSpec::FieldSpec(std::uint64_t p_, std::size_t m_, std::vector<std::int64_t> reduction_coeffs)
    : p(p_), m(m_), reduction(std::move(reduction_coeffs)) {
  if (!is_prime(p)) throw StructuralError("field characteristic must be prime");
  if (p > kMaxPrime) throw StructuralError("field characteristic above supported bound 10^4");
  if (m < 1) throw StructuralError("extension degree must be >= 1");
  if (reduction.size() != m) throw StructuralError("reduction coefficients must have length m");
  for (auto& a : reduction) a = mod_p(a, p);
  q = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / p) {
      throw StructuralError("field order overflows 64 bits");
    }
    q *= p;
  }
  if (!is_irreducible(p, plus_coeffs())) {
    throw StructuralError("reduction polynomial is not irreducible over GF(p)");
  }
}

FieldSpec FieldSpec::from_plus_coeffs(std::uint64_t p, const std::vector<std::int64_t>& plus) {
  if (plus.size() < 2) throw StructuralError("polynomial must have degree >= 1");
  if (mod_p(plus.back(), p) != 1) throw StructuralError("polynomial must be monic");
  const std::size_t m = plus.size() - 1;
  std::vector<std::int64_t> reduction(m);
  for (std::size_t i = 0; i < m; ++i) reduction[i] = mod_p(-plus[i], p);
  return FieldSpec(p, m, std::move(reduction));
}

std::pair<std::uint64_t, std::size_t> factor_prime_power(std::uint64_t q) {
  if (q < 2) throw StructuralError("field order must be >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) {
      p = q;
      break;
    }
  }
  std::size_t m = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw StructuralError("field order is not a prime power");
  return {p, m};
}

FieldSpec FieldSpec::with_builtin_modulus(std::uint64_t q) {
  const auto [p, m] = factor_prime_power(q);
  return from_plus_coeffs(p, first_irreducible(p, m));
}

GroupSpec FieldSpec::additive_group() const {
  return GroupSpec(std::vector<std::uint64_t>(m, p));
}

std::vector<std::int64_t> FieldSpec::plus_coeffs() const {
  std::vector<std::int64_t> plus(m + 1, 0);
  plus[m] = 1;
  for (std::size_t i = 0; i < m; ++i) plus[i] = mod_p(-reduction[i], p);
  return plus;
}

std::string FieldSpec::to_string() const {
  return "GF(" + std::to_string(q) + ");f=" + poly_plus_to_string(plus_coeffs());
}

void validate_field_element(const FieldSpec& f, const FieldElement& a) {
  if (a.coeffs.size() != f.m) throw StructuralError("field element has wrong degree");
  for (std::int64_t c : a.coeffs) {
    if (c < 0 || static_cast<std::uint64_t>(c) >= f.p) {
      throw StructuralError("field element coefficient not reduced mod p");
    }
  }
}

FieldElement field_zero(const FieldSpec& f) {
  return FieldElement{std::vector<std::int64_t>(f.m, 0)};
}

FieldElement field_one(const FieldSpec& f) {
  FieldElement one = field_zero(f);
  one.coeffs[0] = 1;
  return one;
}

FieldElement field_add(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
  validate_field_element(f, a);
  validate_field_element(f, b);
  FieldElement out = field_zero(f);
  for (std::size_t i = 0; i < f.m; ++i) out.coeffs[i] = mod_p(a.coeffs[i] + b.coeffs[i], f.p);
  return out;
}

FieldElement field_neg(const FieldSpec& f, const FieldElement& a) {
  validate_field_element(f, a);
  FieldElement out = field_zero(f);
  for (std::size_t i = 0; i < f.m; ++i) out.coeffs[i] = mod_p(-a.coeffs[i], f.p);
  return out;
}

FieldElement field_mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
  validate_field_element(f, a);
  validate_field_element(f, b);
  // Convolution, then substitute Z^m -> sum a_i Z^i from the top degree down.
  std::vector<std::int64_t> prod(2 * f.m - 1, 0);
  for (std::size_t i = 0; i < f.m; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < f.m; ++j) {
      prod[i + j] = mod_p(prod[i + j] + a.coeffs[i] * b.coeffs[j], f.p);
    }
  }
  for (std::size_t d = prod.size(); d-- > f.m;) {
    const std::int64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < f.m; ++i) {
      prod[d - f.m + i] = mod_p(prod[d - f.m + i] + c * f.reduction[i], f.p);
    }
  }
  prod.resize(f.m);
  return FieldElement{std::move(prod)};
}

GroupElement field_to_group(const FieldSpec& f, const FieldElement& a) {
  validate_field_element(f, a);
  // Coordinate j holds c_{m-1-j}, so the element index equals the base-p
  // integer with c_0 least significant ("natural" labeling of GF(q)).
  GroupElement x(f.m);
  for (std::size_t j = 0; j < f.m; ++j) x[j] = a.coeffs[f.m - 1 - j];
  return x;
}

FieldElement field_from_group(const FieldSpec& f, const GroupElement& x) {
  validate_element(f.additive_group(), x);
  FieldElement a = field_zero(f);
  for (std::size_t j = 0; j < f.m; ++j) a.coeffs[f.m - 1 - j] = x[j];
  return a;
}

FieldElement field_element_of(const FieldSpec& f, std::uint64_t index) {
  if (index >= f.q) throw RangeError("field element index out of range");
  FieldElement a = field_zero(f);
  for (std::size_t i = 0; i < f.m; ++i) {
    a.coeffs[i] = static_cast<std::int64_t>(index % f.p);
    index /= f.p;
  }
  return a;
}

std::uint64_t field_index_of(const FieldSpec& f, const FieldElement& a) {
  validate_field_element(f, a);
  std::uint64_t index = 0;
  for (std::size_t i = f.m; i-- > 0;) index = index * f.p + static_cast<std::uint64_t>(a.coeffs[i]);
  return index;
}

std::string field_element_to_string(const FieldSpec& f, const FieldElement& a) {
  validate_field_element(f, a);
  return poly_plus_to_string(a.coeffs);
}

LinearFunctional::LinearFunctional(const FieldSpec& f, std::vector<std::int64_t> w)
    : weights(std::move(w)) {
  if (weights.size() != f.m) throw StructuralError("functional weights must have length m");
  bool nonzero = false;
  for (auto& wi : weights) {
    wi = mod_p(wi, f.p);
    nonzero = nonzero || wi != 0;
  }
  if (!nonzero) throw StructuralError("linear functional must be nonzero");
}

LinearFunctional default_functional(const FieldSpec& f) {
  std::vector<std::int64_t> w(f.m, 0);
  w[0] = 1;
  return LinearFunctional(f, std::move(w));
}

LinearFunctional random_nonzero_functional(const FieldSpec& f, std::mt19937_64& rng) {
  std::vector<std::int64_t> w(f.m);
  while (true) {
    bool nonzero = false;
    for (auto& wi : w) {
      wi = static_cast<std::int64_t>(uniform_below(rng, f.p));
      nonzero = nonzero || wi != 0;
    }
    if (nonzero) return LinearFunctional(f, w);
  }
}

std::int64_t apply_functional(const FieldSpec& f, const LinearFunctional& phi,
                              const FieldElement& x) {
  validate_field_element(f, x);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < f.m; ++i) acc = mod_p(acc + phi.weights[i] * x.coeffs[i], f.p);
  return acc;
}

CharacterBasis field_character_basis(const FieldSpec& f, const LinearFunctional& phi,
                                     double tolerance) {
  FieldSpec spec = f;
  LinearFunctional functional = phi;
  std::vector<Cplx> roots;
  roots.reserve(f.p);
  for (std::uint64_t t = 0; t < f.p; ++t) {
    roots.push_back(std::polar(
        1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(f.p)));
  }
  auto pairing = [spec, functional, roots = std::move(roots)](const GroupElement& x,
                                                              const GroupElement& y) -> Cplx {
    const FieldElement product =
        field_mul(spec, field_from_group(spec, x), field_from_group(spec, y));
    return roots[static_cast<std::size_t>(apply_functional(spec, functional, product))];
  };
  return CharacterBasis(f.additive_group(), std::move(pairing), tolerance, f.to_string());
}

Homomorphism mul_hom(const FieldSpec& f, const FieldElement& s) {
  validate_field_element(f, s);
  FieldSpec spec = f;
  FieldElement scale = s;
  auto eval = [spec, scale](const GroupElement& x) {
    return field_to_group(spec, field_mul(spec, scale, field_from_group(spec, x)));
  };
  return Homomorphism(Homomorphism::Kind::FieldMul, f.additive_group(), std::move(eval),
                      "psi_s s=" + field_element_to_string(f, s));
}

}  // namespace qftlab

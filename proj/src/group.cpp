#include "qftlab/group.hpp"

#include <limits>
#include <sstream>

namespace qftlab {

GroupSpec::GroupSpec(std::vector<std::uint64_t> m) : moduli(std::move(m)) {
  if (moduli.empty()) throw StructuralError("group spec needs at least one cyclic factor");
  for (std::uint64_t mod : moduli) {
    if (mod < 2) throw StructuralError("cyclic factor modulus must be >= 2");
  }
  order = 1;
  for (std::uint64_t mod : moduli) {
    if (order > std::numeric_limits<std::uint64_t>::max() / mod) {
      throw StructuralError("group order overflows 64 bits");
    }
    order *= mod;
  }
  strides.assign(moduli.size(), 1);
  for (std::size_t j = moduli.size() - 1; j-- > 0;) {
    strides[j] = strides[j + 1] * moduli[j + 1];
  }
}

std::string GroupSpec::to_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    if (j) out << 'x';
    out << 'Z' << moduli[j];
  }
  return out.str();
}

GroupElement group_zero(const GroupSpec& g) {
  return GroupElement(g.rank(), 0);
}

void validate_element(const GroupSpec& g, const GroupElement& x) {
  if (x.size() != g.rank()) {
    throw StructuralError("element rank does not match group spec");
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 0 || static_cast<std::uint64_t>(x[j]) >= g.moduli[j]) {
      throw StructuralError("element coordinate not reduced modulo its modulus");
    }
  }
}

GroupElement reduce_element(const GroupSpec& g, GroupElement x) {
  if (x.size() != g.rank()) {
    throw StructuralError("element rank does not match group spec");
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    const std::int64_t m = static_cast<std::int64_t>(g.moduli[j]);
    std::int64_t c = x[j] % m;
    if (c < 0) c += m;
    x[j] = c;
  }
  return x;
}

GroupElement group_add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  validate_element(g, a);
  validate_element(g, b);
  GroupElement out(g.rank());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = (a[j] + b[j]) % static_cast<std::int64_t>(g.moduli[j]);
  }
  return out;
}

GroupElement group_neg(const GroupSpec& g, const GroupElement& a) {
  validate_element(g, a);
  GroupElement out(g.rank());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const std::int64_t m = static_cast<std::int64_t>(g.moduli[j]);
    out[j] = (m - a[j]) % m;
  }
  return out;
}

GroupElement group_sub(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  return group_add(g, a, group_neg(g, b));
}

GroupElement element_of(const GroupSpec& g, std::uint64_t index) {
  if (index >= g.order) throw RangeError("element index out of range");
  GroupElement out(g.rank());
  for (std::size_t j = g.rank(); j-- > 0;) {
    out[j] = static_cast<std::int64_t>(index % g.moduli[j]);
    index /= g.moduli[j];
  }
  return out;
}

std::uint64_t index_of(const GroupSpec& g, const GroupElement& x) {
  validate_element(g, x);
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    index = index * g.moduli[j] + static_cast<std::uint64_t>(x[j]);
  }
  return index;
}

std::uint64_t add_indices(const GroupSpec& g, std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  for (std::size_t j = g.rank(); j-- > 0;) {
    const std::uint64_t m = g.moduli[j];
    out += ((a % m + b % m) % m) * g.strides[j];
    a /= m;
    b /= m;
  }
  return out;
}

std::uint64_t neg_index(const GroupSpec& g, std::uint64_t a) {
  std::uint64_t out = 0;
  for (std::size_t j = g.rank(); j-- > 0;) {
    const std::uint64_t m = g.moduli[j];
    out += ((m - a % m) % m) * g.strides[j];
    a /= m;
  }
  return out;
}

std::uint64_t sub_indices(const GroupSpec& g, std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  for (std::size_t j = g.rank(); j-- > 0;) {
    const std::uint64_t m = g.moduli[j];
    out += ((a % m + (m - b % m)) % m) * g.strides[j];
    a /= m;
    b /= m;
  }
  return out;
}

std::string element_to_string(const GroupSpec& g, const GroupElement& x) {
  validate_element(g, x);
  if (x.size() == 1) return std::to_string(x[0]);
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) out << ',';
    out << x[j];
  }
  out << ')';
  return out.str();
}

GroupSpec product_spec(const GroupSpec& g, const GroupSpec& h) {
  std::vector<std::uint64_t> m = g.moduli;
  m.insert(m.end(), h.moduli.begin(), h.moduli.end());
  return GroupSpec(std::move(m));
}

}  // namespace qftlab

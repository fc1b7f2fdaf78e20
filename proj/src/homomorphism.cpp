#include "qftlab/homomorphism.hpp"

#include <cmath>
#include <memory>
#include <sstream>

namespace qftlab {

Homomorphism::Homomorphism(Kind kind, GroupSpec domain, Eval eval, std::string label)
    : kind_(kind), domain_(std::move(domain)), eval_(std::move(eval)), label_(std::move(label)) {
  if (!eval_) throw StructuralError("homomorphism needs an evaluation function");
}

GroupElement Homomorphism::operator()(const GroupElement& x) const {
  validate_element(domain_, x);
  GroupElement out = eval_(x);
  validate_element(domain_, out);
  return out;
}

std::uint64_t Homomorphism::map_index(std::uint64_t i) const {
  return index_of(domain_, (*this)(element_of(domain_, i)));
}

std::vector<std::uint64_t> Homomorphism::index_table(std::size_t cap) const {
  if (domain_.order > cap) throw CapExceededError("homomorphism table exceeds the cap");
  std::vector<std::uint64_t> table(domain_.order);
  for (std::uint64_t i = 0; i < domain_.order; ++i) table[i] = map_index(i);
  return table;
}

Homomorphism diagonal_hom(const GroupSpec& g, const GroupElement& s) {
  validate_element(g, s);
  GroupSpec spec = g;
  GroupElement scale = s;
  auto eval = [spec, scale](const GroupElement& y) {
    GroupElement out(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
      const std::uint64_t m = spec.moduli[j];
      out[j] = static_cast<std::int64_t>(
          (static_cast<unsigned __int128>(scale[j]) * static_cast<unsigned __int128>(y[j])) % m);
    }
    return out;
  };
  return Homomorphism(Homomorphism::Kind::Diagonal, g, std::move(eval),
                      "psi_s s=" + element_to_string(g, s));
}

Homomorphism table_hom(const GroupSpec& g, std::vector<std::uint64_t> image_indices) {
  if (image_indices.size() != g.order) {
    throw StructuralError("table homomorphism must cover the whole group");
  }
  for (std::uint64_t v : image_indices) {
    if (v >= g.order) throw StructuralError("table image index out of range");
  }
  GroupSpec spec = g;
  auto table = std::make_shared<std::vector<std::uint64_t>>(std::move(image_indices));
  auto eval = [spec, table](const GroupElement& x) {
    return element_of(spec, (*table)[index_of(spec, x)]);
  };
  return Homomorphism(Homomorphism::Kind::Table, g, std::move(eval), "table");
}

Homomorphism identity_hom(const GroupSpec& g) {
  return Homomorphism(Homomorphism::Kind::Table, g,
                      [](const GroupElement& x) { return x; }, "identity");
}

Homomorphism zero_hom(const GroupSpec& g) {
  GroupElement zero = group_zero(g);
  return Homomorphism(Homomorphism::Kind::Table, g,
                      [zero](const GroupElement&) { return zero; }, "zero");
}

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  if (!(f.domain() == g.domain())) {
    throw StructuralError("composition requires matching domains");
  }
  auto eval = [f, g](const GroupElement& x) { return f(g(x)); };
  return Homomorphism(Homomorphism::Kind::Table, f.domain(), std::move(eval),
                      f.label() + " o " + g.label());
}

CheckResult verify_homomorphism(const Homomorphism& psi, std::size_t cap) {
  const GroupSpec& g = psi.domain();
  if (g.order > cap) {
    throw CapExceededError("exhaustive additivity check exceeds the cap; use the sampled mode");
  }
  const std::vector<std::uint64_t> table = psi.index_table(cap);
  // psi(0) = 0 falls out of the x = y = 0 case.
  for (std::uint64_t xi = 0; xi < g.order; ++xi) {
    for (std::uint64_t yi = 0; yi < g.order; ++yi) {
      if (table[add_indices(g, xi, yi)] != add_indices(g, table[xi], table[yi])) {
        return {false, WitnessPair{element_of(g, xi), element_of(g, yi)}};
      }
    }
  }
  return {};
}

CheckResult verify_homomorphism_sampled(const Homomorphism& psi, std::size_t trials,
                                        std::mt19937_64& rng) {
  const GroupSpec& g = psi.domain();
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t xi = uniform_below(rng, g.order);
    const std::uint64_t yi = uniform_below(rng, g.order);
    if (psi.map_index(add_indices(g, xi, yi)) !=
        add_indices(g, psi.map_index(xi), psi.map_index(yi))) {
      return {false, WitnessPair{element_of(g, xi), element_of(g, yi)}};
    }
  }
  return {};
}

CheckResult check_compatibility(const CharacterBasis& basis, const Homomorphism& psi,
                                std::size_t cap) {
  const GroupSpec& g = basis.group();
  if (!(g == psi.domain())) throw StructuralError("basis and homomorphism disagree on the group");
  if (g.order > cap) {
    throw CapExceededError("exhaustive compatibility check exceeds the cap; use the sampled mode");
  }
  const std::vector<std::uint64_t> table = psi.index_table(cap);
  const double tol = basis.tolerance();
  for (std::uint64_t yi = 0; yi < g.order; ++yi) {
    for (std::uint64_t zi = 0; zi < g.order; ++zi) {
      if (std::abs(basis.value_at(yi, table[zi]) - basis.value_at(table[yi], zi)) > tol) {
        return {false, WitnessPair{element_of(g, yi), element_of(g, zi)}};
      }
    }
  }
  return {};
}

CheckResult check_compatibility_sampled(const CharacterBasis& basis, const Homomorphism& psi,
                                        std::size_t trials, std::mt19937_64& rng) {
  const GroupSpec& g = basis.group();
  if (!(g == psi.domain())) throw StructuralError("basis and homomorphism disagree on the group");
  const double tol = basis.tolerance();
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t yi = uniform_below(rng, g.order);
    const std::uint64_t zi = uniform_below(rng, g.order);
    if (std::abs(basis.value_at(yi, psi.map_index(zi)) -
                 basis.value_at(psi.map_index(yi), zi)) > tol) {
      return {false, WitnessPair{element_of(g, yi), element_of(g, zi)}};
    }
  }
  return {};
}

PairCheckResult check_pair_compatibility(const CharacterBasis& basis, const Homomorphism& psi,
                                         const Homomorphism& phi, std::size_t cap) {
  const GroupSpec& g = basis.group();
  if (!(g == psi.domain()) || !(g == phi.domain())) {
    throw StructuralError("pair compatibility requires one common group");
  }
  if (g.order > cap) throw CapExceededError("exhaustive pair check exceeds the cap");
  const std::vector<std::uint64_t> psi_table = psi.index_table(cap);
  const std::vector<std::uint64_t> phi_table = phi.index_table(cap);
  PairCheckResult result;
  for (std::uint64_t xi = 0; xi < g.order && !result.commutation_witness; ++xi) {
    if (psi_table[phi_table[xi]] != phi_table[psi_table[xi]]) {
      result.ok = false;
      result.commutation_witness = element_of(g, xi);
    }
  }
  const double tol = basis.tolerance();
  for (std::uint64_t yi = 0; yi < g.order && !result.character_witness; ++yi) {
    for (std::uint64_t zi = 0; zi < g.order; ++zi) {
      if (std::abs(basis.value_at(yi, psi_table[zi]) - basis.value_at(phi_table[yi], zi)) > tol) {
        result.ok = false;
        result.character_witness = WitnessPair{element_of(g, yi), element_of(g, zi)};
        break;
      }
    }
  }
  return result;
}

}  // namespace qftlab

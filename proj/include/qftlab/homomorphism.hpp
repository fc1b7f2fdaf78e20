#pragma once

// Additive endomorphisms of a finite abelian group, kept in structured form:
// diagonal maps psi_s(y) = (s_1 y_1, ..., s_k y_k), field multiplications,
// matrix left/right multiplications, and an explicit-table escape hatch.
// Additivity and basis compatibility are verified rather than assumed.

#include <optional>
#include <string>
#include <vector>

#include "qftlab/character.hpp"
#include "qftlab/common.hpp"
#include "qftlab/group.hpp"

namespace qftlab {

class Homomorphism {
 public:
  enum class Kind { Diagonal, FieldMul, MatrixLeft, MatrixRight, Table };
  using Eval = std::function<GroupElement(const GroupElement&)>;

  Homomorphism(Kind kind, GroupSpec domain, Eval eval, std::string label);

  Kind kind() const { return kind_; }
  const GroupSpec& domain() const { return domain_; }
  const std::string& label() const { return label_; }

  GroupElement operator()(const GroupElement& x) const;

  /// index_of(psi(element_of(i))).
  std::uint64_t map_index(std::uint64_t i) const;

  /// Materializes i -> map_index(i) for the whole group.
  std::vector<std::uint64_t> index_table(std::size_t cap = kDefaultDenseCap) const;

 private:
  Kind kind_;
  GroupSpec domain_;
  Eval eval_;
  std::string label_;
};

/// psi_s: y -> (s_1 y_1, ..., s_k y_k) with products mod m_j.
Homomorphism diagonal_hom(const GroupSpec& g, const GroupElement& s);

/// Explicit map given as image indices; must be total, need not be additive.
Homomorphism table_hom(const GroupSpec& g, std::vector<std::uint64_t> image_indices);

Homomorphism identity_hom(const GroupSpec& g);
Homomorphism zero_hom(const GroupSpec& g);

/// f after g (first apply g, then f). Domains must match.
Homomorphism compose(const Homomorphism& f, const Homomorphism& g);

struct WitnessPair {
  GroupElement a;
  GroupElement b;
};

struct CheckResult {
  bool ok = true;
  std::optional<WitnessPair> witness;
  explicit operator bool() const { return ok; }
};

/// Exhaustive additivity check: psi(x+y) == psi(x)+psi(y) for all pairs.
/// Refuses orders above the cap; use the sampled variant there.
CheckResult verify_homomorphism(const Homomorphism& psi, std::size_t cap = kDefaultDenseCap);
CheckResult verify_homomorphism_sampled(const Homomorphism& psi, std::size_t trials,
                                        std::mt19937_64& rng);

/// Exhaustive check of chi_y(psi(z)) == chi_{psi(y)}(z) for all y, z.
CheckResult check_compatibility(const CharacterBasis& basis, const Homomorphism& psi,
                                std::size_t cap = kDefaultDenseCap);
CheckResult check_compatibility_sampled(const CharacterBasis& basis, const Homomorphism& psi,
                                        std::size_t trials, std::mt19937_64& rng);

struct PairCheckResult {
  bool ok = true;
  std::optional<WitnessPair> character_witness;  // (y, z) with chi_y(psi(z)) != chi_{phi(y)}(z)
  std::optional<GroupElement> commutation_witness;  // x with psi(phi(x)) != phi(psi(x))
  explicit operator bool() const { return ok; }
};

/// Theorem-2 style compatibility: chi_y(psi(z)) == chi_{phi(y)}(z) for all
/// y, z, together with psi o phi == phi o psi.
PairCheckResult check_pair_compatibility(const CharacterBasis& basis, const Homomorphism& psi,
                                         const Homomorphism& phi,
                                         std::size_t cap = kDefaultDenseCap);

}  // namespace qftlab

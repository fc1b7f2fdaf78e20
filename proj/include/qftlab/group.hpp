#pragma once

// Finite abelian groups presented as products of cyclic groups
// Z_m1 x ... x Z_mk. Elements are coordinate tuples reduced modulo their
// modulus; the mixed-radix index with the LAST coordinate varying fastest
// fixes the basis ordering of every state vector and dense operator built
// on top, so that F_{GxH} = F_G (x) F_H holds literally in memory layout.

#include <cstdint>
#include <string>
#include <vector>

#include "qftlab/common.hpp"

namespace qftlab {

struct GroupSpec {
  std::vector<std::uint64_t> moduli;   // each >= 2, at least one factor
  std::uint64_t order = 0;             // product of moduli
  std::vector<std::uint64_t> strides;  // strides[j] = prod of moduli after j

  explicit GroupSpec(std::vector<std::uint64_t> m);

  std::size_t rank() const { return moduli.size(); }
  std::string to_string() const;  // "Z4xZ2"

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.moduli == b.moduli;
  }
};

/// Coordinate tuple x = (x_1, ..., x_k), 0 <= x_j < m_j.
using GroupElement = std::vector<std::int64_t>;

GroupElement group_zero(const GroupSpec& g);
GroupElement group_add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement group_neg(const GroupSpec& g, const GroupElement& a);
GroupElement group_sub(const GroupSpec& g, const GroupElement& a, const GroupElement& b);

/// Throws StructuralError unless x has the spec's rank with reduced coordinates.
void validate_element(const GroupSpec& g, const GroupElement& x);

/// Reduces arbitrary integer coordinates into canonical form.
GroupElement reduce_element(const GroupSpec& g, GroupElement x);

/// Mixed-radix decoding/encoding, mutually inverse on [0, order).
GroupElement element_of(const GroupSpec& g, std::uint64_t index);
std::uint64_t index_of(const GroupSpec& g, const GroupElement& x);

// Index-space arithmetic; avoids allocating coordinate tuples in hot loops.
std::uint64_t add_indices(const GroupSpec& g, std::uint64_t a, std::uint64_t b);
std::uint64_t neg_index(const GroupSpec& g, std::uint64_t a);
std::uint64_t sub_indices(const GroupSpec& g, std::uint64_t a, std::uint64_t b);

/// "(3,1)" for rank >= 2, "3" for rank 1.
std::string element_to_string(const GroupSpec& g, const GroupElement& x);

/// Concatenation G x H of two product groups (moduli of g then of h).
GroupSpec product_spec(const GroupSpec& g, const GroupSpec& h);

}  // namespace qftlab

#include "qftlab/black_box.hpp"

namespace qftlab {

BlackBox::BlackBox(Homomorphism psi, std::vector<std::uint64_t> pi, std::uint64_t seed)
    : spec_(psi.domain()), psi_(std::move(psi)), pi_(std::move(pi)), seed_(seed) {
  if (pi_.size() != spec_.order) throw StructuralError("permutation must cover the group");
  std::vector<bool> seen(pi_.size(), false);
  for (std::uint64_t t : pi_) {
    if (t >= pi_.size() || seen[t]) throw StructuralError("pi is not a permutation");
    seen[t] = true;
  }
  psi_table_ = psi_.index_table(spec_.order);
}

BlackBox BlackBox::random(const GroupSpec& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const GroupElement s = element_of(g, uniform_below(rng, g.order));
  std::vector<std::uint64_t> pi = random_permutation(g.order, rng);
  return BlackBox(diagonal_hom(g, s), std::move(pi), seed);
}

std::pair<GroupElement, GroupElement> BlackBox::classical_query(const GroupElement& x,
                                                                const GroupElement& y) {
  const auto [xi, out] = classical_query_index(index_of(spec_, x), index_of(spec_, y));
  return {element_of(spec_, xi), element_of(spec_, out)};
}

std::pair<std::uint64_t, std::uint64_t> BlackBox::classical_query_index(std::uint64_t x,
                                                                        std::uint64_t y) {
  if (x >= spec_.order || y >= spec_.order) throw RangeError("query index out of range");
  ++queries_;
  return {x, pi_[add_indices(spec_, y, psi_table_[x])]};
}

void BlackBox::quantum_query(StateVector& state) {
  if (state.registers != 2 || state.register_dim != spec_.order) {
    throw StructuralError("quantum query needs a two-register state over the box group");
  }
  ++queries_;
  // (I (x) U_pi) A_psi in one pass: |x>|y> -> |x>|pi(y + psi(x))>.
  const std::size_t n = spec_.order;
  std::vector<Cplx> out(state.amps.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t shift = psi_table_[i];
    for (std::size_t j = 0; j < n; ++j) {
      out[i * n + pi_[add_indices(spec_, j, shift)]] = state.amps[i * n + j];
    }
  }
  state.amps.swap(out);
}

OperatorHandle BlackBox::query_unitary() const {
  const std::size_t n = spec_.order;
  std::vector<std::uint64_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;
  std::vector<std::uint64_t> pi_two_reg(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pi_two_reg[i * n + j] = i * n + pi_[j];
  }
  return OperatorHandle::composite(
      {OperatorHandle::index_map(std::move(pi_two_reg)), a_psi(psi_)});
}

}  // namespace qftlab

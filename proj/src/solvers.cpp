#include "qftlab/solvers.hpp"

#include <unordered_map>

#include "qftlab/field.hpp"
#include "qftlab/operators.hpp"

namespace qftlab {
namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) acc = (acc * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  return mod_pow(a % p, p - 2, p);  // p prime, a != 0 mod p
}

}  // namespace

QuantumSolveResult solve_quantum(BlackBox& box, const CharacterBasis& basis,
                                 const GroupElement& a, std::size_t cap) {
  if (!(box.group() == basis.group())) {
    throw StructuralError("basis and box disagree on the group");
  }
  const OperatorHandle f = qft(basis, cap);
  return solve_quantum(box, f, f.adjoint(), a);
}

QuantumSolveResult solve_quantum(BlackBox& box, const OperatorHandle& f,
                                 const OperatorHandle& fdag, const GroupElement& a) {
  const GroupSpec& g = box.group();
  const std::uint64_t before = box.query_count();

  StateVector state = StateVector::basis2(g.order, 0, index_of(g, a));
  tensor_apply(f, fdag, state);
  box.quantum_query(state);
  tensor_apply(fdag, f, state);

  const DeterministicOutcome outcome = deterministic_outcome(state, 1);
  if (!outcome.deterministic) {
    throw IntegrityError(
        "register-1 measurement is not deterministic; hidden psi incompatible or simulator bug");
  }
  return {element_of(g, outcome.outcome), outcome.probability, box.query_count() - before,
          std::move(state)};
}

ClassicalSolveResult solve_classical_collision(BlackBox& box, std::uint64_t budget,
                                               std::mt19937_64& rng) {
  const GroupSpec& g = box.group();
  if (g.rank() != 1 || !is_prime(g.moduli[0])) {
    throw PreconditionError("collision solver needs a cyclic group of prime order");
  }
  const std::uint64_t p = g.moduli[0];
  if (budget > p) budget = p;  // only p distinct x values exist

  ClassicalSolveResult result;
  // seen: permuted output -> (x_i, y_i) of the query that produced it.
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> seen;
  seen.reserve(budget);
  for (std::uint64_t i = 0; i < budget; ++i) {
    const std::uint64_t x = i;  // distinct inputs, as the bound's proof requires
    const std::uint64_t y = uniform_below(rng, p);
    const auto [x_echo, out] = box.classical_query_index(x, y);
    ++result.queries;
    const auto [it, inserted] = seen.emplace(out, std::make_pair(x_echo, y));
    if (!inserted) {
      // pi is injective, so y_i + psi(x_i) = y_j + psi(x_j):
      // psi(1) = (y_i - y_j) * (x_j - x_i)^{-1} mod p.
      const auto [xj, yj] = it->second;
      const std::uint64_t dy = (y + p - yj) % p;
      const std::uint64_t dx = (xj + p - x) % p;
      const std::uint64_t s = (static_cast<unsigned __int128>(dy) * mod_inverse(dx, p)) % p;
      result.psi_one = element_of(g, s);
      result.first_collision = i + 1;
      return result;
    }
  }
  return result;
}

std::uint64_t lower_bound_threshold(std::uint64_t n) {
  if (n < 2) throw RangeError("threshold needs n >= 2");
  // smallest t with 3 t^2 >= 2 n, computed without floating point
  std::uint64_t t = 1;
  while (3 * t * t < 2 * n) ++t;
  return t;
}

double collision_bound(std::uint64_t n, std::uint64_t m) {
  if (m * m >= 2 * n) return 1.0;  // outside the formula's regime; trivial cap
  const double value =
      static_cast<double>(m * m) / static_cast<double>(2 * n - m * m);
  return value > 1.0 ? 1.0 : value;
}

}  // namespace qftlab

#include "qftlab/state.hpp"

#include <cmath>

namespace qftlab {

StateVector StateVector::zero1(std::size_t n) {
  if (n == 0) throw StructuralError("state dimension must be positive");
  return StateVector{n, 1, std::vector<Cplx>(n)};
}

StateVector StateVector::zero2(std::size_t n) {
  if (n == 0) throw StructuralError("state dimension must be positive");
  return StateVector{n, 2, std::vector<Cplx>(n * n)};
}

StateVector StateVector::basis1(std::size_t n, std::uint64_t index) {
  StateVector s = zero1(n);
  if (index >= n) throw RangeError("basis index out of range");
  s.amps[index] = Cplx(1.0, 0.0);
  return s;
}

StateVector StateVector::basis2(std::size_t n, std::uint64_t first, std::uint64_t second) {
  StateVector s = zero2(n);
  if (first >= n || second >= n) throw RangeError("basis index out of range");
  s.amps[first * n + second] = Cplx(1.0, 0.0);
  return s;
}

StateVector StateVector::product(const StateVector& u, const StateVector& v) {
  if (u.registers != 1 || v.registers != 1 || u.register_dim != v.register_dim) {
    throw StructuralError("product state needs two one-register states of equal dimension");
  }
  const std::size_t n = u.register_dim;
  StateVector s = zero2(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s.amps[i * n + j] = u.amps[i] * v.amps[j];
  }
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const Cplx& a : amps) acc += std::norm(a);
  return std::sqrt(acc);
}

namespace {

void require_two_registers(const StateVector& state, int reg) {
  if (state.registers != 2) throw StructuralError("register measurement needs a two-register state");
  if (reg != 1 && reg != 2) throw StructuralError("register must be 1 or 2");
}

}  // namespace

std::vector<double> register_distribution(const StateVector& state, int reg) {
  require_two_registers(state, reg);
  const std::size_t n = state.register_dim;
  double total = 0.0;
  std::vector<double> dist(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double p = std::norm(state.amps[i * n + j]);
      dist[reg == 1 ? i : j] += p;
      total += p;
    }
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw IntegrityError("state norm drifted beyond tolerance before measurement");
  }
  return dist;
}

DeterministicOutcome deterministic_outcome(const StateVector& state, int reg, double threshold) {
  const std::vector<double> dist = register_distribution(state, reg);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] >= threshold) return {true, i, dist[i]};
  }
  return {};
}

std::uint64_t sample_register(const StateVector& state, int reg, std::mt19937_64& rng) {
  const std::vector<double> dist = register_distribution(state, reg);
  // 53-bit uniform in [0, 1); inversion sampling over the cumulative sums.
  const double u =
      static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    acc += dist[i];
    if (u < acc) return i;
  }
  return dist.size() - 1;
}

}  // namespace qftlab

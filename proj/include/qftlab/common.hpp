#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace qftlab {

using Cplx = std::complex<double>;

/// Largest dimension for which dense operator matrices may be materialized.
/// Constructions beyond the cap stay functional (index maps plus phases).
inline constexpr std::size_t kDefaultDenseCap = 4096;

/// Global comparison tolerance for unit-modulus checks and operator identities.
inline constexpr double kDefaultTolerance = 1e-9;

/// Structural misuse: mismatched specs, wrong arity, malformed tables.
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Index or argument outside its admissible range.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// A dense or exhaustive operation was requested above the configured cap.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A state or result violated an invariant that signals a bug, not noise
/// (norm drift, non-deterministic measurement where exactness is guaranteed).
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation's mathematical precondition failed (e.g. an incompatible
/// homomorphism handed to an identity check). Distinct from the identity
/// itself failing.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Text-form parse failure; `position` is the byte offset of the offending token.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic per-task seed derivation from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

/// Uniform draw from [0, n) by rejection. Unlike uniform_int_distribution this
/// is fully pinned by the engine's (standardized) output sequence.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Fisher-Yates shuffle of [0, n) driven by uniform_below.
std::vector<std::uint64_t> random_permutation(std::size_t n, std::mt19937_64& rng);

/// Runs fn(begin, end) over a partition of [0, count). workers == 0 picks
/// hardware concurrency. fn must not touch shared mutable state.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace qftlab

#ifndef MPT_GENERATE_HPP
#define MPT_GENERATE_HPP

#include <cstdint>
#include <string>

#include "mpt/perm.hpp"

namespace mpt {

struct GeneratorSpec {
  enum class Kind { rotation, random_cycle, random_permutation, m_periodic };

  Kind kind = Kind::rotation;
  std::int64_t param = 1; ///< shift for rotation, period for m_periodic

  static GeneratorSpec rotation(std::int64_t a) { return {Kind::rotation, a}; }
  static GeneratorSpec random_cycle() { return {Kind::random_cycle, 0}; }
  static GeneratorSpec random_permutation() { return {Kind::random_permutation, 0}; }
  static GeneratorSpec m_periodic(std::int64_t m) { return {Kind::m_periodic, m}; }
};

/// Deterministic for a fixed (spec, n, seed). Random cycles use Sattolo's
/// algorithm, random permutations Fisher-Yates, both driven by mpt::Rng.
PermSystem generate(const GeneratorSpec &spec, std::size_t n, std::uint64_t seed);

/// Reorders `edits` short windows (2 or 3 consecutive points) of the t-orbit
/// of atom 0 and returns the cycle that follows the new order. The result is
/// again a single n-cycle and differs from t on at most 4 atoms per edit.
/// Requires t ergodic and n >= 5 * edits.
PermSystem orbit_local_edits(const PermSystem &t, std::size_t edits, std::uint64_t seed);

/// Swaps the orbit positions q and q+1 (mod n) of an ergodic t. The result
/// differs from t on exactly 3 atoms when n >= 4.
PermSystem orbit_swap(const PermSystem &t, std::size_t q);

} // namespace mpt

#endif

#ifndef MPT_ROKHLIN_HPP
#define MPT_ROKHLIN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mpt/perm.hpp"

namespace mpt {

/// Base B with levels B, tB, ..., t^{height-1}B plus the atoms left over.
struct RokhlinTower {
  PermSystem transform;
  std::size_t height = 1;
  AtomSet base;
  AtomSet residual;

  /// t^i(B)
  AtomSet level(std::size_t i) const;
  /// Atoms of levels [first, last).
  AtomSet levels(std::size_t first, std::size_t last) const;

  friend bool operator==(const RokhlinTower &, const RokhlinTower &) = default;
};

/// Tower of the given height whose base is every height-th point of the
/// t-orbit of atom 0. Requires t ergodic and 1 <= height <= n.
RokhlinTower rokhlin_tower(const PermSystem &t, std::size_t height);

/// Checks the tower invariants directly from transform, base and residual:
/// levels pairwise disjoint, levels and residual partition the atoms, and the
/// residual has measure (n mod height)/n.
bool tower_is_valid(const RokhlinTower &tower);

/// The height-periodic map that agrees with t off the top level and sends
/// each top-level atom back to the base of its column. Requires height | n.
PermSystem periodic_approximation(const PermSystem &t, std::size_t height);

/// h with conjugate(h, p1) == p2. Cycles are paired by length, then by
/// minimal atom, and aligned at their minimal atoms.
PermSystem conjugate_periodic(const PermSystem &p1, const PermSystem &p2);

/// Merges the cycles of s into one n-cycle by rotating the images of the
/// cycle minima. Returns the cycle and its distance to s (c/n for c > 1
/// cycles, 0 when s is already ergodic).
std::pair<PermSystem, Rational> ergodic_smoothing(const PermSystem &s);

/// k with s(x) = t^{k[x]}(x), each k in (-n/2, n/2].
struct DisplacementCocycle {
  PermSystem s;
  PermSystem t;
  std::vector<std::int64_t> k;
};

DisplacementCocycle displacement_cocycle(const PermSystem &s, const PermSystem &t);

/// Atoms x with |k(x)| >= window or |k_inv(x)| >= window, where k and k_inv
/// are the displacements of s and s^-1 over t.
AtomSet window_exceptions(const PermSystem &s, const PermSystem &t, std::size_t window);

/// Least window M >= 1 whose exception set has measure < bound.
std::size_t min_window(const PermSystem &s, const PermSystem &t, const Rational &bound);

} // namespace mpt

#endif

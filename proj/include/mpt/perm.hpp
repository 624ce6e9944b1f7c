#ifndef MPT_PERM_HPP
#define MPT_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mpt/rational.hpp"

namespace mpt {

using Atom = std::uint32_t;

/// A bijection of {0, ..., n-1}; each atom carries measure 1/n.
///
/// This is the finite stand-in for an automorphism of a probability space.
/// Ergodic means a single n-cycle.
class PermSystem {
public:
  /// Validates that `images` is a bijection of {0, ..., images.size()-1}.
  explicit PermSystem(std::vector<Atom> images);

  static PermSystem identity(std::size_t n);

  std::size_t size() const noexcept { return map_.size(); }
  Atom operator()(Atom x) const { return map_[x]; }
  Atom operator[](Atom x) const { return map_[x]; }
  std::span<const Atom> images() const noexcept { return map_; }

  bool is_identity() const noexcept;

  friend bool operator==(const PermSystem &, const PermSystem &) = default;

private:
  std::vector<Atom> map_;
};

/// A subset of the n atoms, members kept sorted and unique.
class AtomSet {
public:
  AtomSet(std::size_t n, std::vector<Atom> members);
  explicit AtomSet(std::size_t n) : n_(n) {}

  /// Set of atoms whose mask entry is non-zero.
  static AtomSet from_mask(std::span<const char> mask);

  std::size_t universe() const noexcept { return n_; }
  std::size_t count() const noexcept { return members_.size(); }
  std::span<const Atom> members() const noexcept { return members_; }
  bool contains(Atom x) const;
  bool empty() const noexcept { return members_.empty(); }

  Rational measure() const { return Rational(static_cast<std::int64_t>(count()), static_cast<std::int64_t>(n_)); }

  std::vector<char> mask() const;

  friend bool operator==(const AtomSet &, const AtomSet &) = default;

private:
  std::size_t n_ = 0;
  std::vector<Atom> members_;
};

AtomSet set_union(const AtomSet &a, const AtomSet &b);

/// Weak-topology basic neighborhood: all S with mu(S(A_i) symdiff center(A_i)) < epsilon.
struct WeakNeighborhood {
  WeakNeighborhood(PermSystem center, std::vector<AtomSet> sets, Rational epsilon);

  PermSystem center;
  std::vector<AtomSet> sets;
  Rational epsilon;

  friend bool operator==(const WeakNeighborhood &, const WeakNeighborhood &) = default;
};

// Group operations. compose(s, t)(x) = s(t(x)).
PermSystem compose(const PermSystem &s, const PermSystem &t);
PermSystem inverse(const PermSystem &t);
/// h o t o h^-1
PermSystem conjugate(const PermSystem &h, const PermSystem &t);
/// t^k for any integer k (negative powers use the inverse).
PermSystem power(const PermSystem &t, std::int64_t k);

Rational halmos_distance(const PermSystem &s, const PermSystem &t);
/// Atoms where s and t disagree.
AtomSet disagreement(const PermSystem &s, const PermSystem &t);

/// Image of a set under t.
AtomSet image(const PermSystem &t, const AtomSet &a);
bool neighborhood_contains(const WeakNeighborhood &nbhd, const PermSystem &s);

/// Cycles, each listed from its minimal atom, sorted by minimal atom.
std::vector<std::vector<Atom>> cycles(const PermSystem &t);
/// Sorted cycle lengths.
std::vector<std::size_t> cycle_type(const PermSystem &t);

bool is_ergodic(const PermSystem &t);
bool is_m_periodic(const PermSystem &t, std::size_t m);

/// The t-orbit of atom 0: orbit[i] = t^i(0). Requires t ergodic.
std::vector<Atom> orbit_of_zero(const PermSystem &t);

// Named constructors used throughout the tests and the CLI.
PermSystem rotation(std::size_t n, std::int64_t a);
PermSystem transposition(std::size_t n, Atom a, Atom b);
PermSystem from_cycles(std::size_t n, const std::vector<std::vector<Atom>> &cycles);

} // namespace mpt

#endif

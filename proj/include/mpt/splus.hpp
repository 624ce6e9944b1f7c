#ifndef MPT_SPLUS_HPP
#define MPT_SPLUS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "mpt/perm.hpp"
#include "mpt/rational.hpp"

namespace mpt {

/// Finite prefix of an injective sequence of rationals.
class FiniteSequence {
public:
  /// Throws Error(input) if empty, Error(distinctness) on a repeated entry.
  explicit FiniteSequence(std::vector<Rational> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational &operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  friend bool operator==(const FiniteSequence &, const FiniteSequence &) = default;

private:
  std::vector<Rational> entries_;
};

/// Open interval (lo, hi).
struct Interval {
  Rational lo;
  Rational hi;
  bool contains(const Rational &v) const { return lo < v && v < hi; }
  friend bool operator==(const Interval &, const Interval &) = default;
};

/// Index permutations acting on sequences: entry i of x moves to slot g(i).
struct FinitePermWitness {
  PermSystem gx;
  PermSystem gy;
  std::size_t k = 0;
  friend bool operator==(const FinitePermWitness &, const FinitePermWitness &) = default;
};

struct SharedSubset {
  std::vector<std::size_t> p; ///< indices into x
  std::vector<std::size_t> q; ///< indices into y, x[p[i]] == y[q[i]]
  friend bool operator==(const SharedSubset &, const SharedSubset &) = default;
};

/// Squiggle witness together with everything needed to recheck it.
struct SquiggleCertificate {
  FiniteSequence x;
  FiniteSequence y;
  std::vector<Interval> box;
  FinitePermWitness witness;
  friend bool operator==(const SquiggleCertificate &, const SquiggleCertificate &) = default;
};

struct SquigglePath {
  FiniteSequence x;
  FiniteSequence y;
  FiniteSequence z;
  SharedSubset xz;
  SharedSubset yz;
  friend bool operator==(const SquigglePath &, const SquigglePath &) = default;
};

/// (g.x)[g(i)] = x[i]
FiniteSequence act(const PermSystem &g, const FiniteSequence &x);

bool eplus_check(const FiniteSequence &x, const FiniteSequence &y);

/// z[2i] = x[i], z[2i+1] = y[i].
FiniteSequence interleave(const FiniteSequence &x, const FiniteSequence &y);

/// Every value x and y share, as index lists sorted by value.
SharedSubset shared_subset_witness(const FiniteSequence &x, const FiniteSequence &y);

/// Permutations bringing the same r = box.size() shared values, one per
/// interval, to the front of x and y. Throws Error(density) naming the
/// interval that cannot be served.
FinitePermWitness squiggle_witness(const FiniteSequence &x, const FiniteSequence &y,
                                   std::span<const Interval> box, std::size_t k);

bool verify_squiggle(const SquiggleCertificate &cert);

SquigglePath squiggle_path(const FiniteSequence &x, const FiniteSequence &y);

bool verify_squiggle_path(const SquigglePath &path);

} // namespace mpt

#endif

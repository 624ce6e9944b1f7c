#ifndef MPT_CONJUGATOR_HPP
#define MPT_CONJUGATOR_HPP

#include <optional>
#include <vector>

#include "mpt/perm.hpp"
#include "mpt/rokhlin.hpp"

namespace mpt {

/// constraints[i] = j means the column permutation must send i to j.
using PartialMap = std::vector<std::optional<Atom>>;

/// The induced permutation of one tower column and its standardizer.
struct ColumnPermutation {
  std::size_t height = 0;
  PartialMap constraints;
  PermSystem sigma;  ///< single cycle extending the constraints
  PermSystem tau;    ///< tau o sigma o tau^-1 = (0 1 ... height-1)
  Atom start = 0;    ///< tau(start) = 0
};

/// Extends an injective, acyclic partial map to a single cycle of `height`.
/// Maximal constraint paths are chained in increasing order of their
/// smallest atom and the last path is closed back onto the first.
/// Throws Error(completion) if the constraints contain a cycle shorter than
/// height, Error(input) if they are not an injective map into range.
PermSystem complete_to_cycle(const PartialMap &constraints, std::size_t height);

/// The unique tau with tau o sigma o tau^-1 = (0 1 ... N-1) and
/// tau(anchor) = anchor, i.e. tau(sigma^m(anchor)) = anchor + m mod N.
PermSystem standardize(const PermSystem &sigma, Atom anchor);

/// The standardizer that walks sigma from `start`: tau(sigma^m(start)) = m.
/// standardize(sigma, a) equals standardize_from(sigma, sigma^{-a}(a)).
PermSystem standardize_from(const PermSystem &sigma, Atom start);

/// Rotation start for a completed column. The start must not be the target
/// of a constraint, so that the step where the column wraps around (level
/// N-1 to level 0) replaces an unconstrained edge of sigma. Among such
/// starts, picks the one whose standardizer fixes the most levels, ties to
/// the smaller atom. With no unconstrained edge at all, returns 0.
Atom choose_start(const PartialMap &constraints, const PermSystem &sigma);

/// Builds the column permutation for the given constraints.
ColumnPermutation column_permutation(const PartialMap &constraints, std::size_t height);

/// Output of the near-identity conjugator pipeline.
struct ConjugatorCertificate {
  PermSystem s;
  PermSystem t;
  PermSystem h;
  std::size_t window = 1;
  RokhlinTower tower;
  AtomSet l0;
  AtomSet l1;
  AtomSet l2;
  Rational delta_target;
  Rational measured_conj_dist; ///< d(h t h^-1, s)
  Rational measured_id_dist;   ///< d(h, id)
  Rational input_dist;         ///< d(s, t)

  AtomSet exceptional() const { return set_union(set_union(l0, l1), l2); }
  /// h moved more mass than s and t disagree on. Reported, not an error.
  bool id_flagged() const { return measured_id_dist > input_dist; }

  friend bool operator==(const ConjugatorCertificate &, const ConjugatorCertificate &) = default;
};

/// Least tower height N <= n with 2*window/N < budget and (n mod N)/n < budget.
std::optional<std::size_t> tower_height_for(std::size_t n, std::size_t window, const Rational &budget);

/// Runs the column construction for a fixed window and tower height. The
/// delta_target of the result is left at 1 and is not checked; callers that
/// need the budgeted pipeline use build_conjugator.
ConjugatorCertificate construct_conjugator(const PermSystem &s, const PermSystem &t, std::size_t window,
                                           std::size_t height, unsigned jobs = 1);

/// Given single n-cycles s and t, finds h with d(h t h^-1, s) <= mu(L) < delta
/// where L = l0 u l1 u l2 and each part gets a delta/3 budget.
/// Throws Error(resolution) when no tower height fits the budget.
ConjugatorCertificate build_conjugator(const PermSystem &s, const PermSystem &t, const Rational &delta,
                                       unsigned jobs = 1);

/// Rechecks a certificate using composition and counting only.
bool verify_conjugator(const ConjugatorCertificate &cert);

} // namespace mpt

#endif

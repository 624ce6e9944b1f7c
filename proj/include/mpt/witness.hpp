#ifndef MPT_WITNESS_HPP
#define MPT_WITNESS_HPP

#include <cstdint>

#include "mpt/conjugator.hpp"
#include "mpt/perm.hpp"

namespace mpt {

/// One finite instance of the conjugacy-orbit closeness relation:
/// g1 t1 g1^-1 and g2 t2 g2^-1 both lie in U, and h (within v_eps of the
/// identity) conjugates the first to within 2*delta of the second.
struct UnbalancedWitness {
  PermSystem t1;
  PermSystem t2;
  WeakNeighborhood u_spec;
  Rational v_eps;
  Rational delta;
  std::uint64_t seed = 0;
  PermSystem g1;
  PermSystem g2;
  PermSystem h;
  PermSystem conj1;
  PermSystem conj2;
  Rational final_dist;
  ConjugatorCertificate inner_cert;

  friend bool operator==(const UnbalancedWitness &, const UnbalancedWitness &) = default;
};

/// g with conjugate(g, t) == target, aligning the t-orbit of 0 with the
/// target-orbit of 0. Throws Error(target) if target is outside u_spec.
PermSystem find_conjugate_in_neighborhood(const PermSystem &t, const WeakNeighborhood &u_spec,
                                          const PermSystem &target);

/// Throws Error(feasibility) when U holds no suitable pair of cycles,
/// Error(neighborhood) when the conjugator leaves the v_eps ball, and
/// propagates Error(resolution) from build_conjugator.
UnbalancedWitness build_unbalanced_witness(const PermSystem &t1, const PermSystem &t2,
                                           const WeakNeighborhood &u_spec, const Rational &v_eps,
                                           const Rational &delta, std::uint64_t seed, unsigned jobs = 1);

bool verify_witness(const UnbalancedWitness &w);

} // namespace mpt

#endif

#include "mpt/witness.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "mpt/error.hpp"
#include "mpt/generate.hpp"
#include "mpt/random.hpp"
#include "mpt/rokhlin.hpp"

namespace mpt {

PermSystem find_conjugate_in_neighborhood(const PermSystem &t, const WeakNeighborhood &u_spec,
                                          const PermSystem &target) {
  if (t.size() != u_spec.center.size() || target.size() != t.size())
    throw Error(ErrorKind::dimension, "atom counts differ");
  if (!is_ergodic(t) || !is_ergodic(target))
    throw Error(ErrorKind::ergodicity, "t and target must both be single cycles");
  if (!neighborhood_contains(u_spec, target))
    throw Error(ErrorKind::target, "target lies outside the neighborhood");
  auto from = orbit_of_zero(t);
  auto to = orbit_of_zero(target);
  std::vector<Atom> g(t.size());
  for (std::size_t i = 0; i < from.size(); ++i)
    g[from[i]] = to[i];
  return PermSystem(std::move(g));
}

UnbalancedWitness build_unbalanced_witness(const PermSystem &t1, const PermSystem &t2,
                                           const WeakNeighborhood &u_spec, const Rational &v_eps,
                                           const Rational &delta, std::uint64_t seed, unsigned jobs) {
  const auto n = t1.size();
  if (t2.size() != n || u_spec.center.size() != n)
    throw Error(ErrorKind::dimension, "atom counts differ");
  if (!is_ergodic(t1) || !is_ergodic(t2))
    throw Error(ErrorKind::ergodicity, "t1 and t2 must both be single cycles");
  if (delta <= 0 || delta > 1 || v_eps <= 0 || v_eps > 1)
    throw Error(ErrorKind::input, "delta and v_eps must lie in (0, 1]");

  // P1: the center itself when it is a cycle, else its cheapest merge.
  PermSystem p1 = ergodic_smoothing(u_spec.center).first;
  if (!neighborhood_contains(u_spec, p1))
    throw Error(ErrorKind::feasibility, "no single cycle near the center lies in U");

  // P2: a seeded swap of two orbit-adjacent points of P1, moved along the
  // orbit until it lands in U.
  const Rational pair_bound = std::min(delta, v_eps / 2);
  if (n < 4 || !(Rational(3, static_cast<std::int64_t>(n)) < pair_bound))
    throw Error(ErrorKind::feasibility, "an orbit swap moves 3/" + std::to_string(n) +
                                            " of the space, not below " + to_string(pair_bound));
  Rng rng(seed);
  const auto start = static_cast<std::size_t>(rng.below(n));
  std::optional<PermSystem> p2;
  for (std::size_t step = 0; step < n && !p2; ++step) {
    auto candidate = orbit_swap(p1, (start + step) % n);
    if (neighborhood_contains(u_spec, candidate) && halmos_distance(p1, candidate) < pair_bound)
      p2 = std::move(candidate);
  }
  if (!p2)
    throw Error(ErrorKind::feasibility, "no orbit swap of the base cycle stays inside U");

  auto g1 = find_conjugate_in_neighborhood(t1, u_spec, p1);
  auto g2 = find_conjugate_in_neighborhood(t2, u_spec, *p2);

  auto inner = build_conjugator(*p2, p1, delta, jobs);
  if (!(inner.measured_id_dist < v_eps))
    throw Error(ErrorKind::neighborhood, "conjugator is " + to_string(inner.measured_id_dist) +
                                             " from the identity, not below " + to_string(v_eps));

  auto final_dist = halmos_distance(conjugate(inner.h, p1), *p2);
  if (!(final_dist < 2 * delta))
    throw std::logic_error("final distance exceeds 2 delta");

  auto h = inner.h;
  return UnbalancedWitness{t1, t2, u_spec, v_eps, delta, seed, std::move(g1), std::move(g2), std::move(h),
                           std::move(p1), std::move(*p2), final_dist, std::move(inner)};
}

bool verify_witness(const UnbalancedWitness &w) {
  try {
    const auto n = w.t1.size();
    for (const auto *p : {&w.t2, &w.g1, &w.g2, &w.h, &w.conj1, &w.conj2, &w.u_spec.center})
      if (p->size() != n)
        return false;
    if (!is_ergodic(w.t1) || !is_ergodic(w.t2))
      return false;
    if (!(w.delta > 0 && w.delta <= 1 && w.v_eps > 0 && w.v_eps <= 1))
      return false;

    if (conjugate(w.g1, w.t1) != w.conj1 || conjugate(w.g2, w.t2) != w.conj2)
      return false;
    if (!neighborhood_contains(w.u_spec, w.conj1) || !neighborhood_contains(w.u_spec, w.conj2))
      return false;
    if (!(halmos_distance(w.conj1, w.conj2) < w.v_eps / 2))
      return false;
    if (!(halmos_distance(w.h, PermSystem::identity(n)) < w.v_eps))
      return false;

    const auto forward = halmos_distance(conjugate(w.h, w.conj1), w.conj2);
    if (forward != w.final_dist || !(forward < 2 * w.delta))
      return false;
    const auto backward = halmos_distance(conjugate(inverse(w.h), w.conj2), w.conj1);
    if (!(backward < 2 * w.delta))
      return false;

    const auto &inner = w.inner_cert;
    if (inner.s != w.conj2 || inner.t != w.conj1 || inner.h != w.h || inner.delta_target != w.delta)
      return false;
    return verify_conjugator(inner);
  } catch (const Error &) {
    return false;
  }
}

} // namespace mpt

// Seeded inputs shared by the unit suites and the acceptance binary.
#ifndef MPT_TESTS_FIXTURES_HPP
#define MPT_TESTS_FIXTURES_HPP

#include <numeric>
#include <vector>

#include "mpt/generate.hpp"
#include "mpt/perm.hpp"
#include "mpt/random.hpp"
#include "mpt/splus.hpp"

namespace fixtures {

/// Weak neighborhood around a random n-cycle with `sets` disjoint marker
/// sets of `set_size` atoms each.
inline mpt::WeakNeighborhood random_neighborhood(std::size_t n, std::size_t sets, std::size_t set_size,
                                                 const mpt::Rational &eps, std::uint64_t seed) {
  mpt::Rng rng(seed);
  auto center = mpt::generate(mpt::GeneratorSpec::random_cycle(), n, rng.next());
  std::vector<mpt::Atom> order(n);
  std::iota(order.begin(), order.end(), mpt::Atom{0});
  rng.shuffle(std::span<mpt::Atom>(order));
  std::vector<mpt::AtomSet> out;
  for (std::size_t i = 0; i < sets; ++i) {
    auto first = order.begin() + static_cast<long>(i * set_size);
    out.emplace_back(n, std::vector<mpt::Atom>(first, first + static_cast<long>(set_size)));
  }
  return mpt::WeakNeighborhood(std::move(center), std::move(out), eps);
}

/// `count` distinct rationals p/q with small denominators, in random order.
inline std::vector<mpt::Rational> distinct_rationals(std::size_t count, mpt::Rng &rng) {
  std::vector<mpt::Rational> out;
  std::vector<char> used;
  // distinct numerators over a fixed denominator stay distinct after reduction
  const std::int64_t q = 1 + static_cast<std::int64_t>(rng.below(12));
  const std::size_t range = 4 * count + 8;
  used.assign(range, 0);
  while (out.size() < count) {
    auto p = rng.below(range);
    if (used[p])
      continue;
    used[p] = 1;
    out.emplace_back(static_cast<std::int64_t>(p), q);
  }
  return out;
}

/// x and y of length `len` sharing exactly `shared` values, each shuffled.
inline std::pair<mpt::FiniteSequence, mpt::FiniteSequence> planted_pair(std::size_t len, std::size_t shared,
                                                                        mpt::Rng &rng) {
  auto pool = distinct_rationals(2 * len - shared, rng);
  std::vector<mpt::Rational> x(pool.begin(), pool.begin() + static_cast<long>(len));
  std::vector<mpt::Rational> y(pool.begin(), pool.begin() + static_cast<long>(shared));
  y.insert(y.end(), pool.begin() + static_cast<long>(len), pool.end());
  rng.shuffle(std::span<mpt::Rational>(x));
  rng.shuffle(std::span<mpt::Rational>(y));
  return {mpt::FiniteSequence(std::move(x)), mpt::FiniteSequence(std::move(y))};
}

} // namespace fixtures

#endif

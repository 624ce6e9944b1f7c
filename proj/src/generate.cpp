#include "mpt/generate.hpp"

#include <array>
#include <numeric>
#include <string>

#include "mpt/error.hpp"
#include "mpt/random.hpp"

namespace mpt {

namespace {

std::vector<Atom> iota_atoms(std::size_t n) {
  std::vector<Atom> v(n);
  std::iota(v.begin(), v.end(), Atom{0});
  return v;
}

PermSystem follow_order(const std::vector<Atom> &order) {
  std::vector<Atom> images(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    images[order[i]] = order[(i + 1) % order.size()];
  return PermSystem(std::move(images));
}

} // namespace

PermSystem generate(const GeneratorSpec &spec, std::size_t n, std::uint64_t seed) {
  if (n == 0)
    throw Error(ErrorKind::input, "atom count must be positive");
  Rng rng(seed);
  switch (spec.kind) {
  case GeneratorSpec::Kind::rotation:
    return rotation(n, spec.param);
  case GeneratorSpec::Kind::random_cycle: {
    // Sattolo: x -> a[x] is a uniform n-cycle.
    auto a = iota_atoms(n);
    for (std::size_t i = n - 1; i > 0; --i)
      std::swap(a[i], a[rng.below(i)]);
    return PermSystem(std::move(a));
  }
  case GeneratorSpec::Kind::random_permutation: {
    auto a = iota_atoms(n);
    rng.shuffle(std::span<Atom>(a));
    return PermSystem(std::move(a));
  }
  case GeneratorSpec::Kind::m_periodic: {
    if (spec.param < 1)
      throw Error(ErrorKind::input, "period must be at least 1");
    auto m = static_cast<std::size_t>(spec.param);
    if (n % m != 0)
      throw Error(ErrorKind::divisibility,
                  "period " + std::to_string(m) + " does not divide " + std::to_string(n));
    auto order = iota_atoms(n);
    rng.shuffle(std::span<Atom>(order));
    std::vector<Atom> images(n);
    for (std::size_t c = 0; c < n; c += m)
      for (std::size_t i = 0; i < m; ++i)
        images[order[c + i]] = order[c + (i + 1) % m];
    return PermSystem(std::move(images));
  }
  }
  throw Error(ErrorKind::input, "unknown generator kind");
}

PermSystem orbit_local_edits(const PermSystem &t, std::size_t edits, std::uint64_t seed) {
  auto order = orbit_of_zero(t);
  const auto n = order.size();
  if (edits == 0)
    return t;
  if (n < 5 * edits)
    throw Error(ErrorKind::input, "too many edits for " + std::to_string(n) + " atoms");

  // The five non-identity arrangements of a 3-window.
  static constexpr std::array<std::array<int, 3>, 5> kThree{
      {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

  Rng rng(seed);
  const std::size_t block = n / edits;
  for (std::size_t b = 0; b < edits; ++b) {
    const std::size_t width = 2 + rng.below(2);
    const std::size_t first = b * block + 1 + rng.below(block - 1 - width);
    if (width == 2) {
      std::swap(order[first], order[first + 1]);
    } else {
      const auto &arr = kThree[rng.below(kThree.size())];
      std::array<Atom, 3> window{order[first], order[first + 1], order[first + 2]};
      for (std::size_t i = 0; i < 3; ++i)
        order[first + i] = window[arr[i]];
    }
  }
  return follow_order(order);
}

PermSystem orbit_swap(const PermSystem &t, std::size_t q) {
  auto order = orbit_of_zero(t);
  const auto n = order.size();
  std::swap(order[q % n], order[(q + 1) % n]);
  return follow_order(order);
}

} // namespace mpt

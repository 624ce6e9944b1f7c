#ifndef MPT_RANDOM_HPP
#define MPT_RANDOM_HPP

#include <cstdint>
#include <random>
#include <span>

namespace mpt {

/// Portable seeded generator.
///
/// Draws come from std::mt19937_64, whose output sequence is fixed by the
/// standard. Bounded integers use rejection sampling on the raw 64-bit output
/// rather than std::uniform_int_distribution, whose algorithm is
/// implementation-defined, so a seed means the same thing on every toolchain.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  template <typename T> void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      auto j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

} // namespace mpt

#endif

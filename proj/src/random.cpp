#include "mpt/random.hpp"

#include "mpt/error.hpp"

namespace mpt {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0)
    throw Error(ErrorKind::input, "empty sampling range");
  // Reject the low 2^64 mod bound draws so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x >= threshold)
      return x % bound;
  }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo)
    throw Error(ErrorKind::input, "empty sampling range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

} // namespace mpt

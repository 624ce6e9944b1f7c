#ifndef MPT_RATIONAL_HPP
#define MPT_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace mpt {

/// Exact rational kept in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// Measure of `count` atoms out of `n`.
inline Rational measure(std::int64_t count, std::int64_t n) { return Rational(count, n); }

/// Always `p/q`, including integers (`0/1`, `1/1`).
std::string to_string(const Rational &r);

/// Accepts `p/q` or a bare integer `p`. Throws Error(parse) otherwise.
Rational parse_rational(std::string_view text);

} // namespace mpt

#endif

// Shared helpers for the doctest suites.
#ifndef MPT_TESTS_SUPPORT_HPP
#define MPT_TESTS_SUPPORT_HPP

#include <doctest.h>

#include <string>

#include "mpt/error.hpp"
#include "mpt/perm.hpp"
#include "mpt/rational.hpp"

namespace doctest {
template <> struct StringMaker<mpt::Rational> {
  static String convert(const mpt::Rational &r) { return mpt::to_string(r).c_str(); }
};
} // namespace doctest

namespace testing {

inline bool throws_kind(mpt::ErrorKind kind, const auto &fn) {
  try {
    fn();
  } catch (const mpt::Error &e) {
    return e.kind() == kind;
  }
  return false;
}

// doctest does not cope with boost's mixed rational/int comparisons, so the
// suites compare against this instead.
inline mpt::Rational frac(std::int64_t p, std::int64_t q = 1) { return mpt::Rational(p, q); }

} // namespace testing

#endif

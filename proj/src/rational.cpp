#include "mpt/rational.hpp"

#include <charconv>

#include "mpt/error.hpp"

namespace mpt {

std::string to_string(const Rational &r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (!text.empty() && text.front() == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw Error(ErrorKind::parse, "not a rational: '" + std::string(whole) + "'");
  return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0)
    throw Error(ErrorKind::parse, "zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

} // namespace mpt

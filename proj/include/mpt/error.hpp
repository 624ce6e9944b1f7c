#ifndef MPT_ERROR_HPP
#define MPT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mpt {

enum class ErrorKind {
  dimension,
  divisibility,
  ergodicity,
  height,
  conjugacy,
  completion,
  input,
  resolution,
  target,
  feasibility,
  neighborhood,
  distinctness,
  density,
  parse,
  io,
};

std::string_view error_name(ErrorKind kind);

/// Domain error raised by every module. The kind is what the CLI reports.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace mpt

#endif

#include "mpt/error.hpp"

namespace mpt {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::dimension: return "dimension error";
  case ErrorKind::divisibility: return "divisibility error";
  case ErrorKind::ergodicity: return "ergodicity error";
  case ErrorKind::height: return "height error";
  case ErrorKind::conjugacy: return "conjugacy error";
  case ErrorKind::completion: return "completion error";
  case ErrorKind::input: return "input error";
  case ErrorKind::resolution: return "resolution error";
  case ErrorKind::target: return "target error";
  case ErrorKind::feasibility: return "feasibility error";
  case ErrorKind::neighborhood: return "neighborhood error";
  case ErrorKind::distinctness: return "distinctness error";
  case ErrorKind::density: return "density error";
  case ErrorKind::parse: return "parse error";
  case ErrorKind::io: return "io error";
  }
  return "error";
}

} // namespace mpt

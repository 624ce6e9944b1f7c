#ifndef MPT_CLI_HPP
#define MPT_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace mpt::cli {

/// 0 success, 1 verification failure, 2 input or feasibility error.
struct CommandResult {
  int exit_code = 0;
  std::vector<std::filesystem::path> output_paths;
};

/// args excludes the program name.
CommandResult run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mpt::cli

#endif

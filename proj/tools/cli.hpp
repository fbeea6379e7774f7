#ifndef AGCHECK_TOOLS_CLI_HPP_
#define AGCHECK_TOOLS_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace agcheck::cli {

  inline constexpr int exit_ok      = 0;
  inline constexpr int exit_failed  = 1;  // a checked property failed
  inline constexpr int exit_invalid = 2;  // input or usage error

  //! Runs one command line; args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace agcheck::cli

#endif  // AGCHECK_TOOLS_CLI_HPP_

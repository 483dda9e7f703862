#ifndef SNELLFAGNANO_CLI_APP_HPP
#define SNELLFAGNANO_CLI_APP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "snellfagnano/cli/json_format.hpp"
#include "snellfagnano/tolerances.hpp"

namespace sf::cli {

inline constexpr std::string_view kVersion = "snellfagnano 1.0.0";

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,  // a standing assertion of the library failed
  kInvalidInput = 2,
  kNonexistence = 3,
  kDynamicsFailure = 4,
  kIoFailure = 5,
};

struct CommandResult {
  int exit_code = kOk;
  Json doc;
  // Figure produced by `render`, or by any command when requested.
  std::optional<std::string> svg;
};

struct CommandOptions {
  // Defaults merged with any config file. A job's own "tolerances" object
  // overrides these, and command-line overrides (from --tol) override both.
  Tolerances tol;
  Json tol_overrides = Json::object();
  bool want_svg = false;
};

// Runs one job. Never throws; failures are reported in the document and
// the exit code.
CommandResult execute(std::string_view command, const Json& spec, const CommandOptions& opts);

// Reads tolerance overrides by field name; unknown names are rejected.
Tolerances apply_tolerances(const Tolerances& base, const Json& overrides);

// Full command line, streams injected for testing.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sf::cli

#endif  // SNELLFAGNANO_CLI_APP_HPP

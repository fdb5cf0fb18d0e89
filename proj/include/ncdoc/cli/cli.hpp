#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace ncdoc::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kUsage = 2, kRuntime = 3 };

/// Error carrying a machine-readable code and an exit status.
class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, std::string code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code), code_(std::move(code)) {}
  int exit_code() const { return exit_code_; }
  const std::string& code() const { return code_; }

 private:
  int exit_code_;
  std::string code_;
};

struct RunManifest {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string version = kVersion;
  std::string started;
  std::string finished;
  std::vector<std::string> outputs;

  nlohmann::json to_json() const;
};

/// Entry point used by the executable and the tests; args exclude argv[0].
/// Errors are written to `err` as one line: "error: <code>: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncdoc::cli

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncdoc/check_result.hpp"
#include "ncdoc/ncalg/random.hpp"

namespace ncdoc::verify {

struct CheckSpec {
  std::string name;
  std::function<CheckResult(std::uint64_t seed)> run;
};

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All registered checks in report order.
const std::vector<CheckSpec>& registry();

/// Checks whose names match any of the shell-style globs, in registry order.
/// An empty list selects everything. Throws UnknownCheck for a glob that
/// matches nothing.
std::vector<const CheckSpec*> select_checks(const std::vector<std::string>& globs);

struct SuiteOptions {
  std::uint64_t seed = ncalg::kDefaultSeed;
  std::vector<std::string> only;
  bool parallel = true;
};

/// Runs the selected checks (concurrently when requested) and returns their
/// results in registry order. Exceptions escaping a check become failures.
std::vector<CheckResult> run_suite(const SuiteOptions& options = {});

nlohmann::json to_json(const CheckResult& r);
nlohmann::json report_json(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace ncdoc::verify

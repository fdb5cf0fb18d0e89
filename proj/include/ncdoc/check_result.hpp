#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ncdoc {

enum class Status { pass, fail, indeterminate };

std::string to_string(Status status);

/// Outcome of one named verification.
///
/// For symbolic checks `residual_terms` holds the text form of the nonzero
/// residual terms (empty means an exact zero); numeric checks fill
/// `numeric_residual` and `tolerance` instead.
struct CheckResult {
  std::string name;
  std::string paper_anchor;
  Status status = Status::indeterminate;
  std::vector<std::string> residual_terms;
  std::size_t residual_size = 0;
  std::optional<double> numeric_residual;
  std::optional<double> tolerance;
  std::string notes;

  bool passed() const { return status == Status::pass; }

  static CheckResult numeric(std::string name, std::string anchor, double residual,
                             double tolerance, std::string notes = {});
  static CheckResult boolean(std::string name, std::string anchor, bool ok,
                             std::string notes = {});
  static CheckResult indeterminate(std::string name, std::string anchor, std::string notes);
};

}  // namespace ncdoc

#include "ncdoc/check_result.hpp"

#include <cmath>

namespace ncdoc {

std::string to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

CheckResult CheckResult::numeric(std::string name, std::string anchor, double residual,
                                 double tolerance, std::string notes) {
  CheckResult r;
  r.name = std::move(name);
  r.paper_anchor = std::move(anchor);
  r.numeric_residual = residual;
  r.tolerance = tolerance;
  r.status = std::isfinite(residual) && residual <= tolerance ? Status::pass : Status::fail;
  r.notes = std::move(notes);
  return r;
}

CheckResult CheckResult::boolean(std::string name, std::string anchor, bool ok, std::string notes) {
  CheckResult r;
  r.name = std::move(name);
  r.paper_anchor = std::move(anchor);
  r.status = ok ? Status::pass : Status::fail;
  r.notes = std::move(notes);
  return r;
}

CheckResult CheckResult::indeterminate(std::string name, std::string anchor, std::string notes) {
  CheckResult r;
  r.name = std::move(name);
  r.paper_anchor = std::move(anchor);
  r.status = Status::indeterminate;
  r.notes = std::move(notes);
  return r;
}

}  // namespace ncdoc

#include "ncdoc/docsim/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncdoc::docsim {

std::string to_string(ChaosStatus s) {
  switch (s) {
    case ChaosStatus::ok: return "ok";
    case ChaosStatus::degenerate: return "degenerate";
    case ChaosStatus::overflow: return "overflow";
  }
  return "?";
}

ChaosRun doc_chaos_run(int order, double k, double y0, double y1, std::size_t steps) {
  if (order < 1) throw std::invalid_argument("order: must be at least 1");
  if (steps < 2) throw std::invalid_argument("steps: must be at least 2");
  ChaosRun run;
  run.order = order;
  run.k = k;
  auto& y = run.y;
  const auto n = static_cast<std::size_t>(order);
  for (std::size_t i = 0; i <= n && y.size() < steps; ++i) y.push_back(y0 + static_cast<double>(i) * (y1 - y0));
  auto& rep = run.report;
  bool above = false;
  auto note = [&](std::size_t idx) {
    const double a = std::abs(y[idx]);
    rep.max_abs = std::max(rep.max_abs, a);
    const bool now = a > kBlowUpThreshold;
    if (now && !above) {
      ++rep.crossings;
      if (!rep.first_blow_up) rep.first_blow_up = idx;
    }
    above = now;
  };
  for (std::size_t i = 0; i < y.size(); ++i) note(i);
  while (y.size() < steps) {
    const std::size_t t = y.size() - n - 1;
    const double den = y[t + 1] - 2 * y[t];
    if (std::abs(den) < kDegenerateGuard) {
      rep.status = ChaosStatus::degenerate;
      rep.stop_index = t;
      break;
    }
    const double next = (k - y[t + n] * y[t]) / den;
    if (!std::isfinite(next)) {
      rep.status = ChaosStatus::overflow;
      rep.stop_index = t;
      break;
    }
    y.push_back(next);
    note(y.size() - 1);
  }
  rep.blow_up = rep.first_blow_up.has_value();
  return run;
}

CheckResult doc_chaos_invariant(const std::vector<double>& y, double k, int order, double tol) {
  if (order < 1) throw std::invalid_argument("order: must be at least 1");
  const auto n = static_cast<std::size_t>(order);
  double worst = 0;
  std::size_t where = 0, points = 0;
  for (std::size_t t = 0; t + n + 1 < y.size(); ++t, ++points) {
    const double a = y[t + n + 1] * (y[t + 1] - 2 * y[t]);
    const double b = y[t + n] * y[t];
    const double scale = std::max({std::abs(k), std::abs(a), std::abs(b)});
    const double rel = scale > 0 ? std::abs(a + b - k) / scale : 0.0;
    if (rel > worst) {
      worst = rel;
      where = t;
    }
  }
  return CheckResult::numeric("doc_chaos.invariant", "Y^(n+1)(Y' - 2Y) = k - Y^(n) Y", worst, tol,
                              std::to_string(points) + " points, worst at index " + std::to_string(where));
}

ScanResult doc_chaos_scan(std::size_t steps) {
  ScanResult out;
  for (int a = 0; a <= 100; ++a)
    for (int b = 0; b <= 100; ++b) {
      const double y0 = (50 + a) / 100.0, y1 = (50 + b) / 100.0;
      const auto bounded = doc_chaos_run(1, 0.0001, y0, y1, steps);
      if (bounded.report.blow_up || bounded.report.status != ChaosStatus::ok) continue;
      const auto unbounded = doc_chaos_run(1, 0.009, y0, y1, steps);
      if (!unbounded.report.blow_up) continue;
      out.passing.emplace_back(y0, y1);
      if (!out.chosen_blow_up || *unbounded.report.first_blow_up < *out.chosen_blow_up) {
        out.chosen = std::make_pair(y0, y1);
        out.chosen_blow_up = unbounded.report.first_blow_up;
      }
    }
  return out;
}

}  // namespace ncdoc::docsim

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncdoc/check_result.hpp"

namespace ncdoc::docsim {

inline constexpr double kBlowUpThreshold = 1e6;
inline constexpr double kDegenerateGuard = 1e-12;
/// Frozen initial pair, selected by doc_chaos_scan.
inline constexpr double kChaosY0 = 1.16;
inline constexpr double kChaosY1 = 1.23;

enum class ChaosStatus { ok, degenerate, overflow };
std::string to_string(ChaosStatus s);

struct PhaseReport {
  ChaosStatus status = ChaosStatus::ok;
  /// Index t whose denominator Y[t+1] - 2Y[t] was too small, or whose
  /// successor was not finite.
  std::optional<std::size_t> stop_index;
  double max_abs = 0;
  bool blow_up = false;
  std::optional<std::size_t> first_blow_up;
  /// Number of upward crossings of the blow-up threshold by |Y|.
  std::size_t crossings = 0;
};

struct ChaosRun {
  int order = 1;
  double k = 0;
  std::vector<double> y;
  PhaseReport report;
};

/// Iterates Y[t+n+1] = (k - Y[t+n] Y[t]) / (Y[t+1] - 2 Y[t]) until the series
/// holds `steps` values. The first n+1 values are y0, y1, y1 + (y1 - y0), ...
/// Throws std::invalid_argument for order < 1 or steps < 2.
ChaosRun doc_chaos_run(int order, double k, double y0 = kChaosY0, double y1 = kChaosY1,
                       std::size_t steps = 5000);

/// Y[t+n+1] (Y[t+1] - 2Y[t]) + Y[t+n] Y[t] = k at every emitted point, to
/// relative tolerance `tol` against the largest term.
CheckResult doc_chaos_invariant(const std::vector<double>& y, double k, int order = 1, double tol = 1e-10);

struct ScanResult {
  /// Grid pairs for which k = 0.0001 stays bounded and k = 0.009 blows up.
  std::vector<std::pair<double, double>> passing;
  /// Passing pair with the earliest blow-up at k = 0.009.
  std::optional<std::pair<double, double>> chosen;
  std::optional<std::size_t> chosen_blow_up;
};

/// Scan over y = (50 + a) / 100, a = 0..100, in both coordinates.
ScanResult doc_chaos_scan(std::size_t steps = 5000);

}  // namespace ncdoc::docsim

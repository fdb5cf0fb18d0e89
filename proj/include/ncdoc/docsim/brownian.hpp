#pragma once

#include <vector>

#include "ncdoc/docsim/config.hpp"
#include "ncdoc/docsim/shiftop.hpp"

namespace ncdoc::docsim {

struct BrownianRun {
  Sequence<double> X;
  double k = 0;
  /// max_t |(X' - X)^2 / tau - k| / k
  double max_step_error = 0;
  /// [X, Xdot] as a shift operator, and its largest relative deviation from J k.
  ShiftOp commutator;
  double commutator_residual = 0;
};

/// X(0) = 0, X' = X +- delta with a fair coin from the counter RNG.
BrownianRun brownian_run(const SimConfig& cfg);

struct MsdEstimate {
  std::vector<std::size_t> lags;
  /// Time- and ensemble-averaged squared displacement at each lag.
  std::vector<double> msd;
  /// Least-squares slope of msd against lag * tau, through the origin.
  double slope = 0;
  double k = 0;
  double relative_error = 0;
};

/// Mean squared displacement over `seeds` independent walks of cfg.steps
/// steps (seed i uses mix(cfg.seed + i)); the slope estimates k = 2 * diffusion constant.
MsdEstimate brownian_msd(const SimConfig& cfg, int seeds = 100);

}  // namespace ncdoc::docsim

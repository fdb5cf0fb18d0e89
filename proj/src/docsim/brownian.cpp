#include "ncdoc/docsim/brownian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ncdoc::docsim {

void SimConfig::validate() const {
  if (!(delta > 0) || !std::isfinite(delta)) throw std::invalid_argument("delta: must be positive");
  if (!(tau > 0) || !std::isfinite(tau)) throw std::invalid_argument("tau: must be positive");
  if (!std::isfinite(k)) throw std::invalid_argument("k: must be finite");
  if (!std::isfinite(lambda)) throw std::invalid_argument("lambda: must be finite");
  if (steps < 1) throw std::invalid_argument("steps: must be at least 1");
}

namespace {

Sequence<double> walk(double delta, std::uint64_t steps, std::uint64_t seed) {
  CounterRng rng(seed);
  Sequence<double> X(steps + 1);
  X[0] = 0;
  for (std::uint64_t t = 0; t < steps; ++t) X[t + 1] = X[t] + (rng.coin() ? delta : -delta);
  return X;
}

}  // namespace

BrownianRun brownian_run(const SimConfig& cfg) {
  cfg.validate();
  BrownianRun r;
  r.k = cfg.delta * cfg.delta / cfg.tau;
  r.X = walk(cfg.delta, cfg.steps, cfg.seed);
  for (std::size_t t = 0; t + 1 < r.X.size(); ++t) {
    const double d = r.X[t + 1] - r.X[t];
    r.max_step_error = std::max(r.max_step_error, std::abs(d * d / cfg.tau - r.k) / r.k);
  }
  const auto X = ShiftOp::scalar(r.X, cfg.tau);
  const auto Xdot = X.derivative();
  r.commutator = X * Xdot - Xdot * X;
  const auto diff = r.commutator - ShiftOp::J(1, r.X.size(), cfg.tau) * r.k;
  r.commutator_residual = diff.max_abs() / r.k;
  return r;
}

MsdEstimate brownian_msd(const SimConfig& cfg, int seeds) {
  cfg.validate();
  if (seeds < 1) throw std::invalid_argument("seeds: must be at least 1");
  MsdEstimate e;
  e.k = cfg.delta * cfg.delta / cfg.tau;
  for (std::size_t lag = 1; lag <= cfg.steps / 10 && lag <= 1000; lag *= 2) e.lags.push_back(lag);
  if (e.lags.empty()) e.lags.push_back(1);
  std::vector<double> sum(e.lags.size(), 0.0);
  for (int s = 0; s < seeds; ++s) {
    const auto X = walk(cfg.delta, cfg.steps, CounterRng::mix(cfg.seed + static_cast<std::uint64_t>(s)));
    for (std::size_t l = 0; l < e.lags.size(); ++l) {
      const std::size_t lag = e.lags[l];
      double acc = 0;
      for (std::size_t t = 0; t + lag < X.size(); ++t) {
        const double d = X[t + lag] - X[t];
        acc += d * d;
      }
      sum[l] += acc / static_cast<double>(X.size() - lag);
    }
  }
  double num = 0, den = 0;
  for (std::size_t l = 0; l < e.lags.size(); ++l) {
    const double m = sum[l] / seeds;
    e.msd.push_back(m);
    const double t = static_cast<double>(e.lags[l]) * cfg.tau;
    num += t * m;
    den += t * t;
  }
  e.slope = num / den;
  e.relative_error = std::abs(e.slope - e.k) / e.k;
  return e;
}

}  // namespace ncdoc::docsim

#include "ncdoc/docsim/qwalk.hpp"

#include <cmath>
#include <stdexcept>

namespace ncdoc::docsim {

namespace {

const Complex kI(0.0, 1.0);

Complex at(const std::vector<Complex>& v, std::ptrdiff_t j) {
  if (j < 0 || j >= static_cast<std::ptrdiff_t>(v.size())) return 0.0;
  return v[static_cast<std::size_t>(j)];
}

}  // namespace

double WaveField::norm() const {
  double s = 0;
  for (const auto& z : psi) s += std::norm(z);
  return std::sqrt(s * delta);
}

WaveField qwalk_step(const WaveField& f) {
  WaveField g = f;
  const auto n = static_cast<std::ptrdiff_t>(f.psi.size());
  for (std::ptrdiff_t j = 0; j < n; ++j)
    g.psi[j] = (kI / 2.0) * at(f.psi, j - 1) + (1.0 - kI) * f.psi[j] + (kI / 2.0) * at(f.psi, j + 1);
  return g;
}

QwalkRun qwalk_run(const WaveField& field, std::size_t steps) {
  if (field.psi.size() < 3) throw std::invalid_argument("qwalk: grid needs at least 3 sites");
  if (!(field.delta > 0) || !(field.tau > 0)) throw std::invalid_argument("qwalk: delta and tau must be positive");
  QwalkRun run;
  run.history.push_back(field);
  run.norms.push_back(field.norm());
  const Complex C = kI * field.delta * field.delta / (2.0 * field.tau);
  const auto n = static_cast<std::ptrdiff_t>(field.psi.size());
  for (std::size_t s = 0; s < steps; ++s) {
    const auto& cur = run.history.back();
    auto next = qwalk_step(cur);
    double scale = 0, worst = 0;
    std::vector<Complex> res(field.psi.size());
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      const Complex lhs = (next.psi[j] - cur.psi[j]) / field.tau;
      const Complex lap = (at(cur.psi, j - 1) - 2.0 * cur.psi[j] + at(cur.psi, j + 1)) /
                          (field.delta * field.delta);
      const Complex rhs = C * lap;
      scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    if (scale > 0) run.max_residual = std::max(run.max_residual, worst / scale);
    run.norms.push_back(next.norm());
    run.history.push_back(std::move(next));
  }
  return run;
}

Complex gaussian_exact(double x, double t, double sigma, double delta, double tau) {
  // exp(-x^2 / (4 s)) evolves to sqrt(s / (s + C t)) exp(-x^2 / (4 (s + C t))), s = sigma^2
  const Complex C = kI * delta * delta / (2.0 * tau);
  const Complex s = sigma * sigma;
  const Complex st = s + C * t;
  return std::sqrt(s / st) * std::exp(-x * x / (4.0 * st));
}

GaussianComparison compare_gaussian(std::size_t sites, double sigma, std::size_t steps, double delta, double tau) {
  WaveField f;
  f.delta = delta;
  f.tau = tau;
  f.psi.resize(sites);
  for (std::size_t j = 0; j < sites; ++j) f.psi[j] = gaussian_exact(f.x(j), 0.0, sigma, delta, tau);
  const auto run = qwalk_run(f, steps);
  const auto& last = run.history.back();
  const double t = static_cast<double>(steps) * tau;
  double err = 0, ref = 0;
  for (std::size_t j = 0; j < sites; ++j) {
    const Complex e = gaussian_exact(last.x(j), t, sigma, delta, tau);
    err += std::norm(last.psi[j] - e);
    ref += std::norm(e);
  }
  GaussianComparison c;
  c.sites = sites;
  c.sigma = sigma;
  c.steps = steps;
  c.l2_relative = std::sqrt(err / ref);
  c.norm_drift = std::abs(run.norms.back() / run.norms.front() - 1.0);
  return c;
}

}  // namespace ncdoc::docsim

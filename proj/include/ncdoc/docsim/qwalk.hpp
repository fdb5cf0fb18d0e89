#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ncdoc::docsim {

using Complex = std::complex<double>;

/// Amplitudes psi(x_j, t) on sites x_j = (j - center) * delta; sites outside
/// the grid hold zero.
struct WaveField {
  std::vector<Complex> psi;
  double delta = 1.0;
  double tau = 1.0;

  std::size_t center() const { return psi.size() / 2; }
  double x(std::size_t j) const { return (static_cast<double>(j) - static_cast<double>(center())) * delta; }
  double norm() const;
};

/// psi(x, t + tau) = (i/2) psi(x - delta) + (1 - i) psi(x) + (i/2) psi(x + delta).
WaveField qwalk_step(const WaveField& f);

struct QwalkRun {
  std::vector<WaveField> history;
  /// Worst relative residual, over all steps and sites, of
  /// (psi(t+tau) - psi(t)) / tau - (i delta^2 / 2 tau) lap(psi) / delta^2.
  double max_residual = 0;
  std::vector<double> norms;
};

/// Throws std::invalid_argument for fewer than 3 sites.
QwalkRun qwalk_run(const WaveField& field, std::size_t steps);

/// Free evolution d_t psi = C d_x^2 psi with C = i delta^2 / (2 tau) of the
/// initial profile exp(-x^2 / (4 sigma^2)).
Complex gaussian_exact(double x, double t, double sigma, double delta, double tau);

struct GaussianComparison {
  std::size_t sites = 0;
  double sigma = 0;
  std::size_t steps = 0;
  /// ||psi_walk - psi_exact||_2 / ||psi_exact||_2 at the final time.
  double l2_relative = 0;
  /// |norm(final) / norm(initial) - 1|
  double norm_drift = 0;
};

GaussianComparison compare_gaussian(std::size_t sites = 401, double sigma = 10.0, std::size_t steps = 10,
                                    double delta = 1.0, double tau = 1.0);

}  // namespace ncdoc::docsim

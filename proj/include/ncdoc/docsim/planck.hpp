#pragma once

#include <string>

namespace ncdoc::docsim {

struct PlanckConstants {
  double hbar, c, G;
};

/// CODATA 2018 values in SI units.
PlanckConstants si_constants();
/// Reads {"hbar", "c", "G"} from a JSON file.
PlanckConstants load_constants(const std::string& path);

struct PlanckUnits {
  double mass, length, time;
  /// |L^2/T - hbar/M| / (hbar/M)
  double identity_relative;
};

/// M = sqrt(hbar c / G), L = hbar / (M c), T = hbar / (M c^2).
/// Throws std::invalid_argument unless every constant is finite and positive.
PlanckUnits planck_units(const PlanckConstants& k);

}  // namespace ncdoc::docsim

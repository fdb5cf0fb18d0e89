#include "ncdoc/docsim/planck.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace ncdoc::docsim {

PlanckConstants si_constants() { return {1.054571817e-34, 299792458.0, 6.67430e-11}; }

PlanckConstants load_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const auto j = nlohmann::json::parse(in);
  return {j.at("hbar").get<double>(), j.at("c").get<double>(), j.at("G").get<double>()};
}

PlanckUnits planck_units(const PlanckConstants& k) {
  for (auto [name, v] : {std::pair{"hbar", k.hbar}, std::pair{"c", k.c}, std::pair{"G", k.G}})
    if (!(std::isfinite(v) && v > 0)) throw std::invalid_argument(std::string(name) + ": must be positive");
  PlanckUnits u{};
  u.mass = std::sqrt(k.hbar * k.c / k.G);
  u.length = k.hbar / (u.mass * k.c);
  u.time = k.hbar / (u.mass * k.c * k.c);
  const double lhs = u.length * u.length / u.time;
  const double rhs = k.hbar / u.mass;
  u.identity_relative = std::abs(lhs - rhs) / rhs;
  return u;
}

}  // namespace ncdoc::docsim

#pragma once

#include <cstdint>

#include "ncdoc/ncalg/random.hpp"

namespace ncdoc::docsim {

struct SimConfig {
  double delta = 1.0;
  double tau = 1.0;
  /// Commutator constant; brownian_run uses delta^2 / tau and reports the value.
  double k = 1.0;
  double lambda = 1.0;
  std::uint64_t steps = 1000;
  std::uint64_t seed = ncalg::kDefaultSeed;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

}  // namespace ncdoc::docsim

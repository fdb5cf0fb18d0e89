#pragma once

#include <vector>

#include "ncdoc/ncalg/ncpoly.hpp"
#include "ncdoc/rng.hpp"

namespace ncdoc::ncalg {

inline constexpr std::uint64_t kDefaultSeed = 0xD0C;

struct RandomPolyShape {
  int max_degree = 3;
  int max_terms = 4;
  long coef_min = -3;
  long coef_max = 3;
};

/// Random polynomial over `alphabet`; the result may be zero.
NCPoly random_poly(CounterRng& rng, const std::vector<Generator>& alphabet,
                   const RandomPolyShape& shape = {});

}  // namespace ncdoc::ncalg

#include "ncdoc/ncalg/random.hpp"

#include <stdexcept>

namespace ncdoc::ncalg {

NCPoly random_poly(CounterRng& rng, const std::vector<Generator>& alphabet,
                   const RandomPolyShape& shape) {
  if (alphabet.empty()) throw std::invalid_argument("random_poly: empty alphabet");
  NCPoly out;
  const long terms = rng.range(1, shape.max_terms);
  for (long t = 0; t < terms; ++t) {
    const long len = rng.range(0, shape.max_degree);
    Word w;
    for (long j = 0; j < len; ++j) {
      w.push_back(alphabet[static_cast<std::size_t>(rng.range(0, static_cast<long>(alphabet.size()) - 1))]);
    }
    out.add_term(std::move(w), Rational(rng.range(shape.coef_min, shape.coef_max)));
  }
  return out;
}

}  // namespace ncdoc::ncalg

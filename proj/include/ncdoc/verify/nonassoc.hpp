#pragma once

#include <vector>

#include "ncdoc/ncalg/rational.hpp"
#include "ncdoc/rng.hpp"

namespace ncdoc::verify {

using Vec = std::vector<Rational>;

/// Finite-dimensional algebra with an arbitrary bilinear product given by
/// structure coefficients e_i * e_j = sum_k table[i][j][k] e_k.
class NonAssocAlgebra {
 public:
  using Table = std::vector<std::vector<Vec>>;

  /// Throws std::invalid_argument unless the table is dim x dim x dim.
  explicit NonAssocAlgebra(Table table);
  static NonAssocAlgebra random(CounterRng& rng, int dim, long lo = -3, long hi = 3);
  /// Structure constants of 2x2 matrices in the basis E11, E12, E21, E22.
  static NonAssocAlgebra matrix2();

  int dim() const { return static_cast<int>(table_.size()); }
  Vec basis(int i) const;
  Vec product(const Vec& a, const Vec& b) const;
  Vec bracket(const Vec& a, const Vec& b) const;
  /// <a,b,c> = (ab)c - a(bc)
  Vec associator(const Vec& a, const Vec& b, const Vec& c) const;
  /// [[a,b],c] + [[c,a],b] + [[b,c],a]
  Vec jacobi_sum(const Vec& a, const Vec& b, const Vec& c) const;
  /// Signed sum of associators over the six orderings of (a, b, c).
  Vec associator_sum(const Vec& a, const Vec& b, const Vec& c) const;

 private:
  Table table_;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
bool is_zero(const Vec& v);

}  // namespace ncdoc::verify

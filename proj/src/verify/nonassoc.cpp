#include "ncdoc/verify/nonassoc.hpp"

#include <stdexcept>

namespace ncdoc::verify {

Vec operator+(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

NonAssocAlgebra::NonAssocAlgebra(Table table) : table_(std::move(table)) {
  const auto n = table_.size();
  if (n == 0) throw std::invalid_argument("NonAssocAlgebra: empty table");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("NonAssocAlgebra: table is not square");
    for (const auto& v : row)
      if (v.size() != n) throw std::invalid_argument("NonAssocAlgebra: bad coefficient vector");
  }
}

NonAssocAlgebra NonAssocAlgebra::random(CounterRng& rng, int dim, long lo, long hi) {
  Table t(dim, std::vector<Vec>(dim, Vec(dim)));
  for (auto& row : t)
    for (auto& v : row)
      for (auto& x : v) {
        x = Rational(rng.range(lo, hi), rng.range(1, 3));
        x.canonicalize();
      }
  return NonAssocAlgebra(std::move(t));
}

NonAssocAlgebra NonAssocAlgebra::matrix2() {
  // E_ab E_cd = delta_bc E_ad, basis index 2a + b.
  Table t(4, std::vector<Vec>(4, Vec(4)));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          if (b == c) t[2 * a + b][2 * c + d][2 * a + d] = 1;
  return NonAssocAlgebra(std::move(t));
}

Vec NonAssocAlgebra::basis(int i) const {
  Vec v(dim());
  v.at(i) = 1;
  return v;
}

Vec NonAssocAlgebra::product(const Vec& a, const Vec& b) const {
  const int n = dim();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("NonAssocAlgebra: operand dimension");
  Vec out(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const Rational s = a[i] * b[j];
      for (int k = 0; k < n; ++k) out[k] += s * table_[i][j][k];
    }
  }
  return out;
}

Vec NonAssocAlgebra::bracket(const Vec& a, const Vec& b) const {
  return product(a, b) - product(b, a);
}

Vec NonAssocAlgebra::associator(const Vec& a, const Vec& b, const Vec& c) const {
  return product(product(a, b), c) - product(a, product(b, c));
}

Vec NonAssocAlgebra::jacobi_sum(const Vec& a, const Vec& b, const Vec& c) const {
  return bracket(bracket(a, b), c) + bracket(bracket(c, a), b) + bracket(bracket(b, c), a);
}

Vec NonAssocAlgebra::associator_sum(const Vec& a, const Vec& b, const Vec& c) const {
  return associator(a, b, c) - associator(b, a, c) + associator(c, a, b) - associator(a, c, b) +
         associator(b, c, a) - associator(c, b, a);
}

}  // namespace ncdoc::verify

#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncdoc/check_result.hpp"
#include "ncdoc/ncalg/ncpoly.hpp"

namespace ncdoc::ncalg {

using PolyVec = std::vector<NCPoly>;

/// Sparse structure constants f_ijk, indices 0-based.
class StructureConstants {
 public:
  using Key = std::array<int, 3>;

  /// Throws std::invalid_argument if dim < 1, an index is out of range, the
  /// table is not antisymmetric in its first two indices, or `cyclic` is set
  /// and f_ijk != f_kij.
  StructureConstants(int dim, std::map<Key, Rational> f, bool cyclic);

  /// The 3-dimensional Levi-Civita symbol.
  static StructureConstants epsilon();
  /// Block-diagonal sum; indices of `b` are offset by a.dim().
  static StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b);

  int dim() const { return dim_; }
  bool cyclic() const { return cyclic_; }
  Rational operator()(int i, int j, int k) const;
  const std::map<Key, Rational>& entries() const { return f_; }

 private:
  int dim_;
  std::map<Key, Rational> f_;
  bool cyclic_;
};

/// Levi-Civita symbol on 1-based indices.
int epsilon3(int i, int j, int k);

inline void require_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

/// (A x B)_k = sum_ij f_ijk A_i B_j with factor order preserved.
template <class T>
std::vector<T> cross_t(const std::vector<T>& a, const std::vector<T>& b,
                       const StructureConstants& f) {
  require_dim(a.size(), static_cast<std::size_t>(f.dim()), "cross");
  require_dim(b.size(), static_cast<std::size_t>(f.dim()), "cross");
  std::vector<T> out(a.size());
  for (const auto& [key, c] : f.entries()) {
    out[key[2]] += (a[key[0]] * b[key[1]]) * c;
  }
  return out;
}

template <class T>
T dot_t(const std::vector<T>& a, const std::vector<T>& b) {
  require_dim(a.size(), b.size(), "dot");
  T out{};
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

PolyVec cross(const PolyVec& a, const PolyVec& b,
              const StructureConstants& f = StructureConstants::epsilon());
NCPoly dot(const PolyVec& a, const PolyVec& b);

/// (name[1], ..., name[d]) at the given dot order.
PolyVec generator_vector(std::string_view name, int d, int dot_order = 0);

/// sum_i eps_abi eps_cdi = delta_ac delta_bd - delta_ad delta_bc over all 81 index cases.
CheckResult epsilon_identity_check(std::string name = "epsilon.identity");

}  // namespace ncdoc::ncalg

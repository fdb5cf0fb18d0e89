#include "ncdoc/ncalg/vector_ops.hpp"

namespace ncdoc::ncalg {

StructureConstants::StructureConstants(int dim, std::map<Key, Rational> f, bool cyclic)
    : dim_(dim), cyclic_(cyclic) {
  if (dim < 1) throw std::invalid_argument("structure constants: dim must be positive");
  for (auto& [key, c] : f) {
    for (int idx : key) {
      if (idx < 0 || idx >= dim) throw std::invalid_argument("structure constants: index out of range");
    }
    if (c != 0) f_.emplace(key, c);
  }
  for (const auto& [key, c] : f_) {
    if ((*this)(key[1], key[0], key[2]) != -c) {
      throw std::invalid_argument("structure constants: f_ijk != -f_jik");
    }
    if (cyclic_ && (*this)(key[2], key[0], key[1]) != c) {
      throw std::invalid_argument("structure constants: f_ijk != f_kij");
    }
  }
}

StructureConstants StructureConstants::epsilon() {
  std::map<Key, Rational> f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (int e = epsilon3(i + 1, j + 1, k + 1)) f[{i, j, k}] = e;
  return StructureConstants(3, std::move(f), true);
}

StructureConstants StructureConstants::direct_sum(const StructureConstants& a,
                                                  const StructureConstants& b) {
  std::map<Key, Rational> f = a.f_;
  const int off = a.dim_;
  for (const auto& [key, c] : b.f_) f[{key[0] + off, key[1] + off, key[2] + off}] = c;
  return StructureConstants(a.dim_ + b.dim_, std::move(f), a.cyclic_ && b.cyclic_);
}

Rational StructureConstants::operator()(int i, int j, int k) const {
  auto it = f_.find({i, j, k});
  return it == f_.end() ? Rational(0) : it->second;
}

int epsilon3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  for (int idx : {i, j, k})
    if (idx < 1 || idx > 3) return 0;
  return (j - i) * (k - i) * (k - j) > 0 ? 1 : -1;
}

PolyVec cross(const PolyVec& a, const PolyVec& b, const StructureConstants& f) {
  return cross_t(a, b, f);
}

NCPoly dot(const PolyVec& a, const PolyVec& b) { return dot_t(a, b); }

PolyVec generator_vector(std::string_view name, int d, int dot_order) {
  PolyVec v;
  for (int i = 1; i <= d; ++i) v.push_back(NCPoly::gen(name, {i}, dot_order));
  return v;
}

CheckResult epsilon_identity_check(std::string name) {
  int mismatches = 0;
  std::string first_bad;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) {
          int lhs = 0;
          for (int i = 1; i <= 3; ++i) lhs += epsilon3(a, b, i) * epsilon3(c, d, i);
          int rhs = (a == c && b == d) - (a == d && b == c);
          if (lhs != rhs) {
            if (!mismatches++) {
              first_bad = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + "," + std::to_string(d) + ")";
            }
          }
        }
  std::string notes = "81 index cases";
  if (mismatches) notes += "; first mismatch at " + first_bad;
  return CheckResult::boolean(std::move(name), "epsilon identity", mismatches == 0, notes);
}

}  // namespace ncdoc::ncalg

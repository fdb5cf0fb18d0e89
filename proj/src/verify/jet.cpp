#include "ncdoc/verify/jet.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncdoc/rng.hpp"

namespace ncdoc::verify {

Matrix4 Matrix4::identity(const Rational& s) {
  Matrix4 m;
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

bool Matrix4::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

Matrix4& Matrix4::operator+=(const Matrix4& o) {
  for (int i = 0; i < 16; ++i) a[i] += o.a[i];
  return *this;
}

Matrix4& Matrix4::operator-=(const Matrix4& o) {
  for (int i = 0; i < 16; ++i) a[i] -= o.a[i];
  return *this;
}

Matrix4& Matrix4::operator*=(const Rational& s) {
  for (auto& x : a) x *= s;
  return *this;
}

Matrix4 operator*(const Matrix4& x, const Matrix4& y) {
  Matrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Rational& xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < 4; ++j) out(i, j) += xik * y(k, j);
    }
  return out;
}

Jet Jet::constant(const Rational& s) {
  if (s == 0) return Jet();
  return Jet({Matrix4::identity(s)}, false);
}

Jet Jet::series(std::vector<Matrix4> components) { return Jet(std::move(components), true); }

Matrix4 Jet::component(std::size_t m) const {
  if (m < c_.size()) return c_[m];
  if (bounded_) throw std::out_of_range("Jet: component beyond length");
  return Matrix4();
}

Jet Jet::derivative() const {
  if (bounded_ && c_.empty()) throw std::logic_error("Jet: derivative of an exhausted jet");
  if (c_.empty()) return *this;
  return Jet(std::vector<Matrix4>(c_.begin() + 1, c_.end()), bounded_);
}

bool Jet::is_zero() const {
  if (bounded_ && c_.empty()) throw std::logic_error("Jet: no components left to compare");
  return std::all_of(c_.begin(), c_.end(), [](const Matrix4& m) { return m.is_zero(); });
}

namespace {

std::size_t result_length(const Jet& a, const Jet& b) { return std::min(a.length(), b.length()); }

}  // namespace

Jet& Jet::operator+=(const Jet& o) {
  const std::size_t len = result_length(*this, o);
  const bool bounded = len != kUnbounded;
  const std::size_t stored = bounded ? len : std::max(c_.size(), o.c_.size());
  std::vector<Matrix4> out(stored);
  for (std::size_t m = 0; m < stored; ++m) {
    if (m < c_.size()) out[m] += c_[m];
    if (m < o.c_.size()) out[m] += o.c_[m];
  }
  c_ = std::move(out);
  bounded_ = bounded;
  return *this;
}

Jet& Jet::operator-=(const Jet& o) { return *this += o * Rational(-1); }

Jet& Jet::operator*=(const Rational& s) {
  for (auto& m : c_) m *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  const std::size_t len = result_length(a, b);
  const bool bounded = len != Jet::kUnbounded;
  std::size_t stored = 0;
  if (bounded) {
    stored = len;
  } else if (!a.c_.empty() && !b.c_.empty()) {
    stored = a.c_.size() + b.c_.size() - 1;
  }
  std::vector<Matrix4> out(stored);
  for (std::size_t m = 0; m < stored; ++m) {
    long binom = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      if (k < a.c_.size() && m - k < b.c_.size()) {
        Matrix4 t = a.c_[k] * b.c_[m - k];
        if (binom != 1) t *= Rational(binom);
        out[m] += t;
      }
      binom = binom * static_cast<long>(m - k) / static_cast<long>(k + 1);
    }
  }
  return Jet(std::move(out), bounded);
}

namespace {

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Matrix4 JetAlgebra::matrix(std::string_view name, const std::vector<int>& indices, int dot) const {
  ncalg::GeneratorKey key{std::string(name), indices, dot};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  std::string text(name);
  for (int i : indices) text += "," + std::to_string(i);
  text += "^" + std::to_string(dot);
  CounterRng rng(CounterRng::mix(seed_ ^ fnv1a(text)));
  Matrix4 m;
  for (auto& x : m.a) {
    x = Rational(rng.range(-4, 4), rng.range(1, 2));
    x.canonicalize();
  }
  cache_.emplace(std::move(key), m);
  return m;
}

Jet JetAlgebra::gen(std::string_view name, std::vector<int> indices, int dot) const {
  std::vector<Matrix4> c;
  c.reserve(length_);
  for (std::size_t m = 0; m < length_; ++m)
    c.push_back(matrix(name, indices, dot + static_cast<int>(m)));
  return Jet::series(std::move(c));
}

}  // namespace ncdoc::verify

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ncdoc/ncalg/derivation.hpp"
#include "ncdoc/ncalg/ncpoly.hpp"

namespace ncdoc::verify {

using ncalg::NCPoly;

/// 4x4 matrix over the rationals.
struct Matrix4 {
  static constexpr int n = 4;
  std::array<Rational, 16> a{};

  static Matrix4 identity(const Rational& s = 1);
  Rational& operator()(int i, int j) { return a[4 * i + j]; }
  const Rational& operator()(int i, int j) const { return a[4 * i + j]; }
  bool is_zero() const;

  Matrix4& operator+=(const Matrix4& o);
  Matrix4& operator-=(const Matrix4& o);
  Matrix4& operator*=(const Rational& s);
  friend Matrix4 operator*(const Matrix4& x, const Matrix4& y);
  friend bool operator==(const Matrix4&, const Matrix4&) = default;
};

/// Truncated trajectory of a matrix-valued function of time: component m is
/// the m-th time derivative. Products follow the binomial Leibniz rule, so
/// the map generator -> jet extends to a homomorphism that intertwines the
/// formal time derivation with the shift of components.
///
/// A default-constructed jet is zero. Jets built from scalars are exact at
/// every order ("unbounded"); jets built from generators carry finitely many
/// components and products keep the shorter length.
class Jet {
 public:
  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

  Jet() = default;
  static Jet constant(const Rational& s);
  static Jet series(std::vector<Matrix4> components);

  std::size_t length() const { return bounded_ ? c_.size() : kUnbounded; }
  Matrix4 component(std::size_t m) const;
  /// Drops the leading component; throws std::logic_error on an exhausted jet.
  Jet derivative() const;
  /// True iff every known component vanishes; throws on an exhausted jet.
  bool is_zero() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Rational& s);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) { return a *= Rational(-1); }
  friend Jet operator*(Jet a, const Rational& s) { return a *= s; }
  friend Jet operator*(const Rational& s, Jet a) { return a *= s; }
  friend Jet operator*(Jet a, int s) { return a *= Rational(s); }
  friend Jet operator*(int s, Jet a) { return a *= Rational(s); }
  friend Jet operator*(const Jet& a, const Jet& b);

 private:
  Jet(std::vector<Matrix4> c, bool bounded) : c_(std::move(c)), bounded_(bounded) {}
  std::vector<Matrix4> c_;
  bool bounded_ = false;
};

/// Exact free-algebra route: generators are NCPoly generators and d is the
/// formal time derivation.
class PolyAlgebra {
 public:
  using Elem = NCPoly;
  static constexpr const char* route = "symbolic";

  Elem gen(std::string_view name, std::vector<int> indices = {}, int dot = 0) const {
    return NCPoly::gen(name, std::move(indices), dot);
  }
  Elem constant(const Rational& r) const { return NCPoly(r); }
  Elem d(const Elem& x) const { return time_.apply(x); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }

 private:
  ncalg::FormalDerivation time_ = ncalg::FormalDerivation::time();
};

/// Matrix route: each generator (name, indices, dot order n) becomes the jet
/// whose m-th component is an independent random 4x4 rational matrix keyed by
/// (name, indices, n + m). Deterministic in the seed. Not thread-safe; use one
/// instance per task.
class JetAlgebra {
 public:
  using Elem = Jet;
  static constexpr const char* route = "matrix";

  explicit JetAlgebra(std::uint64_t seed, std::size_t length = 6) : seed_(seed), length_(length) {}
  Elem gen(std::string_view name, std::vector<int> indices = {}, int dot = 0) const;
  Elem constant(const Rational& r) const { return Jet::constant(r); }
  Elem d(const Elem& x) const { return x.derivative(); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }

  /// Random matrix attached to one generator key.
  Matrix4 matrix(std::string_view name, const std::vector<int>& indices, int dot) const;

 private:
  std::uint64_t seed_;
  std::size_t length_;
  mutable std::map<ncalg::GeneratorKey, Matrix4> cache_;
};

/// Image of a polynomial under the generator substitution of `ctx`.
template <class Ctx>
typename Ctx::Elem evaluate(const NCPoly& p, const Ctx& ctx) {
  typename Ctx::Elem out{};
  for (const auto& [w, c] : p.terms()) {
    typename Ctx::Elem term = ctx.constant(c);
    for (auto g : w) term = term * ctx.gen(g.name(), g.indices(), g.dot_order());
    out += term;
  }
  return out;
}

}  // namespace ncdoc::verify

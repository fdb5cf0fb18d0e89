#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ncdoc/docsim/shiftop.hpp"
#include "ncdoc/ncalg/rational.hpp"
#include "ncdoc/rng.hpp"

namespace ncdoc::docsim {

using Series3 = std::array<Sequence<double>, 3>;
using ShiftVec = std::array<ShiftOp, 3>;

/// Shift operator paired with a bound on the magnitude of the terms that
/// produced it, so residuals can be reported relative to that scale.
struct Tracked {
  ShiftOp value;
  double scale = 0;

  Tracked() = default;
  explicit Tracked(ShiftOp v) : value(std::move(v)), scale(value.max_abs()) {}

  Tracked& operator+=(const Tracked& o);
  Tracked& operator-=(const Tracked& o);
  Tracked& operator*=(double s);
  friend Tracked operator+(Tracked a, const Tracked& b) { return a += b; }
  friend Tracked operator-(Tracked a, const Tracked& b) { return a -= b; }
  friend Tracked operator-(Tracked a) { return a *= -1.0; }
  friend Tracked operator*(Tracked a, const Rational& s) { return a *= s.get_d(); }
  friend Tracked operator*(Tracked a, int s) { return a *= static_cast<double>(s); }
  friend Tracked operator*(const Tracked& a, const Tracked& b);
  double relative() const { return scale > 0 ? value.max_abs() / scale : 0.0; }
};

/// Algebra context realising X[i] as the series X_i, Xdot = [X, J] / tau, and
/// higher dot orders by further derivatives. Extra named generators map to
/// J^0 of a supplied series.
class ShiftAlgebra {
 public:
  using Elem = Tracked;
  static constexpr const char* route = "shift";

  ShiftAlgebra(const Series3& X, double tau, std::map<std::string, Sequence<double>> extra = {});
  Elem gen(std::string_view name, std::vector<int> indices = {}, int dot = 0) const;
  Elem constant(const Rational& r) const;
  Elem d(const Elem& x) const;
  bool is_zero(const Elem& x) const { return x.value.max_abs() == 0; }
  double tau() const { return tau_; }
  std::size_t length() const { return length_; }

 private:
  std::array<std::vector<Tracked>, 3> tower_;
  std::map<std::string, Tracked> extra_;
  double tau_;
  std::size_t length_;
};

struct EmResidual {
  std::string equation;
  int component = 0;
  int power = 0;
  double max_abs = 0;
  double relative = 0;
};

struct EmDiscrete {
  ShiftVec Xdot, H, E;
  std::vector<EmResidual> residuals;
  /// Worst relative residual of the four field equations.
  double max_relative = 0;
  /// E against J^2 D^2(X)/tau^2 - J^3 D(X'') x (D(X') x D(X))/tau^3.
  double e_formula_relative = 0;
  /// H_k against (1/2) eps_ijk [Xdot_i, Xdot_j].
  double h_commutator_relative = 0;
  double leibniz_relative = 0;
};

/// Throws std::invalid_argument for unequal lengths or length < 5 and
/// EmptyWindow when the series are too short for the deepest shift.
EmDiscrete em_discrete_run(const Series3& X, double tau = 1.0, std::uint64_t seed = 0xD0C);

struct EmClassical {
  Series3 E, H;
  /// max over indices of |E + DX x H - D^2 X| relative to the term scale.
  double lorentz_relative = 0;
};

/// With D = X' - X: E = (D' - D) - D x (D' x D) / (lambda + D.D), H = (D' x D) / (lambda + D.D).
/// Throws std::domain_error when |lambda + D.D| < 1e-12 at some index.
EmClassical em_classical(const Series3& X, double lambda);
double lorentz_residual(const Series3& X, const Series3& E, const Series3& H);

struct SignStream {
  std::array<std::vector<int>, 3> eps;
  /// Throws std::invalid_argument for entries other than +-1 or unequal lengths.
  void validate() const;
  std::size_t size() const { return eps[0].size(); }
};

SignStream random_sign_stream(CounterRng& rng, std::size_t length);

struct SignField {
  Series3 X;
  /// H = J^2 k (eps' x eps)
  ShiftVec H;
  /// max |(X_i' - X_i)^2 - k| / k
  double max_step_error = 0;
  /// H against Xdot x Xdot built from the walk, relative.
  double cross_check_relative = 0;
};

/// X_i' = X_i + eps_i sqrt(k) from X_i = 0; requires length >= 2.
SignField sign_field(const SignStream& s, double k);

std::array<double, 3> cross3(const std::array<double, 3>& a, const std::array<double, 3>& b);

}  // namespace ncdoc::docsim

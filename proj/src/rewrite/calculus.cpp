#include "ncdoc/rewrite/calculus.hpp"

#include <stdexcept>

#include "ncdoc/ncalg/random.hpp"

namespace ncdoc::rewrite {

NCPoly flat_partial(const NCPoly& F, int i, const RelationSet& flat) {
  return normal_form(commutator(F, NCPoly::gen("P", {i})), flat);
}

NCPoly dual_partial(const NCPoly& F, int i, const RelationSet& flat) {
  return normal_form(commutator(NCPoly::gen("X", {i}), F), flat);
}

GaugeCurvature gauge_curvature(const GaugeSetup& G) {
  if (!G.relations) throw std::invalid_argument("gauge_curvature: no relation set");
  if (static_cast<int>(G.A.size()) != G.dim) throw std::invalid_argument("gauge_curvature: need dim components");
  const RelationSet& R = *G.relations;
  GaugeCurvature out;
  out.R.assign(G.dim, std::vector<NCPoly>(G.dim));
  std::vector<NCPoly> cov;
  for (int i = 0; i < G.dim; ++i) cov.push_back(NCPoly::gen("P", {i + 1}) - G.A[i]);
  for (int i = 0; i < G.dim; ++i) {
    for (int j = 0; j < G.dim; ++j) {
      NCPoly direct = normal_form(commutator(cov[i], cov[j]), R);
      NCPoly split = normal_form(flat_partial(G.A[j], i + 1, R) - flat_partial(G.A[i], j + 1, R) +
                                     commutator(G.A[i], G.A[j]),
                                 R);
      if (!(direct == split)) {
        throw std::logic_error("gauge_curvature: R_" + std::to_string(i + 1) + std::to_string(j + 1) +
                               " disagrees: " + direct.to_string() + " vs " + split.to_string());
      }
      out.R[i][j] = std::move(direct);
    }
  }
  for (int i = 0; i < G.dim; ++i)
    for (int j = 0; j < G.dim; ++j)
      if (!(out.R[i][j] == -out.R[j][i])) throw std::logic_error("gauge_curvature: not antisymmetric");
  return out;
}

NCPoly VariableFrame::value(const FrameVector& X) const {
  NCPoly out;
  for (const auto& t : X) out += t.scalar * NCPoly(t.variable);
  return out;
}

NCPoly VariableFrame::represent(const FrameVector& X) const {
  NCPoly out;
  for (const auto& t : X) {
    auto it = P_.find(t.variable);
    if (it == P_.end()) throw std::invalid_argument("no representative for " + t.variable.to_string());
    for (const auto& v : P_) {
      if (!normal_form(commutator(t.scalar, NCPoly(v.first)), R_).is_zero()) {
        throw std::invalid_argument("coefficient " + t.scalar.to_string() + " is not scalar");
      }
    }
    out += t.scalar * it->second;
  }
  return out;
}

FrameVector VariableFrame::decompose(const NCPoly& X) const {
  FrameVector out;
  const NCPoly reduced = normal_form(X, R_);
  for (const auto& [w, c] : reduced.terms()) {
    std::optional<std::size_t> var;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (P_.count(w[k])) var = k;
    if (!var) throw std::invalid_argument("no variable in term " + ncalg::word_to_string(w));
    Word scalar;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (k != *var) scalar.push_back(w[k]);
    out.push_back({NCPoly::word(scalar, c), w[*var]});
  }
  return out;
}

NCPoly VariableFrame::covariant(const FrameVector& X, const NCPoly& Z) const {
  return normal_form(commutator(Z, represent(X)), R_);
}

NCPoly covariant_curvature(const FrameVector& X, const FrameVector& Y, const NCPoly& Z,
                           const VariableFrame& frame) {
  const auto& R = frame.relations();
  NCPoly xy = normal_form(commutator(frame.value(X), frame.value(Y)), R);
  NCPoly out = frame.covariant(X, frame.covariant(Y, Z)) - frame.covariant(Y, frame.covariant(X, Z));
  if (!xy.is_zero()) out -= frame.covariant(frame.decompose(xy), Z);
  return normal_form(out, R);
}

NCPoly falling_power(int n, const RelationSet& shift) {
  const Rational delta = shift.param("delta");
  NCPoly x = NCPoly::gen("x");
  NCPoly out = 1;
  for (int k = 0; k < n; ++k) out *= x - NCPoly(delta * k);
  return normal_form(out, shift);
}

NCPoly discrete_derivative(const NCPoly& f, const RelationSet& shift) {
  const Rational delta = shift.param("delta");
  return normal_form(commutator(f, NCPoly::gen("J")), shift) * Rational(1 / delta);
}

CheckResult discrete_leibniz_check(const RelationSet& shift, int n, std::uint64_t seed) {
  if (n < 1 || n > 8) throw std::invalid_argument("discrete_leibniz_check: n must be in 1..8");
  std::vector<std::pair<std::string, NCPoly>> parts;
  const NCPoly J = NCPoly::gen("J");
  for (int m = 1; m <= n; ++m) {
    NCPoly residual = discrete_derivative(falling_power(m, shift), shift) -
                      normal_form(J * Rational(m) * falling_power(m - 1, shift), shift);
    parts.emplace_back("falling power " + std::to_string(m), residual);
  }
  CounterRng rng(seed);
  const std::vector<Generator> alphabet{Generator::make("x"), Generator::make("J")};
  for (int trial = 0; trial < 20; ++trial) {
    auto f = ncalg::random_poly(rng, alphabet), g = ncalg::random_poly(rng, alphabet);
    NCPoly residual = discrete_derivative(f * g, shift) -
                      normal_form(discrete_derivative(f, shift) * g + f * discrete_derivative(g, shift), shift);
    parts.emplace_back("leibniz trial " + std::to_string(trial), residual);
  }
  return ncalg::symbolic_result_multi("discrete.leibniz", "discrete derivative as a commutator with J",
                                      parts);
}

}  // namespace ncdoc::rewrite

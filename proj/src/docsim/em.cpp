#include "ncdoc/docsim/em.hpp"

#include <cmath>
#include <stdexcept>

#include "ncdoc/ncalg/vector_ops.hpp"
#include "ncdoc/verify/identities.hpp"

namespace ncdoc::docsim {

namespace id = verify::identities;
using ncalg::StructureConstants;

Tracked& Tracked::operator+=(const Tracked& o) {
  value += o.value;
  scale = std::max(scale, o.scale);
  return *this;
}

Tracked& Tracked::operator-=(const Tracked& o) {
  value -= o.value;
  scale = std::max(scale, o.scale);
  return *this;
}

Tracked& Tracked::operator*=(double s) {
  value *= s;
  scale *= std::abs(s);
  return *this;
}

Tracked operator*(const Tracked& a, const Tracked& b) {
  Tracked out;
  out.value = a.value * b.value;
  out.scale = a.scale * b.scale;
  return out;
}

namespace {

constexpr int kTowerDepth = 4;

Tracked derive(const Tracked& x, double tau) {
  Tracked out;
  out.value = x.value.derivative();
  out.scale = 2.0 * x.scale / tau;
  return out;
}

}  // namespace

ShiftAlgebra::ShiftAlgebra(const Series3& X, double tau, std::map<std::string, Sequence<double>> extra)
    : tau_(tau), length_(X[0].size()) {
  for (int i = 0; i < 3; ++i) {
    if (X[i].size() != length_) throw std::invalid_argument("ShiftAlgebra: series lengths differ");
    tower_[i].push_back(Tracked(ShiftOp::scalar(X[i], tau)));
    for (int n = 1; n <= kTowerDepth; ++n) tower_[i].push_back(derive(tower_[i].back(), tau));
  }
  for (auto& [name, s] : extra) extra_.emplace(name, Tracked(ShiftOp::scalar(std::move(s), tau)));
}

Tracked ShiftAlgebra::gen(std::string_view name, std::vector<int> indices, int dot) const {
  if (dot < 0) throw std::invalid_argument("ShiftAlgebra: negative dot order");
  if (name == "X") {
    if (indices.size() != 1 || indices[0] < 1 || indices[0] > 3)
      throw std::invalid_argument("ShiftAlgebra: X needs one index in 1..3");
    if (dot > kTowerDepth) throw std::invalid_argument("ShiftAlgebra: dot order too high");
    return tower_[indices[0] - 1][dot];
  }
  auto it = extra_.find(std::string(name));
  if (it == extra_.end() || !indices.empty())
    throw std::invalid_argument("ShiftAlgebra: unknown generator " + std::string(name));
  Tracked t = it->second;
  for (int n = 0; n < dot; ++n) t = derive(t, tau_);
  return t;
}

Tracked ShiftAlgebra::constant(const Rational& r) const {
  return Tracked(ShiftOp::J(0, length_, tau_) * r.get_d());
}

Tracked ShiftAlgebra::d(const Tracked& x) const { return derive(x, tau_); }

std::array<double, 3> cross3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

namespace {

void check_series(const Series3& X, std::size_t min_len) {
  for (const auto& s : X) {
    if (s.size() != X[0].size()) throw std::invalid_argument("series lengths differ");
    if (s.size() < min_len)
      throw std::invalid_argument("series must have at least " + std::to_string(min_len) + " values");
  }
}

double relative(const ShiftOp& diff, double scale) { return scale > 0 ? diff.max_abs() / scale : 0.0; }

}  // namespace

EmDiscrete em_discrete_run(const Series3& X, double tau, std::uint64_t seed) {
  check_series(X, 5);
  if (!(tau > 0)) throw std::invalid_argument("tau: must be positive");
  const std::size_t n = X[0].size();
  CounterRng rng(seed);
  Sequence<double> f(n), g(n);
  for (std::size_t t = 0; t < n; ++t) {
    f[t] = rng.uniform();
    g[t] = rng.uniform();
  }
  const ShiftAlgebra ctx(X, tau, {{"F", f}, {"G", g}});
  const StructureConstants eps = StructureConstants::epsilon();
  const id::Field<ShiftAlgebra> F(ctx, eps);

  EmDiscrete out;
  const auto H = F.H();
  const auto E = F.tpartial(F.V);
  for (int i = 0; i < 3; ++i) {
    out.Xdot[i] = F.V[i].value;
    out.H[i] = H[i].value;
    out.E[i] = E[i].value;
  }

  const std::pair<const char*, id::MaxwellPart> eqs[] = {
      {"lorentz_force", id::MaxwellPart::lorentz_force},
      {"divergence_free", id::MaxwellPart::divergence_free},
      {"faraday", id::MaxwellPart::faraday},
      {"wave", id::MaxwellPart::wave},
  };
  for (const auto& [name, part] : eqs) {
    const auto parts = id::maxwell(ctx, part);
    for (std::size_t c = 0; c < parts.size(); ++c) {
      const auto& r = parts[c].second;
      out.max_relative = std::max(out.max_relative, r.relative());
      for (const auto& [power, seq] : r.value.parts()) {
        EmResidual e;
        e.equation = name;
        e.component = static_cast<int>(c) + 1;
        e.power = power;
        for (double x : seq) e.max_abs = std::max(e.max_abs, std::abs(x));
        e.relative = r.scale > 0 ? e.max_abs / r.scale : 0.0;
        out.residuals.push_back(e);
      }
    }
  }
  for (const auto& [label, r] : id::maxwell(ctx, id::MaxwellPart::time_partial_leibniz))
    out.leibniz_relative = std::max(out.leibniz_relative, r.relative());

  // closed form of E
  std::array<Sequence<double>, 3> D;
  for (int i = 0; i < 3; ++i) {
    D[i].resize(n - 1);
    for (std::size_t t = 0; t + 1 < n; ++t) D[i][t] = X[i][t + 1] - X[i][t];
  }
  for (int i = 0; i < 3; ++i) {
    Sequence<double> second(n - 2), third(n - 3);
    for (std::size_t t = 0; t + 2 < n; ++t) second[t] = (D[i][t + 1] - D[i][t]) / (tau * tau);
    for (std::size_t t = 0; t + 3 < n; ++t) {
      const std::array<double, 3> d0{D[0][t], D[1][t], D[2][t]};
      const std::array<double, 3> d1{D[0][t + 1], D[1][t + 1], D[2][t + 1]};
      const std::array<double, 3> d2{D[0][t + 2], D[1][t + 2], D[2][t + 2]};
      third[t] = cross3(d2, cross3(d1, d0))[i] / (tau * tau * tau);
    }
    const auto closed = ShiftOp::monomial(2, second, tau) - ShiftOp::monomial(3, third, tau);
    out.e_formula_relative = std::max(out.e_formula_relative, relative(E[i].value - closed, E[i].scale));
    ShiftOp half;
    for (const auto& [key, c] : eps.entries()) {
      if (key[2] != i) continue;
      half += (F.V[key[0]].value * F.V[key[1]].value - F.V[key[1]].value * F.V[key[0]].value) * (0.5 * c.get_d());
    }
    out.h_commutator_relative = std::max(out.h_commutator_relative, relative(H[i].value - half, H[i].scale));
  }
  return out;
}

namespace {

double lorentz_scale_and_residual(const Series3& X, const Series3& E, const Series3& H, double* scale_out) {
  const std::size_t n = E[0].size();
  double worst = 0, scale = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const std::array<double, 3> D{X[0][t + 1] - X[0][t], X[1][t + 1] - X[1][t], X[2][t + 1] - X[2][t]};
    const std::array<double, 3> Dp{X[0][t + 2] - X[0][t + 1], X[1][t + 2] - X[1][t + 1], X[2][t + 2] - X[2][t + 1]};
    const std::array<double, 3> h{H[0][t], H[1][t], H[2][t]};
    const auto f = cross3(D, h);
    for (int i = 0; i < 3; ++i) {
      const double acc = Dp[i] - D[i];
      worst = std::max(worst, std::abs(E[i][t] + f[i] - acc));
      scale = std::max({scale, std::abs(E[i][t]), std::abs(f[i]), std::abs(acc)});
    }
  }
  if (scale_out) *scale_out = scale;
  return worst;
}

}  // namespace

double lorentz_residual(const Series3& X, const Series3& E, const Series3& H) {
  double scale = 0;
  const double worst = lorentz_scale_and_residual(X, E, H, &scale);
  return scale > 0 ? worst / scale : 0.0;
}

EmClassical em_classical(const Series3& X, double lambda) {
  check_series(X, 3);
  const std::size_t n = X[0].size() - 2;
  EmClassical out;
  for (int i = 0; i < 3; ++i) {
    out.E[i].resize(n);
    out.H[i].resize(n);
  }
  for (std::size_t t = 0; t < n; ++t) {
    const std::array<double, 3> D{X[0][t + 1] - X[0][t], X[1][t + 1] - X[1][t], X[2][t + 1] - X[2][t]};
    const std::array<double, 3> Dp{X[0][t + 2] - X[0][t + 1], X[1][t + 2] - X[1][t + 1], X[2][t + 2] - X[2][t + 1]};
    const double den = lambda + D[0] * D[0] + D[1] * D[1] + D[2] * D[2];
    if (std::abs(den) < 1e-12)
      throw std::domain_error("em_classical: lambda + D.D vanishes at index " + std::to_string(t));
    const auto h = cross3(Dp, D);
    const auto f = cross3(D, h);
    for (int i = 0; i < 3; ++i) {
      out.H[i][t] = h[i] / den;
      out.E[i][t] = (Dp[i] - D[i]) - f[i] / den;
    }
  }
  out.lorentz_relative = lorentz_residual(X, out.E, out.H);
  return out;
}

void SignStream::validate() const {
  for (const auto& e : eps) {
    if (e.size() != eps[0].size()) throw std::invalid_argument("SignStream: lengths differ");
    for (int x : e)
      if (x != 1 && x != -1) throw std::invalid_argument("SignStream: entries must be +1 or -1");
  }
}

SignStream random_sign_stream(CounterRng& rng, std::size_t length) {
  SignStream s;
  for (auto& e : s.eps) {
    e.resize(length);
    for (auto& x : e) x = rng.coin() ? 1 : -1;
  }
  return s;
}

SignField sign_field(const SignStream& s, double k) {
  s.validate();
  if (s.size() < 2) throw std::invalid_argument("sign_field: stream needs at least 2 entries");
  if (!(k > 0)) throw std::invalid_argument("sign_field: k must be positive");
  const std::size_t L = s.size();
  const double step = std::sqrt(k);
  SignField out;
  for (int i = 0; i < 3; ++i) {
    out.X[i].assign(L + 1, 0.0);
    for (std::size_t t = 0; t < L; ++t) out.X[i][t + 1] = out.X[i][t] + s.eps[i][t] * step;
    for (std::size_t t = 0; t < L; ++t) {
      const double d = out.X[i][t + 1] - out.X[i][t];
      out.max_step_error = std::max(out.max_step_error, std::abs(d * d - k) / k);
    }
  }
  std::array<Sequence<double>, 3> h;
  for (auto& v : h) v.resize(L - 1);
  for (std::size_t t = 0; t + 1 < L; ++t) {
    const std::array<double, 3> e{double(s.eps[0][t]), double(s.eps[1][t]), double(s.eps[2][t])};
    const std::array<double, 3> ep{double(s.eps[0][t + 1]), double(s.eps[1][t + 1]), double(s.eps[2][t + 1])};
    const auto c = cross3(ep, e);
    for (int i = 0; i < 3; ++i) h[i][t] = k * c[i];
  }
  std::array<ShiftOp, 3> V;
  for (int i = 0; i < 3; ++i) {
    out.H[i] = ShiftOp::monomial(2, h[i]);
    V[i] = ShiftOp::scalar(out.X[i]).derivative();
  }
  for (int i = 0; i < 3; ++i) {
    const int a = (i + 1) % 3, b = (i + 2) % 3;
    const auto direct = V[a] * V[b] - V[b] * V[a];
    out.cross_check_relative = std::max(out.cross_check_relative, (out.H[i] - direct).max_abs() / k);
  }
  return out;
}

}  // namespace ncdoc::docsim

#include <stdexcept>

#include "ncdoc/rewrite/metric.hpp"
#include "ncdoc/verify/checks.hpp"

namespace ncdoc::verify {

namespace m = rewrite::metric;
using ncalg::commutator;
using rewrite::normal_form;

const char* metric_part_name(MetricPart part) {
  switch (part) {
    case MetricPart::inverse_velocity: return "metric.inverse_velocity";
    case MetricPart::inverse_derivative: return "metric.inverse_derivative";
    case MetricPart::derivative_commutes: return "metric.derivative_commutes";
    case MetricPart::field_commutes: return "metric.field_commutes";
    case MetricPart::raised_field: return "metric.raised_field";
    case MetricPart::acceleration_field_commutes: return "metric.acceleration_field_commutes";
    case MetricPart::acceleration_extraction: return "metric.acceleration_extraction";
  }
  throw std::invalid_argument("metric_part_name: unknown part");
}

namespace {

const char* anchor(MetricPart part) {
  switch (part) {
    case MetricPart::inverse_velocity: return "[X_i, V^j] = delta_ij";
    case MetricPart::inverse_derivative: return "d_r(g^ij) g_jk + g^ij d_r(g_jk) = 0";
    case MetricPart::derivative_commutes: return "[X_r, d_i g_jk] = 0";
    case MetricPart::field_commutes: return "the field F_rs commutes with the coordinates";
    case MetricPart::raised_field: return "[V^r, V^s] = g^ri g^sj F_ij";
    case MetricPart::acceleration_field_commutes: return "G_r commutes with the coordinates";
    case MetricPart::acceleration_extraction: return "[X_i, A_r] = F_ri + 2 Gamma_rit V^t";
  }
  return "";
}

/// F_rs = [V_r, V_s] + (d_r g_ks - d_s g_kr) V^k
NCPoly field(int r, int s, int d) {
  NCPoly out = commutator(m::velocity(r), m::velocity(s));
  for (int k = 1; k <= d; ++k) out += (m::dg(r, k, s) - m::dg(s, k, r)) * m::raised_velocity(k, d);
  return out;
}

/// Gamma_rst = (d_s g_tr + d_t g_sr - d_r g_st) / 2
NCPoly christoffel(int r, int s, int t) {
  return (m::dg(s, t, r) + m::dg(t, s, r) - m::dg(r, s, t)) * Rational(1, 2);
}

std::string idx(std::initializer_list<int> xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

CheckResult check_metric(MetricPart part, const RelationSet& R) {
  const int d = m::dim(R);
  std::vector<std::pair<std::string, NCPoly>> parts;
  auto nf = [&](const NCPoly& p) { return normal_form(p, R); };
  try {
    switch (part) {
      case MetricPart::inverse_velocity:
        for (int i = 1; i <= d; ++i)
          for (int j = 1; j <= d; ++j)
            parts.emplace_back(idx({i, j}), nf(commutator(m::coordinate(i), m::raised_velocity(j, d))) -
                                                NCPoly(i == j ? 1 : 0));
        break;
      case MetricPart::inverse_derivative:
        for (int r = 1; r <= d; ++r)
          for (int i = 1; i <= d; ++i)
            for (int k = 1; k <= d; ++k) {
              NCPoly s;
              for (int j = 1; j <= d; ++j) {
                s += commutator(m::gi(i, j), m::velocity(r)) * m::g(j, k);
                s += m::gi(i, j) * commutator(m::g(j, k), m::velocity(r));
              }
              parts.emplace_back(idx({r, i, k}), nf(s));
            }
        break;
      case MetricPart::derivative_commutes:
        for (int r = 1; r <= d; ++r)
          for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
              for (int k = 1; k <= d; ++k) {
                const auto dgi = m::g(j, k) * m::velocity(i) - m::velocity(i) * m::g(j, k);
                parts.emplace_back(idx({r, i, j, k}), nf(commutator(m::coordinate(r), dgi)));
              }
        break;
      case MetricPart::field_commutes:
        for (int i = 1; i <= d; ++i)
          for (int r = 1; r <= d; ++r)
            for (int s = 1; s <= d; ++s)
              parts.emplace_back(idx({i, r, s}), nf(commutator(m::coordinate(i), field(r, s, d))));
        break;
      case MetricPart::raised_field:
        for (int r = 1; r <= d; ++r)
          for (int s = 1; s <= d; ++s) {
            NCPoly rhs;
            for (int i = 1; i <= d; ++i)
              for (int j = 1; j <= d; ++j) rhs += m::gi(r, i) * m::gi(s, j) * field(i, j, d);
            parts.emplace_back(idx({r, s}),
                               nf(commutator(m::raised_velocity(r, d), m::raised_velocity(s, d)) - rhs));
          }
        break;
      case MetricPart::acceleration_field_commutes:
        for (int r = 1; r <= d; ++r) {
          NCPoly G = m::acceleration(r);
          for (int s = 1; s <= d; ++s) G -= field(r, s, d) * m::raised_velocity(s, d);
          for (int s = 1; s <= d; ++s)
            for (int t = 1; t <= d; ++t)
              G -= christoffel(r, s, t) * m::raised_velocity(s, d) * m::raised_velocity(t, d);
          for (int l = 1; l <= d; ++l) parts.emplace_back(idx({l, r}), nf(commutator(m::coordinate(l), G)));
        }
        break;
      case MetricPart::acceleration_extraction:
        for (int i = 1; i <= d; ++i)
          for (int r = 1; r <= d; ++r) {
            NCPoly rhs = field(r, i, d);
            for (int t = 1; t <= d; ++t) rhs += christoffel(r, i, t) * m::raised_velocity(t, d) * 2;
            parts.emplace_back(idx({i, r}), nf(commutator(m::coordinate(i), m::acceleration(r)) - rhs));
          }
        break;
    }
  } catch (const ncalg::DegreeCapExceeded& e) {
    return CheckResult::indeterminate(metric_part_name(part), anchor(part), e.what());
  } catch (const rewrite::NonTerminatingRewrite& e) {
    return CheckResult::indeterminate(metric_part_name(part), anchor(part), e.what());
  } catch (const rewrite::MissingRule& e) {
    return CheckResult::indeterminate(metric_part_name(part), anchor(part), e.what());
  }
  return ncalg::symbolic_result_multi(metric_part_name(part), anchor(part), parts,
                                      "d = " + std::to_string(d));
}

std::vector<CheckResult> check_metric_all(const RelationSet& R) {
  std::vector<CheckResult> out;
  for (auto p : {MetricPart::inverse_velocity, MetricPart::inverse_derivative, MetricPart::derivative_commutes,
                 MetricPart::field_commutes, MetricPart::raised_field, MetricPart::acceleration_field_commutes,
                 MetricPart::acceleration_extraction})
    out.push_back(check_metric(p, R));
  return out;
}

}  // namespace ncdoc::verify

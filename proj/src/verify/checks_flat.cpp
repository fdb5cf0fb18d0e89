#include <stdexcept>

#include "ncdoc/rewrite/calculus.hpp"
#include "ncdoc/rewrite/fixtures.hpp"
#include "ncdoc/verify/checks.hpp"
#include "ncdoc/verify/cpoly.hpp"

namespace ncdoc::verify {

using ncalg::symbolic_result_multi;
using rewrite::normal_form;

namespace {

using LabelledPolys = std::vector<std::pair<std::string, NCPoly>>;

LabelledPolys hamilton_parts(const NCPoly& H, int d, const RelationSet& R) {
  if (normal_form(H, R) != H) throw std::invalid_argument("check_hamilton_flat: H is not normal ordered");
  const CPoly h = to_commutative(H, d);
  LabelledPolys parts;
  for (int i = 1; i <= d; ++i) {
    const auto X = NCPoly::gen("X", {i});
    const auto P = NCPoly::gen("P", {i});
    const auto xh = normal_form(ncalg::commutator(X, H), R);
    const auto ph = normal_form(ncalg::commutator(P, H), R);
    const auto s = std::to_string(i);
    parts.emplace_back("[X" + s + ",H]", xh - rewrite::dual_partial(H, i, R));
    parts.emplace_back("[X" + s + ",H] oracle", xh - from_commutative(h.partial(d + i - 1), d));
    parts.emplace_back("[P" + s + ",H]", ph + rewrite::flat_partial(H, i, R));
    parts.emplace_back("[P" + s + ",H] oracle", ph + from_commutative(h.partial(i - 1), d));
  }
  return parts;
}

void append(LabelledPolys& out, const std::string& label, LabelledPolys parts) {
  for (auto& [l, p] : parts) out.emplace_back(label + ":" + l, std::move(p));
}

}  // namespace

CheckResult check_hamilton_flat(const NCPoly& H, int d) {
  const auto R = rewrite::flat_weyl(d);
  return symbolic_result_multi("hamilton.flat", "Hamilton's equations from flat coordinates",
                               hamilton_parts(H, d, R));
}

CheckResult check_hamilton_flat_suite(std::uint64_t seed) {
  LabelledPolys parts;
  {
    const auto R = rewrite::flat_weyl(1);
    const auto P = NCPoly::gen("P", {1});
    const auto X = NCPoly::gen("X", {1});
    append(parts, "P^2/2", hamilton_parts(P * P * Rational(1, 2), 1, R));
    append(parts, "X^3", hamilton_parts(X * X * X, 1, R));
    append(parts, "1", hamilton_parts(NCPoly(1), 1, R));
    parts.emplace_back("[X,P^2/2] = P", normal_form(ncalg::commutator(X, P * P * Rational(1, 2)), R) - P);
    parts.emplace_back("[P,X^3] = -3X^2", normal_form(ncalg::commutator(P, X * X * X), R) + X * X * 3);
  }
  CounterRng rng(seed);
  int count = 0;
  for (int d = 1; d <= 3; ++d) {
    const auto R = rewrite::flat_weyl(d);
    for (int t = 0; t < 10; ++t, ++count) {
      const auto H = from_commutative(random_cpoly(rng, 2 * d), d);
      append(parts, "d" + std::to_string(d) + " random " + std::to_string(t), hamilton_parts(H, d, R));
    }
  }
  return symbolic_result_multi("hamilton.flat", "Hamilton's equations from flat coordinates", parts,
                               "3 worked examples and " + std::to_string(count) +
                                   " random normal-ordered Hamiltonians, d = 1..3");
}

CheckResult check_gauge_curvature(std::uint64_t seed) {
  const std::string name = "gauge.curvature";
  const std::string anchor = "gauge field as the curvature of the gauge connection";
  LabelledPolys parts;
  int cases = 0;
  auto run = [&](const std::string& label, rewrite::GaugeSetup G,
                 const std::vector<std::vector<NCPoly>>* expected) {
    ++cases;
    const auto C = rewrite::gauge_curvature(G);
    for (int i = 0; i < G.dim; ++i)
      for (int j = 0; j < G.dim; ++j) {
        const auto tag = label + ":R" + std::to_string(i + 1) + std::to_string(j + 1);
        parts.emplace_back(tag + " antisymmetric", C.R[i][j] + C.R[j][i]);
        if (expected) parts.emplace_back(tag, C.R[i][j] - (*expected)[i][j]);
      }
  };
  try {
    const auto R2 = rewrite::flat_weyl(2);
    const auto R3 = rewrite::flat_weyl(3);
    std::vector<std::vector<NCPoly>> zero(2, std::vector<NCPoly>(2));
    run("A=0", {2, {NCPoly(), NCPoly()}, &R2}, &zero);
    std::vector<std::vector<NCPoly>> rot = {{NCPoly(), NCPoly(-2)}, {NCPoly(2), NCPoly()}};
    run("rotation", {2, {NCPoly::gen("X", {2}), -NCPoly::gen("X", {1})}, &R2}, &rot);

    CounterRng rng(seed);
    for (int t = 0; t < 5; ++t) {
      std::vector<CPoly> a;
      std::vector<NCPoly> A;
      for (int i = 0; i < 3; ++i) {
        CPoly c = random_cpoly(rng, 3);
        // lift to the 2d-variable layout with zero momentum exponents
        CPoly lifted(6);
        for (const auto& [e, k] : c.terms()) {
          auto f = e;
          f.resize(6, 0);
          lifted.add_term(f, k);
        }
        a.push_back(c);
        A.push_back(from_commutative(lifted, 3));
      }
      std::vector<std::vector<NCPoly>> expect(3, std::vector<NCPoly>(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          CPoly r = a[j].partial(i) - a[i].partial(j);
          CPoly lifted(6);
          for (const auto& [e, k] : r.terms()) {
            auto f = e;
            f.resize(6, 0);
            lifted.add_term(f, k);
          }
          expect[i][j] = from_commutative(lifted, 3);
        }
      run("abelian " + std::to_string(t), {3, A, &R3}, &expect);
    }
    for (int t = 0; t < 5; ++t) {
      std::vector<NCPoly> A;
      for (int i = 0; i < 2; ++i) A.push_back(from_commutative(random_cpoly(rng, 4, 2, 3), 2));
      run("momentum-dependent " + std::to_string(t), {2, A, &R2}, nullptr);
    }
  } catch (const std::logic_error& e) {
    auto r = CheckResult::boolean(name, anchor, false, e.what());
    return r;
  }
  return symbolic_result_multi(name, anchor, parts,
                               std::to_string(cases) + " potentials; both computations agree on each");
}

}  // namespace ncdoc::verify

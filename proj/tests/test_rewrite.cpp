#include <algorithm>
#include <fstream>

#include "doctest.h"
#include "ncdoc/ncalg/random.hpp"
#include "ncdoc/rewrite/calculus.hpp"
#include "ncdoc/rewrite/fixtures.hpp"
#include "ncdoc/rewrite/metric.hpp"

using namespace ncdoc;
using namespace ncdoc::rewrite;
using ncdoc::CounterRng;
using ncalg::random_poly;

namespace {

NCPoly P(const char* s) { return NCPoly::parse(s); }
NCPoly X(int i) { return NCPoly::gen("X", {i}); }
NCPoly Pm(int i) { return NCPoly::gen("P", {i}); }

std::vector<Generator> weyl_alphabet(int d) {
  std::vector<Generator> out;
  for (int i = 1; i <= d; ++i) {
    out.push_back(Generator::make("X", {i}));
    out.push_back(Generator::make("P", {i}));
  }
  return out;
}

// Commutative partial derivative of a polynomial in the X[i] alone.
NCPoly commutative_partial(const NCPoly& F, int i) {
  const Generator xi = Generator::make("X", {i});
  NCPoly out;
  for (const auto& [w, c] : F.terms()) {
    auto it = std::find(w.begin(), w.end(), xi);
    if (it == w.end()) continue;
    const auto count = std::count(w.begin(), w.end(), xi);
    Word rest = w;
    rest.erase(rest.begin() + (it - w.begin()));
    out.add_term(rest, c * Rational(count));
  }
  return out;
}

RelationSet two_commuting() {
  RelationDefinition def;
  def.name = "xy";
  def.blocks = {{"xy", true, false, {{"x"}, {"y"}}}};
  return RelationSet(def);
}

}  // namespace

TEST_CASE("normal form examples") {
  auto weyl = flat_weyl(1);
  CHECK(normal_form(Pm(1) * X(1), weyl) == X(1) * Pm(1) - 1);
  auto js = jshift();
  CHECK(normal_form(P("X.J"), js) == P("J.X^(1)"));
  CHECK(normal_form(P("X.X^(1).J.J"), js) == P("J.J.X^(2).X^(3)"));
  CHECK(normal_form(P("y.x"), two_commuting()) == P("x.y"));
}

TEST_CASE("shipped fixtures match the builders") {
  const std::vector<std::pair<std::string, RelationSet>> sets = [] {
    std::vector<std::pair<std::string, RelationSet>> v;
    v.emplace_back("flat_weyl_d1", flat_weyl(1));
    v.emplace_back("flat_weyl_d2", flat_weyl(2));
    v.emplace_back("flat_weyl_d3", flat_weyl(3));
    v.emplace_back("jshift", jshift());
    v.emplace_back("shift_coordinate", shift_coordinate());
    v.emplace_back("metric_d2", metric_d2());
    return v;
  }();
  for (const auto& [name, built] : sets) {
    CAPTURE(name);
    auto loaded = load_relation_set(fixture_path(name));
    CHECK(to_json(loaded) == to_json(built));
    CHECK(to_json(relation_set_from_json(to_json(built))) == to_json(built));
  }
  CHECK_THROWS_AS(load_relation_set("/nonexistent/x.json"), std::runtime_error);
}

TEST_CASE("idempotence on random inputs") {
  CounterRng rng(ncalg::kDefaultSeed);
  auto check = [&](const RelationSet& R, const std::vector<Generator>& alphabet, int trials,
                   ncalg::RandomPolyShape shape) {
    for (int t = 0; t < trials; ++t) {
      auto p = random_poly(rng, alphabet, shape);
      CAPTURE(R.name());
      CAPTURE(p.to_string());
      auto n = normal_form(p, R);
      CHECK(normal_form(n, R) == n);
    }
  };
  for (int d = 1; d <= 3; ++d) check(flat_weyl(d), weyl_alphabet(d), 500, {4, 4, -3, 3});
  check(jshift(), {Generator::make("J"), Generator::make("X"), Generator::make("X", {}, 1)}, 500,
        {4, 4, -3, 3});
  check(shift_coordinate(), {Generator::make("J"), Generator::make("x")}, 500, {4, 4, -3, 3});
  using namespace metric;
  std::vector<Generator> m;
  for (int i = 1; i <= 2; ++i) {
    m.push_back(Generator::make("X", {i}));
    m.push_back(Generator::make("X", {i}, 1));
  }
  m.push_back(Generator::make("g", {1, 2}));
  m.push_back(Generator::make("gi", {1, 1}));
  m.push_back(Generator::make("gi", {2, 2}));
  m.push_back(Generator::make("Dg", {1, 1, 2}));
  auto R = metric_d2();
  check(R, m, 500, {3, 3, -3, 3});
  // accelerations ahead of several metric factors expand steeply; keep those words short
  std::vector<Generator> acc{Generator::make("X", {1}), Generator::make("X", {2}, 1),
                             Generator::make("X", {1}, 2), Generator::make("X", {2}, 2),
                             Generator::make("g", {1, 2}), Generator::make("gi", {1, 2})};
  check(R, acc, 200, {2, 3, -3, 3});
}

TEST_CASE("quotient soundness of every rule") {
  CounterRng rng(7);
  for (const auto& R : {flat_weyl(3), shift_coordinate(), metric_d2()}) {
    for (const auto& [key, value] : R.definition().rules) {
      NCPoly a(key.first), b(key.second);
      CHECK(normal_form(a * b - b * a - value, R).is_zero());
    }
  }
  auto js = jshift();
  for (int n = 0; n < 7; ++n) {
    NCPoly J = P("J"), x = NCPoly(Generator::make("X", {}, n));
    CHECK(normal_form(J * x - x * J - js.bracket_rule(Generator::make("J"), Generator::make("X", {}, n)), js)
              .is_zero());
  }
  CHECK_THROWS(normal_form(NCPoly::gen("X", {}, 8) * P("J"), js));

  // lazily minted brackets of the metric algebra
  auto R = metric_d2();
  for (auto t : {Generator::make("g", {1, 2}), Generator::make("gi", {1, 1}), Generator::make("Dg", {2, 1, 1})})
    for (int r = 1; r <= 2; ++r)
      for (int dot = 1; dot <= 2; ++dot) {
        auto v = Generator::make("X", {r}, dot);
        NCPoly a(t), b(v);
        CHECK(normal_form(a * b - b * a - R.bracket_rule(t, v), R).is_zero());
      }
}

TEST_CASE("metric inverse relations") {
  using namespace metric;
  auto R = metric_d2();
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k) {
      NCPoly s, t;
      for (int j = 1; j <= 2; ++j) s += gi(i, j) * g(j, k);
      for (int j = 1; j <= 2; ++j) t += g(i, j) * gi(j, k);
      CHECK(normal_form(s, R) == NCPoly(i == k ? 1 : 0));
      CHECK(normal_form(t, R) == NCPoly(i == k ? 1 : 0));
    }
  CHECK(normal_form(NCPoly::gen("g", {2, 1}), R) == g(1, 2));
  CHECK(normal_form(velocity(1) * coordinate(2), R) == coordinate(2) * velocity(1) - g(1, 2));
  CHECK(normal_form(velocity(1) * g(1, 1), R) == g(1, 1) * velocity(1) - dg(1, 1, 1));
}

TEST_CASE("ill-formed relation sets are diagnosed") {
  RelationDefinition def;
  def.name = "loop";
  def.blocks = {{"a", false, false, {{"a"}}}, {"b", false, false, {{"b"}}}};
  def.rules[{Generator::make("a"), Generator::make("b")}] = P("b.a");
  RelationSet loop(def);
  CHECK_THROWS_AS(normal_form(P("b.a"), loop), NonTerminatingRewrite);

  def.rules.clear();
  RelationSet missing(def);
  CHECK_THROWS_AS(normal_form(P("b.a"), missing), MissingRule);
  CHECK(normal_form(P("a.b"), missing) == P("a.b"));
  CHECK_THROWS_AS(normal_form(P("c"), missing), std::invalid_argument);

  def.rules[{Generator::make("b"), Generator::make("a")}] = NCPoly(1);
  CHECK_THROWS_AS(RelationSet{def}, std::invalid_argument);
}

TEST_CASE("flat and dual partials") {
  auto R2 = flat_weyl(2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      CHECK(flat_partial(X(i), j, R2) == NCPoly(i == j ? 1 : 0));
      CHECK(flat_partial(Pm(j), i, R2).is_zero());
      CHECK(dual_partial(Pm(i), j, R2) == NCPoly(i == j ? 1 : 0));
      CHECK(dual_partial(X(i), j, R2).is_zero());
    }
  auto R1 = flat_weyl(1);
  CHECK(flat_partial(X(1) * X(1), 1, R1) == X(1) * 2);
  CHECK(dual_partial(Pm(1) * Pm(1), 1, R1) == Pm(1) * 2);

  CounterRng rng(11);
  std::vector<Generator> xs{Generator::make("X", {1}), Generator::make("X", {2})};
  for (int t = 0; t < 100; ++t) {
    auto F = normal_form(random_poly(rng, xs, {4, 4, -3, 3}), R2);
    for (int i = 1; i <= 2; ++i) CHECK(flat_partial(F, i, R2) == commutative_partial(F, i));
  }
}

TEST_CASE("Weyl partials commute and Hamilton shape") {
  CounterRng rng(12);
  for (int d = 1; d <= 3; ++d) {
    auto R = flat_weyl(d);
    auto alphabet = weyl_alphabet(d);
    for (int t = 0; t < 40; ++t) {
      auto H = normal_form(random_poly(rng, alphabet, {3, 4, -3, 3}), R);
      for (int i = 1; i <= d; ++i) {
        CHECK(normal_form(commutator(Pm(i), H), R) == -flat_partial(H, i, R));
        CHECK(normal_form(commutator(X(i), H), R) == dual_partial(H, i, R));
        for (int j = 1; j <= d; ++j) {
          CHECK(flat_partial(flat_partial(H, i, R), j, R) == flat_partial(flat_partial(H, j, R), i, R));
        }
      }
    }
  }
}

TEST_CASE("gauge curvature") {
  auto R2 = flat_weyl(2);
  auto zero = gauge_curvature({2, {NCPoly(), NCPoly()}, &R2});
  CHECK(zero.R[0][1].is_zero());
  auto rot = gauge_curvature({2, {X(2), -X(1)}, &R2});
  CHECK(rot.R[0][1] == NCPoly(-2));
  CHECK(rot.R[1][0] == NCPoly(2));

  auto cubic = gauge_curvature({2, {X(1) * X(2) * X(2), X(1) * X(1)}, &R2});
  CHECK(cubic.R[0][1] == normal_form(X(1) * 2 - X(1) * X(2) * 2, R2));

  // matrix-valued potential: coefficients T[a] commute with X and P but not each other
  auto def = R2.definition();
  def.name = "flat_weyl_d2_gauge";
  def.blocks.push_back({"T", false, true, {{"T", 0, 1}}});
  RelationSet RT(def);
  NCPoly T1 = NCPoly::gen("T", {1}), T2 = NCPoly::gen("T", {2});
  auto nonabelian = gauge_curvature({2, {X(2) * T1, X(1) * T2}, &RT});
  CHECK(nonabelian.R[0][1] == normal_form(T2 - T1 + X(2) * X(1) * (T1 * T2 - T2 * T1), RT));
}

TEST_CASE("covariant curvature and connection properties") {
  auto R = flat_weyl(2);
  VariableFrame frame(R);
  const auto x1 = Generator::make("X", {1}), x2 = Generator::make("X", {2});
  frame.add(x1, Pm(1));
  frame.add(x2, Pm(2));
  const FrameVector V1{{1, x1}}, V2{{1, x2}};
  NCPoly Z = X(1) * X(2) * Pm(1) + Pm(2) * Pm(2);
  CHECK(covariant_curvature(V1, V2, Z, frame).is_zero());

  // scalar coefficients: commuting variables leave the double commutator with [P_X, P_Y]
  NCPoly f = X(1) * X(1) + X(2);
  const FrameVector fV1{{f, x1}};
  NCPoly PX = frame.represent(fV1), PY = frame.represent(V2);
  CHECK(PX == normal_form(f * Pm(1), R));
  CHECK(covariant_curvature(fV1, V2, Z, frame) == normal_form(commutator(commutator(PX, PY), Z), R));
  CHECK(!covariant_curvature(fV1, V2, Z, frame).is_zero());

  // linearity, scalar pull-out, and the product rule
  NCPoly Y = X(2);
  const FrameVector sum{{1, x1}, {1, x2}};
  CHECK(frame.covariant(sum, Z) == normal_form(frame.covariant(V1, Z) + frame.covariant(V2, Z), R));
  CHECK(frame.covariant(fV1, Y) == normal_form(f * frame.covariant(V1, Y), R));
  NCPoly Xf = normal_form(commutator(f, Pm(1)), R);
  CHECK(frame.covariant(V1, f * Y) == normal_form(Xf * Y + f * frame.covariant(V1, Y), R));

  CHECK_THROWS_AS(frame.represent({{Pm(1), x1}}), std::invalid_argument);
  CHECK_THROWS_AS(frame.represent({{1, Generator::make("P", {1})}}), std::invalid_argument);
  CHECK_THROWS_AS(frame.decompose(Pm(1)), std::invalid_argument);
}

TEST_CASE("noncommuting variables use the bracket term") {
  // Heisenberg-type variables [A, B] = C with C central among the variables
  RelationDefinition def;
  def.name = "heisenberg";
  def.blocks = {{"A", false, false, {{"A"}}},
                {"C", false, false, {{"C"}}},
                {"B", false, false, {{"B"}}},
                {"NZ", false, true, {{"N", 0, 1}, {"Z"}}}};
  auto A = Generator::make("A"), B = Generator::make("B"), C = Generator::make("C");
  def.rules[{A, B}] = NCPoly(C);
  def.rules[{A, C}] = NCPoly();
  def.rules[{C, B}] = NCPoly();
  RelationSet R(def);
  VariableFrame frame(R);
  auto N = [](int i) { return NCPoly::gen("N", {i}); };
  frame.add(A, N(1));
  frame.add(B, N(2));
  frame.add(C, N(3));
  NCPoly Z = NCPoly::gen("Z");
  auto curv = covariant_curvature({{1, A}}, {{1, B}}, Z, frame);
  CHECK(curv == normal_form(commutator(commutator(N(1), N(2)), Z) - commutator(Z, N(3)), R));
  CHECK(!curv.is_zero());
  CHECK(covariant_curvature({{1, A}}, {{2, A}}, Z, frame).is_zero());
  CHECK(frame.decompose(NCPoly(C) * 3).front().variable == C);
}

TEST_CASE("discrete derivative and falling powers") {
  auto S = shift_coordinate();
  NCPoly x = P("x"), J = P("J");
  CHECK(discrete_derivative(x, S) == J);
  CHECK(falling_power(2, S) == P("x.x - 1/2 * x"));
  CHECK(discrete_derivative(falling_power(2, S), S) == normal_form(J * Rational(2) * x, S));
  CHECK(normal_form(x * J, S) == normal_form(J * (x + Rational(1, 2)), S));
  for (int n = 1; n <= 8; ++n) CHECK(discrete_leibniz_check(S, n).passed());
  auto S3 = shift_coordinate(Rational(3));
  CHECK(discrete_leibniz_check(S3, 8).passed());
  CHECK_THROWS_AS(discrete_leibniz_check(S, 9), std::invalid_argument);
}

TEST_CASE("normal form respects the degree cap") {
  auto R = flat_weyl(1);
  ncalg::ScopedDegreeCap cap(4);
  CHECK_THROWS_AS(normal_form(P("P[1].P[1].X[1].X[1].X[1]"), R), ncalg::DegreeCapExceeded);
}

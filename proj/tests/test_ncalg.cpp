#include <set>

#include "doctest.h"
#include "ncdoc/ncalg/derivation.hpp"
#include "ncdoc/ncalg/ncpoly.hpp"
#include "ncdoc/ncalg/random.hpp"
#include "ncdoc/ncalg/vector_ops.hpp"

using namespace ncdoc;
using namespace ncdoc::ncalg;

namespace {

NCPoly P(const char* s) { return NCPoly::parse(s); }

std::vector<Generator> alphabet(std::initializer_list<const char*> names) {
  std::vector<Generator> out;
  for (auto n : names) out.push_back(Generator::make(n));
  return out;
}

}  // namespace

TEST_CASE("generator identity and ordering") {
  auto a = Generator::make("X", {1}, 2);
  auto b = Generator::make("X", {1}, 2);
  CHECK(a == b);
  CHECK(a.to_string() == "X[1]^(2)");
  CHECK(Generator::make("X", {1}) < Generator::make("X", {2}));
  CHECK(Generator::make("X", {1}, 0) < Generator::make("X", {1}, 1));
  CHECK(Generator::make("A") < Generator::make("B"));
  CHECK(Generator::make("X", {2}).to_string() == "X[2]");
  CHECK_THROWS_AS(Generator::make("1x"), std::invalid_argument);
  CHECK_THROWS_AS(Generator::make("x", {}, -1), std::invalid_argument);
}

TEST_CASE("product") {
  auto x = NCPoly::gen("x"), y = NCPoly::gen("y");
  CHECK((x * y).to_string() == "1 * x.y");
  CHECK((NCPoly(1) * (x + y)) == x + y);
  // hand expansion keeps yx and xy distinct
  auto prod = (x + y) * (x - y);
  CHECK(prod == P("x.x - x.y + y.x - y.y"));
  CHECK(prod.size() == 4);
  CHECK((x * NCPoly()).is_zero());
}

TEST_CASE("commutator examples") {
  auto x = NCPoly::gen("x"), y = NCPoly::gen("y"), z = NCPoly::gen("z");
  CHECK(commutator(x, x).is_zero());
  CHECK(commutator(x, y) == P("x.y - y.x"));
  CHECK(jacobi_sum(x, y, z).is_zero());
}

TEST_CASE("text form") {
  CHECK(NCPoly().to_string() == "0");
  CHECK(NCPoly(Rational(-3, 2)).to_string() == "-3/2");
  auto p = P("2/3 * X[1]^(2).P - 5 + y");
  CHECK(p.coefficient({}) == -5);
  CHECK(NCPoly::parse(p.to_string()) == p);
  CHECK(P("  - x.y") == P("-1 * x.y"));
  CHECK(P("x - x").is_zero());
  CHECK(P("g[1,2].gi[2,1]").to_string() == "1 * g[1,2].gi[2,1]");
  CHECK_THROWS_AS(P(""), std::invalid_argument);
  CHECK_THROWS_AS(P("x +"), std::invalid_argument);
  CHECK_THROWS_AS(P("x y"), std::invalid_argument);
  CHECK_THROWS_AS(P("1/0 * x"), std::invalid_argument);
  CHECK_THROWS_AS(P("X[1"), std::invalid_argument);
}

TEST_CASE("random properties: Jacobi, associativity, round trip") {
  CounterRng rng(kDefaultSeed);
  auto abc = alphabet({"a", "b", "c", "d"});
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_poly(rng, abc), q = random_poly(rng, abc), r = random_poly(rng, abc);
    CHECK(jacobi_sum(p, q, r).is_zero());
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(commutator(p, q) == -commutator(q, p));
    auto text = p.to_string();
    CHECK(text == NCPoly::parse(text).to_string());
    CHECK(NCPoly::parse(text) == p);
  }
}

TEST_CASE("canonical form is independent of construction order") {
  auto a = P("x.y + 2 * y.x + 3");
  auto b = P("3 + 2 * y.x + x.y");
  CHECK(a.to_string() == b.to_string());
  CHECK(a.terms() == b.terms());
}

TEST_CASE("degree cap") {
  auto x = NCPoly::gen("x");
  NCPoly p = 1;
  for (int i = 0; i < 12; ++i) p *= x;
  CHECK(p.degree() == 12);
  CHECK_THROWS_AS(p * x, DegreeCapExceeded);
  {
    ScopedDegreeCap cap(3);
    CHECK_THROWS_AS(x * x * x * x, DegreeCapExceeded);
  }
  CHECK(degree_cap() == 12);
}

TEST_CASE("time derivation") {
  auto d = FormalDerivation::time();
  auto X1 = NCPoly::gen("X", {1}), Xd2 = NCPoly::gen("X", {2}, 1);
  CHECK(d(X1) == NCPoly::gen("X", {1}, 1));
  CHECK(d(X1 * Xd2) == NCPoly::gen("X", {1}, 1) * Xd2 + X1 * NCPoly::gen("X", {2}, 2));
  CHECK(d(NCPoly(7)).is_zero());

  auto Xj = NCPoly::gen("X", {1}), Xk = NCPoly::gen("X", {2}, 1);
  auto lhs = d(commutator(Xj, Xk));
  auto rhs = commutator(d(Xj), Xk) + commutator(Xj, d(Xk));
  CHECK(lhs == rhs);
  CHECK(rhs == commutator(NCPoly::gen("X", {1}, 1), NCPoly::gen("X", {2}, 1)) +
                   commutator(NCPoly::gen("X", {1}), NCPoly::gen("X", {2}, 2)));
}

TEST_CASE("derivation: Leibniz on random pairs, unmapped generators") {
  auto abc = alphabet({"a", "b", "c"});
  CounterRng rng(kDefaultSeed + 1);
  FormalDerivation d;
  for (auto g : abc) d.set_image(g, random_poly(rng, abc, {2, 3, -3, 3}));
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_poly(rng, abc), q = random_poly(rng, abc);
    CHECK(derive(d, p * q) == derive(d, p) * q + p * derive(d, q));
    CHECK(derive(d, p + q) == derive(d, p) + derive(d, q));
  }

  FormalDerivation partial({{Generator::make("a"), NCPoly(1)}});
  std::set<Generator> missing;
  auto out = partial.apply(P("a.b + b.a.a"), &missing);
  CHECK(out == P("b + b.a + b.a"));
  CHECK(missing == std::set<Generator>{Generator::make("b")});
}

TEST_CASE("cross and dot") {
  auto A = generator_vector("A", 3), B = generator_vector("B", 3), C = generator_vector("C", 3);
  auto AxB = cross(A, B);
  CHECK(AxB[2] == A[0] * B[1] - A[1] * B[0]);

  auto V = generator_vector("X", 3, 1);
  auto VxV = cross(V, V);
  const auto eps = StructureConstants::epsilon();
  for (int k = 0; k < 3; ++k) {
    NCPoly half;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) half += commutator(V[i], V[j]) * (eps(i, j, k) / Rational(2));
    CHECK(VxV[k] == half);
  }

  std::vector<Rational> s{Rational(2), Rational(-1, 3), Rational(5)};
  for (const auto& c : cross_t(s, s, eps)) CHECK(c == 0);

  std::vector<NCPoly> e1{1, 0, 0}, e2{0, 1, 0};
  CHECK(dot(e1, e2).is_zero());
  PolyVec xyz{NCPoly::gen("x"), NCPoly::gen("y"), NCPoly::gen("z")};
  CHECK(dot(xyz, xyz) == P("x.x + y.y + z.z"));

  CHECK((dot(cross(A, B), C) - dot(A, cross(B, C))).is_zero());
  CHECK_THROWS_AS(cross(A, generator_vector("B", 2)), std::invalid_argument);
  CHECK_THROWS_AS(dot(A, generator_vector("B", 2)), std::invalid_argument);
}

TEST_CASE("structure constants validation") {
  CHECK_THROWS_AS(StructureConstants(2, {{{0, 1, 0}, Rational(1)}}, false), std::invalid_argument);
  StructureConstants ok(2, {{{0, 1, 0}, Rational(1)}, {{1, 0, 0}, Rational(-1)}}, false);
  CHECK(ok(1, 0, 0) == -1);
  CHECK_THROWS_AS(StructureConstants(2, {{{0, 1, 0}, Rational(1)}, {{1, 0, 0}, Rational(-1)}}, true),
                  std::invalid_argument);
  auto e6 = StructureConstants::direct_sum(StructureConstants::epsilon(), StructureConstants::epsilon());
  CHECK(e6.dim() == 6);
  CHECK(e6(3, 4, 5) == 1);
  CHECK(e6.cyclic());
}

TEST_CASE("epsilon identity") {
  int lhs = 0;
  for (int i = 1; i <= 3; ++i) lhs += epsilon3(1, 2, i) * epsilon3(1, 2, i);
  CHECK(lhs == 1);
  lhs = 0;
  for (int i = 1; i <= 3; ++i) lhs += epsilon3(1, 1, i) * epsilon3(2, 3, i);
  CHECK(lhs == 0);
  CHECK(epsilon3(1, 2, 3) == 1);
  CHECK(epsilon3(2, 1, 3) == -1);
  CHECK(epsilon3(3, 1, 2) == 1);
  auto r = epsilon_identity_check();
  CHECK(r.passed());
}

TEST_CASE("symbolic result records residual") {
  auto r = symbolic_result("t", "anchor", P("x - y"));
  CHECK(r.status == Status::fail);
  CHECK(r.residual_size == 2);
  CHECK(r.residual_terms.size() == 2);
  CHECK(symbolic_result("t", "a", NCPoly()).passed());
}

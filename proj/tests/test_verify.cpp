#include "doctest.h"
#include "ncdoc/rewrite/fixtures.hpp"
#include "ncdoc/rewrite/metric.hpp"
#include "ncdoc/verify/checks.hpp"
#include "ncdoc/verify/cpoly.hpp"
#include "ncdoc/verify/nonassoc.hpp"
#include "ncdoc/verify/suite.hpp"

using namespace ncdoc;
using namespace ncdoc::verify;
using ncalg::StructureConstants;

namespace {

const std::vector<std::string> kQP = {"q", "p"};

bool jets_equal(const Jet& a, const Jet& b) { return (a - b).is_zero(); }

}  // namespace

TEST_CASE("commutative polynomials") {
  const CPoly q = CPoly::variable(2, 0), p = CPoly::variable(2, 1);
  const CPoly f = q * q * p + p * 3 - CPoly::constant(2, 2);
  CHECK(f.to_string(kQP) == "-2 + 3 p + 1 q^2 p");
  CHECK(f.partial(0) == q * p * 2);
  CHECK(f.partial(1) == q * q + CPoly::constant(2, 3));
  CHECK(f.degree() == 3);
  CHECK((f - f).is_zero());
  CHECK(poisson(q, p) == CPoly::constant(2, 1));
  CHECK_THROWS_AS(q + CPoly::variable(3, 0), std::invalid_argument);

  CounterRng rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_cpoly(rng, 3);
    CHECK(a.partial(0).partial(2) == a.partial(2).partial(0));
    CHECK(a.degree() <= 3);
  }
}

TEST_CASE("commutative image of normal-ordered words") {
  CounterRng rng(11);
  for (int t = 0; t < 30; ++t) {
    const auto c = random_cpoly(rng, 4);
    CHECK(to_commutative(from_commutative(c, 2), 2) == c);
  }
  CHECK_THROWS_AS(to_commutative(NCPoly::parse("P[1].X[1]"), 1), std::invalid_argument);
  CHECK_THROWS_AS(to_commutative(NCPoly::gen("Q", {1}), 1), std::invalid_argument);
}

TEST_CASE("non-associative algebras") {
  const auto M = NonAssocAlgebra::matrix2();
  CounterRng rng(3);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        CHECK(is_zero(M.associator(M.basis(i), M.basis(j), M.basis(k))));
  // the associator-sum identity is linear in each slot, so random vectors must satisfy it too
  for (int t = 0; t < 10; ++t) {
    const auto A = NonAssocAlgebra::random(rng, 3);
    Vec a(3), b(3), c(3);
    for (int i = 0; i < 3; ++i) {
      a[i] = rng.range(-3, 3);
      b[i] = rng.range(-3, 3);
      c[i] = rng.range(-3, 3);
    }
    CHECK(is_zero(A.jacobi_sum(a, b, c) - A.associator_sum(a, b, c)));
  }
  CHECK_THROWS_AS(NonAssocAlgebra({{Vec(2)}}), std::invalid_argument);
}

TEST_CASE("matrix jets form a differential algebra") {
  const JetAlgebra J(5);
  const auto a = J.gen("a"), b = J.gen("b"), c = J.gen("X", {1}, 1);
  CHECK(jets_equal(J.d(a * b), J.d(a) * b + a * J.d(b)));
  CHECK(jets_equal((a * b) * c, a * (b * c)));
  CHECK(jets_equal(J.gen("X", {1}, 0).derivative(), c));
  CHECK(jets_equal(a * Jet::constant(1), a));
  CHECK(Jet().is_zero());
  CHECK_FALSE((a * b - b * a).is_zero());
  CHECK(a.length() == 6);
  CHECK((a * Jet::constant(2)).length() == 6);

  Jet e = a;
  for (int i = 0; i < 6; ++i) e = e.derivative();
  CHECK_THROWS_AS(e.is_zero(), std::logic_error);
}

TEST_CASE("matrix substitution is a homomorphism intertwining the time derivation") {
  const JetAlgebra J(9);
  const PolyAlgebra P;
  CounterRng rng(13);
  std::vector<Generator> alphabet = {Generator::make("x"), Generator::make("y"), Generator::make("X", {1}, 1)};
  for (int t = 0; t < 20; ++t) {
    const auto p = ncalg::random_poly(rng, alphabet), q = ncalg::random_poly(rng, alphabet);
    CHECK(jets_equal(evaluate(p * q, J), evaluate(p, J) * evaluate(q, J)));
    CHECK(jets_equal(evaluate(p + q, J), evaluate(p, J) + evaluate(q, J)));
    CHECK(jets_equal(evaluate(P.d(p), J), J.d(evaluate(p, J))));
  }
}

TEST_CASE("free-algebra identities vanish on both routes") {
  const PolyAlgebra P;
  const JetAlgebra J(0xD0C);
  using namespace identities;
  CHECK(count_nonzero(P, triple_product(P)) == 0);
  CHECK(count_nonzero(J, triple_product(J)) == 0);
  CHECK(count_nonzero(P, curl_of_cross(P)) == 0);
  CHECK(count_nonzero(J, curl_of_cross(J)) == 0);
  CHECK(count_nonzero(P, levi_civita(P, 2)) == 0);
  CHECK(count_nonzero(J, levi_civita(J, 2)) == 0);
  CHECK(count_nonzero(P, levi_civita(P, 2, true)) == 8);
  CHECK(count_nonzero(J, levi_civita(J, 2, true)) == 8);
  CHECK(count_nonzero(P, maxwell(P, MaxwellPart::faraday_without_hh)) == 3);
  CHECK(count_nonzero(P, general_cross_jacobi(P, StructureConstants(3, {}, true))) == 0);
}

TEST_CASE("cross product specializations") {
  const auto f = StructureConstants::epsilon();
  // commuting scalars: H x H vanishes and the classical triple product holds
  std::vector<Jet> s = {Jet::constant(2), Jet::constant(-1), Jet::constant(Rational(1, 3))};
  std::vector<Jet> t = {Jet::constant(5), Jet::constant(4), Jet::constant(-2)};
  for (const auto& x : ncalg::cross_t(s, s, f)) CHECK(x.is_zero());
  auto lhs = ncalg::cross_t(s, ncalg::cross_t(t, s, f), f);
  auto rhs = ncalg::cross_t(ncalg::cross_t(s, t, f), s, f);
  // A x (B x A) = (A x B) x A for commuting entries
  for (int i = 0; i < 3; ++i) CHECK((lhs[i] - rhs[i]).is_zero());

  // A = V: curl V = -2 V x V
  const PolyAlgebra P;
  identities::Field<PolyAlgebra> F(P, f);
  auto c = F.curl(F.V);
  auto h = F.cross(F.V, F.V);
  for (int i = 0; i < 3; ++i) CHECK(c[i] == h[i] * -2);
  CHECK(F.H()[2] == ncalg::commutator(F.V[0], F.V[1]));

  const StructureConstants noncyclic(2, {{{0, 1, 0}, Rational(1)}, {{1, 0, 0}, Rational(-1)}}, false);
  CHECK_THROWS_AS(check_general_cross_jacobi(noncyclic), std::invalid_argument);
  CHECK(check_general_cross_jacobi(StructureConstants::epsilon()).passed());
}

TEST_CASE("Hamilton's equations in flat coordinates") {
  const auto X = NCPoly::gen("X", {1}), Pm = NCPoly::gen("P", {1});
  CHECK(check_hamilton_flat(Pm * Pm * Rational(1, 2), 1).passed());
  CHECK(check_hamilton_flat(X * X * X, 1).passed());
  CHECK(check_hamilton_flat(NCPoly(1), 1).passed());
  CHECK(check_hamilton_flat(NCPoly::parse("2 * X[1].X[2].P[2] - 1 * P[1].P[1].P[2]"), 2).passed());
  CHECK_THROWS_AS(check_hamilton_flat(Pm * X, 1), std::invalid_argument);
}

TEST_CASE("metric checks and negative controls") {
  const auto R = rewrite::metric_d2();
  for (const auto& r : check_metric_all(R)) {
    INFO(r.name << ": " << r.notes);
    CHECK(r.passed());
  }
  namespace m = rewrite::metric;
  // the field with undotted raised coordinates does not commute with X
  NCPoly F12 = ncalg::commutator(m::velocity(1), m::velocity(2));
  for (int k = 1; k <= 2; ++k) {
    NCPoly Xk;
    for (int j = 1; j <= 2; ++j) Xk += m::gi(k, j) * m::coordinate(j);
    F12 += (m::dg(1, k, 2) - m::dg(2, k, 1)) * Xk;
  }
  bool any = false;
  for (int i = 1; i <= 2; ++i)
    any = any || !rewrite::normal_form(ncalg::commutator(m::coordinate(i), F12), R).is_zero();
  CHECK(any);
  // [X_1, A_1] is not the field alone
  CHECK_FALSE(rewrite::normal_form(ncalg::commutator(m::coordinate(1), m::acceleration(1)), R).is_zero());
}

TEST_CASE("Poisson and associator checks") {
  CHECK(check_poisson_jacobi(kDefaultSeed, 100).passed());
  CHECK(check_associator_sum(kDefaultSeed, 20).passed());
  CHECK(check_poisson_exact_formula(kDefaultSeed, 50).passed());
  CHECK(check_hamiltonian_divergence(kDefaultSeed, 20).passed());
  CHECK(check_poisson_jacobi(1234, 10).passed());
}

TEST_CASE("mutants fail on both routes") {
  const auto r = check_mutants();
  CHECK(r.passed());
  CHECK(r.notes.find("symbolic 0") == std::string::npos);
  CHECK(r.notes.find("matrix 0") == std::string::npos);
  CHECK(check_matrix_oracle(99).passed());
}

TEST_CASE("suite selection and reports") {
  CHECK(select_checks({}).size() == registry().size());
  CHECK(select_checks({"maxwell.*"}).size() == 5);
  CHECK(select_checks({"metric.*", "levi_civita.d2"}).size() == 8);
  CHECK_THROWS_AS(select_checks({"nosuch"}), UnknownCheck);

  SuiteOptions opts;
  opts.only = {"maxwell.*", "poisson.*", "oracle.*"};
  const auto a = report_json(run_suite(opts));
  opts.parallel = false;
  const auto b = report_json(run_suite(opts));
  CHECK(a.dump() == b.dump());
  CHECK(a.size() == 11);
  CHECK(a[0]["name"] == "maxwell.lorentz_force");
  CHECK(a[0]["status"] == "pass");
}

TEST_CASE("full suite passes") {
  const auto results = run_suite();
  for (const auto& r : results) {
    INFO(r.name << ": " << r.notes);
    CHECK(r.passed());
  }
  CHECK(all_passed(results));
}

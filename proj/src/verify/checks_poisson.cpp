#include "ncdoc/verify/checks.hpp"
#include "ncdoc/verify/cpoly.hpp"
#include "ncdoc/verify/nonassoc.hpp"

namespace ncdoc::verify {

namespace {

const std::vector<std::string> kQP = {"q", "p"};

CheckResult cpoly_result(std::string name, std::string anchor,
                         const std::vector<std::pair<std::string, CPoly>>& parts, std::string notes,
                         std::size_t max_terms = 12) {
  CheckResult r;
  r.name = std::move(name);
  r.paper_anchor = std::move(anchor);
  r.status = Status::pass;
  std::size_t failing = 0;
  for (const auto& [label, p] : parts) {
    if (p.is_zero()) continue;
    r.status = Status::fail;
    ++failing;
    r.residual_size += p.terms().size();
    if (r.residual_terms.size() < max_terms) r.residual_terms.push_back(label + ": " + p.to_string(kQP));
  }
  std::string summary = std::to_string(parts.size()) + (parts.size() == 1 ? " case" : " cases");
  if (failing) summary += ", " + std::to_string(failing) + " nonzero";
  r.notes = notes.empty() ? summary : notes + "; " + summary;
  return r;
}

CPoly jacobi(const CPoly& a, const CPoly& b, const CPoly& c) {
  return poisson(poisson(a, b), c) + poisson(poisson(c, a), b) + poisson(poisson(b, c), a);
}

/// a * b = d_q a d_p b
CPoly star(const CPoly& a, const CPoly& b) { return a.partial(0) * b.partial(1); }

CPoly associator(const CPoly& a, const CPoly& b, const CPoly& c) {
  return star(star(a, b), c) - star(a, star(b, c));
}

CPoly associator_sum(const CPoly& a, const CPoly& b, const CPoly& c) {
  return associator(a, b, c) - associator(b, a, c) + associator(c, a, b) - associator(a, c, b) +
         associator(b, c, a) - associator(c, b, a);
}

struct Field2 {
  CPoly qdot, pdot;
  CPoly d(const CPoly& F) const { return F.partial(0) * qdot + F.partial(1) * pdot; }
  CPoly divergence() const { return qdot.partial(0) + pdot.partial(1); }
};

Field2 hamiltonian_field(const CPoly& H) { return {H.partial(1), -H.partial(0)}; }

CPoly exact_formula(const Field2& v, const CPoly& A, const CPoly& B) {
  const CPoly AB = poisson(A, B);
  return v.d(AB) - poisson(v.d(A), B) - poisson(A, v.d(B)) + AB * v.divergence();
}

}  // namespace

CheckResult check_poisson_jacobi(std::uint64_t seed, int trials) {
  CounterRng rng(seed);
  const CPoly q = CPoly::variable(2, 0), p = CPoly::variable(2, 1);
  std::vector<std::pair<std::string, CPoly>> parts;
  parts.emplace_back("{q,p} = 1", poisson(q, p) - CPoly::constant(2, 1));
  int product_route = 0;
  for (int t = 0; t < trials; ++t) {
    const auto a = random_cpoly(rng, 2), b = random_cpoly(rng, 2), c = random_cpoly(rng, 2);
    const auto s = std::to_string(t);
    parts.emplace_back("jacobi " + s, jacobi(a, b, c));
    if (t < 20) {
      ++product_route;
      // the bracket is the commutator of *, so its Jacobi sum is the signed associator sum
      parts.emplace_back("associator sum " + s, associator_sum(a, b, c) - jacobi(a, b, c));
      const CPoly rhs = a.partial(0).partial(0) * b.partial(1) * c.partial(1) -
                        a.partial(0) * b.partial(0) * c.partial(1).partial(1);
      parts.emplace_back("associator " + s, associator(a, b, c) - rhs);
    }
  }
  return cpoly_result("poisson.jacobi", "Poisson brackets satisfy the Jacobi identity", parts,
                      std::to_string(trials) + " random triples of degree <= 3; product route on " +
                          std::to_string(product_route));
}

CheckResult check_associator_sum(std::uint64_t seed, int algebras) {
  CounterRng rng(seed);
  std::size_t triples = 0;
  std::vector<std::string> failing;
  auto sweep = [&](const NonAssocAlgebra& alg, const std::string& label, bool expect_associative) {
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = 0; j < alg.dim(); ++j)
        for (int k = 0; k < alg.dim(); ++k) {
          ++triples;
          const auto a = alg.basis(i), b = alg.basis(j), c = alg.basis(k);
          const auto J = alg.jacobi_sum(a, b, c);
          bool ok = is_zero(J - alg.associator_sum(a, b, c));
          if (expect_associative) ok = ok && is_zero(alg.associator(a, b, c)) && is_zero(J);
          if (!ok)
            failing.push_back(label + " (" + std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(k) + ")");
        }
  };
  sweep(NonAssocAlgebra::matrix2(), "2x2 matrices", true);
  for (int t = 0; t < algebras; ++t) {
    const int dim = 1 + t % 4;
    sweep(NonAssocAlgebra::random(rng, dim), "algebra " + std::to_string(t), false);
  }
  auto r = CheckResult::boolean("poisson.associator_sum", "Jacobi sum as a signed sum of associators",
                                failing.empty(),
                                std::to_string(algebras) + " random algebras of dimension 1..4 plus 2x2 matrices, " +
                                    std::to_string(triples) + " basis triples");
  r.residual_size = failing.size();
  if (failing.size() > 12) failing.resize(12);
  r.residual_terms = std::move(failing);
  return r;
}

CheckResult check_poisson_exact_formula(std::uint64_t seed, int trials) {
  CounterRng rng(seed);
  const CPoly q = CPoly::variable(2, 0), p = CPoly::variable(2, 1);
  std::vector<std::pair<std::string, CPoly>> parts;
  {
    const CPoly H = p * p * Rational(1, 2) + q * q;
    const auto v = hamiltonian_field(H);
    parts.emplace_back("H = p^2/2 + q^2: divergence", v.divergence());
    parts.emplace_back("H = p^2/2 + q^2: formula", exact_formula(v, q * p, p * p * q));
  }
  {
    const Field2 v{q, CPoly(2)};
    parts.emplace_back("qdot = q: divergence - 1", v.divergence() - CPoly::constant(2, 1));
    parts.emplace_back("qdot = q: formula", exact_formula(v, q, p));
    // the correction term {q,p} * 1 is what makes it exact here
    parts.emplace_back("qdot = q: plain Leibniz defect - 1",
                       v.d(poisson(q, p)) - poisson(v.d(q), p) - poisson(q, v.d(p)) + CPoly::constant(2, 1));
  }
  for (int t = 0; t < trials; ++t) {
    const auto A = random_cpoly(rng, 2), B = random_cpoly(rng, 2);
    const Field2 v{random_cpoly(rng, 2), random_cpoly(rng, 2)};
    const auto s = std::to_string(t);
    parts.emplace_back("random " + s, exact_formula(v, A, B));
    parts.emplace_back("A = B " + s, exact_formula(v, A, A));
  }
  return cpoly_result("poisson.exact_formula", "time derivative of a Poisson bracket", parts,
                      std::to_string(trials) + " random (A, B, vector field) instances");
}

CheckResult check_hamiltonian_divergence(std::uint64_t seed, int trials) {
  CounterRng rng(seed);
  std::vector<std::pair<std::string, CPoly>> parts;
  for (int t = 0; t < trials; ++t) {
    const auto v = hamiltonian_field(random_cpoly(rng, 2));
    const auto A = random_cpoly(rng, 2), B = random_cpoly(rng, 2);
    const auto s = std::to_string(t);
    parts.emplace_back("divergence " + s, v.divergence());
    parts.emplace_back("leibniz " + s, v.d(poisson(A, B)) - poisson(v.d(A), B) - poisson(A, v.d(B)));
  }
  return cpoly_result("poisson.hamiltonian_divergence", "Hamiltonian flow has zero divergence", parts,
                      std::to_string(trials) + " random Hamiltonians");
}

}  // namespace ncdoc::verify

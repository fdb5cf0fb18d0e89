#include <functional>
#include <stdexcept>

#include "ncdoc/verify/checks.hpp"

namespace ncdoc::verify {

using identities::MaxwellPart;
using identities::Parts;
using ncalg::StructureConstants;
using ncalg::symbolic_result_multi;

namespace {

const PolyAlgebra& poly() {
  static const PolyAlgebra P;
  return P;
}

template <class P>
void prefix(P& out, const std::string& label, P parts) {
  for (auto& [l, e] : parts) out.emplace_back(label + ":" + l, std::move(e));
}

}  // namespace

CheckResult check_commutator_jacobi(std::uint64_t seed, int trials) {
  CounterRng rng(seed);
  std::vector<Generator> alphabet;
  for (const char* n : {"x", "y", "z", "w"}) alphabet.push_back(Generator::make(n));
  auto parts = identities::jacobi(poly());
  for (int t = 0; t < trials; ++t) {
    const auto a = ncalg::random_poly(rng, alphabet);
    const auto b = ncalg::random_poly(rng, alphabet);
    const auto c = ncalg::random_poly(rng, alphabet);
    parts.emplace_back("trial " + std::to_string(t), ncalg::jacobi_sum(a, b, c));
  }
  return symbolic_result_multi("jacobi.commutator", "Jacobi identity for commutators", parts,
                               "symbolic triple plus " + std::to_string(trials) + " random triples");
}

CheckResult check_derivation_commutator() {
  return symbolic_result_multi("curvature.derivation_commutator",
                               "curvature of two commutator derivations",
                               identities::derivation_commutator(poly()));
}

CheckResult check_levi_civita(int d) {
  if (d < 1) throw std::invalid_argument("check_levi_civita: dimension must be positive");
  const auto parts = identities::levi_civita(poly(), d, false);
  const auto literal = identities::levi_civita(poly(), d, true);
  const auto bad = identities::count_nonzero(poly(), literal);
  std::string notes = "form d(c_ijk)/dt + 2 Gamma_ijk; literal form c_ijk + 2 Gamma_kij leaves a nonzero residual on " +
                      std::to_string(bad) + " of " + std::to_string(literal.size()) + " triples";
  return symbolic_result_multi("levi_civita.d" + std::to_string(d),
                               "connection from the double dual derivative of the acceleration", parts, notes);
}

CheckResult check_triple_product() {
  return symbolic_result_multi("vector.triple_product", "(A x B) . C = A . (B x C)",
                               identities::triple_product(poly()));
}

CheckResult check_curl_as_commutator() {
  return symbolic_result_multi("vector.curl_as_commutator", "curl A = -(A x V + V x A)",
                               identities::curl_as_commutator(poly()));
}

CheckResult check_curl_of_cross() {
  return symbolic_result_multi("vector.curl_of_cross", "curl of a noncommutative cross product",
                               identities::curl_of_cross(poly()));
}

CheckResult check_maxwell(MaxwellPart part) {
  struct Info {
    const char* name;
    const char* anchor;
  };
  Info info;
  switch (part) {
    case MaxwellPart::lorentz_force: info = {"maxwell.lorentz_force", "A = E + V x H"}; break;
    case MaxwellPart::divergence_free: info = {"maxwell.divergence_free", "div H = 0"}; break;
    case MaxwellPart::faraday: info = {"maxwell.faraday", "d_t H + curl E = H x H"}; break;
    case MaxwellPart::wave: info = {"maxwell.wave", "d_t E - curl H = (d_t^2 - laplacian) V"}; break;
    case MaxwellPart::time_partial_leibniz:
      info = {"maxwell.time_partial_leibniz", "modified Leibniz rule for the temporal partial"};
      break;
    default:
      throw std::invalid_argument("check_maxwell: not a field equation");
  }
  return symbolic_result_multi(info.name, info.anchor, identities::maxwell(poly(), part));
}

CheckResult check_general_cross_jacobi(const StructureConstants& f) {
  if (!f.cyclic()) throw std::invalid_argument("general cross Jacobi needs cyclic structure constants");
  return symbolic_result_multi("cross.general_jacobi", "Jacobi identity for a general cross product",
                               identities::general_cross_jacobi(poly(), f),
                               "dimension " + std::to_string(f.dim()));
}

CheckResult check_general_cross_jacobi_suite() {
  const auto eps = StructureConstants::epsilon();
  Parts<PolyAlgebra> parts;
  prefix(parts, "epsilon", identities::general_cross_jacobi(poly(), eps));
  prefix(parts, "epsilon+epsilon",
         identities::general_cross_jacobi(poly(), StructureConstants::direct_sum(eps, eps)));
  prefix(parts, "zero", identities::general_cross_jacobi(poly(), StructureConstants(3, {}, true)));
  return symbolic_result_multi("cross.general_jacobi", "Jacobi identity for a general cross product", parts,
                               "structure constants: epsilon, epsilon+epsilon, zero");
}

CheckResult check_general_maxwell() {
  const auto eps = StructureConstants::epsilon();
  Parts<PolyAlgebra> parts;
  prefix(parts, "epsilon", identities::general_maxwell(poly(), eps));
  prefix(parts, "epsilon+epsilon", identities::general_maxwell(poly(), StructureConstants::direct_sum(eps, eps)));
  return symbolic_result_multi("cross.general_maxwell", "field equations over general structure constants",
                               parts, "structure constants: epsilon, epsilon+epsilon");
}

namespace {

/// Every free-algebra identity of the suite, on one route.
template <class Ctx>
std::vector<std::pair<std::string, Parts<Ctx>>> free_identities(const Ctx& ctx, std::uint64_t seed) {
  const auto eps = StructureConstants::epsilon();
  const auto eps2 = StructureConstants::direct_sum(eps, eps);
  std::vector<std::pair<std::string, Parts<Ctx>>> out;
  out.emplace_back("jacobi.commutator", identities::jacobi(ctx));
  {
    CounterRng rng(seed);
    std::vector<Generator> alphabet;
    for (const char* n : {"x", "y", "z", "w"}) alphabet.push_back(Generator::make(n));
    Parts<Ctx> trials;
    for (int t = 0; t < 20; ++t) {
      const auto a = evaluate(ncalg::random_poly(rng, alphabet), ctx);
      const auto b = evaluate(ncalg::random_poly(rng, alphabet), ctx);
      const auto c = evaluate(ncalg::random_poly(rng, alphabet), ctx);
      using identities::comm;
      trials.emplace_back("trial " + std::to_string(t),
                          comm(comm(a, b), c) + comm(comm(c, a), b) + comm(comm(b, c), a));
    }
    out.emplace_back("jacobi.random", std::move(trials));
  }
  out.emplace_back("curvature.derivation_commutator", identities::derivation_commutator(ctx));
  out.emplace_back("levi_civita.d2", identities::levi_civita(ctx, 2));
  out.emplace_back("levi_civita.d3", identities::levi_civita(ctx, 3));
  out.emplace_back("vector.triple_product", identities::triple_product(ctx));
  out.emplace_back("vector.curl_as_commutator", identities::curl_as_commutator(ctx));
  out.emplace_back("vector.curl_of_cross", identities::curl_of_cross(ctx));
  out.emplace_back("maxwell.lorentz_force", identities::maxwell(ctx, MaxwellPart::lorentz_force));
  out.emplace_back("maxwell.divergence_free", identities::maxwell(ctx, MaxwellPart::divergence_free));
  out.emplace_back("maxwell.faraday", identities::maxwell(ctx, MaxwellPart::faraday));
  out.emplace_back("maxwell.wave", identities::maxwell(ctx, MaxwellPart::wave));
  out.emplace_back("maxwell.time_partial_leibniz", identities::maxwell(ctx, MaxwellPart::time_partial_leibniz));
  out.emplace_back("cross.general_jacobi:epsilon", identities::general_cross_jacobi(ctx, eps));
  out.emplace_back("cross.general_jacobi:epsilon+epsilon", identities::general_cross_jacobi(ctx, eps2));
  out.emplace_back("cross.general_maxwell:epsilon", identities::general_maxwell(ctx, eps));
  out.emplace_back("cross.general_maxwell:epsilon+epsilon", identities::general_maxwell(ctx, eps2));
  return out;
}

}  // namespace

CheckResult check_matrix_oracle(std::uint64_t seed) {
  const JetAlgebra J(seed);
  const auto all = free_identities(J, seed);
  std::size_t components = 0;
  std::vector<std::string> failing;
  for (const auto& [name, parts] : all) {
    components += parts.size();
    for (const auto& [label, e] : parts)
      if (!J.is_zero(e)) failing.push_back(name + ":" + label);
  }
  auto r = CheckResult::boolean("oracle.matrix", "random 4x4 rational matrix substitution", failing.empty(),
                                std::to_string(all.size()) + " identities, " + std::to_string(components) +
                                    " components, " + std::to_string(failing.size()) + " nonzero");
  r.residual_size = failing.size();
  r.residual_terms = std::move(failing);
  return r;
}

CheckResult check_mutants(std::uint64_t seed) {
  const JetAlgebra J(seed);
  struct Mutant {
    std::string name;
    std::size_t symbolic;
    std::size_t matrix;
  };
  std::vector<Mutant> mutants;
  auto add = [&](std::string name, auto&& build) {
    mutants.push_back({std::move(name), identities::count_nonzero(poly(), build(poly())),
                       identities::count_nonzero(J, build(J))});
  };
  add("jacobi with the last sign flipped", [](const auto& c) { return identities::jacobi_wrong_sign(c); });
  add("connection in its literal form", [](const auto& c) { return identities::levi_civita(c, 2, true); });
  add("faraday law without H x H",
      [](const auto& c) { return identities::maxwell(c, MaxwellPart::faraday_without_hh); });
  bool ok = true;
  std::string notes;
  std::vector<std::string> survivors;
  for (const auto& m : mutants) {
    const bool caught = m.symbolic > 0 && m.matrix > 0;
    ok = ok && caught;
    if (!caught) survivors.push_back(m.name);
    if (!notes.empty()) notes += "; ";
    notes += m.name + ": symbolic " + std::to_string(m.symbolic) + " nonzero, matrix " +
             std::to_string(m.matrix) + " nonzero";
  }
  auto r = CheckResult::boolean("oracle.mutants", "injected false identities must fail", ok, notes);
  r.residual_size = survivors.size();
  r.residual_terms = std::move(survivors);
  return r;
}

}  // namespace ncdoc::verify

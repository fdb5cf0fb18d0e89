#pragma once

#include <cstdint>
#include <vector>

#include "ncdoc/check_result.hpp"
#include "ncdoc/ncalg/ncpoly.hpp"
#include "ncdoc/ncalg/random.hpp"
#include "ncdoc/ncalg/vector_ops.hpp"
#include "ncdoc/rewrite/relation_set.hpp"
#include "ncdoc/verify/identities.hpp"
#include "ncdoc/verify/jet.hpp"

namespace ncdoc::verify {

using ncalg::Generator;
using ncalg::kDefaultSeed;
using rewrite::RelationSet;

// Free-algebra identities.
CheckResult check_commutator_jacobi(std::uint64_t seed = kDefaultSeed, int trials = 200);
CheckResult check_derivation_commutator();
/// Corrected connection identity for every index triple at dimension d (2 or 3);
/// the notes record how the uncorrected statement fares.
CheckResult check_levi_civita(int d);
CheckResult check_triple_product();
CheckResult check_curl_as_commutator();
CheckResult check_curl_of_cross();
CheckResult check_maxwell(identities::MaxwellPart part);
/// Throws std::invalid_argument unless f is flagged cyclic.
CheckResult check_general_cross_jacobi(const ncalg::StructureConstants& f);
/// Runs check_general_cross_jacobi for epsilon, epsilon + epsilon and f = 0.
CheckResult check_general_cross_jacobi_suite();
CheckResult check_general_maxwell();

// Flat coordinates and quotient algebras.
/// [X_i, H] = dual_partial(H, i) and [P_i, H] = -flat_partial(H, i), both also
/// compared with the commutative image of H. H must be normal ordered.
CheckResult check_hamilton_flat(const NCPoly& H, int d);
CheckResult check_hamilton_flat_suite(std::uint64_t seed = kDefaultSeed);
CheckResult check_gauge_curvature(std::uint64_t seed = kDefaultSeed);

enum class MetricPart {
  inverse_velocity,
  inverse_derivative,
  derivative_commutes,
  field_commutes,
  raised_field,
  acceleration_field_commutes,
  acceleration_extraction,
};
const char* metric_part_name(MetricPart part);
/// One of the metric-algebra relations, reduced under R (dimension taken from R).
/// Blow-up in the rewrite engine yields an indeterminate result.
CheckResult check_metric(MetricPart part, const RelationSet& R);
std::vector<CheckResult> check_metric_all(const RelationSet& R);

// Commutative and non-associative checks.
CheckResult check_poisson_jacobi(std::uint64_t seed = kDefaultSeed, int trials = 100);
CheckResult check_associator_sum(std::uint64_t seed = kDefaultSeed, int algebras = 20);
CheckResult check_poisson_exact_formula(std::uint64_t seed = kDefaultSeed, int trials = 50);
CheckResult check_hamiltonian_divergence(std::uint64_t seed = kDefaultSeed, int trials = 20);

// Cross-validation.
/// Every free-algebra identity, re-evaluated with random 4x4 rational matrix jets.
CheckResult check_matrix_oracle(std::uint64_t seed = kDefaultSeed);
/// Three false identities; pass iff each fails on both routes.
CheckResult check_mutants(std::uint64_t seed = kDefaultSeed);

}  // namespace ncdoc::verify

#include "ncdoc/verify/suite.hpp"

#include <fnmatch.h>

#include <filesystem>
#include <future>

#include "ncdoc/rewrite/calculus.hpp"
#include "ncdoc/rewrite/fixtures.hpp"
#include "ncdoc/verify/checks.hpp"

namespace ncdoc::verify {

namespace {

const RelationSet& metric_relations() {
  static const RelationSet R = [] {
    const auto path = rewrite::fixture_path("metric_d2.json");
    if (std::filesystem::exists(path)) return rewrite::load_relation_set(path);
    return rewrite::metric_d2();
  }();
  return R;
}

std::vector<CheckSpec> build_registry() {
  using identities::MaxwellPart;
  std::vector<CheckSpec> r;
  auto add = [&](std::string name, std::function<CheckResult(std::uint64_t)> fn) {
    r.push_back({std::move(name), std::move(fn)});
  };
  add("jacobi.commutator", [](std::uint64_t s) { return check_commutator_jacobi(s); });
  add("epsilon.identity", [](std::uint64_t) { return ncalg::epsilon_identity_check(); });
  add("curvature.derivation_commutator", [](std::uint64_t) { return check_derivation_commutator(); });
  add("hamilton.flat", [](std::uint64_t s) { return check_hamilton_flat_suite(s); });
  add("gauge.curvature", [](std::uint64_t s) { return check_gauge_curvature(s); });
  add("discrete.leibniz", [](std::uint64_t s) {
    return rewrite::discrete_leibniz_check(rewrite::shift_coordinate(), 8, s);
  });
  add("levi_civita.d2", [](std::uint64_t) { return check_levi_civita(2); });
  add("levi_civita.d3", [](std::uint64_t) { return check_levi_civita(3); });
  for (auto part : {MetricPart::inverse_velocity, MetricPart::inverse_derivative, MetricPart::derivative_commutes,
                    MetricPart::field_commutes, MetricPart::raised_field, MetricPart::acceleration_field_commutes,
                    MetricPart::acceleration_extraction})
    add(metric_part_name(part), [part](std::uint64_t) { return check_metric(part, metric_relations()); });
  add("vector.triple_product", [](std::uint64_t) { return check_triple_product(); });
  add("vector.curl_as_commutator", [](std::uint64_t) { return check_curl_as_commutator(); });
  add("vector.curl_of_cross", [](std::uint64_t) { return check_curl_of_cross(); });
  add("maxwell.lorentz_force", [](std::uint64_t) { return check_maxwell(MaxwellPart::lorentz_force); });
  add("maxwell.divergence_free", [](std::uint64_t) { return check_maxwell(MaxwellPart::divergence_free); });
  add("maxwell.faraday", [](std::uint64_t) { return check_maxwell(MaxwellPart::faraday); });
  add("maxwell.wave", [](std::uint64_t) { return check_maxwell(MaxwellPart::wave); });
  add("maxwell.time_partial_leibniz",
      [](std::uint64_t) { return check_maxwell(MaxwellPart::time_partial_leibniz); });
  add("cross.general_jacobi", [](std::uint64_t) { return check_general_cross_jacobi_suite(); });
  add("cross.general_maxwell", [](std::uint64_t) { return check_general_maxwell(); });
  add("poisson.jacobi", [](std::uint64_t s) { return check_poisson_jacobi(s); });
  add("poisson.associator_sum", [](std::uint64_t s) { return check_associator_sum(s); });
  add("poisson.exact_formula", [](std::uint64_t s) { return check_poisson_exact_formula(s); });
  add("poisson.hamiltonian_divergence", [](std::uint64_t s) { return check_hamiltonian_divergence(s); });
  add("oracle.matrix", [](std::uint64_t s) { return check_matrix_oracle(s); });
  add("oracle.mutants", [](std::uint64_t s) { return check_mutants(s); });
  return r;
}

bool matches(const std::string& glob, const std::string& name) {
  return fnmatch(glob.c_str(), name.c_str(), 0) == 0;
}

CheckResult run_guarded(const CheckSpec& spec, std::uint64_t seed) {
  try {
    auto r = spec.run(seed);
    return r;
  } catch (const std::exception& e) {
    return CheckResult::boolean(spec.name, "", false, std::string("exception: ") + e.what());
  }
}

}  // namespace

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> r = build_registry();
  return r;
}

std::vector<const CheckSpec*> select_checks(const std::vector<std::string>& globs) {
  std::vector<const CheckSpec*> out;
  for (const auto& g : globs) {
    bool any = false;
    for (const auto& spec : registry()) any = any || matches(g, spec.name);
    if (!any) throw UnknownCheck("no check matches '" + g + "'");
  }
  for (const auto& spec : registry()) {
    bool take = globs.empty();
    for (const auto& g : globs) take = take || matches(g, spec.name);
    if (take) out.push_back(&spec);
  }
  return out;
}

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
  const auto selected = select_checks(options.only);
  std::vector<CheckResult> results;
  results.reserve(selected.size());
  if (!options.parallel) {
    for (const auto* spec : selected) results.push_back(run_guarded(*spec, options.seed));
    return results;
  }
  std::vector<std::future<CheckResult>> futures;
  for (const auto* spec : selected)
    futures.push_back(std::async(std::launch::async, run_guarded, std::cref(*spec), options.seed));
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j = {{"name", r.name},
                      {"paper_anchor", r.paper_anchor},
                      {"status", to_string(r.status)},
                      {"residual_terms", r.residual_terms},
                      {"residual_size", r.residual_size},
                      {"notes", r.notes}};
  if (r.numeric_residual) j["numeric_residual"] = *r.numeric_residual;
  if (r.tolerance) j["tolerance"] = *r.tolerance;
  return j;
}

nlohmann::json report_json(const std::vector<CheckResult>& results) {
  auto j = nlohmann::json::array();
  for (const auto& r : results) j.push_back(to_json(r));
  return j;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed()) return false;
  return true;
}

}  // namespace ncdoc::verify

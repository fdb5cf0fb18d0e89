#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <string>

#include "json.hpp"
#include "ncdoc/chord/diagram.hpp"
#include "ncdoc/docsim/brownian.hpp"
#include "ncdoc/docsim/chaos.hpp"
#include "ncdoc/docsim/em.hpp"
#include "ncdoc/docsim/qwalk.hpp"
#include "ncdoc/verify/identities.hpp"
#include "ncdoc/verify/suite.hpp"

using namespace ncdoc;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::map<std::string, CheckResult> suite_results;
double suite_seconds = 0;

bool passed(const std::string& name) {
  auto it = suite_results.find(name);
  return it != suite_results.end() && it->second.passed();
}

bool all_of_names(const std::vector<std::string>& names, std::string& detail) {
  bool ok = true;
  for (const auto& n : names) {
    if (!passed(n)) {
      ok = false;
      detail += " " + n + "=" + (suite_results.count(n) ? to_string(suite_results[n].status) : "missing");
    }
  }
  return ok;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome names_outcome(const std::vector<std::string>& names, std::string detail) {
  std::string bad;
  const bool ok = all_of_names(names, bad);
  return {ok, ok ? detail : detail + ";" + bad};
}

Outcome maxwell() {
  auto o = names_outcome({"maxwell.lorentz_force", "maxwell.divergence_free", "maxwell.faraday", "maxwell.wave",
                          "maxwell.time_partial_leibniz"},
                         "four field equations and the modified Leibniz rule exact; suite " + fmt(suite_seconds) + " s");
  o.ok = o.ok && suite_seconds < 60;
  return o;
}

Outcome vector_identities() {
  return names_outcome({"vector.triple_product", "vector.curl_as_commutator", "vector.curl_of_cross"},
                       "(A x B) . C = A . (B x C), curl as commutator, curl of a cross product exact");
}

Outcome levi_civita() {
  auto o = names_outcome({"levi_civita.d2", "levi_civita.d3"}, "corrected form exact at d = 2 and d = 3");
  for (const char* n : {"levi_civita.d2", "levi_civita.d3"}) {
    const auto& notes = suite_results[n].notes;
    if (notes.find("literal form") == std::string::npos || notes.find(" 0 of") != std::string::npos) o.ok = false;
  }
  if (o.ok) o.detail += "; literal statement fails on every triple";
  return o;
}

Outcome metric() {
  std::vector<std::string> names;
  for (const auto& [n, r] : suite_results)
    if (n.rfind("metric.", 0) == 0) names.push_back(n);
  auto o = names_outcome(names, std::to_string(names.size()) + " metric checks exact, none indeterminate");
  o.ok = o.ok && names.size() == 7;
  return o;
}

Outcome poisson() {
  return names_outcome({"poisson.jacobi", "poisson.exact_formula", "poisson.hamiltonian_divergence"},
                       "100 Jacobi triples, 50 exact-formula instances, 20 Hamiltonian divergences");
}

Outcome associator() {
  return names_outcome({"poisson.associator_sum"}, "associator sum identity on 20 random algebras");
}

Outcome brownian() {
  docsim::SimConfig cfg;
  cfg.steps = 100000;
  const auto run = docsim::brownian_run(cfg);
  const auto msd = docsim::brownian_msd(cfg, 100);
  const bool ok = run.max_step_error == 0 && run.commutator_residual <= 1e-12 && msd.relative_error < 0.05;
  return {ok, "step error " + fmt(run.max_step_error) + ", commutator " + fmt(run.commutator_residual) +
                  ", MSD slope " + fmt(msd.slope) + " vs k = " + fmt(msd.k)};
}

Outcome chaos() {
  const auto bounded = docsim::doc_chaos_run(1, 0.0001);
  const auto unbounded = docsim::doc_chaos_run(1, 0.009);
  const auto ib = docsim::doc_chaos_invariant(bounded.y, 0.0001);
  const auto iu = docsim::doc_chaos_invariant(unbounded.y, 0.009);
  const bool ok = !bounded.report.blow_up && bounded.y.size() == 5000 && unbounded.report.blow_up && ib.passed() &&
                  iu.passed();
  return {ok, "pair (" + fmt(docsim::kChaosY0) + ", " + fmt(docsim::kChaosY1) + "): max " +
                  fmt(bounded.report.max_abs) + " at k = 0.0001, blow-up at index " +
                  (unbounded.report.first_blow_up ? std::to_string(*unbounded.report.first_blow_up) : "none") +
                  " at k = 0.009, invariant " + fmt(std::max(*ib.numeric_residual, *iu.numeric_residual))};
}

Outcome qwalk() {
  docsim::WaveField d;
  d.psi.assign(5, 0.0);
  d.psi[2] = 1.0;
  const auto s = docsim::qwalk_step(d);
  const bool delta_ok = s.psi[1] == docsim::Complex(0, 0.5) && s.psi[2] == docsim::Complex(1, -1) &&
                        s.psi[3] == docsim::Complex(0, 0.5) && s.psi[0] == 0.0 && s.psi[4] == 0.0;
  docsim::WaveField g;
  g.psi.resize(401);
  for (std::size_t j = 0; j < g.psi.size(); ++j) g.psi[j] = docsim::gaussian_exact(g.x(j), 0, 10, 1, 1);
  const auto run = docsim::qwalk_run(g, 10);
  std::ifstream in(std::string(NCDOC_DATA_DIR) + "/docsim/qwalk_gaussian.json");
  if (!in) return {false, "missing qwalk_gaussian.json"};
  const auto fixture = nlohmann::json::parse(in);
  const double tol = fixture["tolerance"];
  bool lock_ok = true;
  for (const auto& c : fixture["cases"]) {
    const auto r = docsim::compare_gaussian(c["sites"], c["sigma"], c["steps"], c["delta"], c["tau"]);
    const double want = c["l2_relative"];
    lock_ok = lock_ok && std::abs(r.l2_relative - want) <= tol * want;
  }
  const double l2 = fixture["cases"][0]["l2_relative"];
  return {delta_ok && run.max_residual <= 1e-12 && lock_ok,
          std::string("delta response ") + (delta_ok ? "exact" : "wrong") + ", residual " + fmt(run.max_residual) +
              ", Gaussian L2 " + fmt(l2) + (lock_ok ? " matches the locked fixture" : " drifted from the fixture")};
}

Outcome em() {
  CounterRng rng(0xD0C);
  docsim::Series3 X;
  for (auto& s : X) {
    s.resize(1000);
    for (auto& x : s) x = rng.uniform();
  }
  const auto d = docsim::em_discrete_run(X);
  const auto c = docsim::em_classical(X, 1.0);
  auto H = c.H;
  for (auto& s : H)
    for (auto& v : s) v += 1e-3;
  const double perturbed = docsim::lorentz_residual(X, c.E, H);
  const docsim::ShiftAlgebra ctx(X, 1.0);
  double faraday = 0;
  for (const auto& [label, r] : verify::identities::maxwell(ctx, verify::identities::MaxwellPart::faraday_without_hh))
    faraday = std::max(faraday, r.relative());
  const bool ok = d.max_relative <= 1e-9 && d.e_formula_relative <= 1e-9 && d.h_commutator_relative <= 1e-9 &&
                  c.lorentz_relative <= 1e-12 && perturbed >= 1e-4 && faraday > 1e-9;
  return {ok, "field equations " + fmt(d.max_relative) + ", Lorentz " + fmt(c.lorentz_relative) +
                  ", perturbed H " + fmt(perturbed) + ", Faraday without H x H " + fmt(faraday)};
}

Outcome chord_counts() {
  CounterRng rng(0xD0C);
  std::size_t compared = 0, mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    const auto d = chord::random_diagram(rng, static_cast<std::size_t>(rng.range(0, 5)));
    for (int q = 0; q <= 5; ++q, ++compared)
      if (chord::count_colorings(d, q) != chord::brute_force_colorings(d, q)) ++mismatches;
  }
  std::size_t diagrams = 0, triples = 0, failures = 0, twists = 0;
  while (diagrams < 100) {
    const auto d = chord::random_diagram(rng, static_cast<std::size_t>(rng.range(2, 6)));
    bool any = false;
    for (std::size_t i = 0; i < d.size(); ++i) {
      ++twists;
      if (!chord::twist_check(d, i).passed()) ++failures;
      for (std::size_t j = i + 1; j < d.size(); ++j)
        if (d.odd(i, j)) {
          any = true;
          ++triples;
          if (!chord::jacobi_triple(d, i, j).check.passed()) ++failures;
        }
    }
    diagrams += any;
  }
  return {mismatches == 0 && failures == 0,
          std::to_string(compared) + " counts match brute force, " + std::to_string(triples) +
              " deletion-contraction triples on 100 diagrams, " + std::to_string(twists) + " twists"};
}

Outcome oracle() {
  return names_outcome({"oracle.matrix", "oracle.mutants"},
                       "4x4 matrix substitution agrees with every free identity; 3 mutants fail on both routes");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  for (auto& r : verify::run_suite()) suite_results.emplace(r.name, r);
  suite_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"symbolic field equations", maxwell},
      {"vector identities", vector_identities},
      {"Levi-Civita connection", levi_civita},
      {"metric algebra at d = 2", metric},
      {"Poisson brackets", poisson},
      {"associator sum", associator},
      {"Brownian walk", brownian},
      {"DOC chaos phases", chaos},
      {"quantum walk", qwalk},
      {"discrete electromagnetism", em},
      {"chord colorings", chord_counts},
      {"matrix cross-validation", oracle},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.ok;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

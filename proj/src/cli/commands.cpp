#include <cmath>

#include "context.hpp"
#include "ncdoc/chord/diagram.hpp"
#include "ncdoc/docsim/planck.hpp"
#include "ncdoc/verify/suite.hpp"

namespace ncdoc::cli {

int cmd_verify(const Globals& g, const std::vector<std::string>& only, bool sequential, std::ostream& out) {
  RunManifest m;
  m.command = "verify";
  m.started = utc_now();
  m.seed = resolve_seed(g);
  m.config = {{"only", only}, {"parallel", !sequential}};
  verify::SuiteOptions opts;
  opts.seed = m.seed;
  opts.only = only;
  opts.parallel = !sequential;
  verify::select_checks(only);
  const auto results = verify::run_suite(opts);
  const auto report = verify::report_json(results);
  if (g.json) {
    out << report.dump(2) << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) {
      out << (r.passed() ? "PASS " : r.status == Status::fail ? "FAIL " : "INDETERMINATE ") << r.name;
      if (!r.notes.empty()) out << "  (" << r.notes << ")";
      out << '\n';
      passed += r.passed();
    }
    out << passed << "/" << results.size() << " checks passed\n";
  }
  if (g.out_opt->count() > 0) {
    const auto path = output_dir(g) / "verify_report.json";
    write_text(path, report.dump(2) + "\n");
    m.outputs.push_back(path.string());
    write_manifest(g, m);
  }
  return verify::all_passed(results) ? kOk : kCheckFailure;
}

namespace {

std::size_t web_index(const chord::Diagram& d, const std::string& name) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.webs()[i].id == name) return i;
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(name, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != name.size() || name.empty() || v >= d.size())
    throw CliError(kUsage, "invalid_parameter", "--triple: no web '" + name + "'");
  return v;
}

}  // namespace

int cmd_color(const Globals& g, const std::string& path, int q, const std::vector<std::string>& triple,
              std::ostream& out) {
  RunManifest m;
  m.command = "color";
  m.started = utc_now();
  m.seed = resolve_seed(g);
  m.config = {{"diagram", path}, {"q", q}};
  chord::Diagram d;
  try {
    d = chord::load_diagram(path);
  } catch (const std::invalid_argument& e) {
    throw CliError(kRuntime, "parse", e.what());
  } catch (const std::runtime_error& e) {
    throw CliError(kRuntime, "io", e.what());
  }
  nlohmann::json report{{"q", q}, {"C", chord::count_colorings(d, q)}, {"brute_force", chord::brute_force_colorings(d, q)}};
  bool ok = report["C"] == report["brute_force"];
  if (!triple.empty()) {
    const std::size_t i = web_index(d, triple[0]), j = web_index(d, triple[1]);
    if (!d.odd(i, j)) throw CliError(kUsage, "invalid_parameter", "--triple: webs must cross an odd number of times");
    const auto t = chord::jacobi_triple(d, i, j);
    const auto cp = chord::count_colorings(t.prime, q), cf = chord::count_colorings(t.fused, q);
    report["C_prime"] = cp;
    report["C_fused"] = cf;
    report["identity"] = report["C"].get<std::int64_t>() == cp - cf;
    report["identity_all_q"] = t.check.passed();
    m.config["triple"] = triple;
    ok = ok && t.check.passed() && report["identity"].get<bool>();
  }
  if (g.json) {
    out << report.dump(2) << '\n';
  } else {
    out << "C(D," << q << ") = " << report["C"].get<std::int64_t>() << '\n';
    if (!triple.empty())
      out << "C(D'," << q << ") = " << report["C_prime"].get<std::int64_t>() << "\nC(D''," << q
          << ") = " << report["C_fused"].get<std::int64_t>() << '\n'
          << report["C"].get<std::int64_t>() << " = " << report["C_prime"].get<std::int64_t>() << " - "
          << report["C_fused"].get<std::int64_t>() << (report["identity"].get<bool>() ? "  holds" : "  FAILS") << '\n';
  }
  if (g.out_opt->count() > 0) {
    const auto file = output_dir(g) / "color.json";
    write_text(file, report.dump(2) + "\n");
    m.outputs.push_back(file.string());
    write_manifest(g, m);
  }
  return ok ? kOk : kCheckFailure;
}

int cmd_planck(const Globals& g, ParamSet& params, std::ostream& out) {
  RunManifest m;
  m.command = "planck";
  m.started = utc_now();
  m.seed = resolve_seed(g);
  m.config = params.resolve(g, "planck", {"hbar", "c", "G"});
  docsim::PlanckUnits u;
  try {
    u = docsim::planck_units({m.config["hbar"], m.config["c"], m.config["G"]});
  } catch (const std::invalid_argument& e) {
    throw CliError(kUsage, "invalid_parameter", std::string("--") + e.what());
  }
  const nlohmann::json report{{"mass", u.mass},
                              {"length", u.length},
                              {"time", u.time},
                              {"identity_relative", u.identity_relative},
                              {"identity_holds", u.identity_relative <= 1e-12}};
  print_report(out, g, report);
  if (g.out_opt->count() > 0) {
    const auto file = output_dir(g) / "planck.json";
    write_text(file, report.dump(2) + "\n");
    m.outputs.push_back(file.string());
    write_manifest(g, m);
  }
  return u.identity_relative <= 1e-12 ? kOk : kCheckFailure;
}

}  // namespace ncdoc::cli

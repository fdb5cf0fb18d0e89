#include <cmath>
#include <sstream>

#include "context.hpp"
#include "ncdoc/docsim/brownian.hpp"
#include "ncdoc/docsim/chaos.hpp"
#include "ncdoc/docsim/em.hpp"
#include "ncdoc/docsim/output.hpp"
#include "ncdoc/docsim/qwalk.hpp"

namespace ncdoc::cli {

namespace {

using docsim::Sequence;
using docsim::Table;

struct Model {
  std::vector<std::string> keys;
};

const std::map<std::string, Model>& models() {
  static const std::map<std::string, Model> m = {
      {"brownian", {{"delta", "tau", "steps", "msd_seeds"}}},
      {"doc-chaos", {{"k", "y0", "y1", "order", "steps"}}},
      {"qwalk", {{"delta", "tau", "steps", "sites", "sigma"}}},
      {"em", {{"tau", "steps"}}},
      {"em-classical", {{"lambda", "steps", "path"}}},
      {"sign-field", {{"k", "steps"}}},
  };
  return m;
}

nlohmann::json model_defaults(const std::string& model) {
  if (model == "doc-chaos") return {{"k", 0.0001}, {"steps", 5000u}};
  if (model == "qwalk") return {{"steps", 10u}};
  return nlohmann::json::object();
}

std::vector<double> iota_column(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<double>(i);
  return t;
}

std::vector<double> head(const Sequence<double>& s, std::size_t n) { return {s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n)}; }

double num(const nlohmann::json& c, const char* key) { return c.at(key).get<double>(); }
std::size_t count(const nlohmann::json& c, const char* key) { return c.at(key).get<std::size_t>(); }

void require(bool ok, const std::string& flag, const std::string& why) {
  if (!ok) throw CliError(kUsage, "invalid_parameter", flag + ": " + why);
}

docsim::SimConfig sim_config(const nlohmann::json& c, std::uint64_t seed) {
  docsim::SimConfig cfg;
  if (c.contains("delta")) cfg.delta = num(c, "delta");
  if (c.contains("tau")) cfg.tau = num(c, "tau");
  if (c.contains("k")) cfg.k = num(c, "k");
  if (c.contains("lambda")) cfg.lambda = num(c, "lambda");
  cfg.steps = c.at("steps").get<std::uint64_t>();
  cfg.seed = seed;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw CliError(kUsage, "invalid_parameter", std::string("--") + e.what());
  }
  return cfg;
}

docsim::Series3 random_path(std::uint64_t seed, std::size_t n) {
  CounterRng rng(seed);
  docsim::Series3 X;
  for (auto& s : X) {
    s.resize(n);
    for (auto& x : s) x = rng.uniform();
  }
  return X;
}

void add_series(Table& t, const char* prefix, const docsim::Series3& s, std::size_t n) {
  for (int i = 0; i < 3; ++i) t.add(prefix + std::to_string(i + 1), head(s[i], n));
}

void add_shift(Table& t, const char* prefix, const docsim::ShiftVec& s, std::size_t n) {
  for (int i = 0; i < 3; ++i) t.add(prefix + std::to_string(i + 1), head(s[i].evaluate(), n));
}

nlohmann::json run_model(const std::string& model, const nlohmann::json& c, std::uint64_t seed, Table& t) {
  const auto cfg = sim_config(c, seed);
  if (model == "brownian") {
    const auto r = docsim::brownian_run(cfg);
    t.add("t", iota_column(r.X.size()));
    t.add("X", r.X);
    nlohmann::json d{{"k", r.k}, {"max_step_error", r.max_step_error}, {"commutator_residual", r.commutator_residual}};
    if (const auto seeds = count(c, "msd_seeds"); seeds > 0) {
      const auto msd = docsim::brownian_msd(cfg, static_cast<int>(seeds));
      d["msd_slope"] = msd.slope;
      d["msd_relative_error"] = msd.relative_error;
    }
    return d;
  }
  if (model == "doc-chaos") {
    require(count(c, "order") >= 1, "--order", "must be at least 1");
    require(cfg.steps >= 2, "--steps", "must be at least 2");
    const int order = static_cast<int>(count(c, "order"));
    const auto r = docsim::doc_chaos_run(order, cfg.k, num(c, "y0"), num(c, "y1"), cfg.steps);
    t.add("t", iota_column(r.y.size()));
    t.add("Y", r.y);
    const auto inv = docsim::doc_chaos_invariant(r.y, cfg.k, order);
    nlohmann::json d{{"status", docsim::to_string(r.report.status)},
                     {"max_abs", r.report.max_abs},
                     {"blow_up", r.report.blow_up},
                     {"crossings", r.report.crossings},
                     {"invariant_residual", inv.numeric_residual.value_or(0.0)},
                     {"invariant_holds", inv.passed()}};
    d["first_blow_up"] = r.report.first_blow_up ? nlohmann::json(*r.report.first_blow_up) : nlohmann::json(nullptr);
    d["stop_index"] = r.report.stop_index ? nlohmann::json(*r.report.stop_index) : nlohmann::json(nullptr);
    return d;
  }
  if (model == "qwalk") {
    const std::size_t sites = count(c, "sites");
    require(sites >= 3, "--sites", "must be at least 3");
    require(num(c, "sigma") > 0, "--sigma", "must be positive");
    const double sigma = num(c, "sigma");
    docsim::WaveField f;
    f.delta = cfg.delta;
    f.tau = cfg.tau;
    f.psi.resize(sites);
    for (std::size_t j = 0; j < sites; ++j) f.psi[j] = docsim::gaussian_exact(f.x(j), 0, sigma, f.delta, f.tau);
    const auto r = docsim::qwalk_run(f, cfg.steps);
    const auto& last = r.history.back();
    std::vector<double> x(sites), re(sites), im(sites), ex_re(sites), ex_im(sites);
    const double time = static_cast<double>(cfg.steps) * cfg.tau;
    for (std::size_t j = 0; j < sites; ++j) {
      x[j] = last.x(j);
      re[j] = last.psi[j].real();
      im[j] = last.psi[j].imag();
      const auto e = docsim::gaussian_exact(x[j], time, sigma, f.delta, f.tau);
      ex_re[j] = e.real();
      ex_im[j] = e.imag();
    }
    t.add("x", x);
    t.add("re_psi", re);
    t.add("im_psi", im);
    t.add("re_exact", ex_re);
    t.add("im_exact", ex_im);
    const auto g = docsim::compare_gaussian(sites, sigma, cfg.steps, cfg.delta, cfg.tau);
    return {{"max_residual", r.max_residual}, {"l2_relative", g.l2_relative}, {"norm_drift", g.norm_drift}};
  }
  if (model == "em") {
    require(cfg.steps >= 5, "--steps", "must be at least 5");
    const auto X = random_path(seed, cfg.steps);
    const auto r = docsim::em_discrete_run(X, cfg.tau, seed);
    const std::size_t n = cfg.steps - 3;
    t.add("t", iota_column(n));
    add_series(t, "X", X, n);
    add_shift(t, "H", r.H, n);
    add_shift(t, "E", r.E, n);
    return {{"max_relative", r.max_relative},
            {"e_formula_relative", r.e_formula_relative},
            {"h_commutator_relative", r.h_commutator_relative},
            {"leibniz_relative", r.leibniz_relative}};
  }
  if (model == "em-classical") {
    require(cfg.steps >= 3, "--steps", "must be at least 3");
    const std::string path = c.at("path");
    docsim::Series3 X;
    if (path == "random") {
      X = random_path(seed, cfg.steps);
    } else if (path == "line" || path == "circle") {
      for (auto& s : X) s.resize(cfg.steps);
      for (std::size_t i = 0; i < cfg.steps; ++i) {
        const double s = 0.3 * static_cast<double>(i);
        if (path == "line") {
          X[0][i] = s, X[1][i] = 2 * s, X[2][i] = 3 * s;
        } else {
          X[0][i] = std::cos(s), X[1][i] = std::sin(s), X[2][i] = 0;
        }
      }
    } else {
      throw CliError(kUsage, "invalid_parameter", "--path: expected random, line or circle");
    }
    const auto r = docsim::em_classical(X, cfg.lambda);
    const std::size_t n = cfg.steps - 2;
    t.add("t", iota_column(n));
    add_series(t, "X", X, n);
    add_series(t, "H", r.H, n);
    add_series(t, "E", r.E, n);
    return {{"lorentz_relative", r.lorentz_relative}};
  }
  // sign-field
  require(cfg.steps >= 2, "--steps", "must be at least 2");
  require(cfg.k > 0, "--k", "must be positive");
  CounterRng rng(seed);
  const auto s = docsim::random_sign_stream(rng, cfg.steps);
  const auto r = docsim::sign_field(s, cfg.k);
  const std::size_t n = cfg.steps - 1;
  t.add("t", iota_column(n));
  add_series(t, "X", r.X, n);
  for (int i = 0; i < 3; ++i) t.add("H" + std::to_string(i + 1), r.H[i].part(2));
  return {{"max_step_error", r.max_step_error}, {"cross_check_relative", r.cross_check_relative}};
}

}  // namespace

int cmd_simulate(const Globals& g, SimulateArgs& args, std::ostream& out) {
  const auto it = models().find(args.model);
  if (it == models().end())
    throw CliError(kUsage, "unknown_model", "no model '" + args.model + "'; expected brownian, doc-chaos, qwalk, em, em-classical or sign-field");
  RunManifest m;
  m.command = "simulate-" + args.model;
  m.started = utc_now();
  m.seed = resolve_seed(g);
  const auto config = args.params.resolve(g, args.model, it->second.keys, model_defaults(args.model));
  m.config = config;
  m.config["seed"] = m.seed;

  Table t;
  auto report = run_model(args.model, config, m.seed, t);
  const auto dir = output_dir(g);
  std::ostringstream csv;
  docsim::write_csv(csv, t);
  const auto csv_path = dir / (args.model + ".csv");
  write_text(csv_path, csv.str());
  m.outputs.push_back(csv_path.string());
  if (!args.svg.empty()) {
    std::ostringstream svg;
    docsim::write_svg(svg, t);
    write_text(args.svg, svg.str());
    m.outputs.push_back(args.svg);
  }
  write_manifest(g, m);
  report["csv"] = csv_path.string();
  print_report(out, g, report);
  return kOk;
}

}  // namespace ncdoc::cli

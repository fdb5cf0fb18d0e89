#include "ncdoc/cli/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "context.hpp"
#include "ncdoc/ncalg/random.hpp"
#include "ncdoc/verify/suite.hpp"

namespace ncdoc::cli {

nlohmann::json RunManifest::to_json() const {
  return {{"command", command}, {"config", config},     {"seed", seed},          {"version", version},
          {"started", started}, {"finished", finished}, {"outputs", outputs}};
}

std::string flag_name(const std::string& key) {
  std::string f = key;
  std::replace(f.begin(), f.end(), '_', '-');
  return "--" + f;
}

void ParamSet::bind(CLI::App* app) {
  for (const auto& [key, value] : defaults_.items()) opts_[key] = app->add_option(flag_name(key), raw_[key]);
}

namespace {

nlohmann::json parse_like(const nlohmann::json& like, const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    nlohmann::json v;
    if (like.is_number_unsigned() || like.is_number_integer()) {
      if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
      v = std::stoull(text, &used);
    } else if (like.is_number()) {
      v = std::stod(text, &used);
    } else {
      return text;
    }
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw CliError(kUsage, "invalid_parameter", flag_name(key) + ": cannot parse '" + text + "'");
  }
}

void check_type(const nlohmann::json& like, const std::string& key, const nlohmann::json& v) {
  const bool ok = (like.is_number_unsigned() || like.is_number_integer()) ? v.is_number_unsigned()
                  : like.is_number()                                     ? v.is_number()
                                                                         : v.is_string();
  if (!ok) throw CliError(kUsage, "invalid_parameter", "config key '" + key + "' has the wrong type");
}

}  // namespace

nlohmann::json ParamSet::resolve(const Globals& g, const std::string& scope, const std::vector<std::string>& allowed,
                                 const nlohmann::json& overlay) const {
  const auto is_allowed = [&](const std::string& k) { return std::find(allowed.begin(), allowed.end(), k) != allowed.end(); };
  nlohmann::json v = nlohmann::json::object();
  for (const auto& k : allowed) v[k] = overlay.contains(k) ? overlay.at(k) : defaults_.at(k);
  const auto config = read_config(g);
  for (const auto& [key, value] : config.items()) {
    if (key == "seed") continue;
    if (!is_allowed(key)) throw CliError(kUsage, "invalid_parameter", "config key '" + key + "' does not apply to " + scope);
    check_type(defaults_.at(key), key, value);
    v[key] = value;
  }
  for (const auto& [key, opt] : opts_) {
    if (opt->count() == 0) continue;
    if (!is_allowed(key)) throw CliError(kUsage, "invalid_parameter", flag_name(key) + " does not apply to " + scope);
    v[key] = parse_like(defaults_.at(key), key, raw_.at(key));
  }
  return v;
}

nlohmann::json read_config(const Globals& g) {
  if (g.config_path.empty()) return nlohmann::json::object();
  std::ifstream in(g.config_path);
  if (!in) throw CliError(kRuntime, "io", "cannot open config " + g.config_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CliError(kUsage, "config", g.config_path + ": " + e.what());
  }
  if (j.is_object() && j.contains("command") && j.contains("config")) j = j["config"];
  if (!j.is_object()) throw CliError(kUsage, "config", g.config_path + ": expected a JSON object");
  return j;
}

std::uint64_t resolve_seed(const Globals& g) {
  if (g.seed_opt && g.seed_opt->count() > 0) return g.seed;
  const auto config = read_config(g);
  if (config.contains("seed")) {
    if (!config["seed"].is_number_unsigned()) throw CliError(kUsage, "config", "config key 'seed' must be unsigned");
    return config["seed"].get<std::uint64_t>();
  }
  return ncalg::kDefaultSeed;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::filesystem::path output_dir(const Globals& g) {
  const std::filesystem::path dir = g.out_dir.empty() ? "." : g.out_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CliError(kRuntime, "io", "cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(kRuntime, "io", "cannot write " + path.string());
  out << text;
  if (!out) throw CliError(kRuntime, "io", "cannot write " + path.string());
}

void write_manifest(const Globals& g, RunManifest& m) {
  m.finished = utc_now();
  const auto path = output_dir(g) / (m.command + ".manifest.json");
  write_text(path, m.to_json().dump(2) + "\n");
}

void print_report(std::ostream& out, const Globals& g, const nlohmann::json& report) {
  if (g.json) {
    out << report.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : report.items()) {
    out << key << " = ";
    if (value.is_string())
      out << value.get<std::string>();
    else
      out << value.dump();
    out << '\n';
  }
}

namespace {

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

int fail(std::ostream& err, int code, const std::string& tag, const std::string& message) {
  err << "error: " << tag << ": " << one_line(message) << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncommutative calculus checks and discrete simulations", "ncdoc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  Globals g;
  g.seed_opt = app.add_option("--seed", g.seed, "RNG seed");
  g.out_opt = app.add_option("--out", g.out_dir, "Output directory");
  app.add_flag("--json", g.json, "Print machine-readable JSON");
  g.config_opt = app.add_option("--config", g.config_path, "JSON config file or run manifest");

  auto* verify = app.add_subcommand("verify", "Run the identity checks");
  std::vector<std::string> only;
  bool sequential = false;
  verify->add_option("--only", only, "Glob over check names (repeatable)");
  verify->add_flag("--sequential", sequential, "Run checks one at a time");

  auto* simulate = app.add_subcommand("simulate", "Run a discrete model");
  SimulateArgs sim;
  simulate->add_option("model", sim.model, "brownian | doc-chaos | qwalk | em | em-classical | sign-field")->required();
  simulate->add_option("--svg", sim.svg, "Also write a polyline plot");
  sim.params = ParamSet({{"delta", 1.0},   {"tau", 1.0},   {"k", 1.0},      {"lambda", 1.0},
                         {"steps", 1000u}, {"y0", 1.16},   {"y1", 1.23},    {"order", 1u},
                         {"sites", 401u},  {"sigma", 10.0}, {"msd_seeds", 0u}, {"path", "random"}});
  sim.params.bind(simulate);

  auto* color = app.add_subcommand("color", "Count signed colorings of a diagram");
  std::string diagram;
  int q = 3;
  std::vector<std::string> triple;
  color->add_option("diagram", diagram, "Diagram JSON file")->required();
  color->add_option("--q", q, "Number of colors")->check(CLI::NonNegativeNumber);
  color->add_option("--triple", triple, "Odd pair of webs (ids or 0-based indices)")->expected(2);

  auto* planck = app.add_subcommand("planck", "Planck mass, length and time");
  ParamSet planck_params({{"hbar", 1.054571817e-34}, {"c", 299792458.0}, {"G", 6.67430e-11}});
  planck_params.bind(planck);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(err, kUsage, "usage", e.what());
  }

  try {
    if (verify->parsed()) return cmd_verify(g, only, sequential, out);
    if (simulate->parsed()) return cmd_simulate(g, sim, out);
    if (color->parsed()) return cmd_color(g, diagram, q, triple, out);
    if (planck->parsed()) return cmd_planck(g, planck_params, out);
    return fail(err, kUsage, "usage", "no command given");
  } catch (const CliError& e) {
    return fail(err, e.exit_code(), e.code(), e.what());
  } catch (const verify::UnknownCheck& e) {
    return fail(err, kUsage, "unknown_check", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(err, kUsage, "invalid_parameter", e.what());
  } catch (const std::exception& e) {
    return fail(err, kRuntime, "runtime", e.what());
  }
}

}  // namespace ncdoc::cli

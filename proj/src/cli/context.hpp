#pragma once

#include <CLI11.hpp>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "ncdoc/cli/cli.hpp"

namespace ncdoc::cli {

struct Globals {
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  std::string out_dir;
  CLI::Option* out_opt = nullptr;
  bool json = false;
  std::string config_path;
  CLI::Option* config_opt = nullptr;
};

/// Named parameters resolved as flags > config file > defaults.
class ParamSet {
 public:
  explicit ParamSet(nlohmann::json defaults) : defaults_(std::move(defaults)) {}

  /// Adds --name for every key (underscores become dashes).
  void bind(CLI::App* app);
  /// `overlay` replaces defaults for the listed keys.
  nlohmann::json resolve(const Globals& g, const std::string& scope, const std::vector<std::string>& allowed,
                         const nlohmann::json& overlay = nlohmann::json::object()) const;

 private:
  nlohmann::json defaults_;
  std::map<std::string, std::string> raw_;
  std::map<std::string, CLI::Option*> opts_;
};

std::string flag_name(const std::string& key);
nlohmann::json read_config(const Globals& g);
std::uint64_t resolve_seed(const Globals& g);

std::string utc_now();
std::filesystem::path output_dir(const Globals& g);
void write_text(const std::filesystem::path& path, const std::string& text);
void write_manifest(const Globals& g, RunManifest& m);
/// Prints key = value lines, or the object itself with --json.
void print_report(std::ostream& out, const Globals& g, const nlohmann::json& report);

struct SimulateArgs {
  std::string model;
  std::string svg;
  ParamSet params{nlohmann::json::object()};
};

int cmd_verify(const Globals& g, const std::vector<std::string>& only, bool sequential, std::ostream& out);
int cmd_simulate(const Globals& g, SimulateArgs& args, std::ostream& out);
int cmd_color(const Globals& g, const std::string& path, int q, const std::vector<std::string>& triple,
              std::ostream& out);
int cmd_planck(const Globals& g, ParamSet& params, std::ostream& out);

}  // namespace ncdoc::cli

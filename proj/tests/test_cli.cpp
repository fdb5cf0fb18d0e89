#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ncdoc/cli/cli.hpp"

namespace fs = std::filesystem;
using ncdoc::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("ncdoc_cli_" + std::to_string(getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string fixture(const std::string& name) { return std::string(NCDOC_DATA_DIR) + "/chord/" + name; }

void expect_error(const Result& r, int code, const std::string& tag) {
  CHECK(r.code == code);
  CHECK(r.err.rfind("error: " + tag + ": ", 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("verify command") {
  const auto maxwell = call({"verify", "--only", "maxwell.*"});
  CHECK(maxwell.code == 0);
  CHECK(maxwell.out.find("5/5 checks passed") != std::string::npos);

  const auto dir = scratch("verify");
  const auto full = call({"verify", "--json", "--out", dir.string()});
  CHECK(full.code == 0);
  const auto report = nlohmann::json::parse(full.out);
  CHECK(report.size() >= 31);
  for (const auto& r : report) CHECK(r["status"] == "pass");
  CHECK(nlohmann::json::parse(slurp(dir / "verify_report.json")) == report);
  const auto manifest = nlohmann::json::parse(slurp(dir / "verify.manifest.json"));
  CHECK(manifest["command"] == "verify");
  CHECK(manifest["outputs"].size() == 1);

  expect_error(call({"verify", "--only", "nosuch"}), 2, "unknown_check");
}

TEST_CASE("simulate doc-chaos traces") {
  const auto dir = scratch("chaos");
  const auto svg = (dir / "bounded.svg").string();
  const auto bounded = call({"simulate", "doc-chaos", "--k", "0.0001", "--steps", "5000", "--svg", svg, "--out",
                             (dir / "b").string(), "--json"});
  REQUIRE(bounded.code == 0);
  const auto b = nlohmann::json::parse(bounded.out);
  CHECK(b["blow_up"] == false);
  CHECK(b["invariant_holds"] == true);
  const auto csv = slurp(dir / "b" / "doc-chaos.csv");
  CHECK(csv.rfind("t,Y\n", 0) == 0);
  CHECK(lines(csv) == 5001);
  CHECK(slurp(svg).find("<polyline") != std::string::npos);
  CHECK(slurp(svg).find("viewBox") != std::string::npos);

  const auto unbounded = call({"simulate", "doc-chaos", "--k", "0.009", "--out", (dir / "u").string(), "--json"});
  REQUIRE(unbounded.code == 0);
  CHECK(nlohmann::json::parse(unbounded.out)["blow_up"] == true);
}

TEST_CASE("simulate models") {
  const auto dir = scratch("models");
  const auto brownian = call({"simulate", "brownian", "--delta", "1", "--tau", "1", "--steps", "100000", "--out",
                              dir.string(), "--json"});
  REQUIRE(brownian.code == 0);
  const auto b = nlohmann::json::parse(brownian.out);
  CHECK(b["k"] == 1.0);
  CHECK(b["max_step_error"] == 0.0);
  CHECK(lines(slurp(dir / "brownian.csv")) == 100002);

  for (const std::string model : {"qwalk", "em", "em-classical", "sign-field"}) {
    const auto r = call({"simulate", model, "--out", dir.string(), "--json"});
    REQUIRE_MESSAGE(r.code == 0, model);
    CHECK(fs::exists(dir / (model + ".csv")));
    CHECK(fs::exists(dir / ("simulate-" + model + ".manifest.json")));
  }
  CHECK(slurp(dir / "em.csv").rfind("t,X1,X2,X3,H1,H2,H3,E1,E2,E3\n", 0) == 0);
  const auto em = nlohmann::json::parse(call({"simulate", "em", "--out", dir.string(), "--json"}).out);
  CHECK(em["max_relative"].get<double>() <= 1e-9);
  const auto circle = call({"simulate", "em-classical", "--path", "circle", "--out", dir.string(), "--json"});
  CHECK(nlohmann::json::parse(circle.out)["lorentz_relative"].get<double>() <= 1e-12);
}

TEST_CASE("manifest reproduces outputs") {
  const auto a = scratch("repro_a"), b = scratch("repro_b");
  REQUIRE(call({"--seed", "7", "simulate", "sign-field", "--steps", "300", "--k", "2", "--out", a.string()}).code == 0);
  const auto manifest = a / "simulate-sign-field.manifest.json";
  REQUIRE(call({"simulate", "sign-field", "--config", manifest.string(), "--out", b.string()}).code == 0);
  CHECK(slurp(a / "sign-field.csv") == slurp(b / "sign-field.csv"));
  auto ma = nlohmann::json::parse(slurp(manifest));
  auto mb = nlohmann::json::parse(slurp(b / "simulate-sign-field.manifest.json"));
  CHECK(ma["config"] == mb["config"]);
  CHECK(ma["seed"] == 7);
  CHECK(mb["seed"] == 7);

  REQUIRE(call({"--seed", "8", "simulate", "sign-field", "--steps", "300", "--k", "2", "--out", b.string()}).code == 0);
  CHECK(slurp(a / "sign-field.csv") != slurp(b / "sign-field.csv"));
}

TEST_CASE("flags override config which overrides defaults") {
  const auto dir = scratch("precedence");
  const auto config = dir / "config.json";
  {
    std::ofstream out(config);
    out << R"({"steps": 50, "delta": 2, "seed": 99})";
  }
  REQUIRE(call({"simulate", "brownian", "--config", config.string(), "--out", dir.string()}).code == 0);
  CHECK(lines(slurp(dir / "brownian.csv")) == 52);
  auto m = nlohmann::json::parse(slurp(dir / "simulate-brownian.manifest.json"));
  CHECK(m["config"]["delta"] == 2.0);
  CHECK(m["seed"] == 99);
  CHECK(m["config"]["tau"] == 1.0);

  REQUIRE(call({"simulate", "brownian", "--config", config.string(), "--steps", "20", "--seed", "5", "--out",
                dir.string()})
              .code == 0);
  CHECK(lines(slurp(dir / "brownian.csv")) == 22);
  m = nlohmann::json::parse(slurp(dir / "simulate-brownian.manifest.json"));
  CHECK(m["seed"] == 5);
  CHECK(m["config"]["delta"] == 2.0);

  {
    std::ofstream out(config);
    out << R"({"sigma": 3})";
  }
  expect_error(call({"simulate", "brownian", "--config", config.string(), "--out", dir.string()}), 2,
               "invalid_parameter");
  {
    std::ofstream out(config);
    out << "{ not json";
  }
  expect_error(call({"simulate", "brownian", "--config", config.string(), "--out", dir.string()}), 2, "config");
  expect_error(call({"simulate", "brownian", "--config", (dir / "absent.json").string()}), 3, "io");
}

TEST_CASE("simulate errors name the flag") {
  const auto dir = scratch("errors").string();
  auto r = call({"simulate", "brownian", "--sigma", "3", "--out", dir});
  expect_error(r, 2, "invalid_parameter");
  CHECK(r.err.find("--sigma") != std::string::npos);
  r = call({"simulate", "brownian", "--delta", "-1", "--out", dir});
  expect_error(r, 2, "invalid_parameter");
  CHECK(r.err.find("--delta") != std::string::npos);
  r = call({"simulate", "qwalk", "--sites", "abc", "--out", dir});
  expect_error(r, 2, "invalid_parameter");
  CHECK(r.err.find("--sites") != std::string::npos);
  r = call({"simulate", "doc-chaos", "--order", "0", "--out", dir});
  expect_error(r, 2, "invalid_parameter");
  CHECK(r.err.find("--order") != std::string::npos);
  r = call({"simulate", "em-classical", "--path", "spiral", "--out", dir});
  CHECK(r.err.find("--path") != std::string::npos);
  expect_error(call({"simulate", "nosuch", "--out", dir}), 2, "unknown_model");
  expect_error(call({"simulate"}), 2, "usage");
  expect_error(call({"frobnicate"}), 2, "usage");
  expect_error(call({}), 2, "usage");
}

TEST_CASE("color command") {
  auto r = call({"color", fixture("single_chord.json"), "--q", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "C(D,3) = 3\n");

  r = call({"color", fixture("crossing_pair.json"), "--q", "3", "--triple", "0", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("6 = 9 - 3  holds") != std::string::npos);

  r = call({"color", fixture("three_odd_webs.json"), "--q", "4", "--triple", "a", "h", "--json"});
  CHECK(r.code == 0);
  const auto t = nlohmann::json::parse(r.out);
  CHECK(t["C"] == 24);
  CHECK(t["identity"] == true);
  CHECK(t["identity_all_q"] == true);

  r = call({"color", fixture("random_4web.json"), "--q", "5", "--json"});
  CHECK(r.code == 0);
  const auto c = nlohmann::json::parse(r.out);
  CHECK(c["C"] == c["brute_force"]);
  CHECK(c["C"] == -240);

  const auto dir = scratch("color");
  const auto bad = dir / "bad.json";
  {
    std::ofstream out(bad);
    out << "{\n  \"webs\": [\n    {\"id\": \"a\"\n  ]\n}\n";
  }
  r = call({"color", bad.string()});
  expect_error(r, 3, "parse");
  CHECK(r.err.find(":4:") != std::string::npos);
  expect_error(call({"color", (dir / "none.json").string()}), 3, "io");
  expect_error(call({"color", fixture("single_chord.json"), "--triple", "0", "0"}), 2, "invalid_parameter");
  expect_error(call({"color", fixture("crossing_pair.json"), "--triple", "0", "z"}), 2, "invalid_parameter");
  expect_error(call({"color", fixture("crossing_pair.json"), "--q", "-1"}), 2, "usage");
}

TEST_CASE("planck command") {
  auto r = call({"planck", "--json"});
  REQUIRE(r.code == 0);
  const auto p = nlohmann::json::parse(r.out);
  CHECK(p["mass"].get<double>() == doctest::Approx(2.176434e-8).epsilon(1e-6));
  CHECK(p["length"].get<double>() == doctest::Approx(1.616255e-35).epsilon(1e-6));
  CHECK(p["time"].get<double>() == doctest::Approx(5.391247e-44).epsilon(1e-6));
  CHECK(p["identity_holds"] == true);

  r = call({"planck", "--hbar", "1", "--c", "1", "--G", "1", "--json"});
  CHECK(nlohmann::json::parse(r.out)["mass"] == 1.0);
  r = call({"planck", "--G", "0"});
  expect_error(r, 2, "invalid_parameter");
  CHECK(r.err.find("G") != std::string::npos);
}

TEST_CASE("help and version") {
  auto r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("simulate") != std::string::npos);
  r = call({"--version"});
  CHECK(r.code == 0);
  CHECK(r.out == std::string(ncdoc::cli::kVersion) + "\n");
}

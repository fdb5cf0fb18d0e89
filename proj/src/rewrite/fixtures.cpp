#include "ncdoc/rewrite/fixtures.hpp"

#include <cstdlib>
#include <fstream>

#include "ncdoc/rewrite/metric.hpp"

namespace ncdoc::rewrite {

using nlohmann::json;

namespace {

GeneratorPattern pat(std::string name, std::optional<int> dot = std::nullopt,
                     std::optional<int> arity = std::nullopt, bool tower = false) {
  return GeneratorPattern{std::move(name), dot, arity, tower};
}

Generator single(const std::string& text) {
  auto p = NCPoly::parse(text);
  if (p.size() != 1 || p.terms().begin()->first.size() != 1 || p.terms().begin()->second != 1) {
    throw std::invalid_argument("expected a single generator, got '" + text + "'");
  }
  return p.terms().begin()->first.front();
}

Word word_of(const std::string& text) {
  auto p = NCPoly::parse(text);
  if (p.size() != 1 || p.terms().begin()->second != 1) {
    throw std::invalid_argument("expected a single word, got '" + text + "'");
  }
  return p.terms().begin()->first;
}

json pattern_json(const GeneratorPattern& p) {
  json j{{"name", p.name}};
  if (p.dot) j["dot"] = *p.dot;
  if (p.arity) j["arity"] = *p.arity;
  if (p.tower) j["tower"] = true;
  return j;
}

GeneratorPattern pattern_from(const json& j) {
  GeneratorPattern p;
  p.name = j.at("name").get<std::string>();
  if (j.contains("dot")) p.dot = j["dot"].get<int>();
  if (j.contains("arity")) p.arity = j["arity"].get<int>();
  p.tower = j.value("tower", false);
  return p;
}

}  // namespace

RelationSet flat_weyl(int d) {
  if (d < 1) throw std::invalid_argument("flat_weyl: d must be positive");
  RelationDefinition def;
  def.name = "flat_weyl_d" + std::to_string(d);
  def.blocks = {{"X", true, false, {pat("X", 0, 1)}}, {"P", true, false, {pat("P", 0, 1)}}};
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      def.rules[{Generator::make("X", {i}), Generator::make("P", {j})}] = NCPoly(i == j ? 1 : 0);
  return RelationSet(std::move(def));
}

RelationSet jshift(int horizon) {
  RelationDefinition def;
  def.name = "jshift";
  def.blocks = {{"J", false, false, {pat("J", 0, 0)}}, {"X", true, false, {pat("X")}}};
  def.params["tau"] = 1;
  def.lazy = LazySpec{"jshift", {{"shift", "J"}, {"series", "X"}, {"horizon", std::to_string(horizon)}}};
  return RelationSet(std::move(def));
}

RelationSet shift_coordinate(const Rational& delta) {
  RelationDefinition def;
  def.name = "shift_coordinate";
  def.blocks = {{"J", false, false, {pat("J", 0, 0)}}, {"x", true, false, {pat("x", 0, 0)}}};
  NCPoly J = NCPoly::gen("J");
  def.rules[{Generator::make("J"), Generator::make("x")}] = J * Rational(-delta);
  def.params["delta"] = delta;
  return RelationSet(std::move(def));
}

RelationSet metric_d2() {
  using namespace metric;
  constexpr int d = 2;
  RelationDefinition def;
  def.name = "metric_d2";
  def.blocks = {
      {"coordinates", true, false, {pat("X", 0, 1)}},
      {"metric", true, true, {pat("g", 0, 2, true), pat("gi", 0, 2)}},
      {"velocities", false, false, {pat("X", 1, 1), pat("X", 2, 1)}},
  };
  def.symmetric = {"g", "gi"};
  def.params["dim"] = d;
  def.lazy = LazySpec{"metric", {{"dim", std::to_string(d)}}};
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      def.rules[{Generator::make("X", {i}), Generator::make("X", {j}, 1)}] = g(i, j);
  // [X_l, X_r^(2)] = d(g_lr) - [X_l^(1), X_r^(1)]
  for (int l = 1; l <= d; ++l)
    for (int r = 1; r <= d; ++r) {
      NCPoly value = velocity(r) * velocity(l) - velocity(l) * velocity(r);
      for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) value += dg(i, l, r) * gi(i, j) * velocity(j);
      def.rules[{Generator::make("X", {l}), Generator::make("X", {r}, 2)}] = value;
    }
  // reduced Groebner basis of gi.g = 1 (grevlex, gi > g)
  auto red = [&](const char* lhs, const char* rhs) {
    def.reductions.push_back({word_of(lhs), NCPoly::parse(rhs)});
  };
  red("g[1,2].g[1,2].gi[2,2]", "1 * g[1,1].g[2,2].gi[2,2] - 1 * g[1,1]");
  red("g[2,2].gi[1,2].gi[1,2]", "1 * g[2,2].gi[1,1].gi[2,2] - 1 * gi[1,1]");
  red("g[1,1].gi[1,1]", "1 * g[2,2].gi[2,2]");
  red("g[1,1].gi[1,2]", "-1 * g[1,2].gi[2,2]");
  red("g[1,2].gi[1,1]", "-1 * g[2,2].gi[1,2]");
  red("g[1,2].gi[1,2]", "1 - 1 * g[2,2].gi[2,2]");
  return RelationSet(std::move(def));
}

json to_json(const RelationSet& R) {
  const auto& def = R.definition();
  json j;
  j["name"] = def.name;
  j["blocks"] = json::array();
  for (const auto& b : def.blocks) {
    json members = json::array();
    for (const auto& p : b.members) members.push_back(pattern_json(p));
    json jb{{"name", b.name}, {"commutative", b.commutative}, {"members", members}};
    if (b.commutes_with_earlier) jb["commutes_with_earlier"] = true;
    j["blocks"].push_back(jb);
  }
  j["central"] = json::array();
  for (const auto& p : def.central) j["central"].push_back(pattern_json(p));
  j["rules"] = json::array();
  for (const auto& [key, value] : def.rules) {
    j["rules"].push_back({{"a", key.first.to_string()}, {"b", key.second.to_string()},
                          {"value", value.to_string()}});
  }
  j["reductions"] = json::array();
  for (const auto& r : def.reductions) {
    j["reductions"].push_back({{"lhs", ncalg::word_to_string(r.lhs)}, {"rhs", r.rhs.to_string()}});
  }
  j["symmetric"] = def.symmetric;
  j["params"] = json::object();
  for (const auto& [k, v] : def.params) j["params"][k] = ncdoc::to_string(v);
  if (def.lazy) j["lazy"] = {{"kind", def.lazy->kind}, {"options", def.lazy->options}};
  return j;
}

RelationSet relation_set_from_json(const json& j) {
  RelationDefinition def;
  def.name = j.at("name").get<std::string>();
  for (const auto& jb : j.at("blocks")) {
    Block b;
    b.name = jb.at("name").get<std::string>();
    b.commutative = jb.value("commutative", false);
    b.commutes_with_earlier = jb.value("commutes_with_earlier", false);
    for (const auto& m : jb.at("members")) b.members.push_back(pattern_from(m));
    def.blocks.push_back(std::move(b));
  }
  if (j.contains("central"))
    for (const auto& m : j["central"]) def.central.push_back(pattern_from(m));
  if (j.contains("rules")) {
    for (const auto& r : j["rules"]) {
      def.rules[{single(r.at("a").get<std::string>()), single(r.at("b").get<std::string>())}] =
          NCPoly::parse(r.at("value").get<std::string>());
    }
  }
  if (j.contains("reductions")) {
    for (const auto& r : j["reductions"]) {
      def.reductions.push_back({word_of(r.at("lhs").get<std::string>()),
                                NCPoly::parse(r.at("rhs").get<std::string>())});
    }
  }
  if (j.contains("symmetric")) def.symmetric = j["symmetric"].get<std::set<std::string>>();
  if (j.contains("params")) {
    for (const auto& [k, v] : j["params"].items()) def.params[k] = parse_rational(v.get<std::string>());
  }
  if (j.contains("lazy")) {
    LazySpec spec;
    spec.kind = j["lazy"].at("kind").get<std::string>();
    if (j["lazy"].contains("options")) {
      spec.options = j["lazy"]["options"].get<std::map<std::string, std::string>>();
    }
    def.lazy = std::move(spec);
  }
  return RelationSet(std::move(def));
}

RelationSet load_relation_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open relation set " + path.string());
  try {
    return relation_set_from_json(json::parse(in));
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void save_relation_set(const RelationSet& R, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(R).dump(2) << '\n';
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("NCDOC_DATA_DIR")) return env;
  return NCDOC_DEFAULT_DATA_DIR;
}

std::filesystem::path fixture_path(const std::string& name) {
  return data_dir() / "relations" / (name + ".json");
}

}  // namespace ncdoc::rewrite

#include "ncdoc/chord/geometric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncdoc::chord {

void GeometricChords::validate() const {
  if (points < 0 || points % 2 != 0) throw std::invalid_argument("GeometricChords: points must be even");
  if (chords.size() * 2 != static_cast<std::size_t>(points))
    throw std::invalid_argument("GeometricChords: expected " + std::to_string(points / 2) + " chords");
  std::vector<int> used(static_cast<std::size_t>(points) + 1, 0);
  for (const auto& [a, b] : chords) {
    for (int p : {a, b}) {
      if (p < 1 || p > points) throw std::invalid_argument("GeometricChords: endpoint " + std::to_string(p) + " out of range");
      if (used[static_cast<std::size_t>(p)]++)
        throw std::invalid_argument("GeometricChords: endpoint " + std::to_string(p) + " used twice");
    }
  }
  for (const auto& [a, b] : fuse) {
    const int n = static_cast<int>(chords.size());
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw std::invalid_argument("GeometricChords: fuse must name two distinct chords");
  }
  if (!labels.empty() && labels.size() != chords.size())
    throw std::invalid_argument("GeometricChords: one label per chord");
}

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
  const auto [a0, a1] = std::minmax(a.first, a.second);
  const auto inside = [&](int p) { return a0 < p && p < a1; };
  return inside(b.first) != inside(b.second);
}

Diagram from_geometric(const GeometricChords& g) {
  g.validate();
  const std::size_t n = g.chords.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : g.fuse) {
    const std::size_t ra = find(static_cast<std::size_t>(a)), rb = find(static_cast<std::size_t>(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::size_t> web_of(n), roots;
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t r = find(c);
    auto it = std::find(roots.begin(), roots.end(), r);
    web_of[c] = static_cast<std::size_t>(it - roots.begin());
    if (it == roots.end()) roots.push_back(r);
  }
  std::vector<Web> webs(roots.size());
  for (std::size_t c = 0; c < n; ++c) {
    auto& id = webs[web_of[c]].id;
    const std::string label = g.labels.empty() ? "c" + std::to_string(c) : g.labels[c];
    id += id.empty() ? label : "+" + label;
  }
  std::vector<std::vector<int>> cross(roots.size(), std::vector<int>(roots.size(), 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!chords_cross(g.chords[a], g.chords[b])) continue;
      const std::size_t wa = web_of[a], wb = web_of[b];
      if (wa == wb) {
        ++webs[wa].self_crossings;
      } else {
        ++cross[wa][wb];
        ++cross[wb][wa];
      }
    }
  return Diagram(std::move(webs), std::move(cross));
}

nlohmann::json to_json(const GeometricChords& g) {
  nlohmann::json j{{"points", g.points}, {"chords", nlohmann::json::array()}, {"fuse", nlohmann::json::array()}};
  for (const auto& [a, b] : g.chords) j["chords"].push_back({a, b});
  for (const auto& [a, b] : g.fuse) j["fuse"].push_back({a, b});
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j;
}

GeometricChords geometric_from_json(const nlohmann::json& j) {
  GeometricChords g;
  g.points = j.at("points").get<int>();
  for (const auto& c : j.at("chords")) g.chords.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  if (j.contains("fuse"))
    for (const auto& f : j.at("fuse")) g.fuse.emplace_back(f.at(0).get<int>(), f.at(1).get<int>());
  if (j.contains("labels")) g.labels = j.at("labels").get<std::vector<std::string>>();
  g.validate();
  return g;
}

}  // namespace ncdoc::chord

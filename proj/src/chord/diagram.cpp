#include "ncdoc/chord/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ncdoc/ncalg/vector_ops.hpp"

namespace ncdoc::chord {

Diagram::Diagram(std::vector<Web> webs, std::vector<std::vector<int>> cross)
    : webs_(std::move(webs)), cross_(std::move(cross)) {
  const std::size_t n = webs_.size();
  if (cross_.size() != n) throw std::invalid_argument("Diagram: cross must have one row per web");
  for (std::size_t i = 0; i < n; ++i) {
    if (webs_[i].self_crossings < 0) throw std::invalid_argument("Diagram: negative self crossings on " + webs_[i].id);
    if (cross_[i].size() != n) throw std::invalid_argument("Diagram: cross must be square");
    if (cross_[i][i] != 0) throw std::invalid_argument("Diagram: cross diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (cross_[i][j] < 0) throw std::invalid_argument("Diagram: negative crossing count");
      if (j < i && cross_[i][j] != cross_[j][i]) throw std::invalid_argument("Diagram: cross must be symmetric");
    }
  }
}

int Diagram::sign() const {
  int s = 1;
  for (const auto& w : webs_) s *= w.sign();
  return s;
}

Diagram Diagram::with_cross(std::size_t i, std::size_t j, int value) const {
  auto c = cross_;
  c.at(i).at(j) = value;
  c.at(j).at(i) = value;
  return Diagram(webs_, std::move(c));
}

Diagram Diagram::with_self(std::size_t w, int value) const {
  auto webs = webs_;
  webs.at(w).self_crossings = value;
  return Diagram(std::move(webs), cross_);
}

nlohmann::json to_json(const Diagram& d) {
  nlohmann::json webs = nlohmann::json::array();
  for (const auto& w : d.webs()) webs.push_back({{"id", w.id}, {"self_crossings", w.self_crossings}});
  return {{"webs", webs}, {"cross", d.cross()}};
}

Diagram diagram_from_json(const nlohmann::json& j) {
  std::vector<Web> webs;
  for (const auto& w : j.at("webs")) webs.push_back({w.at("id").get<std::string>(), w.value("self_crossings", 0)});
  std::vector<std::vector<int>> cross;
  if (j.contains("cross")) {
    cross = j.at("cross").get<std::vector<std::vector<int>>>();
  } else {
    cross.assign(webs.size(), std::vector<int>(webs.size(), 0));
  }
  return Diagram(std::move(webs), std::move(cross));
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(at ? at - 1 : 0), '\n');
    throw std::invalid_argument(path + ":" + std::to_string(line) + ": " + e.what());
  }
  try {
    return diagram_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

namespace {

using Adjacency = std::vector<std::uint32_t>;

Adjacency odd_graph(const Diagram& d) {
  if (d.size() > 32) throw std::invalid_argument("Diagram: at most 32 webs are supported");
  Adjacency adj(d.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d.odd(i, j)) adj[i] |= 1u << j;
  return adj;
}

std::vector<std::int64_t> chromatic(const Adjacency& adj) {
  const std::size_t n = adj.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (!adj[u]) continue;
    const std::size_t v = static_cast<std::size_t>(__builtin_ctz(adj[u]));
    Adjacency del = adj;
    del[u] &= ~(1u << v);
    del[v] &= ~(1u << u);
    // contract v into u, then drop vertex v
    Adjacency con = del;
    con[u] |= con[v];
    for (std::size_t w = 0; w < n; ++w)
      if (con[v] >> w & 1u) con[w] |= 1u << u;
    Adjacency merged;
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v) continue;
      std::uint32_t row = 0;
      std::size_t k = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (x == v) continue;
        if (x != w && (con[w] >> x & 1u)) row |= 1u << k;
        ++k;
      }
      merged.push_back(row);
    }
    auto a = chromatic(del);
    const auto b = chromatic(merged);
    for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
    return a;
  }
  std::vector<std::int64_t> c(n + 1, 0);
  c[n] = 1;
  return c;
}

}  // namespace

std::vector<std::int64_t> chromatic_polynomial(const Diagram& d) { return chromatic(odd_graph(d)); }

std::int64_t count_colorings(const Diagram& d, int q) {
  if (q < 0) throw std::invalid_argument("count_colorings: q must be non-negative");
  const auto c = chromatic_polynomial(d);
  std::int64_t value = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * q + *it;
  return d.sign() * value;
}

std::int64_t brute_force_colorings(const Diagram& d, int q) {
  if (q < 0) throw std::invalid_argument("brute_force_colorings: q must be non-negative");
  const std::size_t n = d.size();
  std::vector<int> color(n, 0);
  std::int64_t count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t w) {
    if (w == n) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (d.odd(i, j) && color[i] == color[j]) return;
      ++count;
      return;
    }
    for (int c = 0; c < q; ++c) {
      color[w] = c;
      place(w + 1);
    }
  };
  place(0);
  return d.sign() * count;
}

namespace {

constexpr int kMaxQ = 6;

Diagram fuse(const Diagram& d, std::size_t i, std::size_t j, int extra_self) {
  std::vector<Web> webs;
  std::vector<std::size_t> keep;
  for (std::size_t m = 0; m < d.size(); ++m)
    if (m != j) keep.push_back(m);
  for (std::size_t m : keep) {
    Web w = d.webs()[m];
    if (m == i) {
      w.id = d.webs()[i].id + "+" + d.webs()[j].id;
      w.self_crossings = d.webs()[i].self_crossings + d.webs()[j].self_crossings + d.cross(i, j) + extra_self;
    }
    webs.push_back(w);
  }
  std::vector<std::vector<int>> cross(keep.size(), std::vector<int>(keep.size(), 0));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (a == b) continue;
      const std::size_t x = keep[a], y = keep[b];
      if (x == i || y == i) {
        const std::size_t m = x == i ? y : x;
        const int ci = d.cross(i, m), cj = d.cross(j, m);
        cross[a][b] = ci + cj - ((ci % 2 == 1 && cj % 2 == 1) ? 1 : 0);
      } else {
        cross[a][b] = d.cross(x, y);
      }
    }
  return Diagram(std::move(webs), std::move(cross));
}

void require_odd_pair(const Diagram& d, std::size_t i, std::size_t j) {
  if (i >= d.size() || j >= d.size()) throw std::invalid_argument("jacobi_triple: web index out of range");
  if (!d.odd(i, j)) throw std::invalid_argument("jacobi_triple: webs must cross an odd number of times");
}

std::string triple_notes(std::size_t bad) {
  return "q = 0.." + std::to_string(kMaxQ) + (bad ? "; " + std::to_string(bad) + " mismatches" : "");
}

}  // namespace

JacobiTriple jacobi_triple(const Diagram& d, std::size_t i, std::size_t j) {
  require_odd_pair(d, i, j);
  JacobiTriple t{d.with_cross(i, j, d.cross(i, j) - 1), fuse(d, i, j, -1), {}};
  std::size_t bad = 0;
  for (int q = 0; q <= kMaxQ; ++q)
    if (count_colorings(d, q) != count_colorings(t.prime, q) - count_colorings(t.fused, q)) ++bad;
  t.check = CheckResult::boolean("chord.jacobi_triple", "different = anything - same", bad == 0, triple_notes(bad));
  return t;
}

CheckResult twist_check(const Diagram& d, std::size_t w) {
  if (w >= d.size()) throw std::invalid_argument("twist_check: web index out of range");
  const Diagram t = d.with_self(w, d.webs()[w].self_crossings + 1);
  std::size_t bad = 0;
  for (int q = 0; q <= kMaxQ; ++q)
    if (count_colorings(t, q) != -count_colorings(d, q)) ++bad;
  return CheckResult::boolean("chord.twist", "a crossing at a node flips the sign", bad == 0, triple_notes(bad));
}

CheckResult twisted_jacobi_check(const Diagram& d, std::size_t i, std::size_t j) {
  require_odd_pair(d, i, j);
  const Diagram plus = d.with_cross(i, j, d.cross(i, j) + 1);
  const Diagram prime_plus = d;
  const Diagram fused_plus = fuse(d, i, j, 0);
  std::size_t bad = 0;
  for (int q = 0; q <= kMaxQ; ++q)
    if (count_colorings(plus, q) != count_colorings(prime_plus, q) - count_colorings(fused_plus, q)) ++bad;
  return CheckResult::boolean("chord.twisted_jacobi", "jacobi identity with a twist on every diagram", bad == 0,
                              triple_notes(bad));
}

Diagram random_diagram(CounterRng& rng, std::size_t webs, int max_cross, int max_self) {
  std::vector<Web> w;
  for (std::size_t i = 0; i < webs; ++i) w.push_back({"w" + std::to_string(i), static_cast<int>(rng.range(0, max_self))});
  std::vector<std::vector<int>> cross(webs, std::vector<int>(webs, 0));
  for (std::size_t i = 0; i < webs; ++i)
    for (std::size_t j = i + 1; j < webs; ++j) cross[i][j] = cross[j][i] = static_cast<int>(rng.range(0, max_cross));
  return Diagram(std::move(w), std::move(cross));
}

namespace {

int permutation_sign(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  int inversions = (a > b) + (a > c) + (b > c);
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

CheckResult epsilon_diagram_check() {
  const auto eps = ncalg::StructureConstants::epsilon();
  std::size_t bad = 0, cases = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          ++cases;
          Rational contracted = 0;
          int independent = 0;
          for (int i = 0; i < 3; ++i) {
            contracted += eps(a, b, i) * eps(c, d, i);
            independent += permutation_sign(a, b, i) * permutation_sign(c, d, i);
          }
          const int rhs = (a == c && b == d) - (a == d && b == c);
          if (contracted != rhs || independent != rhs) ++bad;
        }
  const auto shared = ncalg::epsilon_identity_check();
  std::string notes = std::to_string(cases) + " vertex contractions";
  if (bad) notes += "; " + std::to_string(bad) + " mismatches";
  if (!shared.passed()) notes += "; tensor identity check failed";
  return CheckResult::boolean("chord.epsilon_diagram", "two trivalent vertices joined along one edge",
                              bad == 0 && shared.passed(), notes);
}

}  // namespace ncdoc::chord

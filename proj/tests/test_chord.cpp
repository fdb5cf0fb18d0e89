#include <fstream>

#include "doctest.h"
#include "ncdoc/chord/diagram.hpp"
#include "ncdoc/chord/geometric.hpp"

using namespace ncdoc;
using namespace ncdoc::chord;

namespace {

std::string fixture(const std::string& name) { return std::string(NCDOC_DATA_DIR) + "/chord/" + name; }

GeometricChords load_geometric(const std::string& name) {
  std::ifstream in(fixture(name));
  REQUIRE(in.good());
  return geometric_from_json(nlohmann::json::parse(in));
}

std::int64_t falling(int q, int n) {
  std::int64_t v = 1;
  for (int k = 0; k < n; ++k) v *= q - k;
  return v;
}

}  // namespace

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(Diagram({{"a", 0}, {"b", 0}}, {{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Diagram({{"a", 0}}, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(Diagram({{"a", -1}}, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(Diagram({{"a", 0}, {"b", 0}}, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Diagram({{"a", 0}, {"b", 0}}, {{0, -1}, {-1, 0}}), std::invalid_argument);
  const Diagram d({{"a", 3}, {"b", 0}}, {{0, 2}, {2, 0}});
  CHECK(d.sign() == -1);
  CHECK_FALSE(d.odd(0, 1));
  CHECK(diagram_from_json(to_json(d)) == d);
}

TEST_CASE("coloring counts") {
  const auto single = load_diagram(fixture("single_chord.json"));
  const auto pair = load_diagram(fixture("crossing_pair.json"));
  const Diagram disjoint({{"a", 0}, {"b", 0}}, {{0, 0}, {0, 0}});
  for (int q = 0; q <= 6; ++q) {
    CHECK(count_colorings(single, q) == q);
    CHECK(count_colorings(pair, q) == q * (q - 1));
    CHECK(count_colorings(disjoint, q) == q * q);
  }
  CHECK(count_colorings(Diagram{}, 3) == 1);
  CHECK(chromatic_polynomial(pair) == std::vector<std::int64_t>{0, -1, 1});

  const auto four = load_diagram(fixture("random_4web.json"));
  CHECK(count_colorings(four, 5) == -240);
  CHECK(brute_force_colorings(four, 5) == -240);
  CHECK_THROWS_AS(count_colorings(pair, -1), std::invalid_argument);
}

TEST_CASE("oracle equivalence on small diagrams") {
  CounterRng rng(0xD0C);
  for (int trial = 0; trial < 300; ++trial) {
    const auto webs = static_cast<std::size_t>(rng.range(0, 5));
    const auto d = random_diagram(rng, webs);
    for (int q = 0; q <= 5; ++q) CHECK(count_colorings(d, q) == brute_force_colorings(d, q));
  }
  std::vector<Web> webs;
  std::vector<std::vector<int>> complete(5, std::vector<int>(5, 1));
  for (int i = 0; i < 5; ++i) {
    webs.push_back({"w" + std::to_string(i), i});
    complete[i][i] = 0;
  }
  const Diagram k5(webs, complete);
  for (int q = 0; q <= 6; ++q) CHECK(count_colorings(k5, q) == falling(q, 5));
}

TEST_CASE("deletion contraction") {
  const auto pair = load_diagram(fixture("crossing_pair.json"));
  const auto t = jacobi_triple(pair, 0, 1);
  CHECK(t.check.passed());
  CHECK(t.prime.cross(0, 1) == 0);
  CHECK(t.fused.size() == 1);
  CHECK(t.fused.webs()[0].self_crossings == 0);
  CHECK(count_colorings(pair, 3) == 6);
  CHECK(count_colorings(t.prime, 3) == 9);
  CHECK(count_colorings(t.fused, 3) == 3);
  CHECK(count_colorings(t.prime, 0) == 0);
  CHECK(count_colorings(t.fused, 0) == 0);

  const auto three = load_diagram(fixture("three_odd_webs.json"));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(jacobi_triple(three, i, j).check.passed());
  const auto f = jacobi_triple(three, 0, 1).fused;
  CHECK(f.cross(0, 1) == 1);
  for (int q = 0; q <= 6; ++q) CHECK(count_colorings(f, q) == q * (q - 1));

  const Diagram even({{"a", 0}, {"b", 0}}, {{0, 2}, {2, 0}});
  CHECK_THROWS_AS(jacobi_triple(even, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_triple(pair, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_triple(pair, 0, 2), std::invalid_argument);
}

TEST_CASE("sum bookkeeping breaks the identity") {
  const auto three = load_diagram(fixture("three_odd_webs.json"));
  const Diagram summed({{"a+b", 0}, {"h", 0}}, {{0, 2}, {2, 0}});
  const auto prime = jacobi_triple(three, 0, 1).prime;
  CHECK(count_colorings(three, 3) != count_colorings(prime, 3) - count_colorings(summed, 3));
}

TEST_CASE("deletion contraction on random diagrams") {
  CounterRng rng(17);
  int diagrams = 0, pairs = 0;
  while (diagrams < 100) {
    const auto d = random_diagram(rng, static_cast<std::size_t>(rng.range(2, 6)));
    bool any = false;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j)
        if (d.odd(i, j)) {
          any = true;
          ++pairs;
          CHECK(jacobi_triple(d, i, j).check.passed());
          CHECK(twisted_jacobi_check(d, i, j).passed());
        }
    if (any) ++diagrams;
  }
  CHECK(pairs >= 100);
}

TEST_CASE("twist identity") {
  const auto single = load_diagram(fixture("single_chord.json"));
  const auto once = single.with_self(0, 1), twice = single.with_self(0, 2);
  for (int q = 0; q <= 6; ++q) {
    CHECK(count_colorings(once, q) == -q);
    CHECK(count_colorings(twice, q) == q);
  }
  CHECK(twist_check(single, 0).passed());
  const auto three = load_diagram(fixture("three_odd_webs.json"));
  for (std::size_t w = 0; w < 3; ++w) CHECK(twist_check(three, w).passed());
  CHECK(twisted_jacobi_check(three, 0, 1).passed());
  CHECK_THROWS_AS(twist_check(single, 1), std::invalid_argument);
}

TEST_CASE("parity sufficiency") {
  CounterRng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_diagram(rng, static_cast<std::size_t>(rng.range(2, 5)));
    const auto i = static_cast<std::size_t>(rng.range(0, static_cast<long>(d.size()) - 1));
    auto j = static_cast<std::size_t>(rng.range(0, static_cast<long>(d.size()) - 2));
    if (j >= i) ++j;
    const auto bumped = d.with_cross(i, j, d.cross(i, j) + 2);
    for (int q = 0; q <= 5; ++q) CHECK(count_colorings(bumped, q) == count_colorings(d, q));
  }
}

TEST_CASE("geometric chords") {
  CHECK(chords_cross({1, 3}, {2, 4}));
  CHECK_FALSE(chords_cross({1, 2}, {3, 4}));
  CHECK_FALSE(chords_cross({1, 4}, {2, 3}));
  CHECK(chords_cross({4, 1}, {3, 6}));

  const auto one = from_geometric({4, {{1, 3}, {2, 4}}, {}, {}});
  CHECK(one.cross(0, 1) == 1);
  const auto zero = from_geometric({4, {{1, 2}, {3, 4}}, {}, {}});
  CHECK(zero.cross(0, 1) == 0);

  const Diagram dprime({{"a", 0}, {"b", 0}, {"h", 0}}, {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
  CHECK(from_geometric(load_geometric("crossed_parallel_pair.json")) == dprime);
  const auto D = from_geometric(load_geometric("interleaved_triple.json"));
  CHECK(D == load_diagram(fixture("three_odd_webs.json")));
  CHECK(jacobi_triple(D, 0, 1).prime == dprime);

  const auto fused = from_geometric(load_geometric("fused_parallel_pair.json"));
  REQUIRE(fused.size() == 2);
  CHECK(fused.webs()[0].id == "a+b");
  CHECK(fused.cross(0, 1) == 2);
  CHECK(jacobi_triple(D, 0, 1).fused.cross(0, 1) == 1);

  const auto knot = from_geometric({6, {{1, 4}, {2, 5}, {3, 6}}, {{0, 1}, {1, 2}}, {}});
  REQUIRE(knot.size() == 1);
  CHECK(knot.webs()[0].self_crossings == 3);
  CHECK(knot.sign() == -1);

  const GeometricChords g{6, {{1, 4}, {2, 5}, {3, 6}}, {{0, 2}}, {"a", "b", "h"}};
  const auto back = geometric_from_json(to_json(g));
  CHECK(back.chords == g.chords);
  CHECK(back.fuse == g.fuse);
  CHECK(back.labels == g.labels);

  CHECK_THROWS_AS(from_geometric({4, {{1, 1}, {2, 4}}, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(from_geometric({4, {{1, 5}, {2, 4}}, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(from_geometric({4, {{1, 3}}, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(from_geometric({4, {{1, 3}, {2, 4}}, {{0, 0}}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(from_geometric({3, {{1, 3}}, {}, {}}), std::invalid_argument);
}

TEST_CASE("epsilon diagram") {
  const auto r = epsilon_diagram_check();
  CHECK(r.passed());
  CHECK(r.notes.find("81") != std::string::npos);
}

TEST_CASE("diagram files") {
  CHECK_THROWS_WITH_AS(load_diagram(fixture("missing.json")), doctest::Contains("cannot open"), std::runtime_error);
  const std::string bad = "/tmp/ncdoc_bad_diagram.json";
  {
    std::ofstream out(bad);
    out << "{\n  \"webs\": [\n    {\"id\": \"a\",, }\n  ]\n}\n";
  }
  CHECK_THROWS_WITH_AS(load_diagram(bad), doctest::Contains(":3:"), std::invalid_argument);
  {
    std::ofstream out(bad);
    out << "{\"webs\": [{\"id\": \"a\"}], \"cross\": [[1]]}";
  }
  CHECK_THROWS_AS(load_diagram(bad), std::invalid_argument);
}

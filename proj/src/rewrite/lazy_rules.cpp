#include <stdexcept>

#include "ncdoc/ncalg/derivation.hpp"
#include "ncdoc/rewrite/metric.hpp"

namespace ncdoc::rewrite {

namespace {

int option_int(const LazySpec& spec, const std::string& key, int fallback) {
  auto it = spec.options.find(key);
  return it == spec.options.end() ? fallback : std::stoi(it->second);
}

std::string option_str(const LazySpec& spec, const std::string& key, std::string fallback) {
  auto it = spec.options.find(key);
  return it == spec.options.end() ? fallback : it->second;
}

// X^(n) J = J X^(n+1), stored as [J, X^(n)] = J X^(n) - J X^(n+1).
LazyRule jshift_rule(const LazySpec& spec) {
  const std::string shift = option_str(spec, "shift", "J");
  const std::string series = option_str(spec, "series", "X");
  const int horizon = option_int(spec, "horizon", 8);
  return [=](const RelationSet&, Generator a, Generator b) -> std::optional<NCPoly> {
    if (a.name() != shift || b.name() != series) return std::nullopt;
    if (b.dot_order() + 1 > horizon) {
      throw std::runtime_error("shift horizon " + std::to_string(horizon) + " exceeded by " +
                               b.to_string());
    }
    NCPoly J(a);
    return J * NCPoly(b) - J * NCPoly(b.with_dot(b.dot_order() + 1));
  };
}

bool is_metric_block(Generator g) {
  return g.dot_order() == 0 && (tower_base(g.name()) == "g" || g.name() == "gi");
}

LazyRule metric_rule(const LazySpec& spec) {
  const int d = option_int(spec, "dim", 2);
  return [d](const RelationSet& R, Generator a, Generator b) -> std::optional<NCPoly> {
    if (!is_metric_block(a) || b.name() != "X" || b.indices().size() != 1) return std::nullopt;
    const int r = b.indices()[0];
    if (b.dot_order() == 1) {
      if (a.name() == "gi") {
        // from d_r(gi g) = 0 and gi g = 1
        const int i = a.indices()[0], j = a.indices()[1];
        NCPoly out;
        for (int p = 1; p <= d; ++p)
          for (int q = 1; q <= d; ++q) out -= metric::gi(i, p) * metric::dg(r, p, q) * metric::gi(q, j);
        return out;
      }
      std::vector<int> idx{r};
      idx.insert(idx.end(), a.indices().begin(), a.indices().end());
      return NCPoly(R.canonical(Generator::make("D" + a.name(), std::move(idx))));
    }
    if (b.dot_order() == 2) {
      // differentiate [a, X_r^(1)] = d_r a in time
      NCPoly t(a);
      return metric::dot(R, metric::partial(R, t, r)) - metric::partial(R, metric::dot(R, t), r);
    }
    return std::nullopt;
  };
}

}  // namespace

LazyRule make_lazy_rule(const LazySpec& spec) {
  if (spec.kind == "jshift") return jshift_rule(spec);
  if (spec.kind == "metric") return metric_rule(spec);
  throw std::invalid_argument("unknown lazy rule kind '" + spec.kind + "'");
}

namespace metric {

NCPoly coordinate(int i) { return NCPoly::gen("X", {i}, 0); }
NCPoly velocity(int i) { return NCPoly::gen("X", {i}, 1); }
NCPoly acceleration(int i) { return NCPoly::gen("X", {i}, 2); }
NCPoly g(int j, int k) { return NCPoly::gen("g", {std::min(j, k), std::max(j, k)}); }
NCPoly gi(int j, int k) { return NCPoly::gen("gi", {std::min(j, k), std::max(j, k)}); }
NCPoly dg(int r, int j, int k) { return NCPoly::gen("Dg", {r, std::min(j, k), std::max(j, k)}); }

NCPoly raised_velocity(int k, int d) {
  NCPoly out;
  for (int j = 1; j <= d; ++j) out += gi(k, j) * velocity(j);
  return out;
}

int dim(const RelationSet& R) {
  const auto& lazy = R.definition().lazy;
  if (!lazy || lazy->kind != "metric") throw std::invalid_argument(R.name() + " is not a metric algebra");
  return option_int(*lazy, "dim", 2);
}

NCPoly partial(const RelationSet& R, const NCPoly& F, int r) {
  const Generator vr = Generator::make("X", {r}, 1);
  ncalg::FormalDerivation d({}, [&](Generator g) -> std::optional<NCPoly> {
    if (g.name() == "X" && g.dot_order() >= 1) return commutator(NCPoly(g), NCPoly(vr));
    return R.bracket_rule(g, vr);
  });
  return d(F);
}

NCPoly dot(const RelationSet& R, const NCPoly& F) {
  const int d = dim(R);
  ncalg::FormalDerivation time({}, [&](Generator g) -> std::optional<NCPoly> {
    if (g.name() == "X") return NCPoly(g.with_dot(g.dot_order() + 1));
    NCPoly out;
    for (int i = 1; i <= d; ++i) out += R.bracket_rule(g, Generator::make("X", {i}, 1)) * raised_velocity(i, d);
    return out;
  });
  return time(F);
}

}  // namespace metric

}  // namespace ncdoc::rewrite

#include "ncdoc/ncalg/derivation.hpp"

namespace ncdoc::ncalg {

FormalDerivation FormalDerivation::time() {
  return FormalDerivation({}, [](Generator g) -> std::optional<NCPoly> {
    return NCPoly(g.with_dot(g.dot_order() + 1));
  });
}

std::optional<NCPoly> FormalDerivation::image(Generator g) const {
  if (auto it = images_.find(g); it != images_.end()) return it->second;
  if (fallback_) return fallback_(g);
  return std::nullopt;
}

NCPoly FormalDerivation::apply(const NCPoly& p, std::set<Generator>* unmapped) const {
  std::map<Generator, std::optional<NCPoly>> cache;
  auto lookup = [&](Generator g) -> const std::optional<NCPoly>& {
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, image(g)).first;
    return it->second;
  };

  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      const auto& img = lookup(w[pos]);
      if (!img) {
        if (unmapped) unmapped->insert(w[pos]);
        continue;
      }
      if (img->is_zero()) continue;
      Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      Word right(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
      out += NCPoly::word(std::move(left), c) * *img * NCPoly::word(std::move(right));
    }
  }
  return out;
}

NCPoly derive(const FormalDerivation& d, const NCPoly& p, std::set<Generator>* unmapped) {
  return d.apply(p, unmapped);
}

}  // namespace ncdoc::ncalg

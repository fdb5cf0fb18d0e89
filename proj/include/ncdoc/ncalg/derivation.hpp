#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "ncdoc/ncalg/ncpoly.hpp"

namespace ncdoc::ncalg {

/// Linear map on NCPoly determined by generator images and the Leibniz rule.
///
/// Generators without an explicit image fall back to `fallback` when set;
/// otherwise they map to zero and are reported through `unmapped`.
class FormalDerivation {
 public:
  using Rule = std::function<std::optional<NCPoly>(Generator)>;

  FormalDerivation() = default;
  explicit FormalDerivation(std::map<Generator, NCPoly> images, Rule fallback = {})
      : images_(std::move(images)), fallback_(std::move(fallback)) {}

  /// d(X^(n)) = X^(n+1) for every generator.
  static FormalDerivation time();

  void set_image(Generator g, NCPoly image) { images_[g] = std::move(image); }
  const std::map<Generator, NCPoly>& images() const { return images_; }

  /// Image of a single generator; nullopt when neither table nor fallback covers it.
  std::optional<NCPoly> image(Generator g) const;

  NCPoly apply(const NCPoly& p, std::set<Generator>* unmapped = nullptr) const;
  NCPoly operator()(const NCPoly& p) const { return apply(p); }

 private:
  std::map<Generator, NCPoly> images_;
  Rule fallback_;
};

NCPoly derive(const FormalDerivation& d, const NCPoly& p, std::set<Generator>* unmapped = nullptr);

}  // namespace ncdoc::ncalg

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ncdoc::ncalg {

struct GeneratorKey {
  std::string name;
  std::vector<int> indices;
  int dot_order = 0;

  auto operator<=>(const GeneratorKey&) const = default;
  bool operator==(const GeneratorKey&) const = default;
};

/// Interned handle to a noncommuting generator such as X[1]^(2).
///
/// Two handles compare equal iff their (name, indices, dot_order) keys are
/// equal. Ordering is lexicographic on the key, so it does not depend on the
/// order in which generators were first created. Handles are trivially
/// copyable and safe to share between threads.
class Generator {
 public:
  /// Throws std::invalid_argument for an empty or non-identifier name or a
  /// negative dot order.
  static Generator make(std::string_view name, std::vector<int> indices = {}, int dot_order = 0);

  const std::string& name() const { return key_->name; }
  const std::vector<int>& indices() const { return key_->indices; }
  int dot_order() const { return key_->dot_order; }
  const GeneratorKey& key() const { return *key_; }

  Generator with_dot(int dot_order) const;
  Generator with_indices(std::vector<int> indices) const;
  Generator with_name(std::string_view name) const;

  /// Text form: name, then "[i,j]" when indexed, then "^(n)" when n > 0.
  std::string to_string() const;

  friend bool operator==(Generator a, Generator b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(Generator a, Generator b) {
    if (a.key_ == b.key_) return std::strong_ordering::equal;
    return *a.key_ <=> *b.key_;
  }

  std::size_t hash() const { return std::hash<const void*>{}(key_); }

 private:
  explicit Generator(const GeneratorKey* key) : key_(key) {}
  const GeneratorKey* key_;
};

bool is_identifier(std::string_view name);

}  // namespace ncdoc::ncalg

template <>
struct std::hash<ncdoc::ncalg::Generator> {
  std::size_t operator()(ncdoc::ncalg::Generator g) const noexcept { return g.hash(); }
};

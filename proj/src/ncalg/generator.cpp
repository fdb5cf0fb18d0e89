#include "ncdoc/ncalg/generator.hpp"

#include <cctype>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace ncdoc::ncalg {

namespace {

struct KeyHash {
  std::size_t operator()(const GeneratorKey& k) const noexcept {
    std::size_t h = std::hash<std::string>{}(k.name);
    for (int i : k.indices) h = h * 1000003u ^ std::hash<int>{}(i);
    return h * 31u + static_cast<std::size_t>(k.dot_order);
  }
};

// Interned keys live for the whole process; handles are raw pointers into it.
class Registry {
 public:
  const GeneratorKey* intern(GeneratorKey key) {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second.get();
    auto owned = std::make_unique<GeneratorKey>(key);
    const GeneratorKey* ptr = owned.get();
    table_.emplace(std::move(key), std::move(owned));
    return ptr;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<GeneratorKey, std::unique_ptr<GeneratorKey>, KeyHash> table_;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto c0 = static_cast<unsigned char>(name[0]);
  if (!std::isalpha(c0) && name[0] != '_') return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Generator Generator::make(std::string_view name, std::vector<int> indices, int dot_order) {
  if (!is_identifier(name))
    throw std::invalid_argument("generator name must be an identifier: '" + std::string(name) + "'");
  if (dot_order < 0) throw std::invalid_argument("negative dot order for " + std::string(name));
  return Generator(registry().intern(GeneratorKey{std::string(name), std::move(indices), dot_order}));
}

Generator Generator::with_dot(int dot_order) const { return make(name(), indices(), dot_order); }

Generator Generator::with_indices(std::vector<int> indices) const {
  return make(name(), std::move(indices), dot_order());
}

Generator Generator::with_name(std::string_view name) const { return make(name, indices(), dot_order()); }

std::string Generator::to_string() const {
  std::string out = name();
  if (!indices().empty()) {
    out += '[';
    for (std::size_t i = 0; i < indices().size(); ++i) {
      if (i) out += ',';
      out += std::to_string(indices()[i]);
    }
    out += ']';
  }
  if (dot_order() > 0) out += "^(" + std::to_string(dot_order()) + ")";
  return out;
}

}  // namespace ncdoc::ncalg

#include "ncdoc/rewrite/relation_set.hpp"

#include <algorithm>

namespace ncdoc::rewrite {

std::string tower_base(const std::string& name) {
  std::size_t n = 0;
  while (n + 1 < name.size() && name[n] == 'D') ++n;
  return name.substr(n);
}

int tower_depth(const std::string& name) {
  return static_cast<int>(name.size() - tower_base(name).size());
}

bool GeneratorPattern::matches(Generator g) const {
  if (tower ? tower_base(g.name()) != name : g.name() != name) return false;
  if (dot && g.dot_order() != *dot) return false;
  if (arity && static_cast<int>(g.indices().size()) != *arity + (tower ? tower_depth(g.name()) : 0)) {
    return false;
  }
  return true;
}

RelationSet::RelationSet(RelationDefinition def) : def_(std::move(def)) {
  if (def_.lazy) lazy_ = make_lazy_rule(*def_.lazy);

  for (auto& red : def_.reductions) {
    if (red.lhs.empty()) throw std::invalid_argument(def_.name + ": reduction with empty lhs");
    for (auto& g : red.lhs) g = canonical(g);
    std::sort(red.lhs.begin(), red.lhs.end());
    const int b = block_of(red.lhs.front());
    for (auto g : red.lhs) {
      if (block_of(g) != b || !commutative_block(b)) {
        throw std::invalid_argument(def_.name + ": reduction lhs must lie in one commutative block");
      }
    }
  }

  std::map<std::pair<Generator, Generator>, NCPoly> rules;
  for (auto& [key, value] : def_.rules) {
    auto [a, b] = key;
    a = canonical(a);
    b = canonical(b);
    const int ba = block_of(a), bb = block_of(b);
    if (ba >= bb && ba != kCentralBlock) {
      throw std::invalid_argument(def_.name + ": rule [" + a.to_string() + ", " + b.to_string() +
                                  "] must have its left side in an earlier block");
    }
    for (auto g : value.generators()) {
      if (block_of(g) > std::max(ba, bb)) {
        throw std::invalid_argument(def_.name + ": rule [" + a.to_string() + ", " + b.to_string() +
                                    "] uses later-block generator " + g.to_string());
      }
    }
    rules[{a, b}] = value;
  }
  def_.rules = std::move(rules);
}

Rational RelationSet::param(const std::string& key) const {
  auto it = def_.params.find(key);
  if (it == def_.params.end()) throw std::invalid_argument(def_.name + ": no parameter '" + key + "'");
  return it->second;
}

int RelationSet::block_of(Generator g) const {
  for (const auto& p : def_.central)
    if (p.matches(g)) return kCentralBlock;
  for (std::size_t b = 0; b < def_.blocks.size(); ++b) {
    for (const auto& p : def_.blocks[b].members)
      if (p.matches(g)) return static_cast<int>(b);
  }
  throw std::invalid_argument(def_.name + ": generator " + g.to_string() + " belongs to no block");
}

bool RelationSet::contains(Generator g) const {
  try {
    block_of(g);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool RelationSet::commutative_block(int b) const {
  return b == kCentralBlock || def_.blocks.at(static_cast<std::size_t>(b)).commutative;
}

bool RelationSet::symmetric(Generator g) const {
  return g.indices().size() >= 2 && def_.symmetric.count(tower_base(g.name())) > 0;
}

Generator RelationSet::canonical(Generator g) const {
  if (!symmetric(g)) return g;
  const auto& idx = g.indices();
  const std::size_t n = idx.size();
  if (idx[n - 2] <= idx[n - 1]) return g;
  auto sorted = idx;
  std::swap(sorted[n - 2], sorted[n - 1]);
  return g.with_indices(std::move(sorted));
}

NCPoly RelationSet::bracket_rule(Generator a, Generator b) const {
  const int ba = block_of(a), bb = block_of(b);
  if (ba == kCentralBlock || bb == kCentralBlock) return {};
  if (ba == bb && commutative_block(ba)) return {};
  if (ba >= bb) {
    throw std::logic_error(def_.name + ": bracket_rule called out of block order");
  }
  if (def_.blocks[static_cast<std::size_t>(bb)].commutes_with_earlier) return {};
  if (auto it = def_.rules.find({a, b}); it != def_.rules.end()) return it->second;
  if (lazy_) {
    {
      std::lock_guard lock(cache_->mutex);
      if (auto it = cache_->values.find({a, b}); it != cache_->values.end()) return it->second;
    }
    // computed outside the lock: lazy rules may recurse into bracket_rule
    if (auto value = lazy_(*this, a, b)) {
      std::lock_guard lock(cache_->mutex);
      return cache_->values.try_emplace({a, b}, std::move(*value)).first->second;
    }
  }
  throw MissingRule(def_.name + ": no commutation rule for [" + a.to_string() + ", " +
                    b.to_string() + "]");
}

}  // namespace ncdoc::rewrite

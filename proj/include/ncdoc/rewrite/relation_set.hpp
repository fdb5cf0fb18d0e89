#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncdoc/ncalg/ncpoly.hpp"

namespace ncdoc::rewrite {

using ncalg::Generator;
using ncalg::NCPoly;
using ncalg::Word;

/// Matches generators by name, optionally by dot order and index count.
/// With `tower` set, names of the form "D...D<name>" also match.
struct GeneratorPattern {
  std::string name;
  std::optional<int> dot = std::nullopt;
  std::optional<int> arity = std::nullopt;
  bool tower = false;

  bool matches(Generator g) const;
};

struct Block {
  std::string name;
  bool commutative = false;
  /// When set, members commute with every generator of an earlier block.
  bool commutes_with_earlier = false;
  std::vector<GeneratorPattern> members;
};

/// Monomial rule inside a commutative block: lhs (a sorted word) -> rhs.
struct Reduction {
  Word lhs;
  NCPoly rhs;
};

class RelationSet;
/// Computes [a, b] for a in an earlier block than b, or nullopt if the rule
/// does not cover the pair. May mint generators not seen before.
using LazyRule = std::function<std::optional<NCPoly>(const RelationSet&, Generator, Generator)>;

struct LazySpec {
  std::string kind;
  std::map<std::string, std::string> options;
};

struct RelationDefinition {
  std::string name;
  std::vector<Block> blocks;
  std::vector<GeneratorPattern> central;
  std::map<std::pair<Generator, Generator>, NCPoly> rules;
  std::vector<Reduction> reductions;
  /// Names (and their D-prefixed towers) whose last two indices are symmetric.
  std::set<std::string> symmetric;
  std::map<std::string, Rational> params;
  std::optional<LazySpec> lazy;
};

class MissingRule : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonTerminatingRewrite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Presentation of a quotient algebra by ordered blocks, commutation rules and
/// monomial reductions. Immutable after construction apart from the
/// append-only cache of lazily computed commutators.
class RelationSet {
 public:
  static constexpr int kCentralBlock = -1;

  /// Validates the definition; throws std::invalid_argument on rules whose value
  /// uses generators from a later block than both sides, or on an unknown lazy kind.
  explicit RelationSet(RelationDefinition def);

  const std::string& name() const { return def_.name; }
  const RelationDefinition& definition() const { return def_; }
  const std::vector<Block>& blocks() const { return def_.blocks; }
  const std::vector<Reduction>& reductions() const { return def_.reductions; }
  Rational param(const std::string& key) const;

  /// Block index of g, kCentralBlock for central generators; throws
  /// std::invalid_argument when g belongs to no block.
  int block_of(Generator g) const;
  bool contains(Generator g) const;
  bool commutative_block(int b) const;

  /// [a, b] with a in an earlier block than b (or central); throws MissingRule.
  NCPoly bracket_rule(Generator a, Generator b) const;

  /// Sorts the last two indices of symmetric generators.
  Generator canonical(Generator g) const;
  bool symmetric(Generator g) const;

  /// Upper bound on elementary rewrite steps in one normal_form call.
  std::size_t step_budget() const { return step_budget_; }
  void set_step_budget(std::size_t n) { step_budget_ = n; }

 private:
  RelationDefinition def_;
  LazyRule lazy_;
  std::size_t step_budget_ = 20'000'000;
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<Generator, Generator>, NCPoly> values;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Canonical representative of p in the quotient algebra.
NCPoly normal_form(const NCPoly& p, const RelationSet& R);

/// Registered lazy rule kinds ("jshift", "metric").
LazyRule make_lazy_rule(const LazySpec& spec);

/// Strips leading 'D' characters: "DDg" -> "g".
std::string tower_base(const std::string& name);
/// Number of leading 'D' characters.
int tower_depth(const std::string& name);

}  // namespace ncdoc::rewrite

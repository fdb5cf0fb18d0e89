#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ncdoc/check_result.hpp"
#include "ncdoc/rng.hpp"

namespace ncdoc::chord {

struct Web {
  std::string id;
  int self_crossings = 0;

  int sign() const { return self_crossings % 2 == 0 ? 1 : -1; }
  bool operator==(const Web&) const = default;
};

/// Webs plus mutual crossing counts. Two distinct webs must receive
/// different colors iff they cross an odd number of times.
class Diagram {
 public:
  Diagram() = default;
  /// Throws std::invalid_argument unless cross is square of size webs.size(),
  /// symmetric, non-negative with zero diagonal, and self counts are non-negative.
  Diagram(std::vector<Web> webs, std::vector<std::vector<int>> cross);

  std::size_t size() const { return webs_.size(); }
  const std::vector<Web>& webs() const { return webs_; }
  const std::vector<std::vector<int>>& cross() const { return cross_; }
  int cross(std::size_t i, std::size_t j) const { return cross_.at(i).at(j); }
  bool odd(std::size_t i, std::size_t j) const { return i != j && cross_[i][j] % 2 == 1; }
  int sign() const;

  Diagram with_cross(std::size_t i, std::size_t j, int value) const;
  Diagram with_self(std::size_t w, int value) const;

  bool operator==(const Diagram&) const = default;

 private:
  std::vector<Web> webs_;
  std::vector<std::vector<int>> cross_;
};

nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);
/// Parse errors name the file and the line of the offending byte.
Diagram load_diagram(const std::string& path);

/// Coefficients c_0..c_n of the chromatic polynomial of the odd-crossing graph.
std::vector<std::int64_t> chromatic_polynomial(const Diagram& d);
/// sign(D) times the number of colorings with q colors.
std::int64_t count_colorings(const Diagram& d, int q);
/// Enumerates all q^n assignments; used as an oracle.
std::int64_t brute_force_colorings(const Diagram& d, int q);

struct JacobiTriple {
  Diagram prime;
  Diagram fused;
  CheckResult check;
};

/// D' lowers cross[i][j] by one; D'' fuses webs i and j into one web with
/// self crossings self_i + self_j + cross_ij - 1. The fused web differs from
/// web m iff web i or web j had to. Checks C(D) = C(D') - C(D'') for q = 0..6.
/// Throws std::invalid_argument unless i != j and cross[i][j] is odd.
JacobiTriple jacobi_triple(const Diagram& d, std::size_t i, std::size_t j);

/// C(D with one more self crossing on w, q) = -C(D, q) for q = 0..6.
CheckResult twist_check(const Diagram& d, std::size_t w);

/// The deletion-contraction identity with a crossing added to each of the
/// three diagrams: C(D+) = C(D'+) - C(D''+), where D+ and D'+ gain a crossing
/// between i and j and D''+ gains a self crossing on the fused web.
CheckResult twisted_jacobi_check(const Diagram& d, std::size_t i, std::size_t j);

/// Random diagram with `webs` webs, crossings in 0..max_cross and self
/// crossings in 0..max_self.
Diagram random_diagram(CounterRng& rng, std::size_t webs, int max_cross = 3, int max_self = 2);

/// sum_i eps_abi eps_cdi = delta_ac delta_bd - delta_ad delta_bc as a contraction
/// of two trivalent vertices, together with the shared tensor identity check.
CheckResult epsilon_diagram_check();

}  // namespace ncdoc::chord

#pragma once

#include <map>
#include <vector>

#include "ncdoc/check_result.hpp"
#include "ncdoc/rewrite/relation_set.hpp"

namespace ncdoc::rewrite {

/// d_i F = [F, P_i], reduced.
NCPoly flat_partial(const NCPoly& F, int i, const RelationSet& flat);
/// Dual partial [X_i, F], reduced.
NCPoly dual_partial(const NCPoly& F, int i, const RelationSet& flat);

struct GaugeSetup {
  int dim = 0;
  /// Potential components A_1..A_d.
  std::vector<NCPoly> A;
  const RelationSet* relations = nullptr;
};

struct GaugeCurvature {
  /// R[i][j] for 0-based i, j.
  std::vector<std::vector<NCPoly>> R;
};

/// R_ij computed as [P_i - A_i, P_j - A_j] and as d_i A_j - d_j A_i + [A_i, A_j];
/// throws std::logic_error when the two disagree or R is not antisymmetric.
GaugeCurvature gauge_curvature(const GaugeSetup& G);

/// f * V with f a scalar (commutes with every variable) and V a variable.
struct FrameTerm {
  NCPoly scalar;
  Generator variable;
};
using FrameVector = std::vector<FrameTerm>;

/// Variables with their representing elements P_V; for X = sum f_k V_k the
/// representative is P_X = sum f_k P_{V_k}.
class VariableFrame {
 public:
  explicit VariableFrame(const RelationSet& R) : R_(R) {}
  void add(Generator variable, NCPoly representative) { P_[variable] = std::move(representative); }

  NCPoly value(const FrameVector& X) const;
  /// Throws std::invalid_argument for an unknown variable or a non-scalar coefficient.
  NCPoly represent(const FrameVector& X) const;
  /// Splits each reduced term at its rightmost variable factor; throws
  /// std::invalid_argument when a term has no variable.
  FrameVector decompose(const NCPoly& X) const;
  /// nabla_X(Z) = [Z, P_X], reduced.
  NCPoly covariant(const FrameVector& X, const NCPoly& Z) const;
  const RelationSet& relations() const { return R_; }

 private:
  const RelationSet& R_;
  std::map<Generator, NCPoly> P_;
};

/// R(X,Y)Z = [nabla_X, nabla_Y]Z - nabla_[X,Y] Z, reduced.
NCPoly covariant_curvature(const FrameVector& X, const FrameVector& Y, const NCPoly& Z,
                           const VariableFrame& frame);

/// x(x - delta)...(x - (n-1)delta) in the shift-coordinate algebra.
NCPoly falling_power(int n, const RelationSet& shift);
/// (f J - J f) / delta, reduced.
NCPoly discrete_derivative(const NCPoly& f, const RelationSet& shift);

/// Leibniz rule for the discrete derivative on random pairs and the falling
/// power law nabla(x^(m)) = J m x^(m-1) for m = 1..n (n <= 8).
CheckResult discrete_leibniz_check(const RelationSet& shift, int n, std::uint64_t seed = 0xD0C);

}  // namespace ncdoc::rewrite

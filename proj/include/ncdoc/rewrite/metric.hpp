#pragma once

#include "ncdoc/rewrite/relation_set.hpp"

namespace ncdoc::rewrite {

/// Helpers for the metric algebra: coordinates X[i], velocities X[i]^(1),
/// accelerations X[i]^(2), metric g[j,k], inverse gi[j,k], and the derivative
/// tower D...Dg[r,...,j,k] where Dt[r,...] stands for [t, X[r]^(1)].
namespace metric {

NCPoly coordinate(int i);
NCPoly velocity(int i);
NCPoly acceleration(int i);
NCPoly g(int j, int k);
NCPoly gi(int j, int k);
/// d_r g_jk, i.e. Dg[r,j,k].
NCPoly dg(int r, int j, int k);
/// Raised velocity sum_j gi[k,j] X[j]^(1).
NCPoly raised_velocity(int k, int dim);

/// [F, X[r]^(1)] expanded by the Leibniz rule using the relation set's
/// brackets for coordinates and metric-block generators; velocity and
/// acceleration factors contribute their literal commutators. Not reduced.
NCPoly partial(const RelationSet& R, const NCPoly& F, int r);

/// Time derivative: X^(n) -> X^(n+1) on coordinates, velocities and
/// accelerations, and t -> sum_i (d_i t) X^i for metric-block generators.
NCPoly dot(const RelationSet& R, const NCPoly& F);

int dim(const RelationSet& R);

}  // namespace metric

}  // namespace ncdoc::rewrite
